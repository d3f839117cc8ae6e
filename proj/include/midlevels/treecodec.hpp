#ifndef MIDLEVELS_TREECODEC_HPP
#define MIDLEVELS_TREECODEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "midlevels/germs.hpp"

namespace midlevels {

// Symbol of a tree code: a color 0..k, or kAsterisk.
inline constexpr int kAsterisk = -1;

// A (2k+1)-symbol string over {0..k, *}: each color once, k asterisks.
// Encodes a k-edge ordered tree by depth-first search (colors on descents,
// asterisks on ascents).
struct TreeCode {
    int k = 1;
    std::vector<int> sym; // size 2k+1

    std::string str() const;
    friend bool operator==(const TreeCode&, const TreeCode&) = default;
    friend auto operator<=>(const TreeCode& a, const TreeCode& b) {
        // symbol order 0 < 1 < ... < k < '*'
        auto key = [](int s) { return s == kAsterisk ? 1 << 20 : s; };
        for (std::size_t i = 0; i < a.sym.size() && i < b.sym.size(); ++i) {
            if (auto c = key(a.sym[i]) <=> key(b.sym[i]); c != 0) return c;
        }
        return a.sym.size() <=> b.sym.size();
    }
};

TreeCode parse_code(const std::string& s);

// Returns the description of the first violated code invariant, if any.
// Checks are ordered: shape, alphabet, leading zero, prefix discipline,
// "k*" substring, ascent-after-color, canonical DFS labeling.
std::optional<std::string> code_violation(const TreeCode& code);

// Ordered rooted tree with k edges. Node ids 0..k are the canonical labels:
// breadth-first from the root, each level numbered right to left.
struct OrderedTree {
    int k = 0;
    std::vector<std::vector<int>> children; // children[node], left to right

    friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
};

// --- Castling -------------------------------------------------------------

// One castling rewrite: split code as W|X|Y|Z with |W| = |Z| = i, X starting
// at the leftmost interior color and Y at the next color value up, and swap
// to W|Y|X|Z. Throws UsageError when the split does not exist.
TreeCode castle_step(const TreeCode& code, int i);

// The tree code F(alpha): F(0^{k-1}) = 01..k*..*, and one castle_step per
// unit increment along the germ-tree path down to alpha.
TreeCode castle(const KGerm& alpha);

// Inverse of castle. Throws UsageError with a named diagnosis on codes that
// violate an invariant or are not castle images.
KGerm uncastle(const TreeCode& code);

// Trace of the uncastling peel: successive codes and germs down to 0^{k-1}
// (the input itself excluded).
struct UncastleTrace {
    std::vector<TreeCode> codes;
    std::vector<KGerm> germs;
};
UncastleTrace uncastle_trace(const TreeCode& code);

// --- Tree <-> code ----------------------------------------------------------

OrderedTree tree_of_code(const TreeCode& code);
TreeCode code_of_tree(const OrderedTree& tree);

// DOT export with node labels v0..vk and child order as an edge attribute.
std::string tree_to_dot(const OrderedTree& tree);

// --- Binary words from codes ------------------------------------------------

// n-bit binary word, bit i = position i. Weight is k (lower level) or k+1.
struct BinaryWord {
    std::uint64_t bits = 0;
    int n = 0;

    bool bit(int i) const { return (bits >> i) & 1u; }
    std::string str() const;
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

BinaryWord parse_word(const std::string& s);

// theta(alpha): colors of F(alpha) become 0-bits, asterisks 1-bits; weight k.
BinaryWord theta(const KGerm& alpha);

// Complemented reversal: bit i of the result = complement of bit n-1-i.
BinaryWord aleph(const BinaryWord& w);

// Subscripted renderings as in the annotated tables: each 0-bit carries its
// color subscript, each 1-bit an asterisk ("0_00_10_21_*1_*").
std::string theta_hat(const KGerm& alpha);
std::string aleph_hat(const KGerm& alpha);

// --- Plane-tree operations ---------------------------------------------------

// Root rotation: the leftmost child becomes the root and the old root is
// appended as its rightmost child.
OrderedTree root_rotate(const OrderedTree& t);

// Lexicographically least code over the root-rotation orbit; equal for two
// trees iff they are root-rotation equivalent.
TreeCode plane_canonical(const OrderedTree& t);
TreeCode plane_canonical(const KGerm& alpha);

// Number of distinct plane classes among all k-germs.
std::size_t plane_class_count(int k);

// Horizontal reflection: mirror all child orders and re-encode. An involution.
KGerm reflect_phi(const KGerm& alpha);

// Re-rooting involution: the germ read from the opposite root viewpoint.
// Computed by reversing F(alpha) with colors complemented (c -> k-c), taking
// the unique rotation that satisfies the prefix discipline, and uncastling.
KGerm theta_reroot(const KGerm& alpha);

// --- Atom decomposition -------------------------------------------------------

// An atom is a lone 0 or a maximal strictly increasing substring not
// starting with 0. The base string 1..max(alpha) is carved out of the atom
// partition as the rightmost sub-collection of atoms spelling it.
struct AtomDecomposition {
    std::string base;                 // "12...a" or "" for a null germ
    std::vector<std::string> atoms;   // parenthesized atoms, left to right
    std::vector<int> offsets;         // base digits to the left of each atom
    std::string parenthesized;        // e.g. "(0)123(2)(234)4(23)(1)(0)(12)(1)"
};

AtomDecomposition atoms(const KGerm& alpha);
KGerm reassemble(const AtomDecomposition& dec, int k);

} // namespace midlevels

#endif
