#ifndef MIDLEVELS_GERMS_HPP
#define MIDLEVELS_GERMS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "midlevels/common.hpp"

namespace midlevels {

// A k-germ: string a_{k-1} a_{k-2} ... a_1 of k-1 digits with
//   a_{k-1} in {0,1}   and   0 <= a_{i-1} <= a_i + 1.
// Digits are stored most-significant-first (a_{k-1} at index 0), so the
// natural enumeration order is plain lexicographic comparison on `digits`.
// For k=1 the germ is the empty string.
struct KGerm {
    int k = 1;
    std::vector<std::uint8_t> digits; // size k-1, a_{k-1} first

    // digit a_i for 1 <= i <= k-1, positions counted from the right
    int at(int i) const { return digits[static_cast<std::size_t>(k - 1 - i)]; }
    void set(int i, int v) { digits[static_cast<std::size_t>(k - 1 - i)] = static_cast<std::uint8_t>(v); }

    bool is_null() const;
    std::string str() const;

    friend bool operator==(const KGerm&, const KGerm&) = default;
};

// Total order of the natural enumeration. Both germs must have the same k.
std::strong_ordering compare(const KGerm& a, const KGerm& b);
bool operator<(const KGerm& a, const KGerm& b);

bool valid_germ(const KGerm& g);

// Parses a digit string; k defaults to length+1. Throws UsageError on bad input.
KGerm parse_germ(const std::string& s, int k = 0);

// All k-germs in natural enumeration order; size C_k.
std::vector<KGerm> enumerate_germs(int k);

// In-place successor in natural order; returns false once past the last germ.
bool next_germ(KGerm& g);

// Rank of a germ in the natural enumeration (0-based, matches the m column).
std::uint64_t germ_rank(const KGerm& g);
KGerm germ_unrank(int k, std::uint64_t m);

// RGS form: the germ with left zeros stripped; "0" for every null germ.
std::string to_rgs(const KGerm& g);
// Inverse of to_rgs: left-pads with zeros up to k-1 digits.
KGerm pad(const std::string& rgs, int k);

// Parent in the germ tree: rightmost nonzero entry decremented.
// Throws UsageError on the root 0^{k-1}.
KGerm parent(const KGerm& g);

// The ordered tree of all k-germs, serialized with parentheses and commas,
// e.g. germ_tree(2) == "0(1)".
std::string germ_tree(int k);

} // namespace midlevels

#endif
