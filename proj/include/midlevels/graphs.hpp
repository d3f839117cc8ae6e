#ifndef MIDLEVELS_GRAPHS_HPP
#define MIDLEVELS_GRAPHS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "midlevels/lexical.hpp"
#include "midlevels/words.hpp"

namespace midlevels {

// Rotation class of a binary word.
struct NecklaceClass {
    std::uint64_t canonical = 0; // lexicographically least rotation
    int n = 0;
    int orbit_size = 0;

    friend bool operator==(const NecklaceClass&, const NecklaceClass&) = default;
    std::string str() const;
};

NecklaceClass pi_class(std::uint64_t w, int n);

// Complemented-reversal partner class (weight k <-> weight k+1); involution.
NecklaceClass aleph_pi(const NecklaceClass& c);

// Pair {c, aleph_pi(c)}; canonical member is the weight-k side.
struct DihedralClass {
    NecklaceClass lower;
    NecklaceClass upper;
    std::string str() const;
};

DihedralClass dihedral_class(std::uint64_t w, int n);

enum class EdgeKind { horizontal, skew };

// Classifies the quotient edge obtained by flipping zero position x of the
// weight-k word w: horizontal iff the endpoints are c and aleph_pi(c).
EdgeKind classify_edge(std::uint64_t w, int n, int x);

// Generic export form for M_k, M_k/pi and R_k.
struct GraphEdge {
    int u = 0, v = 0;
    int color = -1;
    int multiplicity = 1;
    bool loop = false;
};

struct ColoredGraph {
    int k = 0;
    std::string name;
    std::vector<std::string> labels;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, color); loops listed once
    std::size_t lower_count = 0;                       // labels[0..lower_count) = lower level

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

// All weight-k words of length n in increasing numeric order.
std::vector<std::uint64_t> words_of_weight(int n, int k);

// The middle-levels graph: words of weight k and k+1, single-bit containment
// edges, lexical edge colors.
ColoredGraph build_mk(int k, bool color_edges = true);

// Rotation quotient: one vertex per necklace class, one edge per edge orbit
// (k+1 per lower class, distinguished by color; parallel edges possible).
ColoredGraph build_mk_pi(int k);

// Dihedral folding: vertices are germs in natural enumeration; skew edge
// orbit pairs fold to single edges, horizontal orbits to loops.
ColoredGraph build_rk(int k);

std::string graph_to_dot(const ColoredGraph& g);
std::string graph_to_csv(const ColoredGraph& g);

// Rough memory estimate used by the CLI resource bounds, in bytes.
std::uint64_t mk_memory_estimate(int k);

} // namespace midlevels

#endif
