#ifndef MIDLEVELS_HAMILTON_HPP
#define MIDLEVELS_HAMILTON_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "midlevels/graphs.hpp"

namespace midlevels {

// One cycle of the 2-factor of colors 0 and 1, with its plane-tree data.
struct CycleInfo {
    std::vector<std::uint64_t> verts; // cycle order; verts[0] minimal, 1-edge first
    TreeCode plane_label;             // least canonical code over the cycle's germs
    std::vector<KGerm> germs;         // distinct germs, natural order
    int xi = 0;                       // contiguous same-germ vertex pairs
    bool enantiomorphic = false;      // contains a germ pair swapped by reflection
    int tau = 0;                      // rotation symmetries of the plane tree
    int leaves = 0;                   // degree-1 vertices of the plane tree
};

struct CycleDecomposition {
    int k = 0;
    int n = 0;
    std::vector<CycleInfo> cycles;
    std::unordered_map<std::uint64_t, int> cycle_of;
    std::unordered_map<std::uint64_t, int> pos_of;
};

// The 2-factor formed by the color-0 and color-1 matchings of M_k,
// decomposed into cycles. Labels are not filled in; see label_cycles.
CycleDecomposition two_factor_w01(int k);

// Fills plane-tree labels, xi, enantiomorphy, tau and leaf counts.
void label_cycles(CycleDecomposition& dec);

// A 6-cycle u u' u'' v'' v' v meeting the host cycle in the two edges uu'
// and v'v, with u, v adjacent via color h >= 2. Usable for gluing when the
// interior edge u''v'' sits on another cycle (host != target); windows whose
// interior edge returns to the host are still reported, since the
// 2n*t/tau degree count covers them.
struct SixCycle {
    std::uint64_t u = 0, up = 0, upp = 0, vpp = 0, vp = 0, v = 0;
    int host = 0, target = 0;
    int color = 0;    // h
    int position = 0; // window start along the host cycle

    bool self() const { return host == target; }

    // The three edges removed from the 2-factor and the three added.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> removed_edges() const;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> added_edges() const;
};

std::vector<SixCycle> find_six_cycles(const CycleDecomposition& dec, int jobs = 0);
std::vector<SixCycle> find_six_cycles_serial(const CycleDecomposition& dec);

// Cycle digraph: nodes are cycles, arcs group the hexagons by (host, target).
struct CycleDigraph {
    int root = 0; // cycle containing the null germ
    std::vector<std::vector<int>> hexagons_by_arc; // arc index -> hexagon indices
    std::vector<std::pair<int, int>> arcs;         // (host, target)
};

CycleDigraph cycle_digraph(const CycleDecomposition& dec, const std::vector<SixCycle>& hexes);

// Picks one hexagon per non-root cycle, pairwise edge-disjoint, so that the
// chosen arcs form a spanning in-tree of the cycle digraph. Throws on failure.
std::vector<SixCycle> select_gluing(const CycleDecomposition& dec, const std::vector<SixCycle>& hexes);

// Full construction: 2-factor, hexagon selection, symmetric differences.
std::vector<std::uint64_t> hamilton_cycle(int k);

struct HamiltonCertificate {
    bool ok = false;
    std::string violation;
};

// Independent verifier: bit-level adjacency and exact vertex coverage only.
HamiltonCertificate verify_hamilton(int k, const std::vector<std::uint64_t>& seq);

// Certificate file format: one word per line, first line repeated at the end.
std::string certificate_text(int k, const std::vector<std::uint64_t>& seq);
std::vector<std::uint64_t> parse_certificate(const std::string& text, int k);

std::string digraph_to_dot(const CycleDecomposition& dec, const CycleDigraph& dg,
                           const std::vector<SixCycle>& chosen);

} // namespace midlevels

#endif
