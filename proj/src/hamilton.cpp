#include "midlevels/hamilton.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace midlevels {

namespace {

inline std::pair<std::uint64_t, std::uint64_t> edge_key(std::uint64_t a, std::uint64_t b) {
    return (weight(a) < weight(b)) ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

CycleDecomposition two_factor_w01(int k) {
    const int n = 2 * k + 1;
    CycleDecomposition dec;
    dec.k = k;
    dec.n = n;
    auto lower = words_of_weight(n, k);
    // two matching partners per vertex
    std::unordered_map<std::uint64_t, std::array<std::uint64_t, 2>> matching;
    matching.reserve(lower.size() * 4);
    for (std::uint64_t w : lower) {
        auto sym = delta_symbols(w, n);
        for (int x = 0; x < n; ++x) {
            int c = sym[static_cast<std::size_t>(x)];
            if (c != 0 && c != 1) continue;
            std::uint64_t u = w | (1ull << x);
            matching[w][static_cast<std::size_t>(c)] = u;
            matching[u][static_cast<std::size_t>(c)] = w;
        }
    }
    // deterministic cycle extraction: scan lower words in order; each starts
    // at its cycle's minimal word, traversing the 1-colored edge first
    for (std::uint64_t start : lower) {
        if (dec.cycle_of.contains(start)) continue;
        CycleInfo info;
        std::uint64_t cur = start;
        int next_color = 1;
        do {
            info.verts.push_back(cur);
            cur = matching.at(cur)[static_cast<std::size_t>(next_color)];
            next_color ^= 1;
        } while (cur != start);
        // start at the minimal vertex word, traversing its 1-colored edge
        // first: edge j has color 1 iff j is even, so a minimal vertex at an
        // odd position starts against the walk direction
        std::size_t best = 0;
        for (std::size_t i = 1; i < info.verts.size(); ++i)
            if (word_str_less(info.verts[i], info.verts[best])) best = i;
        std::rotate(info.verts.begin(), info.verts.begin() + static_cast<std::ptrdiff_t>(best),
                    info.verts.end());
        if (best % 2 == 1) std::reverse(info.verts.begin() + 1, info.verts.end());
        int id = static_cast<int>(dec.cycles.size());
        for (std::size_t i = 0; i < info.verts.size(); ++i) {
            dec.cycle_of.emplace(info.verts[i], id);
            dec.pos_of.emplace(info.verts[i], static_cast<int>(i));
        }
        dec.cycles.push_back(std::move(info));
    }
    return dec;
}

namespace {

int tree_leaf_count(const OrderedTree& t) {
    int leaves = 0;
    for (std::size_t v = 0; v < t.children.size(); ++v) {
        std::size_t deg = t.children[v].size() + (v == 0 ? 0 : 1);
        if (deg == 1) ++leaves;
    }
    return leaves;
}

int rotation_orbit_size(const KGerm& g) {
    TreeCode first = castle(g);
    OrderedTree cur = tree_of_code(first);
    int size = 0;
    for (;;) {
        cur = root_rotate(cur);
        ++size;
        if (code_of_tree(cur) == first) break;
    }
    return size;
}

} // namespace

void label_cycles(CycleDecomposition& dec) {
    const int n = dec.n;
    const int k = dec.k;
    for (auto& info : dec.cycles) {
        std::vector<KGerm> seq;
        seq.reserve(info.verts.size());
        KGerm low_min;
        bool have_low = false;
        for (std::uint64_t w : info.verts) {
            bool is_low = weight(w) == k;
            std::uint64_t low = is_low ? w : aleph_word(w, n);
            seq.push_back(germ_of_word(low, n));
            if (is_low && (!have_low || seq.back() < low_min)) {
                low_min = seq.back();
                have_low = true;
            }
        }
        info.xi = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] == seq[(i + 1) % seq.size()]) ++info.xi;
        }
        info.germs = seq;
        std::sort(info.germs.begin(), info.germs.end());
        info.germs.erase(std::unique(info.germs.begin(), info.germs.end()), info.germs.end());
        // the cycle's plane tree is read off its lower-level vertices; the
        // upper-level germs add the mirror class when the two differ
        info.plane_label = plane_canonical(low_min);
        info.enantiomorphic = false;
        for (const KGerm& g : info.germs) {
            if (!(reflect_phi(g) == g)) {
                info.enantiomorphic = true;
                break;
            }
        }
        int orbit = rotation_orbit_size(low_min);
        info.tau = (2 * k) % orbit == 0 ? (2 * k) / orbit : 0;
        info.leaves = tree_leaf_count(tree_of_code(castle(low_min)));
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SixCycle::removed_edges() const {
    return {edge_key(u, up), edge_key(v, vp), edge_key(upp, vpp)};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SixCycle::added_edges() const {
    return {edge_key(up, upp), edge_key(vp, vpp), edge_key(u, v)};
}

namespace {

// Scans one traversal direction of a host cycle for hexagon windows: seven
// consecutive vertices x[-1], x[0], ..., x[5] where x[0] and x[5] are
// adjacent in M_k via a color h >= 2, the middle edge of the 5-path flips
// that same position, and the supports x[-1], x[4] complete a 3-path through
// another cycle. Running it on both directions yields the two families per
// distance-5 pair (the supports sit on either side).
void scan_direction(const CycleDecomposition& dec, int host, const std::vector<std::uint64_t>& verts,
                    int pos_base, std::vector<SixCycle>& out) {
    const int n = dec.n;
    const int k = dec.k;
    const std::size_t len = verts.size();
    for (std::size_t p = 0; p < len; ++p) {
        std::uint64_t a = verts[p];
        std::uint64_t b = verts[(p + 5) % len];
        std::uint64_t d = a ^ b;
        if (std::popcount(d) != 1) continue;
        // middle edge of the 5-path must flip the same column
        if ((verts[(p + 2) % len] ^ verts[(p + 3) % len]) != d) continue;
        std::uint64_t vlow = (a & d) ? b : a;
        int r1 = std::countr_zero(d);
        int h = edge_color(vlow, n, r1);
        if (h < 2 || h > k) continue;
        // u is the upper endpoint; supports precede u and v in this direction
        std::uint64_t u, v, up, vp;
        if (vlow == a) {
            v = a;
            u = b;
            vp = verts[(p + len - 1) % len];
            up = verts[(p + 4) % len];
        } else {
            u = a;
            v = b;
            up = verts[(p + len - 1) % len];
            vp = verts[(p + 4) % len];
        }
        std::uint64_t s = vp ^ v; // v' = v + s
        std::uint64_t t = u ^ up; // u' = u - t
        if (std::popcount(s) != 1 || std::popcount(t) != 1) continue;
        std::uint64_t upp = up | s;
        std::uint64_t vpp = upp ^ d;
        if ((up & s) || !(upp & d)) continue;
        int g01 = edge_color(vpp, n, r1);
        if (g01 != 0 && g01 != 1) continue;
        auto it = dec.cycle_of.find(upp);
        if (it == dec.cycle_of.end()) continue;
        int target = it->second;
        SixCycle hex;
        hex.u = u;
        hex.up = up;
        hex.upp = upp;
        hex.vpp = vpp;
        hex.vp = vp;
        hex.v = v;
        hex.host = host;
        hex.target = target;
        hex.color = h;
        hex.position = pos_base + static_cast<int>(p);
        out.push_back(hex);
    }
}

void scan_cycle(const CycleDecomposition& dec, int host, std::vector<SixCycle>& out) {
    const auto& fwd = dec.cycles[static_cast<std::size_t>(host)].verts;
    scan_direction(dec, host, fwd, 0, out);
    std::vector<std::uint64_t> rev(fwd.rbegin(), fwd.rend());
    scan_direction(dec, host, rev, static_cast<int>(fwd.size()), out);
}

} // namespace

std::vector<SixCycle> find_six_cycles_serial(const CycleDecomposition& dec) {
    std::vector<SixCycle> out;
    for (int i = 0; i < static_cast<int>(dec.cycles.size()); ++i) scan_cycle(dec, i, out);
    return out;
}

std::vector<SixCycle> find_six_cycles(const CycleDecomposition& dec, int jobs) {
    const int m = static_cast<int>(dec.cycles.size());
    std::vector<std::vector<SixCycle>> per_cycle(static_cast<std::size_t>(m));
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < m; ++i) scan_cycle(dec, i, per_cycle[static_cast<std::size_t>(i)]);
    (void)jobs;
    std::vector<SixCycle> out;
    for (auto& v : per_cycle) out.insert(out.end(), v.begin(), v.end());
    return out;
}

CycleDigraph cycle_digraph(const CycleDecomposition& dec, const std::vector<SixCycle>& hexes) {
    CycleDigraph dg;
    KGerm null_germ;
    null_germ.k = dec.k;
    null_germ.digits.assign(static_cast<std::size_t>(dec.k - 1), 0);
    std::uint64_t root_word = theta(null_germ).bits;
    dg.root = dec.cycle_of.at(root_word);
    std::map<std::pair<int, int>, std::vector<int>> by_arc;
    for (std::size_t i = 0; i < hexes.size(); ++i) {
        if (hexes[i].self()) continue;
        by_arc[{hexes[i].host, hexes[i].target}].push_back(static_cast<int>(i));
    }
    for (auto& [arc, list] : by_arc) {
        dg.arcs.push_back(arc);
        dg.hexagons_by_arc.push_back(list);
    }
    return dg;
}

namespace {

bool edges_disjoint(const SixCycle& hex, const std::set<std::pair<std::uint64_t, std::uint64_t>>& used) {
    for (auto e : hex.removed_edges())
        if (used.contains(e)) return false;
    for (auto e : hex.added_edges())
        if (used.contains(e)) return false;
    return true;
}

void mark_edges(const SixCycle& hex, std::set<std::pair<std::uint64_t, std::uint64_t>>& used, bool on) {
    for (auto e : hex.removed_edges()) on ? (void)used.insert(e) : (void)used.erase(e);
    for (auto e : hex.added_edges()) on ? (void)used.insert(e) : (void)used.erase(e);
}

} // namespace

std::vector<SixCycle> select_gluing(const CycleDecomposition& dec, const std::vector<SixCycle>& hexes) {
    const int m = static_cast<int>(dec.cycles.size());
    if (m == 1) return {};
    CycleDigraph dg = cycle_digraph(dec, hexes);

    // BFS from the root over reversed arcs: each cycle gets a parent nearer
    // the root, reachable from it by at least one hexagon
    std::vector<std::vector<int>> hexes_from(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < hexes.size(); ++i) {
        if (hexes[i].self()) continue;
        hexes_from[static_cast<std::size_t>(hexes[i].host)].push_back(static_cast<int>(i));
    }
    std::vector<int> order; // non-root cycles in assignment order
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(m));
    {
        std::vector<bool> done(static_cast<std::size_t>(m), false);
        done[static_cast<std::size_t>(dg.root)] = true;
        std::vector<int> frontier{dg.root};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int c = 0; c < m; ++c) {
                if (done[static_cast<std::size_t>(c)]) continue;
                for (int hi : hexes_from[static_cast<std::size_t>(c)]) {
                    if (std::find(frontier.begin(), frontier.end(), hexes[static_cast<std::size_t>(hi)].target) !=
                        frontier.end())
                        candidates[static_cast<std::size_t>(c)].push_back(hi);
                }
                if (!candidates[static_cast<std::size_t>(c)].empty()) {
                    next.push_back(c);
                    order.push_back(c);
                }
            }
            for (int c : next) done[static_cast<std::size_t>(c)] = true;
            if (next.empty()) break;
            frontier = std::move(next);
        }
        for (int c = 0; c < m; ++c) {
            if (!done[static_cast<std::size_t>(c)])
                throw ResourceError("select_gluing: cycle digraph is not spanning from the root");
        }
    }
    // deterministic candidate order: (host, target, position)
    for (auto& list : candidates) {
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            const auto& A = hexes[static_cast<std::size_t>(a)];
            const auto& B = hexes[static_cast<std::size_t>(b)];
            return std::tie(A.host, A.target, A.position) < std::tie(B.host, B.target, B.position);
        });
    }
    std::vector<int> chosen(static_cast<std::size_t>(m), -1);
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;
    // backtracking over cycles in BFS order
    std::vector<std::size_t> cursor(order.size(), 0);
    std::size_t idx = 0;
    while (idx < order.size()) {
        int c = order[idx];
        auto& cand = candidates[static_cast<std::size_t>(c)];
        bool placed = false;
        for (std::size_t& cur = cursor[idx]; cur < cand.size(); ++cur) {
            const SixCycle& hex = hexes[static_cast<std::size_t>(cand[cur])];
            if (edges_disjoint(hex, used)) {
                mark_edges(hex, used, true);
                chosen[static_cast<std::size_t>(c)] = cand[cur];
                placed = true;
                ++cur;
                break;
            }
        }
        if (placed) {
            ++idx;
        } else {
            cursor[idx] = 0;
            if (idx == 0) throw ResourceError("select_gluing: no edge-disjoint selection found");
            --idx;
            int prev = order[idx];
            mark_edges(hexes[static_cast<std::size_t>(chosen[static_cast<std::size_t>(prev)])], used, false);
            chosen[static_cast<std::size_t>(prev)] = -1;
        }
    }
    std::vector<SixCycle> out;
    for (int c = 0; c < m; ++c)
        if (chosen[static_cast<std::size_t>(c)] >= 0) out.push_back(hexes[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c)])]);
    return out;
}

std::vector<std::uint64_t> hamilton_cycle(int k) {
    CycleDecomposition dec = two_factor_w01(k);
    std::vector<SixCycle> chosen;
    if (dec.cycles.size() > 1) {
        auto hexes = find_six_cycles(dec);
        chosen = select_gluing(dec, hexes);
    }
    // adjacency of the 2-factor, then the symmetric differences
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adj;
    adj.reserve(dec.cycle_of.size() * 2);
    for (const auto& info : dec.cycles) {
        const auto& vs = info.verts;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::uint64_t a = vs[i], b = vs[(i + 1) % vs.size()];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    auto remove_edge = [&](std::uint64_t a, std::uint64_t b) {
        auto& va = adj.at(a);
        va.erase(std::find(va.begin(), va.end(), b));
        auto& vb = adj.at(b);
        vb.erase(std::find(vb.begin(), vb.end(), a));
    };
    for (const auto& hex : chosen) {
        remove_edge(hex.u, hex.up);
        remove_edge(hex.v, hex.vp);
        remove_edge(hex.upp, hex.vpp);
        adj[hex.up].push_back(hex.upp);
        adj[hex.upp].push_back(hex.up);
        adj[hex.vp].push_back(hex.vpp);
        adj[hex.vpp].push_back(hex.vp);
        adj[hex.u].push_back(hex.v);
        adj[hex.v].push_back(hex.u);
    }
    std::uint64_t start = (1ull << k) - 1; // least weight-k word
    std::vector<std::uint64_t> seq;
    seq.reserve(adj.size());
    std::uint64_t prev = 0, cur = start;
    bool first = true;
    do {
        seq.push_back(cur);
        const auto& nb = adj.at(cur);
        if (nb.size() != 2) throw ResourceError("hamilton_cycle: surgery left a vertex of degree != 2");
        std::uint64_t nxt = (first || nb[0] != prev) ? nb[0] : nb[1];
        prev = cur;
        cur = nxt;
        first = false;
    } while (cur != start);
    return seq;
}

HamiltonCertificate verify_hamilton(int k, const std::vector<std::uint64_t>& seq) {
    const int n = 2 * k + 1;
    HamiltonCertificate cert;
    std::uint64_t expect = 2 * binom(n, k);
    if (seq.size() != expect) {
        cert.violation = "length " + std::to_string(seq.size()) + " != " + std::to_string(expect);
        return cert;
    }
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint64_t w = seq[i];
        if (w >> n) {
            cert.violation = "word out of range at step " + std::to_string(i);
            return cert;
        }
        int wt = weight(w);
        if (wt != k && wt != k + 1) {
            cert.violation = "weight not in {k,k+1} at step " + std::to_string(i);
            return cert;
        }
        if (!seen.insert(w).second) {
            cert.violation = "vertex repeated at step " + std::to_string(i) + ": " + word_str(w, n);
            return cert;
        }
        std::uint64_t nxt = seq[(i + 1) % seq.size()];
        std::uint64_t d = w ^ nxt;
        if (std::popcount(d) != 1) {
            cert.violation = "vertices not adjacent at step " + std::to_string(i);
            return cert;
        }
    }
    cert.ok = true;
    return cert;
}

std::string certificate_text(int k, const std::vector<std::uint64_t>& seq) {
    const int n = 2 * k + 1;
    std::string s;
    for (std::uint64_t w : seq) s += word_str(w, n) + "\n";
    if (!seq.empty()) s += word_str(seq.front(), n) + "\n";
    return s;
}

std::vector<std::uint64_t> parse_certificate(const std::string& text, int k) {
    const int n = 2 * k + 1;
    std::vector<std::uint64_t> seq;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (static_cast<int>(line.size()) != n) throw UsageError("certificate: bad line length");
        seq.push_back(word_from_str(line));
    }
    if (seq.size() < 2 || seq.front() != seq.back()) throw UsageError("certificate: must close up");
    seq.pop_back();
    return seq;
}

std::string digraph_to_dot(const CycleDecomposition& dec, const CycleDigraph& dg,
                           const std::vector<SixCycle>& chosen) {
    std::set<std::pair<int, int>> chosen_arcs;
    for (const auto& hex : chosen) chosen_arcs.insert({hex.host, hex.target});
    std::string s = "digraph cycles {\n";
    for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
        s += "  c" + std::to_string(i) + " [label=\"C" + std::to_string(i) + " (" +
             std::to_string(dec.cycles[i].verts.size()) + ")\"";
        if (static_cast<int>(i) == dg.root) s += ",shape=doublecircle";
        s += "];\n";
    }
    for (std::size_t a = 0; a < dg.arcs.size(); ++a) {
        auto [i, j] = dg.arcs[a];
        s += "  c" + std::to_string(i) + " -> c" + std::to_string(j) + " [label=\"" +
             std::to_string(dg.hexagons_by_arc[a].size()) + "\"";
        if (chosen_arcs.contains({i, j})) s += ",penwidth=3,color=red";
        s += "];\n";
    }
    s += "}\n";
    return s;
}

} // namespace midlevels
