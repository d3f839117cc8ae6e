#include "midlevels/graphs.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace midlevels {

std::string NecklaceClass::str() const { return "(" + word_str(canonical, n) + ")"; }

NecklaceClass pi_class(std::uint64_t w, int n) {
    NecklaceClass c;
    c.n = n;
    c.canonical = min_rotation(w, n);
    int d = 1;
    while (translate(c.canonical, d, n) != c.canonical) ++d;
    c.orbit_size = d;
    return c;
}

NecklaceClass aleph_pi(const NecklaceClass& c) { return pi_class(aleph_word(c.canonical, c.n), c.n); }

std::string DihedralClass::str() const { return "<" + word_str(lower.canonical, lower.n) + ">"; }

DihedralClass dihedral_class(std::uint64_t w, int n) {
    int k = (n - 1) / 2;
    DihedralClass d;
    if (weight(w) == k) {
        d.lower = pi_class(w, n);
        d.upper = aleph_pi(d.lower);
    } else {
        d.upper = pi_class(w, n);
        d.lower = aleph_pi(d.upper);
    }
    return d;
}

EdgeKind classify_edge(std::uint64_t w, int n, int x) {
    if ((w >> x) & 1u) throw UsageError("classify_edge: position x must hold a 0");
    NecklaceClass lower = pi_class(w, n);
    NecklaceClass upper = pi_class(w | (1ull << x), n);
    return (upper == aleph_pi(lower)) ? EdgeKind::horizontal : EdgeKind::skew;
}

std::vector<std::uint64_t> words_of_weight(int n, int k) {
    std::vector<std::uint64_t> out;
    out.reserve(binom(n, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (1ull << k) - 1;
    std::uint64_t limit = 1ull << n;
    while (v < limit) {
        out.push_back(v);
        std::uint64_t t = v | (v - 1); // Gosper's hack
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

ColoredGraph build_mk(int k, bool color_edges) {
    const int n = 2 * k + 1;
    ColoredGraph g;
    g.k = k;
    g.name = "M" + std::to_string(k);
    auto lower = words_of_weight(n, k);
    auto upper = words_of_weight(n, k + 1);
    g.lower_count = lower.size();
    g.labels.reserve(lower.size() + upper.size());
    for (auto w : lower) g.labels.push_back(word_str(w, n));
    for (auto w : upper) g.labels.push_back(word_str(w, n));
    std::unordered_map<std::uint64_t, int> upper_index;
    upper_index.reserve(upper.size() * 2);
    for (std::size_t i = 0; i < upper.size(); ++i)
        upper_index.emplace(upper[i], static_cast<int>(lower.size() + i));
    g.adj.resize(g.labels.size());
    g.edges.reserve(lower.size() * static_cast<std::size_t>(k + 1));
    for (std::size_t li = 0; li < lower.size(); ++li) {
        std::uint64_t w = lower[li];
        for (int x = 0; x < n; ++x) {
            if ((w >> x) & 1u) continue;
            int ui = upper_index.at(w | (1ull << x));
            int color = color_edges ? edge_color(w, n, x) : -1;
            g.edges.push_back({static_cast<int>(li), ui, color, 1, false});
            g.adj[li].push_back({ui, color});
            g.adj[static_cast<std::size_t>(ui)].push_back({static_cast<int>(li), color});
        }
    }
    return g;
}

namespace {

// Necklace class representatives of the given weight, in canonical order.
std::vector<std::uint64_t> necklaces_of_weight(int n, int k) {
    std::vector<std::uint64_t> reps;
    for (std::uint64_t w : words_of_weight(n, k)) {
        if (min_rotation(w, n) == w) reps.push_back(w);
    }
    std::sort(reps.begin(), reps.end(), word_str_less);
    return reps;
}

} // namespace

ColoredGraph build_mk_pi(int k) {
    const int n = 2 * k + 1;
    ColoredGraph g;
    g.k = k;
    g.name = "M" + std::to_string(k) + "/pi";
    auto lower = necklaces_of_weight(n, k);
    auto upper = necklaces_of_weight(n, k + 1);
    g.lower_count = lower.size();
    for (auto w : lower) g.labels.push_back("(" + word_str(w, n) + ")");
    for (auto w : upper) g.labels.push_back("(" + word_str(w, n) + ")");
    std::unordered_map<std::uint64_t, int> upper_index;
    for (std::size_t i = 0; i < upper.size(); ++i)
        upper_index.emplace(upper[i], static_cast<int>(lower.size() + i));
    g.adj.resize(g.labels.size());
    for (std::size_t li = 0; li < lower.size(); ++li) {
        std::uint64_t w = lower[li];
        auto sym = delta_symbols(w, n);
        for (int x = 0; x < n; ++x) {
            if (sym[static_cast<std::size_t>(x)] == kAsterisk) continue;
            int ui = upper_index.at(min_rotation(w | (1ull << x), n));
            int color = sym[static_cast<std::size_t>(x)];
            g.edges.push_back({static_cast<int>(li), ui, color, 1, false});
            g.adj[li].push_back({ui, color});
            g.adj[static_cast<std::size_t>(ui)].push_back({static_cast<int>(li), color});
        }
    }
    return g;
}

ColoredGraph build_rk(int k) {
    const int n = 2 * k + 1;
    ColoredGraph g;
    g.k = k;
    g.name = "R" + std::to_string(k);
    auto germs = enumerate_germs(k);
    g.lower_count = germs.size();
    for (const auto& a : germs) g.labels.push_back(a.k == 1 ? "e" : a.str());
    g.adj.resize(g.labels.size());

    auto lower = necklaces_of_weight(n, k);
    std::vector<std::uint64_t> germ_rank_of_class(lower.size());
    std::unordered_map<std::uint64_t, std::size_t> class_index;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        class_index.emplace(lower[i], i);
        germ_rank_of_class[i] = germ_rank(germ_of_word(lower[i], n));
    }
    // one edge per skew orbit pair, one loop per horizontal orbit
    std::map<std::tuple<int, int, int>, int> seen; // (min, max, color) -> count
    for (std::size_t ci = 0; ci < lower.size(); ++ci) {
        std::uint64_t w = lower[ci];
        auto sym = delta_symbols(w, n);
        int self = static_cast<int>(germ_rank_of_class[ci]);
        for (int x = 0; x < n; ++x) {
            int color = sym[static_cast<std::size_t>(x)];
            if (color == kAsterisk) continue;
            std::uint64_t upper = w | (1ull << x);
            std::uint64_t partner = min_rotation(aleph_word(upper, n), n); // weight-k side of the target
            int other = static_cast<int>(germ_rank_of_class[class_index.at(partner)]);
            if (partner == w) {
                // horizontal orbit: loop
                g.edges.push_back({self, self, color, 1, true});
                g.adj[static_cast<std::size_t>(self)].push_back({self, color});
            } else {
                auto key = std::make_tuple(std::min(self, other), std::max(self, other), color);
                if (++seen[key] == 2) {
                    g.edges.push_back({std::get<0>(key), std::get<1>(key), color, 1, false});
                    g.adj[static_cast<std::size_t>(self)].push_back({other, color});
                    g.adj[static_cast<std::size_t>(other)].push_back({self, color});
                }
            }
        }
    }
    for (auto& [key, cnt] : seen) {
        if (cnt != 2)
            throw UsageError("build_rk: skew orbit pair did not close (color mismatch across the reflection)");
    }
    return g;
}

std::string graph_to_dot(const ColoredGraph& g) {
    std::string s = "graph " + g.name + " {\n";
    // stable palette for small color counts
    static const char* palette[] = {"red",    "blue",   "green",  "orange", "purple", "brown",
                                    "cyan",   "magenta", "gold",  "gray",   "black"};
    for (std::size_t i = 0; i < g.labels.size(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + g.labels[i] + "\"];\n";
    for (const auto& e : g.edges) {
        s += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v);
        s += " [";
        if (e.color >= 0) {
            s += "label=\"" + std::to_string(e.color) + "\"";
            s += ",color=" + std::string(palette[e.color % 11]);
        }
        if (e.loop) s += (e.color >= 0 ? std::string(",") : std::string()) + "dir=none";
        s += "];\n";
    }
    s += "}\n";
    return s;
}

std::string graph_to_csv(const ColoredGraph& g) {
    std::string s = "vertex,color,neighbor\n";
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        for (auto [to, color] : g.adj[v]) {
            s += g.labels[v] + "," + (color >= 0 ? std::to_string(color) : std::string()) + "," +
                 g.labels[static_cast<std::size_t>(to)] + "\n";
        }
    }
    return s;
}

std::uint64_t mk_memory_estimate(int k) {
    const int n = 2 * k + 1;
    std::uint64_t verts = 2 * binom(n, k);
    std::uint64_t edges = binom(n, k) * static_cast<std::uint64_t>(k + 1);
    return verts * (static_cast<std::uint64_t>(n) + 48) + edges * 40;
}

} // namespace midlevels
