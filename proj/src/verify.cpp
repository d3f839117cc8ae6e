#include "midlevels/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "midlevels/graphs.hpp"
#include "midlevels/hamilton.hpp"

namespace midlevels {

namespace {

using Checker = void (*)(int, std::vector<CheckResult>&);

void add(std::vector<CheckResult>& out, const std::string& module, const std::string& name, bool pass,
         const std::string& witness) {
    out.push_back({module, name, pass, witness});
}

// --- germs ---------------------------------------------------------------

void check_germs(int kmax, std::vector<CheckResult>& out) {
    bool pass = true;
    std::string witness;
    for (int k = 1; k <= kmax && pass; ++k) {
        auto germs = enumerate_germs(k);
        if (germs.size() != catalan(k)) {
            pass = false;
            witness = "k=" + std::to_string(k) + ": " + std::to_string(germs.size()) + " germs";
        }
    }
    add(out, "germs", "catalan counts", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 9) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            if (g.is_null()) continue;
            KGerm p = parent(g);
            if (!(p < g)) {
                pass = false;
                witness = "parent(" + g.str() + ") not smaller";
                break;
            }
            int steps = 0, budget = 0;
            for (auto d : g.digits) budget += d;
            KGerm cur = g;
            while (!cur.is_null()) {
                cur = parent(cur);
                ++steps;
            }
            if (steps > budget) {
                pass = false;
                witness = "germ " + g.str() + " took " + std::to_string(steps) + " steps to the root";
                break;
            }
        }
    }
    add(out, "germs", "parent map decreases and reaches the root", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k < kmax && pass; ++k) {
        auto small = enumerate_germs(k);
        auto big = enumerate_germs(k + 1);
        for (std::size_t m = 0; m < small.size(); ++m) {
            const auto& b = big[m];
            if (b.digits[0] != 0 ||
                !std::equal(small[m].digits.begin(), small[m].digits.end(), b.digits.begin() + 1)) {
                pass = false;
                witness = "k=" + std::to_string(k) + ", m=" + std::to_string(m);
                break;
            }
        }
    }
    add(out, "germs", "enumeration is stable under zero-prefixing", pass, witness);
}

// --- treecodec --------------------------------------------------------------

void check_treecodec(int kmax, std::vector<CheckResult>& out) {
    bool pass = true;
    std::string witness;
    for (int k = 1; k <= std::min(kmax, 9) && pass; ++k) {
        std::set<std::string> codes;
        for (const auto& g : enumerate_germs(k)) {
            TreeCode c = castle(g);
            if (auto why = code_violation(c)) {
                pass = false;
                witness = "castle(" + g.str() + "): " + *why;
                break;
            }
            if (!codes.insert(c.str()).second) {
                pass = false;
                witness = "castle not injective at " + g.str();
                break;
            }
            if (!(uncastle(c) == g)) {
                pass = false;
                witness = "roundtrip failed at " + g.str();
                break;
            }
        }
    }
    add(out, "treecodec", "castle/uncastle bijection", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 8) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            TreeCode c = castle(g);
            // factor as 0 v 1 u * with v, u balanced and color-dominant
            std::size_t pos1 = 0;
            for (std::size_t i = 0; i < c.sym.size(); ++i)
                if (c.sym[i] == 1) pos1 = i;
            auto dyck = [&](std::size_t from, std::size_t to) {
                int colors = 0, stars = 0;
                for (std::size_t i = from; i < to; ++i) {
                    (c.sym[i] == kAsterisk) ? ++stars : ++colors;
                    if (colors < stars) return false;
                }
                return colors == stars;
            };
            if (c.sym.back() != kAsterisk || !dyck(1, pos1) || !dyck(pos1 + 1, c.sym.size() - 1)) {
                pass = false;
                witness = "code " + c.str() + " does not factor as 0 v 1 u *";
                break;
            }
        }
    }
    add(out, "treecodec", "codes factor as 0 v 1 u * with Dyck halves", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 7) && pass; ++k) {
        std::map<std::string, std::size_t> class_sizes;
        for (const auto& g : enumerate_germs(k)) {
            OrderedTree t = tree_of_code(castle(g));
            class_sizes[plane_canonical(t).str()] += 1;
            // orbit size divides the contour length 2k
            OrderedTree cur = t;
            int orbit = 0;
            TreeCode first = code_of_tree(t);
            do {
                cur = root_rotate(cur);
                ++orbit;
            } while (!(code_of_tree(cur) == first));
            if (k >= 1 && (2 * k) % orbit != 0) {
                pass = false;
                witness = "orbit of " + g.str() + " has size " + std::to_string(orbit);
                break;
            }
        }
        std::size_t total = 0;
        for (auto& [c, s] : class_sizes) total += s;
        if (pass && total != catalan(k)) {
            pass = false;
            witness = "class sizes sum to " + std::to_string(total);
        }
    }
    add(out, "treecodec", "rotation orbits partition the germs", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 8) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            if (!(reflect_phi(reflect_phi(g)) == g)) {
                pass = false;
                witness = "reflection not involutive at " + g.str();
                break;
            }
        }
    }
    add(out, "treecodec", "reflection is an involution", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 7) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            if (!(theta_reroot(theta_reroot(g)) == g)) {
                pass = false;
                witness = "re-rooting not involutive at " + g.str();
                break;
            }
        }
    }
    add(out, "treecodec", "re-rooting is an involution", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 6) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            for (int i = 1; i < k && pass; ++i) {
                KGerm lhs = theta_reroot(neighbor_germ(g, i));
                KGerm rhs = neighbor_germ(theta_reroot(g), k - i);
                if (!(lhs == rhs)) {
                    pass = false;
                    witness = "conjugation failed at " + g.str() + ", color " + std::to_string(i);
                }
            }
        }
    }
    add(out, "treecodec", "re-rooting conjugates color i with color k-i", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 8) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            if (!(reassemble(atoms(g), k) == g)) {
                pass = false;
                witness = "atom reassembly failed at " + g.str();
                break;
            }
        }
    }
    add(out, "treecodec", "atom decomposition reassembles", pass, witness);
}

// --- midlevels graphs ----------------------------------------------------------

void check_graphs(int kmax, std::vector<CheckResult>& out) {
    bool pass = true;
    std::string witness;
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        ColoredGraph mk = build_mk(k, false);
        if (mk.vertex_count() != 2 * binom(2 * k + 1, k)) {
            pass = false;
            witness = "M_" + std::to_string(k) + " vertex count";
            break;
        }
        for (std::size_t v = 0; v < mk.adj.size(); ++v) {
            if (mk.adj[v].size() != static_cast<std::size_t>(k + 1)) {
                pass = false;
                witness = "M_" + std::to_string(k) + " not (k+1)-regular at " + mk.labels[v];
                break;
            }
        }
    }
    add(out, "midlevels", "M_k is (k+1)-regular with both levels", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        const int n = 2 * k + 1;
        std::uint64_t total = 0;
        for (std::uint64_t w : words_of_weight(n, k)) {
            auto c = pi_class(w, n);
            if (c.canonical == w) {
                if (c.orbit_size != n) {
                    pass = false;
                    witness = "degenerate orbit at " + word_str(w, n);
                    break;
                }
                total += static_cast<std::uint64_t>(c.orbit_size);
            }
        }
        if (pass && total != binom(n, k)) {
            pass = false;
            witness = "orbit sizes sum to " + std::to_string(total);
        }
    }
    add(out, "midlevels", "rotation orbits are free and account for L_k", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        const int n = 2 * k + 1;
        // skew edge orbits pair up under the reflection without fixed points
        std::set<std::pair<std::uint64_t, int>> skew; // (lower class, color)
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            auto sym = delta_symbols(w, n);
            for (int x = 0; x < n; ++x) {
                if (sym[static_cast<std::size_t>(x)] == kAsterisk) continue;
                if (classify_edge(w, n, x) == EdgeKind::skew)
                    skew.insert({w, sym[static_cast<std::size_t>(x)]});
            }
        }
        if (skew.size() % 2 != 0) {
            pass = false;
            witness = "odd number of skew orbits at k=" + std::to_string(k);
            break;
        }
        for (auto [w, color] : skew) {
            // reflected orbit: lower side of the flipped edge's partner
            auto sym = delta_symbols(w, n);
            int x = -1;
            for (int i = 0; i < n; ++i)
                if (sym[static_cast<std::size_t>(i)] == color) x = i;
            std::uint64_t partner = min_rotation(aleph_word(w | (1ull << x), n), n);
            auto psym = delta_symbols(partner, n);
            int pc = -1;
            for (int i = 0; i < n; ++i) {
                if (psym[static_cast<std::size_t>(i)] == kAsterisk) continue;
                if (min_rotation(aleph_word(partner | (1ull << i), n), n) == w &&
                    psym[static_cast<std::size_t>(i)] == color)
                    pc = psym[static_cast<std::size_t>(i)];
            }
            if (partner == w || pc != color || !skew.contains({partner, pc})) {
                pass = false;
                witness = "reflection pairing failed at (" + word_str(w, n) + "), color " +
                          std::to_string(color);
                break;
            }
        }
    }
    add(out, "midlevels", "skew edges pair up under the reflection", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 7) && pass; ++k) {
        const int n = 2 * k + 1;
        std::uint64_t horizontal_endpoints = 0;
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            int loops = 0;
            auto sym = delta_symbols(w, n);
            for (int x = 0; x < n; ++x) {
                if (sym[static_cast<std::size_t>(x)] == kAsterisk) continue;
                if (classify_edge(w, n, x) == EdgeKind::horizontal) ++loops;
            }
            if (loops > 2) {
                pass = false;
                witness = "vertex (" + word_str(w, n) + ") has " + std::to_string(loops) +
                          " horizontal edges";
                break;
            }
            if (loops > 0) ++horizontal_endpoints;
        }
        if (pass && horizontal_endpoints > (1ull << k)) {
            pass = false;
            witness = "more than 2^k horizontal endpoints at k=" + std::to_string(k);
        }
    }
    add(out, "midlevels", "horizontal multiplicity never exceeds 2", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        ColoredGraph rk = build_rk(k);
        if (rk.vertex_count() != catalan(k)) {
            pass = false;
            witness = "R_" + std::to_string(k) + " has " + std::to_string(rk.vertex_count()) + " vertices";
            break;
        }
        for (std::size_t v = 0; v < rk.adj.size(); ++v) {
            std::set<int> colors;
            for (auto [to, color] : rk.adj[v]) colors.insert(color);
            if (colors.size() != static_cast<std::size_t>(k + 1)) {
                pass = false;
                witness = "R_" + std::to_string(k) + " vertex " + rk.labels[v] + " misses a color";
                break;
            }
        }
        // covering consistency: dihedral fibers partition V(M_k)
        const int n = 2 * k + 1;
        std::map<std::string, std::uint64_t> fiber;
        for (std::uint64_t w : words_of_weight(n, k)) fiber[germ_of_word(w, n).str()] += 1;
        for (std::uint64_t w : words_of_weight(n, k + 1))
            fiber[germ_of_word(aleph_word(w, n), n).str()] += 1;
        std::uint64_t total = 0;
        for (auto& [g, cnt] : fiber) total += cnt;
        if (pass && (fiber.size() != catalan(k) || total != 2 * binom(n, k))) {
            pass = false;
            witness = "fibers cover " + std::to_string(total) + " vertices in " +
                      std::to_string(fiber.size()) + " classes";
        }
    }
    add(out, "midlevels", "dihedral folding has C_k vertices, all colors, full fibers", pass, witness);

    // dihedral action compatibility on sampled vertices
    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 5) && pass; ++k) {
        const int n = 2 * k + 1;
        auto act = [&](int i, int j, std::uint64_t v) {
            std::uint64_t r = j ? aleph_word(v, n) : v;
            return translate(r, i, n);
        };
        auto mul = [&](std::pair<int, int> a, std::pair<int, int> b) {
            // (i1,j1)*(i2,j2) in the semidirect product
            auto [i1, j1] = a;
            auto [i2, j2] = b;
            int i = j1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
            return std::make_pair(i, j1 ^ j2);
        };
        std::uint64_t v = words_of_weight(n, k)[binom(n, k) / 2];
        for (int i1 = 0; i1 < n && pass; ++i1)
            for (int j1 = 0; j1 < 2 && pass; ++j1)
                for (int i2 = 0; i2 < n && pass; ++i2)
                    for (int j2 = 0; j2 < 2 && pass; ++j2) {
                        auto g = mul({i1, j1}, {i2, j2});
                        if (act(g.first, g.second, v) != act(i1, j1, act(i2, j2, v))) {
                            pass = false;
                            witness = "compatibility failed at k=" + std::to_string(k);
                        }
                    }
    }
    add(out, "midlevels", "dihedral action satisfies the compatibility law", pass, witness);
}

// --- lexical ------------------------------------------------------------------

void check_lexical(int kmax, int jobs, std::vector<CheckResult>& out) {
    bool pass = true;
    std::string witness;
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            for (int x = 0; x < n && pass; ++x) {
                if ((w >> x) & 1u) continue;
                if (edge_color(w, n, x) != lexical_color_formula(w, n, x)) {
                    pass = false;
                    witness = "procedure != formula at (" + word_str(w, n) + "), x=" + std::to_string(x);
                }
            }
        }
    }
    add(out, "lexical", "grid-path procedure equals the set-cardinality formula", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 5) && pass; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            for (int x = 0; x < n && pass; ++x) {
                if ((w >> x) & 1u) continue;
                if (edge_color(w, n, x) != edge_color_upper(w | (1ull << x), n, x)) {
                    pass = false;
                    witness = "endpoint colors differ at " + word_str(w, n) + ", x=" + std::to_string(x);
                }
            }
        }
    }
    add(out, "lexical", "lower and upper endpoints assign equal colors", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        ColoredGraph mk = build_mk(k, true);
        // proper coloring: every vertex sees each color exactly once
        for (std::size_t v = 0; v < mk.adj.size() && pass; ++v) {
            std::set<int> colors;
            for (auto [to, color] : mk.adj[v]) colors.insert(color);
            if (colors.size() != static_cast<std::size_t>(k + 1)) {
                pass = false;
                witness = "vertex " + mk.labels[v] + " misses a color";
            }
        }
        // each color class is a perfect matching
        std::vector<std::uint64_t> class_size(static_cast<std::size_t>(k + 1), 0);
        for (const auto& e : mk.edges) class_size[static_cast<std::size_t>(e.color)] += 1;
        for (int c = 0; c <= k && pass; ++c) {
            if (class_size[static_cast<std::size_t>(c)] != mk.vertex_count() / 2) {
                pass = false;
                witness = "color " + std::to_string(c) + " class has " +
                          std::to_string(class_size[static_cast<std::size_t>(c)]) + " edges";
            }
        }
    }
    add(out, "lexical", "colors form a 1-factorization of M_k", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            for (int x = 0; x < n && pass; ++x) {
                if ((w >> x) & 1u) continue;
                int c = edge_color(w, n, x);
                // rotation invariance
                std::uint64_t w2 = translate(w, 3, n);
                if (edge_color(w2, n, (x + 3) % n) != c) {
                    pass = false;
                    witness = "rotation changed a color at (" + word_str(w, n) + ")";
                    break;
                }
                // reflected edge of the SREP carries the same color
                std::uint64_t u = w | (1ull << x);
                std::uint64_t rl = aleph_word(u, n);
                std::uint64_t ru = aleph_word(w, n);
                std::uint64_t d = rl ^ ru;
                if (std::popcount(d) != 1) {
                    pass = false;
                    witness = "reflected pair is not an edge at (" + word_str(w, n) + ")";
                    break;
                }
                if (edge_color(rl, n, std::countr_zero(d)) != c) {
                    pass = false;
                    witness = "reflected edge color differs at (" + word_str(w, n) + "), x=" +
                              std::to_string(x);
                    break;
                }
            }
        }
    }
    add(out, "lexical", "colors are constant on rotation orbits and reflection pairs", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 8) && pass; ++k) {
        CatTable t = cat_table(k, jobs);
        const std::uint64_t ck = catalan(k);
        for (int c = 0; c <= k && pass; ++c) {
            std::vector<bool> hit(ck, false);
            std::vector<std::uint64_t> img(ck);
            for (std::uint64_t m = 0; m < ck; ++m) {
                std::uint64_t r = germ_rank(t.neighbors[m][static_cast<std::size_t>(k - c)]);
                img[m] = r;
                hit[r] = true;
            }
            for (std::uint64_t m = 0; m < ck; ++m) {
                if (!hit[m]) {
                    pass = false;
                    witness = "column " + std::to_string(c) + " not a permutation at k=" + std::to_string(k);
                    break;
                }
                if (img[img[m]] != m) {
                    pass = false;
                    witness = "column " + std::to_string(c) + " not an involution at k=" + std::to_string(k);
                    break;
                }
            }
        }
        // entry preservation: alpha^k keeps a_{k-1}; alpha^p keeps a_{p+1} for p <= k-2
        for (std::uint64_t m = 0; m < ck && pass; ++m) {
            const KGerm& a = t.germs[m];
            if (t.neighbors[m][0].at(k - 1) != a.at(k - 1)) {
                pass = false;
                witness = "color-k neighbor changed a_{k-1} at m=" + std::to_string(m);
                break;
            }
            for (int p = 0; p <= k - 2; ++p) {
                if (t.neighbors[m][static_cast<std::size_t>(k - p)].at(p + 1) != a.at(p + 1)) {
                    pass = false;
                    witness = "color-" + std::to_string(p) + " neighbor changed a_" +
                              std::to_string(p + 1) + " at m=" + std::to_string(m);
                    break;
                }
            }
        }
    }
    add(out, "lexical", "table columns are involutions with preserved entries", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 7) && pass; ++k) {
        CatTable small = cat_table(k, jobs);
        CatTable big = cat_table(k + 1, jobs);
        const std::uint64_t ck = catalan(k);
        for (std::uint64_t m = 0; m < ck && pass; ++m) {
            // color-(k-1) column of CAT(k) equals color-(k-1) column of CAT(k+1)
            // on the zero-prefixed germs
            const KGerm& lhs = small.neighbors[m][1];
            const KGerm& rhs = big.neighbors[m][2];
            if (to_rgs(lhs) != to_rgs(rhs)) {
                pass = false;
                witness = "stability failed at k=" + std::to_string(k) + ", m=" + std::to_string(m);
            }
        }
    }
    add(out, "lexical", "adjacent tables agree on the shared block", pass, witness);
}

// --- hamilton ---------------------------------------------------------------

void check_hamilton(int kmax, int jobs, std::vector<CheckResult>& out) {
    bool pass = true;
    std::string witness;
    for (int k = 2; k <= std::min(kmax, 6) && pass; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            if (!(neighbor_germ(g, 0) == reflect_phi(g))) {
                pass = false;
                witness = "0-colored edge is not the reflection at " + g.str();
                break;
            }
            OrderedTree mirrored = tree_of_code(castle(reflect_phi(g)));
            if (!(neighbor_germ(g, 1) == uncastle(code_of_tree(root_rotate(mirrored))))) {
                pass = false;
                witness = "1-colored edge is not reflection-then-rotation at " + g.str();
                break;
            }
        }
    }
    add(out, "hamilton", "matching edges realize the two tree symmetries", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        CycleDecomposition dec = two_factor_w01(k);
        label_cycles(dec);
        if (dec.cycles.size() != plane_class_count(k)) {
            pass = false;
            witness = "k=" + std::to_string(k) + ": " + std::to_string(dec.cycles.size()) + " cycles vs " +
                      std::to_string(plane_class_count(k)) + " plane classes";
            break;
        }
        std::set<std::string> labels;
        std::set<std::vector<std::string>> germ_sets;
        for (const auto& info : dec.cycles) {
            labels.insert(info.plane_label.str());
            std::vector<std::string> names;
            for (const auto& g : info.germs) names.push_back(g.str());
            germ_sets.insert(names);
            if (info.xi % 2 != 0) {
                pass = false;
                witness = "odd xi at k=" + std::to_string(k);
                break;
            }
            // color alternation along the cycle
            const int n = dec.n;
            for (std::size_t i = 0; i < info.verts.size(); ++i) {
                std::uint64_t a = info.verts[i], b = info.verts[(i + 1) % info.verts.size()];
                std::uint64_t low = (weight(a) == k) ? a : b;
                std::uint64_t d = a ^ b;
                int c = edge_color(low, n, std::countr_zero(d));
                if (c != static_cast<int>(1 - i % 2)) {
                    pass = false;
                    witness = "alternation broken in cycle at k=" + std::to_string(k);
                    break;
                }
            }
        }
        if (pass && labels.size() != dec.cycles.size()) {
            pass = false;
            witness = "plane labels not distinct at k=" + std::to_string(k);
        }
        if (pass) {
            std::set<std::string> covered;
            std::uint64_t total = 0;
            for (const auto& set : germ_sets) {
                total += set.size();
                for (const auto& name : set) {
                    if (!covered.insert(name).second) {
                        pass = false;
                        witness = "germ " + name + " in two distinct cycle classes at k=" + std::to_string(k);
                    }
                }
            }
            if (pass && total != catalan(k)) {
                pass = false;
                witness = "cycle germ classes cover " + std::to_string(total) + " germs at k=" +
                          std::to_string(k);
            }
        }
    }
    add(out, "hamilton", "two-factor cycles match plane classes and alternate", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 2; k <= std::min(kmax, 6) && pass; ++k) {
        CycleDecomposition dec = two_factor_w01(k);
        label_cycles(dec);
        auto hexes = find_six_cycles(dec, jobs);
        std::vector<std::uint64_t> per_host(dec.cycles.size(), 0);
        for (const auto& h : hexes) per_host[static_cast<std::size_t>(h.host)] += 1;
        for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
            std::uint64_t expect = 2ull * static_cast<std::uint64_t>(dec.n) *
                                   static_cast<std::uint64_t>(dec.cycles[i].leaves) /
                                   static_cast<std::uint64_t>(dec.cycles[i].tau);
            if (dec.cycles.size() > 1 && per_host[i] != expect) {
                pass = false;
                witness = "cycle " + std::to_string(i) + " at k=" + std::to_string(k) + " hosts " +
                          std::to_string(per_host[i]) + " hexagons, expected " + std::to_string(expect);
                break;
            }
        }
    }
    add(out, "hamilton", "hexagon counts match 2n*t/tau per cycle", pass, witness);

    pass = true;
    witness.clear();
    for (int k = 1; k <= std::min(kmax, 6) && pass; ++k) {
        auto seq = hamilton_cycle(k);
        auto cert = verify_hamilton(k, seq);
        if (!cert.ok) {
            pass = false;
            witness = "k=" + std::to_string(k) + ": " + cert.violation;
        }
    }
    add(out, "hamilton", "constructed cycles pass the independent verifier", pass, witness);
}

} // namespace

std::vector<CheckResult> verify_all(int k, int jobs) {
    std::vector<CheckResult> out;
    check_germs(k, out);
    check_treecodec(k, out);
    check_graphs(k, out);
    check_lexical(k, jobs, out);
    check_hamilton(k, jobs, out);
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<CheckResult> verify_tables(const std::string& golden_dir) {
    std::vector<CheckResult> out;
    // Table of tree codes for k = 2, 3, 4
    {
        bool pass = true;
        std::string witness;
        std::istringstream in(read_file(golden_dir + "/table1_codes.txt"));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            int k;
            std::uint64_t m;
            std::string germ, code;
            ls >> k >> m >> germ >> code;
            KGerm g = parse_germ(germ, k);
            if (germ_rank(g) != m || castle(g).str() != code) {
                pass = false;
                witness = "mismatch at k=" + std::to_string(k) + ", m=" + std::to_string(m);
                break;
            }
        }
        add(out, "tables", "tree codes reproduce the code table", pass, witness);
    }
    // Binary words and subscripted forms for k = 2, 3
    {
        bool pass = true;
        std::string witness;
        std::istringstream in(read_file(golden_dir + "/table2_words.txt"));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            int k;
            std::uint64_t m;
            std::string germ, th, th_hat, al_hat, al;
            ls >> k >> m >> germ >> th >> th_hat >> al_hat >> al;
            KGerm g = parse_germ(germ, k);
            BinaryWord w = theta(g);
            if (w.str() != th || theta_hat(g) != th_hat || aleph_hat(g) != al_hat ||
                aleph(w).str() != al) {
                pass = false;
                witness = "mismatch at k=" + std::to_string(k) + ", m=" + std::to_string(m);
                break;
            }
        }
        add(out, "tables", "binary words and subscripts reproduce the word table", pass, witness);
    }
    // Colored adjacency tables for k = 2..5
    for (int k = 2; k <= 5; ++k) {
        bool pass = true;
        std::string witness;
        CatTable t = cat_table(k);
        std::istringstream in(read_file(golden_dir + "/cat" + std::to_string(k) + ".txt"));
        std::string line;
        std::uint64_t rows = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::uint64_t m;
            std::string germ;
            ls >> m >> germ;
            ++rows;
            if (t.germs[m].str() != germ) {
                pass = false;
                witness = "germ mismatch at m=" + std::to_string(m);
                break;
            }
            for (int c = k; c >= 0; --c) {
                std::string nb;
                ls >> nb;
                if (t.neighbors[m][static_cast<std::size_t>(k - c)].str() != nb) {
                    pass = false;
                    witness = "m=" + std::to_string(m) + ", color " + std::to_string(c) + ": got " +
                              t.neighbors[m][static_cast<std::size_t>(k - c)].str() + ", table says " + nb;
                    break;
                }
            }
            if (!pass) break;
        }
        if (pass && rows != catalan(k)) {
            pass = false;
            witness = "golden file has " + std::to_string(rows) + " rows";
        }
        add(out, "tables", "adjacency table k=" + std::to_string(k) + " reproduces cell for cell", pass,
            witness);
    }
    return out;
}

std::string direct_neighbor_report(int k) {
    std::ostringstream ss;
    std::uint64_t exact = 0, fallback = 0, wrong = 0;
    std::vector<std::string> mismatches;
    for (const auto& g : enumerate_germs(k)) {
        for (int p = 0; p <= k; ++p) {
            DirectNeighbor d = neighbor_direct(g, p);
            KGerm oracle = neighbor_germ(g, p);
            if (d.exact) {
                ++exact;
                if (!(d.value == oracle)) {
                    ++wrong;
                    if (mismatches.size() < 20)
                        mismatches.push_back("alpha=" + g.str() + " p=" + std::to_string(p) + ": direct " +
                                             d.value.str() + " vs graph " + oracle.str());
                }
            } else {
                ++fallback;
            }
        }
    }
    ss << "direct neighbor procedure at k=" << k << ": " << exact << " exact, " << fallback
       << " fell back to the delta route, " << wrong << " exact-path mismatches\n";
    for (const auto& m : mismatches) ss << "  " << m << "\n";
    return ss.str();
}

} // namespace midlevels
