#include "midlevels/lexical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace midlevels {

int lexical_color(std::uint64_t w, int n) {
    if (w & 1u) throw UsageError("lexical_color: b_0 must be 0");
    int k = (n - 1) / 2;
    if (weight(w) != k) throw UsageError("lexical_color: weight must be k");
    int x = 0, y = 0, above = 0;
    for (int i = 1; i < n; ++i) {
        if ((w >> i) & 1u) {
            ++y;
        } else {
            if (y > x) ++above;
            ++x;
        }
    }
    return above;
}

int lexical_color_formula(std::uint64_t w, int n, int x) {
    if ((w >> x) & 1u) throw UsageError("lexical_color_formula: position x must hold a 0");
    int c = 0;
    for (int y = 0; y < n; ++y) {
        if (y == x || ((w >> y) & 1u)) continue;
        int ones = 0, zeros = 0;
        for (int j = y; j != x; j = (j + 1) % n) {
            if ((w >> j) & 1u)
                ++ones;
            else
                ++zeros;
        }
        if (ones < zeros) ++c;
    }
    return c;
}

int edge_color(std::uint64_t w, int n, int x) { return lexical_color(translate(w, -x, n), n); }

int edge_color_upper(std::uint64_t u, int n, int x) {
    if (!((u >> x) & 1u)) throw UsageError("edge_color_upper: position x must hold a 1");
    std::uint64_t r = translate(u, n - 1 - x, n); // designated 1 lands at position n-1
    return lexical_color(aleph_word(r, n), n);
}

std::vector<int> delta_symbols(std::uint64_t w, int n) {
    std::vector<int> sym(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sym[static_cast<std::size_t>(i)] = ((w >> i) & 1u) ? kAsterisk : edge_color(w, n, i);
    return sym;
}

namespace {

// The unique rotation with every proper prefix holding more colors than
// asterisks (cycle lemma: k+1 colors vs k asterisks).
int dominant_rotation(const std::vector<int>& sym) {
    const int n = static_cast<int>(sym.size());
    for (int r = 0; r < n; ++r) {
        int colors = 0, stars = 0;
        bool ok = true;
        for (int i = 0; i < n - 1; ++i) {
            (sym[static_cast<std::size_t>((r + i) % n)] == kAsterisk) ? ++stars : ++colors;
            if (colors <= stars) {
                ok = false;
                break;
            }
        }
        if (ok) return r;
    }
    throw UsageError("delta_notation: no dominant rotation");
}

} // namespace

TreeCode delta_notation(std::uint64_t w, int n) {
    auto sym = delta_symbols(w, n);
    int r = dominant_rotation(sym);
    TreeCode code;
    code.k = (n - 1) / 2;
    code.sym.reserve(sym.size());
    for (int i = 0; i < n; ++i) code.sym.push_back(sym[static_cast<std::size_t>((r + i) % n)]);
    return code;
}

std::string delta_display(std::uint64_t w, int n) { return "<" + delta_notation(w, n).str() + ">"; }

KGerm germ_of_word(std::uint64_t w, int n) { return uncastle(delta_notation(w, n)); }

KGerm neighbor_germ(const KGerm& alpha, int c) {
    const int n = 2 * alpha.k + 1;
    if (c < 0 || c > alpha.k) throw UsageError("neighbor_germ: color out of range");
    TreeCode code = castle(alpha);
    std::uint64_t w = theta(alpha).bits;
    int x = -1;
    for (int i = 0; i < n; ++i) {
        if (code.sym[static_cast<std::size_t>(i)] == c) {
            x = i;
            break;
        }
    }
    std::uint64_t upper = w | (1ull << x);
    return germ_of_word(aleph_word(upper, n), n);
}

CatTable cat_table_serial(int k) {
    if (k < 2) throw UsageError("cat_table: k must be >= 2");
    CatTable t;
    t.k = k;
    t.germs = enumerate_germs(k);
    t.neighbors.resize(t.germs.size());
    for (std::size_t m = 0; m < t.germs.size(); ++m) {
        auto& row = t.neighbors[m];
        row.reserve(static_cast<std::size_t>(k + 1));
        for (int c = k; c >= 0; --c) row.push_back(neighbor_germ(t.germs[m], c));
    }
    return t;
}

CatTable cat_table(int k, int jobs) {
    if (k < 2) throw UsageError("cat_table: k must be >= 2");
    CatTable t;
    t.k = k;
    t.germs = enumerate_germs(k);
    t.neighbors.resize(t.germs.size());
    const std::int64_t rows = static_cast<std::int64_t>(t.germs.size());
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t m = 0; m < rows; ++m) {
        auto& row = t.neighbors[static_cast<std::size_t>(m)];
        row.reserve(static_cast<std::size_t>(k + 1));
        for (int c = k; c >= 0; --c) row.push_back(neighbor_germ(t.germs[static_cast<std::size_t>(m)], c));
    }
    (void)jobs;
    return t;
}

namespace {

int minimal_k_for(std::uint64_t m, int kmin) {
    int k = kmin;
    while (catalan(k) <= m) ++k;
    return k;
}

} // namespace

std::vector<std::uint64_t> s0_sequence(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        int k = minimal_k_for(m, 1);
        out.push_back(germ_rank(neighbor_germ(germ_unrank(k, m), k)));
    }
    return out;
}

std::vector<std::uint64_t> s1_sequence(std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        int k = minimal_k_for(m, 2);
        out.push_back(germ_rank(neighbor_germ(germ_unrank(k, m), k - 1)));
    }
    return out;
}

// --- Direct neighbor computation -----------------------------------------------

namespace {

// Ascent of a digit string: maximal strictly increasing prefix when it
// starts with 0; otherwise maximal non-descending prefix holding at most
// one pair of equal (nonzero) terms.
std::size_t ascent_len(const std::vector<int>& s, std::size_t from) {
    std::size_t i = from + 1;
    if (s[from] == 0) {
        while (i < s.size() && s[i] > s[i - 1]) ++i;
    } else {
        bool pair_used = false;
        while (i < s.size() && s[i] >= s[i - 1]) {
            if (s[i] == s[i - 1]) {
                if (pair_used) break;
                pair_used = true;
            }
            ++i;
        }
    }
    return i - from;
}

// Rewrites s (digit vector, leftmost first) chunk by chunk:
// chunk_j + reverse(out_j) = B_j...B_j, with B_1 = first_b and subsequent
// B_j = |chunk_{j-1}| + |chunk_j| - 2. Returns false when a digit would
// leave [0, 60].
bool rewrite_chunks(const std::vector<int>& s, int first_b, std::vector<int>& out, std::string& note) {
    std::size_t i = 0;
    std::size_t prev_len = 0;
    bool first = true;
    while (i < s.size()) {
        std::size_t len = ascent_len(s, i);
        int b = first ? first_b : static_cast<int>(prev_len + len) - 2;
        for (std::size_t j = 0; j < len; ++j) {
            int v = b - s[i + len - 1 - j];
            if (v < 0 || v > 60) {
                note = "chunk arithmetic left the digit range";
                return false;
            }
            out.push_back(v);
        }
        prev_len = len;
        i += len;
        first = false;
    }
    return true;
}

std::vector<int> digit_vec(const KGerm& g) {
    std::vector<int> v(g.digits.begin(), g.digits.end());
    return v;
}

KGerm germ_from_digits(const std::vector<int>& v, int k, bool& ok) {
    KGerm g;
    g.k = k;
    g.digits.assign(v.begin(), v.end());
    ok = valid_germ(g);
    return g;
}

// Remark-style color-k neighbor: pad a leading 0 when a_{k-1} = 1, rewrite
// the ascent chunks against B_1 = |chunk_1| - 1, strip the pad.
bool direct_color_k(const KGerm& alpha, KGerm& out, std::string& note) {
    std::vector<int> s = digit_vec(alpha);
    bool padded = false;
    if (!s.empty() && s[0] == 1) {
        s.insert(s.begin(), 0);
        padded = true;
    }
    if (s.empty()) {
        out = alpha;
        return true;
    }
    std::vector<int> b;
    int first_b = static_cast<int>(ascent_len(s, 0)) - 1;
    if (!rewrite_chunks(s, first_b, b, note)) return false;
    if (padded) {
        if (b.empty() || b[0] != 0) {
            note = "padded rewrite did not restore the leading zero";
            return false;
        }
        b.erase(b.begin());
    }
    bool ok = false;
    out = germ_from_digits(b, alpha.k, ok);
    if (!ok) note = "rewrite produced an invalid germ";
    return ok;
}

// Right-hand side of the 0 < p < k case: positions q-1..1 rewritten with
// B'_1 = |chunk_1| + a_q; positions k-1..q+1 are not determined by the text.
bool direct_color_mid(const KGerm& alpha, int p, KGerm& out, std::string& note) {
    const int k = alpha.k;
    const int q = (p == k - 1) ? k : p + 1;
    if (q < k - 1) {
        note = "prefix left of the preserved entry is not determined by the procedure";
        return false;
    }
    std::vector<int> s = digit_vec(alpha);
    // suffix strictly below position q
    std::vector<int> suffix(s.end() - (q - 1), s.end());
    int aq = (q == k) ? 0 : alpha.at(q);
    std::vector<int> b;
    if (!suffix.empty()) {
        int first_b = static_cast<int>(ascent_len(suffix, 0)) + aq;
        if (!rewrite_chunks(suffix, first_b, b, note)) return false;
    }
    std::vector<int> full(s.begin(), s.end() - (q - 1));
    full.insert(full.end(), b.begin(), b.end());
    bool ok = false;
    out = germ_from_digits(full, k, ok);
    if (!ok) note = "rewrite produced an invalid germ";
    return ok;
}

} // namespace

DirectNeighbor neighbor_direct(const KGerm& alpha, int p) {
    const int k = alpha.k;
    if (p < 0 || p > k) throw UsageError("neighbor_direct: color out of range");
    DirectNeighbor r;
    if (p == 0) {
        r.value = reflect_phi(alpha);
        return r;
    }
    KGerm out;
    std::string note;
    bool ok = (p == k) ? direct_color_k(alpha, out, note) : direct_color_mid(alpha, p, out, note);
    if (ok) {
        // self-check: the color classes are involutions, so rewriting the
        // result must lead back; anything else is an undetected ambiguity
        KGerm back;
        std::string note2;
        bool ok2 = (p == k) ? direct_color_k(out, back, note2) : direct_color_mid(out, p, back, note2);
        if (ok2 && back == alpha) {
            r.value = out;
            return r;
        }
        note = "rewrite is not involutive here";
    }
    r.value = neighbor_germ(alpha, p);
    r.exact = false;
    r.note = note;
    return r;
}

} // namespace midlevels
