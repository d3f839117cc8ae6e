#include "midlevels/treecodec.hpp"

#include <algorithm>
#include <deque>

namespace midlevels {

std::string TreeCode::str() const {
    std::string s;
    s.reserve(sym.size());
    for (int v : sym) {
        if (v == kAsterisk)
            s.push_back('*');
        else if (v < 10)
            s.push_back(static_cast<char>('0' + v));
        else
            s.push_back(static_cast<char>('A' + v - 10));
    }
    return s;
}

TreeCode parse_code(const std::string& s) {
    if (s.size() % 2 == 0 || s.size() < 3) throw UsageError("parse_code: length must be 2k+1 with k >= 1");
    TreeCode c;
    c.k = (static_cast<int>(s.size()) - 1) / 2;
    c.sym.reserve(s.size());
    for (char ch : s) {
        if (ch == '*')
            c.sym.push_back(kAsterisk);
        else if (ch >= '0' && ch <= '9')
            c.sym.push_back(ch - '0');
        else if (ch >= 'A' && ch <= 'Z')
            c.sym.push_back(ch - 'A' + 10);
        else
            throw UsageError(std::string("parse_code: bad symbol '") + ch + "'");
    }
    return c;
}

std::optional<std::string> code_violation(const TreeCode& code) {
    const int k = code.k;
    const int n = 2 * k + 1;
    if (k < 1 || static_cast<int>(code.sym.size()) != n) return "length must be 2k+1";
    std::vector<int> seen(static_cast<std::size_t>(k + 1), 0);
    int stars = 0;
    for (int v : code.sym) {
        if (v == kAsterisk)
            ++stars;
        else if (v < 0 || v > k)
            return "symbol out of range [0,k]";
        else
            ++seen[static_cast<std::size_t>(v)];
    }
    if (stars != k) return "must contain exactly k asterisks";
    for (int v = 0; v <= k; ++v)
        if (seen[static_cast<std::size_t>(v)] != 1) return "each color 0..k must occur exactly once";
    if (code.sym[0] != 0) return "leftmost entry must be 0";
    int colors = 0;
    stars = 0;
    for (int i = 0; i < n - 1; ++i) {
        if (code.sym[static_cast<std::size_t>(i)] == kAsterisk)
            ++stars;
        else
            ++colors;
        if (colors <= stars) return "prefix discipline violated";
    }
    for (int i = 0; i < n; ++i) {
        if (code.sym[static_cast<std::size_t>(i)] == k) {
            if (i == n - 1 || code.sym[static_cast<std::size_t>(i + 1)] != kAsterisk) return "k must be followed by an asterisk";
            if (i > 0 && code.sym[static_cast<std::size_t>(i - 1)] == kAsterisk) return "asterisk directly before k";
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        int a = code.sym[static_cast<std::size_t>(i)];
        int b = code.sym[static_cast<std::size_t>(i + 1)];
        if (a != kAsterisk && b != kAsterisk && b <= a) return "color right of a color must be larger";
    }
    // canonical labeling: decoding and re-encoding must reproduce the code
    {
        TreeCode probe = code;
        OrderedTree t = tree_of_code(probe);
        if (code_of_tree(t) != code) return "node labels do not follow right-to-left breadth-first order";
    }
    return std::nullopt;
}

// --- Castling -----------------------------------------------------------

static TreeCode root_code(int k) {
    TreeCode c;
    c.k = k;
    c.sym.reserve(static_cast<std::size_t>(2 * k + 1));
    for (int v = 0; v <= k; ++v) c.sym.push_back(v);
    for (int i = 0; i < k; ++i) c.sym.push_back(kAsterisk);
    return c;
}

TreeCode castle_step(const TreeCode& code, int i) {
    const int n = 2 * code.k + 1;
    if (i < 1 || i > code.k - 1) throw UsageError("castle_step: i out of range");
    for (int j = 0; j < i; ++j) {
        if (code.sym[static_cast<std::size_t>(j)] != j) throw UsageError("castle_step: prefix is not 01..i-1");
        if (code.sym[static_cast<std::size_t>(n - 1 - j)] != kAsterisk)
            throw UsageError("castle_step: trailing symbols are not asterisks");
    }
    int lo = i, hi = n - i; // interior [lo, hi)
    int omega = code.sym[static_cast<std::size_t>(lo)];
    if (omega == kAsterisk || omega <= 0) throw UsageError("castle_step: interior must start with a positive color");
    int split = -1;
    for (int j = lo + 1; j < hi; ++j) {
        if (code.sym[static_cast<std::size_t>(j)] == omega + 1) {
            split = j;
            break;
        }
    }
    if (split < 0) throw UsageError("castle_step: interior lacks color omega+1");
    TreeCode out;
    out.k = code.k;
    out.sym.reserve(code.sym.size());
    out.sym.insert(out.sym.end(), code.sym.begin(), code.sym.begin() + lo);
    out.sym.insert(out.sym.end(), code.sym.begin() + split, code.sym.begin() + hi); // Y
    out.sym.insert(out.sym.end(), code.sym.begin() + lo, code.sym.begin() + split); // X
    out.sym.insert(out.sym.end(), code.sym.begin() + hi, code.sym.end());
    return out;
}

TreeCode castle(const KGerm& alpha) {
    if (!valid_germ(alpha)) throw UsageError("castle: invalid germ");
    TreeCode code = root_code(alpha.k);
    for (int pos = alpha.k - 1; pos >= 1; --pos) {
        for (int rep = 0; rep < alpha.at(pos); ++rep) code = castle_step(code, pos);
    }
    return code;
}

namespace {

// One uncastling peel. Returns the germ position incremented, or 0 when the
// code is the root code. Throws on non-castle-images.
int uncastle_peel(TreeCode& code) {
    const int k = code.k;
    const int n = 2 * k + 1;
    int run = 0;
    while (run < n && code.sym[static_cast<std::size_t>(run)] == run) ++run;
    if (run == k + 1) return 0; // root code reached
    if (run < 1 || run > k - 1) throw UsageError("uncastle: not a castle image (bad ascending prefix)");
    for (int j = 0; j < run; ++j) {
        if (code.sym[static_cast<std::size_t>(n - 1 - j)] != kAsterisk)
            throw UsageError("uncastle: not a castle image (trailing block not asterisks)");
    }
    int lo = run, hi = n - run;
    int omega = code.sym[static_cast<std::size_t>(lo)];
    if (omega == kAsterisk) throw UsageError("uncastle: not a castle image (interior starts with asterisk)");
    if (omega - 1 < run) throw UsageError("uncastle: not a castle image (interior colors too small)");
    int split = -1;
    for (int j = lo + 1; j < hi; ++j) {
        if (code.sym[static_cast<std::size_t>(j)] == omega - 1) {
            split = j;
            break;
        }
    }
    if (split < 0) throw UsageError("uncastle: not a castle image (color omega-1 missing)");
    std::vector<int> out;
    out.reserve(code.sym.size());
    out.insert(out.end(), code.sym.begin(), code.sym.begin() + lo);
    out.insert(out.end(), code.sym.begin() + split, code.sym.begin() + hi); // Y
    out.insert(out.end(), code.sym.begin() + lo, code.sym.begin() + split); // X
    out.insert(out.end(), code.sym.begin() + hi, code.sym.end());
    code.sym = std::move(out);
    return run;
}

} // namespace

KGerm uncastle(const TreeCode& code) {
    if (auto why = code_violation(code)) throw UsageError("uncastle: " + *why);
    TreeCode work = code;
    KGerm g;
    g.k = code.k;
    g.digits.assign(static_cast<std::size_t>(code.k - 1), 0);
    long long budget = 1 + static_cast<long long>(code.k) * (code.k - 1); // cap on peels
    while (true) {
        int pos = uncastle_peel(work);
        if (pos == 0) break;
        g.set(pos, g.at(pos) + 1);
        if (--budget < 0) throw UsageError("uncastle: peel did not terminate");
    }
    if (!valid_germ(g)) throw UsageError("uncastle: reconstructed digits violate the growth condition");
    return g;
}

UncastleTrace uncastle_trace(const TreeCode& code) {
    if (auto why = code_violation(code)) throw UsageError("uncastle: " + *why);
    UncastleTrace tr;
    TreeCode work = code;
    KGerm g = uncastle(code);
    while (true) {
        int pos = uncastle_peel(work);
        if (pos == 0) break;
        g.set(pos, g.at(pos) - 1);
        tr.codes.push_back(work);
        tr.germs.push_back(g);
    }
    return tr;
}

// --- Tree <-> code --------------------------------------------------------

OrderedTree tree_of_code(const TreeCode& code) {
    const int n = 2 * code.k + 1;
    if (static_cast<int>(code.sym.size()) != n || code.sym.empty() || code.sym[0] == kAsterisk)
        throw UsageError("tree_of_code: malformed code");
    OrderedTree t;
    t.k = code.k;
    t.children.assign(static_cast<std::size_t>(code.k + 1), {});
    std::vector<int> stack{code.sym[0]};
    for (int i = 1; i < n; ++i) {
        int v = code.sym[static_cast<std::size_t>(i)];
        if (v == kAsterisk) {
            stack.pop_back();
            if (stack.empty()) throw UsageError("tree_of_code: ascent above the root");
        } else {
            t.children[static_cast<std::size_t>(stack.back())].push_back(v);
            stack.push_back(v);
        }
    }
    if (stack.size() != 1) throw UsageError("tree_of_code: unbalanced code");
    return t;
}

namespace {

// Canonical labels: BFS from the root, levels numbered right to left.
std::vector<int> canonical_labels(const OrderedTree& t, int root) {
    std::vector<int> label(t.children.size(), -1);
    int next = 0;
    std::vector<int> level{root};
    while (!level.empty()) {
        for (auto it = level.rbegin(); it != level.rend(); ++it) label[static_cast<std::size_t>(*it)] = next++;
        std::vector<int> down;
        for (int v : level)
            for (int c : t.children[static_cast<std::size_t>(v)]) down.push_back(c);
        level = std::move(down);
    }
    return label;
}

void dfs_emit(const OrderedTree& t, const std::vector<int>& label, int node, std::vector<int>& out) {
    out.push_back(label[static_cast<std::size_t>(node)]);
    for (int c : t.children[static_cast<std::size_t>(node)]) {
        dfs_emit(t, label, c, out);
        out.push_back(kAsterisk);
    }
}

TreeCode encode_from(const OrderedTree& t, int root) {
    auto label = canonical_labels(t, root);
    TreeCode code;
    code.k = t.k;
    code.sym.reserve(static_cast<std::size_t>(2 * t.k + 1));
    dfs_emit(t, label, root, code.sym);
    return code;
}

} // namespace

TreeCode code_of_tree(const OrderedTree& tree) { return encode_from(tree, 0); }

std::string tree_to_dot(const OrderedTree& tree) {
    std::string s = "graph tree {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < tree.children.size(); ++v)
        s += "  n" + std::to_string(v) + " [label=\"v" + std::to_string(v) + "\"];\n";
    for (std::size_t v = 0; v < tree.children.size(); ++v) {
        for (std::size_t j = 0; j < tree.children[v].size(); ++j) {
            s += "  n" + std::to_string(v) + " -- n" + std::to_string(tree.children[v][j]) +
                 " [order=" + std::to_string(j) + "];\n";
        }
    }
    s += "}\n";
    return s;
}

// --- Binary words ----------------------------------------------------------

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

BinaryWord parse_word(const std::string& s) {
    if (s.empty() || s.size() > 63) throw UsageError("parse_word: need 1..63 bits");
    BinaryWord w;
    w.n = static_cast<int>(s.size());
    for (int i = 0; i < w.n; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c == '1')
            w.bits |= 1ull << i;
        else if (c != '0')
            throw UsageError("parse_word: bad bit");
    }
    return w;
}

BinaryWord theta(const KGerm& alpha) {
    TreeCode code = castle(alpha);
    BinaryWord w;
    w.n = 2 * alpha.k + 1;
    for (int i = 0; i < w.n; ++i)
        if (code.sym[static_cast<std::size_t>(i)] == kAsterisk) w.bits |= 1ull << i;
    return w;
}

BinaryWord aleph(const BinaryWord& w) {
    BinaryWord r;
    r.n = w.n;
    for (int i = 0; i < w.n; ++i)
        if (!w.bit(w.n - 1 - i)) r.bits |= 1ull << i;
    return r;
}

namespace {

std::string subscript_str(char bit_char, int sub) {
    std::string s;
    s.push_back(bit_char);
    s.push_back('_');
    if (sub == kAsterisk)
        s.push_back('*');
    else if (sub < 10)
        s.push_back(static_cast<char>('0' + sub));
    else
        s.push_back(static_cast<char>('A' + sub - 10));
    return s;
}

} // namespace

std::string theta_hat(const KGerm& alpha) {
    TreeCode code = castle(alpha);
    std::string s;
    for (int v : code.sym) s += subscript_str(v == kAsterisk ? '1' : '0', v);
    return s;
}

std::string aleph_hat(const KGerm& alpha) {
    TreeCode code = castle(alpha);
    const int n = 2 * alpha.k + 1;
    std::string s;
    for (int i = 0; i < n; ++i) {
        int v = code.sym[static_cast<std::size_t>(n - 1 - i)];
        s += subscript_str(v == kAsterisk ? '0' : '1', v);
    }
    return s;
}

// --- Plane-tree operations ---------------------------------------------------

OrderedTree root_rotate(const OrderedTree& t) {
    if (t.children[0].empty()) throw UsageError("root_rotate: edgeless tree");
    // Work on shape with stable ids, then relabel through code round-trip.
    OrderedTree shape = t;
    int a = shape.children[0].front();
    shape.children[0].erase(shape.children[0].begin());
    shape.children[static_cast<std::size_t>(a)].push_back(0);
    return tree_of_code(encode_from(shape, a));
}

TreeCode plane_canonical(const OrderedTree& t) {
    const TreeCode first = code_of_tree(t);
    TreeCode best = first;
    OrderedTree cur = t;
    for (;;) {
        cur = root_rotate(cur);
        TreeCode c = code_of_tree(cur);
        if (c == first) break;
        if (c < best) best = c;
    }
    return best;
}

TreeCode plane_canonical(const KGerm& alpha) { return plane_canonical(tree_of_code(castle(alpha))); }

std::size_t plane_class_count(int k) {
    std::vector<TreeCode> reps;
    for (const KGerm& g : enumerate_germs(k)) reps.push_back(plane_canonical(g));
    std::sort(reps.begin(), reps.end(), [](const TreeCode& a, const TreeCode& b) { return a < b; });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps.size();
}

namespace {

void mirror_rec(OrderedTree& t, int node) {
    auto& ch = t.children[static_cast<std::size_t>(node)];
    std::reverse(ch.begin(), ch.end());
    for (int c : ch) mirror_rec(t, c);
}

} // namespace

KGerm reflect_phi(const KGerm& alpha) {
    OrderedTree t = tree_of_code(castle(alpha));
    mirror_rec(t, 0);
    return uncastle(encode_from(t, 0));
}

KGerm theta_reroot(const KGerm& alpha) {
    TreeCode code = castle(alpha);
    const int n = 2 * alpha.k + 1;
    std::vector<int> rc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int v = code.sym[static_cast<std::size_t>(n - 1 - i)];
        rc[static_cast<std::size_t>(i)] = (v == kAsterisk) ? kAsterisk : alpha.k - v;
    }
    // unique rotation with every proper prefix holding more colors than asterisks
    int best = -1;
    for (int r = 0; r < n && best < 0; ++r) {
        int colors = 0, stars = 0;
        bool ok = true;
        for (int i = 0; i < n - 1; ++i) {
            int v = rc[static_cast<std::size_t>((r + i) % n)];
            (v == kAsterisk) ? ++stars : ++colors;
            if (colors <= stars) {
                ok = false;
                break;
            }
        }
        if (ok) best = r;
    }
    if (best < 0) throw UsageError("theta_reroot: no dominant rotation");
    TreeCode out;
    out.k = alpha.k;
    out.sym.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.sym.push_back(rc[static_cast<std::size_t>((best + i) % n)]);
    return uncastle(out);
}

// --- Atom decomposition --------------------------------------------------------

AtomDecomposition atoms(const KGerm& alpha) {
    AtomDecomposition dec;
    const std::string s = alpha.str();
    int maxd = 0;
    for (char c : s) maxd = std::max(maxd, c - '0');
    for (int d = 1; d <= maxd; ++d) dec.base.push_back(static_cast<char>('0' + d));

    // maximal atom partition: lone zeros, else maximal strictly increasing runs
    std::vector<std::string> part;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '0') {
            part.push_back("0");
            ++i;
        } else {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] > s[j - 1]) ++j;
            part.push_back(s.substr(i, j - i));
            i = j;
        }
    }

    // Tier 1: carve the base out of whole maximal atoms, rightmost选 such
    // sub-collection first; scan from the right with backtracking.
    std::vector<bool> in_base(part.size(), false);
    auto solve = [&](auto&& self, std::size_t i, std::size_t left) -> bool {
        if (left == 0) return true;
        if (i == 0) return false;
        const std::string& a = part[i - 1];
        if (a.size() <= left && dec.base.compare(left - a.size(), a.size(), a) == 0) {
            in_base[i - 1] = true;
            if (self(self, i - 1, left - a.size())) return true;
            in_base[i - 1] = false;
        }
        return self(self, i - 1, left);
    };
    if (solve(solve, part.size(), dec.base.size())) {
        int base_digits_seen = 0;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (in_base[i]) {
                dec.parenthesized += part[i];
                base_digits_seen += static_cast<int>(part[i].size());
            } else {
                dec.atoms.push_back(part[i]);
                dec.offsets.push_back(base_digits_seen);
                dec.parenthesized += "(" + part[i] + ")";
            }
        }
        return dec;
    }

    // Tier 2: no whole-atom selection spells the base; embed it as the
    // rightmost subsequence instead and re-partition the leftover segments.
    std::vector<bool> used(s.size(), false);
    {
        std::size_t pos = s.size();
        for (std::size_t j = dec.base.size(); j-- > 0;) {
            std::size_t i = pos;
            while (i > 0 && s[i - 1] != dec.base[j]) --i;
            if (i == 0) throw UsageError("atoms: base string not embeddable; not a valid germ?");
            used[i - 1] = true;
            pos = i - 1;
        }
    }
    int base_digits_seen = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        if (used[i]) {
            dec.parenthesized += s[i];
            ++base_digits_seen;
            ++i;
            continue;
        }
        std::size_t j = i;
        if (s[i] == '0') {
            j = i + 1;
        } else {
            j = i + 1;
            while (j < s.size() && !used[j] && s[j] > s[j - 1]) ++j;
        }
        dec.atoms.push_back(s.substr(i, j - i));
        dec.offsets.push_back(base_digits_seen);
        dec.parenthesized += "(" + s.substr(i, j - i) + ")";
        i = j;
    }
    return dec;
}

KGerm reassemble(const AtomDecomposition& dec, int k) {
    std::string s;
    std::size_t a = 0;
    for (int pos = 0; pos <= static_cast<int>(dec.base.size()); ++pos) {
        while (a < dec.atoms.size() && dec.offsets[a] == pos) s += dec.atoms[a++];
        if (pos < static_cast<int>(dec.base.size())) s.push_back(dec.base[static_cast<std::size_t>(pos)]);
    }
    return parse_germ(s, k);
}

} // namespace midlevels
