#include "midlevels/germs.hpp"

#include <algorithm>

namespace midlevels {

bool KGerm::is_null() const {
    return std::all_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d == 0; });
}

std::string KGerm::str() const {
    std::string s;
    s.reserve(digits.size());
    for (std::uint8_t d : digits) {
        if (d < 10)
            s.push_back(static_cast<char>('0' + d));
        else
            s.push_back(static_cast<char>('A' + d - 10));
    }
    return s;
}

std::strong_ordering compare(const KGerm& a, const KGerm& b) {
    if (a.k != b.k) throw UsageError("compare: germs of different k");
    return a.digits <=> b.digits;
}

bool operator<(const KGerm& a, const KGerm& b) { return compare(a, b) == std::strong_ordering::less; }

bool valid_germ(const KGerm& g) {
    if (g.k < 1 || g.digits.size() != static_cast<std::size_t>(g.k - 1)) return false;
    if (g.k == 1) return true;
    if (g.digits[0] > 1) return false;
    for (std::size_t i = 1; i < g.digits.size(); ++i) {
        if (g.digits[i] > g.digits[i - 1] + 1) return false;
    }
    return true;
}

KGerm parse_germ(const std::string& s, int k) {
    if (k == 0) k = static_cast<int>(s.size()) + 1;
    KGerm g;
    g.k = k;
    g.digits.assign(static_cast<std::size_t>(k - 1), 0);
    if (s.size() > g.digits.size()) throw UsageError("parse_germ: string longer than k-1 digits");
    std::size_t off = g.digits.size() - s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'A' && c <= 'Z')
            v = c - 'A' + 10;
        else
            throw UsageError(std::string("parse_germ: bad digit '") + c + "'");
        g.digits[off + i] = static_cast<std::uint8_t>(v);
    }
    if (!valid_germ(g)) throw UsageError("parse_germ: growth condition violated in \"" + s + "\"");
    return g;
}

bool next_germ(KGerm& g) {
    // lexicographic successor under the cap a_{k-1} <= 1, a_{i-1} <= a_i + 1
    for (int i = static_cast<int>(g.digits.size()) - 1; i >= 0; --i) {
        int cap = (i == 0) ? 1 : g.digits[i - 1] + 1;
        if (g.digits[static_cast<std::size_t>(i)] < cap) {
            ++g.digits[static_cast<std::size_t>(i)];
            std::fill(g.digits.begin() + i + 1, g.digits.end(), 0);
            return true;
        }
    }
    return false;
}

std::vector<KGerm> enumerate_germs(int k) {
    if (k < 1) throw UsageError("enumerate_germs: k must be >= 1");
    std::vector<KGerm> out;
    out.reserve(catalan(k));
    KGerm g;
    g.k = k;
    g.digits.assign(static_cast<std::size_t>(k - 1), 0);
    out.push_back(g);
    while (next_germ(g)) out.push_back(g);
    return out;
}

std::uint64_t germ_rank(const KGerm& g) {
    if (!valid_germ(g)) throw UsageError("germ_rank: invalid germ");
    // count valid germs strictly below g: walk positions left to right,
    // counting completions for every smaller digit choice
    //   paths(i, d) = number of ways to fill positions i.. with previous digit d
    int len = g.k - 1;
    if (len == 0) return 0;
    std::uint64_t rank = 0;
    // suffix counts: cnt(i, d) = germs of positions i.. with previous digit d
    //              = sum_{c=0..d+1} cnt(i+1, c)
    std::vector<std::vector<std::uint64_t>> cnt(static_cast<std::size_t>(len + 1));
    cnt[static_cast<std::size_t>(len)].assign(static_cast<std::size_t>(len + 2), 1);
    for (int i = len - 1; i >= 0; --i) {
        auto& cur = cnt[static_cast<std::size_t>(i)];
        auto& nxt = cnt[static_cast<std::size_t>(i + 1)];
        cur.assign(static_cast<std::size_t>(len + 2), 0);
        for (int d = 0; d <= len; ++d) {
            std::uint64_t s = 0;
            for (int c = 0; c <= d + 1 && c <= len; ++c) s += nxt[static_cast<std::size_t>(c)];
            cur[static_cast<std::size_t>(d)] = s;
        }
    }
    for (int i = 0; i < len; ++i) {
        int d = g.digits[static_cast<std::size_t>(i)];
        for (int c = 0; c < d; ++c) rank += cnt[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)];
    }
    return rank;
}

KGerm germ_unrank(int k, std::uint64_t m) {
    if (m >= catalan(k)) throw UsageError("germ_unrank: rank out of range");
    KGerm g;
    g.k = k;
    g.digits.assign(static_cast<std::size_t>(k - 1), 0);
    int len = k - 1;
    if (len == 0) return g;
    std::vector<std::vector<std::uint64_t>> cnt(static_cast<std::size_t>(len + 1));
    cnt[static_cast<std::size_t>(len)].assign(static_cast<std::size_t>(len + 2), 1);
    for (int i = len - 1; i >= 0; --i) {
        auto& cur = cnt[static_cast<std::size_t>(i)];
        auto& nxt = cnt[static_cast<std::size_t>(i + 1)];
        cur.assign(static_cast<std::size_t>(len + 2), 0);
        for (int d = 0; d <= len; ++d) {
            std::uint64_t s = 0;
            for (int c = 0; c <= d + 1 && c <= len; ++c) s += nxt[static_cast<std::size_t>(c)];
            cur[static_cast<std::size_t>(d)] = s;
        }
    }
    int prev = 0;
    for (int i = 0; i < len; ++i) {
        int cap = (i == 0) ? 1 : prev + 1;
        for (int d = 0; d <= cap; ++d) {
            std::uint64_t c = cnt[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(d)];
            if (m < c) {
                g.digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
                prev = d;
                break;
            }
            m -= c;
        }
    }
    return g;
}

std::string to_rgs(const KGerm& g) {
    if (g.is_null()) return "0";
    std::size_t i = 0;
    while (g.digits[i] == 0) ++i;
    std::string s;
    for (; i < g.digits.size(); ++i) s.push_back(static_cast<char>('0' + g.digits[i]));
    return s;
}

KGerm pad(const std::string& rgs, int k) {
    std::string body = (rgs == "0") ? std::string() : rgs;
    if (k < static_cast<int>(body.size()) + 1)
        throw UsageError("pad: k too small for RGS \"" + rgs + "\"");
    return parse_germ(body, k);
}

KGerm parent(const KGerm& g) {
    if (g.is_null()) throw UsageError("parent: root germ has no parent");
    KGerm p = g;
    for (int i = static_cast<int>(p.digits.size()) - 1; i >= 0; --i) {
        if (p.digits[static_cast<std::size_t>(i)] != 0) {
            --p.digits[static_cast<std::size_t>(i)];
            return p;
        }
    }
    throw UsageError("parent: unreachable");
}

namespace {

void serialize_subtree(const std::vector<KGerm>& germs, const std::vector<std::vector<std::size_t>>& children,
                       std::size_t node, std::string& out) {
    out += germs[node].str();
    if (!children[node].empty()) {
        out.push_back('(');
        for (std::size_t j = 0; j < children[node].size(); ++j) {
            if (j) out.push_back(',');
            serialize_subtree(germs, children, children[node][j], out);
        }
        out.push_back(')');
    }
}

} // namespace

std::string germ_tree(int k) {
    auto germs = enumerate_germs(k);
    std::vector<std::vector<std::size_t>> children(germs.size());
    for (std::size_t m = 1; m < germs.size(); ++m) {
        std::uint64_t p = germ_rank(parent(germs[m]));
        children[static_cast<std::size_t>(p)].push_back(m);
    }
    // children arrive in enumeration order already
    std::string out;
    serialize_subtree(germs, children, 0, out);
    return out;
}

} // namespace midlevels
