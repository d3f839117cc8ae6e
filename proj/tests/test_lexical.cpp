#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "midlevels/graphs.hpp"
#include "midlevels/lexical.hpp"

using namespace midlevels;

TEST_CASE("grid-path colors on the two k=2 classes") {
    // class (00011): zeros at 0,1,2 take colors 0,1,2
    std::uint64_t w = word_from_str("00011");
    CHECK(edge_color(w, 5, 0) == 0);
    CHECK(edge_color(w, 5, 1) == 1);
    CHECK(edge_color(w, 5, 2) == 2);
    // class (00101): zeros at 0,1,3 take colors 0,2,1
    std::uint64_t v = word_from_str("00101");
    CHECK(edge_color(v, 5, 0) == 0);
    CHECK(edge_color(v, 5, 1) == 2);
    CHECK(edge_color(v, 5, 3) == 1);
    // k=3 root class: colors in position order
    std::uint64_t u = word_from_str("0000111");
    for (int x = 0; x <= 3; ++x) CHECK(edge_color(u, 7, x) == x);
}

TEST_CASE("the set-cardinality formula agrees with the grid path") {
    std::uint64_t bottom = ((1ull << 2) - 1) << 3; // 0^3 1^2
    CHECK(lexical_color_formula(bottom, 5, 0) == 0);
    std::uint64_t w1 = word_from_str("001");
    CHECK(lexical_color_formula(w1, 3, 0) + lexical_color_formula(w1, 3, 1) == 1);
    for (int k = 1; k <= 6; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            for (int x = 0; x < n; ++x) {
                if ((w >> x) & 1u) continue;
                CHECK(edge_color(w, n, x) == lexical_color_formula(w, n, x));
            }
        }
    }
}

TEST_CASE("upper endpoints assign the colors of the table subtitles") {
    CHECK(edge_color_upper(word_from_str("00111"), 5, 4) == 0);
    CHECK(edge_color_upper(word_from_str("10011"), 5, 4) == 1);
    CHECK(edge_color_upper(word_from_str("11001"), 5, 4) == 2);
    CHECK(edge_color_upper(word_from_str("01011"), 5, 4) == 0);
    CHECK(edge_color_upper(word_from_str("10101"), 5, 4) == 2);
    CHECK(edge_color_upper(word_from_str("01101"), 5, 4) == 1);
    for (int k = 1; k <= 5; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            for (int x = 0; x < n; ++x) {
                if ((w >> x) & 1u) continue;
                CHECK(edge_color(w, n, x) == edge_color_upper(w | (1ull << x), n, x));
            }
        }
    }
}

TEST_CASE("one factorization properly colors the middle-levels graph") {
    // M_1: the 6-cycle alternates colors 0 and 1
    ColoredGraph m1 = build_mk(1);
    for (const auto& e : m1.edges) CHECK((e.color == 0 || e.color == 1));
    // M_2: each color class is a perfect matching of 10 edges
    ColoredGraph m2 = build_mk(2);
    int per_color[3] = {0, 0, 0};
    for (const auto& e : m2.edges) ++per_color[e.color];
    for (int c = 0; c <= 2; ++c) CHECK(per_color[c] == 10);
}

TEST_CASE("delta notation names the germ of a class") {
    CHECK(delta_display(word_from_str("00011"), 5) == "<012**>");
    CHECK(delta_display(word_from_str("00101"), 5) == "<02*1*>");
    CHECK(germ_of_word(word_from_str("00011"), 5).str() == "0");
    CHECK(germ_of_word(word_from_str("00101"), 5).str() == "1");
    // bijection onto germs at k <= 5
    for (int k = 1; k <= 5; ++k) {
        const int n = 2 * k + 1;
        std::set<std::string> seen;
        for (std::uint64_t w : words_of_weight(n, k)) {
            if (min_rotation(w, n) != w) continue;
            seen.insert(germ_of_word(w, n).str());
        }
        // two classes share a germ exactly when they form a dihedral pair
        CHECK(seen.size() == catalan(k));
    }
}

TEST_CASE("germ-level adjacency rows from the small tables") {
    KGerm a = parse_germ("12");
    CHECK(neighbor_germ(a, 3).str() == "12");
    CHECK(neighbor_germ(a, 2).str() == "01");
    CHECK(neighbor_germ(a, 1).str() == "10");
    CHECK(neighbor_germ(a, 0).str() == "12");

    KGerm z = parse_germ("000");
    const char* expect4[] = {"000", "100", "010", "001", "000"};
    for (int c = 4; c >= 0; --c) CHECK(neighbor_germ(z, c).str() == expect4[4 - c]);

    KGerm t = parse_germ("1234");
    const char* expect5[] = {"1234", "0123", "1012", "1201", "1230", "1234"};
    for (int c = 5; c >= 0; --c) CHECK(neighbor_germ(t, c).str() == expect5[5 - c]);
}

TEST_CASE("adjacency is symmetric: following a color twice returns") {
    for (int k = 2; k <= 6; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            for (int c = 0; c <= k; ++c) CHECK(neighbor_germ(neighbor_germ(g, c), c) == g);
        }
    }
}

TEST_CASE("sequence prefixes match the reference terms") {
    auto s0 = s0_sequence(14);
    const std::uint64_t e0[] = {0, 1, 3, 2, 4, 7, 9, 5, 8, 6, 12, 11, 10, 13};
    for (std::size_t i = 0; i < 14; ++i) CHECK(s0[i] == e0[i]);
    auto s1 = s1_sequence(14);
    const std::uint64_t e1[] = {1, 0, 0, 3, 1, 0, 1, 8, 7, 12, 3, 2, 9, 4};
    for (std::size_t i = 0; i < 14; ++i) CHECK(s1[i] == e1[i]);
    // idempotent on each catalan prefix
    for (int k = 2; k <= 7; ++k) {
        auto s = s0_sequence(catalan(k));
        for (std::uint64_t m = 0; m < s.size(); ++m) CHECK(s[s[m]] == m);
    }
}

TEST_CASE("direct neighbor procedure: determined cases") {
    CHECK(neighbor_direct(parse_germ("12"), 3).value.str() == "12");
    CHECK(neighbor_direct(parse_germ("12"), 3).exact);
    CHECK(neighbor_direct(parse_germ("123"), 4).value.str() == "123");
    CHECK(neighbor_direct(parse_germ("123"), 4).exact);
    // whatever route is taken, the value agrees with the delta route, and
    // anything claimed exact came out of the rewrite alone
    for (int k = 2; k <= 6; ++k) {
        std::size_t exact = 0, total = 0;
        for (const auto& g : enumerate_germs(k)) {
            for (int p = 0; p <= k; ++p) {
                DirectNeighbor d = neighbor_direct(g, p);
                CHECK(d.value == neighbor_germ(g, p));
                ++total;
                exact += d.exact ? 1 : 0;
                if (!d.exact) CHECK(!d.note.empty());
            }
        }
        // the rewrite carries most of the table on its own
        CHECK(exact * 2 > total);
    }
    // exactness never lies at p = k through k = 8
    for (int k = 2; k <= 8; ++k) {
        for (const auto& g : enumerate_germs(k)) {
            DirectNeighbor d = neighbor_direct(g, k);
            if (d.exact) CHECK(d.value == neighbor_germ(g, k));
        }
    }
}

TEST_CASE("re-rooting transport along middle colors pins the long example") {
    // conjugation: re-rooting swaps color i with color k-i; transporting the
    // fixed null germ along a middle-color chain to the target germ derives
    // its image with no reference to the code-reversal construction
    const int K = 17;
    KGerm target = parse_germ("0123223442310121");
    KGerm root;
    root.k = K;
    root.digits.assign(K - 1, 0);
    std::map<std::string, std::pair<std::string, int>> pred;
    std::vector<std::pair<int, std::string>> frontier{{0, target.str()}};
    pred[target.str()] = {"", -1};
    bool found = false;
    while (!found) {
        // best-first by digit sum toward the all-zero germ
        std::sort(frontier.begin(), frontier.end());
        REQUIRE(!frontier.empty());
        auto [w, cur] = frontier.front();
        frontier.erase(frontier.begin());
        KGerm g = parse_germ(cur, K);
        for (int c = 1; c < K && !found; ++c) {
            KGerm nb = neighbor_germ(g, c);
            std::string s = nb.str();
            if (pred.count(s)) continue;
            pred[s] = {cur, c};
            if (nb == root) found = true;
            int sum = 0;
            for (auto d : nb.digits) sum += d;
            frontier.push_back({sum, s});
        }
    }
    std::vector<int> colors;
    std::string cur = root.str();
    while (pred[cur].second >= 0) {
        colors.push_back(pred[cur].second);
        cur = pred[cur].first;
    }
    KGerm img = root, chk = root;
    for (int c : colors) {
        chk = neighbor_germ(chk, c);
        img = neighbor_germ(img, K - c);
    }
    REQUIRE(chk == target);
    CHECK(img == theta_reroot(target));
}

TEST_CASE("table rows across k share their color columns") {
    CatTable t4 = cat_table(4);
    CatTable t5 = cat_table(5);
    for (std::uint64_t m = 0; m < catalan(4); ++m) {
        CHECK(to_rgs(t5.neighbors[m][2]) == to_rgs(t4.neighbors[m][1]));
        CHECK(to_rgs(t5.neighbors[m][0]) == to_rgs(t4.neighbors[m][0]));
    }
}
