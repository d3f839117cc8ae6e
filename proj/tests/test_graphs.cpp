#include <doctest.h>

#include <set>

#include "midlevels/graphs.hpp"

using namespace midlevels;

TEST_CASE("word rotation is the cyclic group action") {
    CHECK(word_str(translate(word_from_str("00011"), 1, 5), 5) == "10001");
    std::uint64_t w = word_from_str("0010110");
    CHECK(translate(w, 0, 7) == w);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(translate(translate(w, i, 7), j, 7) == translate(w, (i + j) % 7, 7));
}

TEST_CASE("necklace classes use the least rotation") {
    NecklaceClass c = pi_class(word_from_str("10001"), 5);
    CHECK(word_str(c.canonical, 5) == "00011");
    CHECK(c == pi_class(word_from_str("00011"), 5));
    CHECK(c.orbit_size == 5);
    CHECK(c.str() == "(00011)");
}

TEST_CASE("complemented reversal pairs the levels") {
    NecklaceClass c = aleph_pi(pi_class(word_from_str("00011"), 5));
    CHECK(word_str(c.canonical, 5) == "00111");
    NecklaceClass d = aleph_pi(pi_class(word_from_str("01011"), 5));
    CHECK(word_str(d.canonical, 5) == "00101");
    // involution on every class at k <= 5
    for (int k = 1; k <= 5; ++k) {
        const int n = 2 * k + 1;
        for (std::uint64_t w : words_of_weight(n, k)) {
            NecklaceClass c0 = pi_class(w, n);
            CHECK(aleph_pi(aleph_pi(c0)) == c0);
        }
    }
}

TEST_CASE("middle-levels graphs have the expected shape") {
    ColoredGraph m1 = build_mk(1);
    CHECK(m1.vertex_count() == 6);
    CHECK(m1.edge_count() == 6);

    ColoredGraph m2 = build_mk(2);
    CHECK(m2.vertex_count() == 20);
    CHECK(m2.edge_count() == 30);

    ColoredGraph m4 = build_mk(4, false);
    CHECK(m4.vertex_count() == 252);
    for (const auto& a : m4.adj) CHECK(a.size() == 5);
}

TEST_CASE("rotation quotient of M_2 has two classes per level") {
    ColoredGraph q = build_mk_pi(2);
    CHECK(q.vertex_count() == 4);
    CHECK(q.lower_count == 2);
    // quotient orbit accounting at small k
    for (int k = 1; k <= 5; ++k) {
        const int n = 2 * k + 1;
        std::uint64_t total = 0;
        for (std::uint64_t w : words_of_weight(n, k))
            if (pi_class(w, n).canonical == w) total += static_cast<std::uint64_t>(pi_class(w, n).orbit_size);
        for (std::uint64_t w : words_of_weight(n, k + 1))
            if (pi_class(w, n).canonical == w) total += static_cast<std::uint64_t>(pi_class(w, n).orbit_size);
        CHECK(total == 2 * binom(n, k));
    }
}

TEST_CASE("edge classification separates horizontal from skew") {
    // (00011)-(00111) is horizontal: flipping position 0 of 00011
    CHECK(classify_edge(word_from_str("00011"), 5, 0) == EdgeKind::horizontal);
    // 0^{k+1}1^k has exactly two horizontal edges for k = 2..5
    for (int k = 2; k <= 5; ++k) {
        const int n = 2 * k + 1;
        std::uint64_t w = ((1ull << k) - 1) << (k + 1);
        int horizontal = 0;
        for (int x = 0; x < n; ++x) {
            if ((w >> x) & 1u) continue;
            if (classify_edge(w, n, x) == EdgeKind::horizontal) ++horizontal;
        }
        CHECK(horizontal == 2);
    }
}

TEST_CASE("the dihedral folding of M_2 is two vertices with loops") {
    ColoredGraph r2 = build_rk(2);
    CHECK(r2.vertex_count() == 2);
    int loops = 0, links = 0;
    std::set<int> loop_colors[2];
    for (const auto& e : r2.edges) {
        if (e.loop) {
            ++loops;
            loop_colors[e.u].insert(e.color);
        } else {
            ++links;
            CHECK(e.color == 1);
        }
    }
    CHECK(loops == 4);
    CHECK(links == 1);
    CHECK(loop_colors[0] == std::set<int>{0, 2});
    CHECK(loop_colors[1] == std::set<int>{0, 2});
}

TEST_CASE("folding vertex counts are the catalan numbers") {
    CHECK(build_rk(4).vertex_count() == 14);
    CHECK(build_rk(5).vertex_count() == 42);
    for (int k = 1; k <= 6; ++k) CHECK(build_rk(k).vertex_count() == catalan(k));
}

TEST_CASE("graph exports stay well formed") {
    ColoredGraph r2 = build_rk(2);
    std::string dot = graph_to_dot(r2);
    CHECK(dot.find("graph R2") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
    std::string csv = graph_to_csv(build_mk(1));
    CHECK(csv.rfind("vertex,color,neighbor\n", 0) == 0);
}
