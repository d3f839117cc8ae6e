#include <doctest.h>

#include <sstream>

#include "midlevels/cli.hpp"

using namespace midlevels;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("germs listing and count") {
    auto r = run({"germs", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("00") != std::string::npos);
    CHECK(r.out.find("12") != std::string::npos);

    auto c = run({"germs", "--k", "4", "--count-only"});
    CHECK(c.code == 0);
    CHECK(c.out == "14\n");

    auto bad = run({"germs", "--k", "0"});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
}

TEST_CASE("encode prints code and binary words") {
    auto r = run({"encode", "110"});
    CHECK(r.code == 0);
    CHECK(r.out.find("code 013*24***") != std::string::npos);
    CHECK(r.out.find("theta 000100111") != std::string::npos);
    CHECK(r.out.find("aleph 000110111") != std::string::npos);

    auto r3 = run({"encode", "10"});
    CHECK(r3.out.find("theta 0001011") != std::string::npos);
    CHECK(r3.out.find("aleph 0010111") != std::string::npos);

    auto dot = run({"encode", "12", "--dot"});
    CHECK(dot.out.find("graph tree") != std::string::npos);
}

TEST_CASE("decode accepts codes and names violations") {
    auto r = run({"decode", "04*3*2*1*"});
    CHECK(r.code == 0);
    CHECK(r.out.find("germ 123") != std::string::npos);

    auto bad = run({"decode", "0*1234***"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("prefix discipline") != std::string::npos);
}

TEST_CASE("graph summaries and exports") {
    auto r = run({"graph", "--k", "2", "--which", "mk"});
    CHECK(r.code == 0);
    CHECK(r.out.find("20 nodes / 30 edges") != std::string::npos);

    auto rk = run({"graph", "--k", "2", "--which", "rk", "--dot"});
    CHECK(rk.code == 0);
    CHECK(rk.out.find("graph R2") != std::string::npos);
    // 2 nodes, 1 linking edge, 4 loops
    auto summary = run({"graph", "--k", "2", "--which", "rk"});
    CHECK(summary.out.find("2 nodes / 1 edges / 4 loops") != std::string::npos);

    auto big = run({"graph", "--k", "10", "--which", "mk"});
    CHECK(big.code == 2);
}

TEST_CASE("adjacency table output formats") {
    auto text = run({"cat", "--k", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find('0') != std::string::npos);
    auto csv = run({"cat", "--k", "3", "--format", "csv"});
    CHECK(csv.out.rfind("m,germ,n3,n2,n1,n0", 0) == 0);
    CHECK(csv.out.find("4,12,12,01,10,12") != std::string::npos);
    auto jsonl = run({"cat", "--k", "2", "--format", "jsonl"});
    CHECK(jsonl.out.find("\"germ\":\"0\"") != std::string::npos);
}

TEST_CASE("sequence terms with block markers") {
    auto r = run({"seq", "--s0", "--count", "14"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::vector<int> vals;
    int v;
    while (in >> v) vals.push_back(v);
    CHECK(vals == std::vector<int>{0, 1, 3, 2, 4, 7, 9, 5, 8, 6, 12, 11, 10, 13});

    auto blocks = run({"seq", "--s1", "--count", "5", "--blocks"});
    CHECK(blocks.out.find(";") != std::string::npos);
    auto both = run({"seq", "--s0", "--s1", "--count", "3"});
    CHECK(both.code == 2);
}

TEST_CASE("hamilton certificates verify end to end") {
    auto r = run({"hamilton", "--k", "5", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate of length 924 accepted") != std::string::npos);
}

TEST_CASE("verify runs the suites and reports") {
    auto r = run({"verify", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("verify --tables diffs the golden files") {
    auto r = run({"verify", "--k", "2", "--tables", "--golden-dir", MIDLEVELS_DATA_DIR});
    CHECK(r.code == 0);
    CHECK(r.out.find("adjacency table k=5") != std::string::npos);
}
