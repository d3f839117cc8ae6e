#include "midlevels/cli.hpp"
#include <algorithm>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "midlevels/graphs.hpp"
#include "midlevels/hamilton.hpp"
#include "midlevels/verify.hpp"

namespace midlevels {

namespace {

std::uint64_t memory_budget_bytes() {
    if (const char* env = std::getenv("MIDLEVELS_MAX_MEM")) {
        char* end = nullptr;
        double mb = std::strtod(env, &end);
        if (end != env && mb > 0) return static_cast<std::uint64_t>(mb * 1024.0 * 1024.0);
    }
    return 8ull * 1024 * 1024 * 1024;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
    }
}

std::string germ_display(const KGerm& g) { return g.k == 1 ? std::string("e") : g.str(); }

struct GermsOpts {
    int k = 0;
    bool rgs = false;
    bool count_only = false;
    std::string format = "text";
    std::string out_path;
};

int cmd_germs(const GermsOpts& o, std::ostream& out) {
    if (o.k < 1 || o.k > 20) throw UsageError("germs: need 1 <= k <= 20");
    if (o.count_only) {
        write_output(std::to_string(catalan(o.k)) + "\n", o.out_path, out);
        return 0;
    }
    // stream the listing; the larger orders do not fit in memory
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw UsageError("cannot write " + o.out_path);
    }
    std::ostream& os = o.out_path.empty() ? out : file;
    KGerm g;
    g.k = o.k;
    g.digits.assign(static_cast<std::size_t>(o.k - 1), 0);
    std::uint64_t m = 0;
    do {
        if (o.format == "csv") {
            os << m << ',' << g.str();
            if (o.rgs) os << ',' << to_rgs(g);
            os << '\n';
        } else if (o.format == "jsonl") {
            nlohmann::json row = {{"m", m}, {"germ", g.str()}};
            if (o.rgs) row["rgs"] = to_rgs(g);
            os << row.dump() << '\n';
        } else {
            os << std::setw(6) << m << "  " << g.str();
            if (o.rgs) os << "  " << to_rgs(g);
            os << '\n';
        }
        ++m;
    } while (next_germ(g));
    return 0;
}

struct CodecOpts {
    std::string text;
    int k = 0;
    bool dot = false;
};

int cmd_encode(const CodecOpts& o, std::ostream& out) {
    KGerm g = parse_germ(o.text, o.k);
    TreeCode code = castle(g);
    if (o.dot) {
        out << tree_to_dot(tree_of_code(code));
        return 0;
    }
    BinaryWord w = theta(g);
    out << "germ " << germ_display(g) << " (k=" << g.k << ", m=" << germ_rank(g) << ")\n";
    out << "rgs " << to_rgs(g) << '\n';
    out << "code " << code.str() << '\n';
    out << "theta " << w.str() << '\n';
    out << "theta_hat " << theta_hat(g) << '\n';
    out << "aleph " << aleph(w).str() << '\n';
    out << "aleph_hat " << aleph_hat(g) << '\n';
    return 0;
}

int cmd_decode(const CodecOpts& o, std::ostream& out, std::ostream& err) {
    TreeCode code = parse_code(o.text);
    if (auto why = code_violation(code)) {
        err << "error: " << *why << '\n';
        return 2;
    }
    KGerm g = uncastle(code);
    out << "germ " << germ_display(g) << " (k=" << g.k << ", m=" << germ_rank(g) << ")\n";
    return 0;
}

struct GraphOpts {
    int k = 0;
    std::string which = "mk";
    bool dot = false;
    bool csv = false;
    bool unsafe_large = false;
    std::string out_path;
};

int cmd_graph(const GraphOpts& o, std::ostream& out) {
    if (o.k < 1) throw UsageError("graph: need k >= 1");
    if (o.which == "mk" && o.k > 9 && !o.unsafe_large)
        throw UsageError("graph: k > 9 needs --unsafe-large");
    if (o.which != "mk" && o.k > 9 && !o.unsafe_large)
        throw UsageError("graph: k > 9 needs --unsafe-large");
    if (o.which == "mk" && mk_memory_estimate(o.k) > memory_budget_bytes())
        throw ResourceError("graph: estimated memory exceeds MIDLEVELS_MAX_MEM");
    ColoredGraph g;
    if (o.which == "mk")
        g = build_mk(o.k);
    else if (o.which == "mkpi")
        g = build_mk_pi(o.k);
    else if (o.which == "rk")
        g = build_rk(o.k);
    else
        throw UsageError("graph: --which must be mk, mkpi or rk");
    if (o.dot) {
        write_output(graph_to_dot(g), o.out_path, out);
    } else if (o.csv) {
        write_output(graph_to_csv(g), o.out_path, out);
    } else {
        std::size_t loops = 0;
        for (const auto& e : g.edges) loops += e.loop ? 1 : 0;
        std::ostringstream ss;
        ss << g.name << ": " << g.vertex_count() << " nodes / " << (g.edge_count() - loops)
           << " edges";
        if (loops) ss << " / " << loops << " loops";
        ss << '\n';
        write_output(ss.str(), o.out_path, out);
    }
    return 0;
}

struct CatOpts {
    int k = 0;
    std::string format = "text";
    std::string out_path;
    int jobs = 0;
};

int cmd_cat(const CatOpts& o, std::ostream& out) {
    if (o.k < 2 || o.k > 11) throw UsageError("cat: need 2 <= k <= 11");
    CatTable t = cat_table(o.k, o.jobs);
    std::ostringstream ss;
    if (o.format == "text") {
        const int w = std::max(o.k + 1, 4);
        ss << std::setw(6) << "m" << "  " << std::setw(w) << "a";
        for (int c = o.k; c >= 0; --c) ss << "  " << std::setw(w) << ("a^" + std::to_string(c));
        ss << '\n';
        for (std::size_t m = 0; m < t.germs.size(); ++m) {
            ss << std::setw(6) << m << "  " << std::setw(w) << t.germs[m].str();
            for (const auto& nb : t.neighbors[m]) ss << "  " << std::setw(w) << nb.str();
            ss << '\n';
        }
    } else if (o.format == "csv") {
        ss << "m,germ";
        for (int c = o.k; c >= 0; --c) ss << ",n" << c;
        ss << '\n';
        for (std::size_t m = 0; m < t.germs.size(); ++m) {
            ss << m << ',' << t.germs[m].str();
            for (const auto& nb : t.neighbors[m]) ss << ',' << nb.str();
            ss << '\n';
        }
    } else if (o.format == "jsonl") {
        for (std::size_t m = 0; m < t.germs.size(); ++m) {
            nlohmann::json row = {{"m", m}, {"germ", t.germs[m].str()}};
            nlohmann::json nbs = nlohmann::json::array();
            for (const auto& nb : t.neighbors[m]) nbs.push_back(nb.str());
            row["neighbors"] = nbs;
            ss << row.dump() << '\n';
        }
    } else {
        throw UsageError("cat: --format must be text, csv or jsonl");
    }
    write_output(ss.str(), o.out_path, out);
    return 0;
}

struct SeqOpts {
    bool s0 = false;
    bool s1 = false;
    std::uint64_t count = 14;
    bool blocks = false;
    std::string out_path;
};

int cmd_seq(const SeqOpts& o, std::ostream& out) {
    if (o.s0 == o.s1) throw UsageError("seq: pass exactly one of --s0/--s1");
    if (o.count < 1 || o.count > catalan(12)) throw UsageError("seq: count out of range");
    auto vals = o.s0 ? s0_sequence(o.count) : s1_sequence(o.count);
    std::ostringstream ss;
    for (std::size_t m = 0; m < vals.size(); ++m) {
        ss << vals[m];
        if (o.blocks) {
            // block boundaries at the Catalan numbers
            for (int k = 2; k <= 12; ++k)
                if (m + 1 == catalan(k)) ss << " ;";
        }
        ss << '\n';
    }
    write_output(ss.str(), o.out_path, out);
    return 0;
}

struct HamiltonOpts {
    int k = 0;
    bool verify = true;
    bool digraph_dot = false;
    bool unsafe_large = false;
    std::string out_path;
};

int cmd_hamilton(const HamiltonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.k < 1) throw UsageError("hamilton: need k >= 1");
    if (o.k > 7 && !o.unsafe_large) throw UsageError("hamilton: k > 7 needs --unsafe-large");
    if (o.digraph_dot) {
        CycleDecomposition dec = two_factor_w01(o.k);
        auto hexes = find_six_cycles(dec);
        auto chosen = dec.cycles.size() > 1 ? select_gluing(dec, hexes) : std::vector<SixCycle>{};
        write_output(digraph_to_dot(dec, cycle_digraph(dec, hexes), chosen), o.out_path, out);
        return 0;
    }
    auto seq = hamilton_cycle(o.k);
    std::string text = certificate_text(o.k, seq);
    if (!o.out_path.empty()) write_output(text, o.out_path, out);
    auto reparsed = o.out_path.empty() ? seq : [&] {
        std::ifstream f(o.out_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse_certificate(ss.str(), o.k);
    }();
    auto cert = verify_hamilton(o.k, reparsed);
    if (!cert.ok) {
        err << "hamilton: verification failed: " << cert.violation << '\n';
        return 1;
    }
    out << "certificate of length " << seq.size() << " accepted\n";
    if (o.out_path.empty() && !o.verify) out << text;
    return 0;
}

struct VerifyOpts {
    int k = 5;
    bool tables = false;
    bool direct_report = false;
    std::string golden_dir = "data/golden";
    int jobs = 0;
    bool unsafe_large = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    if (o.k < 1) throw UsageError("verify: need k >= 1");
    if (o.k > 6 && !o.unsafe_large) throw UsageError("verify: k > 6 needs --unsafe-large");
    std::vector<CheckResult> results = verify_all(o.k, o.jobs);
    if (o.tables) {
        auto tr = verify_tables(o.golden_dir);
        results.insert(results.end(), tr.begin(), tr.end());
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.name;
        if (!r.pass) out << " -- " << r.witness;
        out << '\n';
        all = all && r.pass;
    }
    if (o.direct_report) out << direct_neighbor_report(std::min(o.k, 6));
    if (!all) {
        err << "verify: failures detected\n";
        return 1;
    }
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"middle-levels graph toolkit: germ enumeration, tree codecs, "
                 "quotient graphs, lexical 1-factorization, Hamilton cycles"};
    app.require_subcommand(1);

    GermsOpts go;
    auto* germs_cmd = app.add_subcommand("germs", "list k-germs in natural order");
    germs_cmd->add_option("--k", go.k, "germ order")->required();
    germs_cmd->add_flag("--rgs", go.rgs, "include the restricted-growth string form");
    germs_cmd->add_flag("--count-only", go.count_only, "print only the Catalan count");
    germs_cmd->add_option("--format", go.format, "text, csv or jsonl");
    germs_cmd->add_option("--out", go.out_path, "output file");

    CodecOpts eo;
    auto* encode_cmd = app.add_subcommand("encode", "germ -> tree code, binary words");
    encode_cmd->add_option("germ", eo.text, "germ digit string")->required();
    encode_cmd->add_option("--k", eo.k, "explicit k (left-pads with zeros)");
    encode_cmd->add_flag("--dot", eo.dot, "print the ordered tree as DOT");

    CodecOpts dopt;
    auto* decode_cmd = app.add_subcommand("decode", "tree code -> germ");
    decode_cmd->add_option("code", dopt.text, "tree code, e.g. 03*2*1*")->required();

    GraphOpts gro;
    auto* graph_cmd = app.add_subcommand("graph", "build M_k, M_k/pi or R_k");
    graph_cmd->add_option("--k", gro.k, "graph order")->required();
    graph_cmd->add_option("--which", gro.which, "mk, mkpi or rk");
    graph_cmd->add_flag("--dot", gro.dot, "DOT output");
    graph_cmd->add_flag("--csv", gro.csv, "adjacency CSV output");
    graph_cmd->add_flag("--unsafe-large", gro.unsafe_large, "lift the default resource bounds");
    graph_cmd->add_option("--out", gro.out_path, "output file");

    CatOpts co;
    auto* cat_cmd = app.add_subcommand("cat", "colored adjacency table");
    cat_cmd->add_option("--k", co.k, "table order")->required();
    cat_cmd->add_option("--format", co.format, "text, csv or jsonl");
    cat_cmd->add_option("--out", co.out_path, "output file");
    cat_cmd->add_option("--jobs", co.jobs, "parallel row workers");

    SeqOpts so;
    auto* seq_cmd = app.add_subcommand("seq", "integer sequences off the tables");
    seq_cmd->add_flag("--s0", so.s0, "color-k neighbor ranks");
    seq_cmd->add_flag("--s1", so.s1, "color-(k-1) neighbor ranks");
    seq_cmd->add_option("--count", so.count, "number of terms");
    seq_cmd->add_flag("--blocks", so.blocks, "mark Catalan block boundaries with ';'");
    seq_cmd->add_option("--out", so.out_path, "output file");

    HamiltonOpts ho;
    auto* ham_cmd = app.add_subcommand("hamilton", "construct and verify a Hamilton cycle");
    ham_cmd->add_option("--k", ho.k, "graph order")->required();
    ham_cmd->add_flag("--verify", ho.verify, "re-verify the certificate (always on)");
    ham_cmd->add_flag("--digraph-dot", ho.digraph_dot, "emit the cycle digraph as DOT, chosen arcs highlighted");
    ham_cmd->add_flag("--unsafe-large", ho.unsafe_large, "lift the default resource bounds");
    ham_cmd->add_option("--out", ho.out_path, "certificate file");

    VerifyOpts vo;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--k", vo.k, "exhaustive depth");
    verify_cmd->add_flag("--tables", vo.tables, "diff the derived tables against the golden files");
    verify_cmd->add_flag("--direct-report", vo.direct_report,
                         "report the direct neighbor procedure against the delta route");
    verify_cmd->add_option("--golden-dir", vo.golden_dir, "golden file directory");
    verify_cmd->add_option("--jobs", vo.jobs, "parallel workers");
    verify_cmd->add_flag("--unsafe-large", vo.unsafe_large, "lift the default resource bounds");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (germs_cmd->parsed()) return cmd_germs(go, out);
        if (encode_cmd->parsed()) return cmd_encode(eo, out);
        if (decode_cmd->parsed()) return cmd_decode(dopt, out, err);
        if (graph_cmd->parsed()) return cmd_graph(gro, out);
        if (cat_cmd->parsed()) return cmd_cat(co, out);
        if (seq_cmd->parsed()) return cmd_seq(so, out);
        if (ham_cmd->parsed()) return cmd_hamilton(ho, out, err);
        if (verify_cmd->parsed()) return cmd_verify(vo, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace midlevels
