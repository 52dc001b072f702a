#include <doctest.h>

#include <array>
#include <cstdio>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "internal.hpp"
#include "oracles.hpp"
#include "xspec/checkers.hpp"
#include "xspec/families.hpp"
#include "xspec/graph6.hpp"
#include "xspec/harness.hpp"
#include "xspec/spectra.hpp"

using namespace xspec;
using namespace xspec::harness;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout and the exit code.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd = "printf '%b' '" + stdin_text + "' | ";
    cmd += std::string(XSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

ExperimentConfig config(const std::string& theorem) {
    ExperimentConfig cfg;
    cfg.theorem = theorem;
    return cfg;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string& cell_string(const Cell& c) { return std::get<std::string>(c); }

}  // namespace

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.samples = -1;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    cfg.samples = 0;
    cfg.tol = 0;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    cfg.tol = 1e-8;
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), UsageError);
    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
    CHECK(parse_mode("cross-check") == Mode::CrossCheck);
    CHECK(to_string(Mode::Scan) == "scan");
}

TEST_CASE("CSV and JSON rendering") {
    Report r;
    r.title = "demo";
    r.columns = kVerdictColumns;
    VerdictRow row;
    row.graph = "Bw";
    row.rho = 2.0;
    row.rho_star = 2.5;
    row.margin = -0.5;
    row.verdict = "holds, with comma";
    row.extremal = false;
    r.add(row);
    const std::string csv = render(r, Format::Csv);
    CHECK(first_line(csv) == "graph,rho,rho_star,margin,verdict,certificate,extremal");
    CHECK(csv.find("\"holds, with comma\"") != std::string::npos);
    CHECK(r.summary.processed == 1);
    CHECK(r.summary.consistent == 1);
    const auto j = nlohmann::json::parse(render(r, Format::Json));
    CHECK(j["columns"].size() == 7);
    CHECK(j["rows"][0]["rho"] == 2.0);
    CHECK(j["rows"][0]["extremal"] == false);
}

TEST_CASE("construct") {
    ExperimentConfig cfg;
    cfg.family = "kfactor-bipartite";
    cfg.n = 8;
    cfg.k = 2;
    const Graph g = graph6_decode(cmd_construct(cfg));
    std::vector<int> deg;
    for (Vertex v = 0; v < 8; ++v) deg.push_back(g.degree(v));
    CHECK(deg == std::vector<int>{1, 4, 4, 4, 3, 3, 3, 4});
    cfg.k = 4;
    CHECK_THROWS_AS(cmd_construct(cfg), UsageError);
    cfg.family = "kext-general";
    cfg.n = 10;
    cfg.k = 1;
    cfg.delta = 2;
    const Graph h = graph6_decode(cmd_construct(cfg));
    CHECK(h.order() == 10);
    CHECK(is_connected(h));
    cfg.family = "nope";
    CHECK_THROWS_AS(cmd_construct(cfg), UsageError);
}

TEST_CASE("check") {
    ExperimentConfig cfg;
    cfg.property = "k-factor";
    cfg.k = 2;
    std::istringstream in(graph6_encode(extremal_kfactor(8, 2)) + "\n");
    Report r = cmd_check(cfg, in);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.exit_code == 0);
    CHECK(cell_string(r.rows[0][4]).rfind("fails", 0) == 0);
    CHECK(cell_string(r.rows[0][5]).find("\"vertices\":[0]") != std::string::npos);

    cfg.property = "k-extendable";
    cfg.k = 1;
    std::istringstream k22(graph6_encode(complete_bipartite(2, 2)) + "\n");
    r = cmd_check(cfg, k22);
    CHECK(cell_string(r.rows[0][4]) == "holds");

    cfg.property = "hamiltonian";
    std::istringstream c8("GhCGKC\n");
    r = cmd_check(cfg, c8);
    CHECK(cell_string(r.rows[0][4]) == "holds");

    std::istringstream bad("not-a-graph\n");
    CHECK_THROWS_AS(cmd_check(cfg, bad), UsageError);
    cfg.property = "chromatic";
    std::istringstream any("Bw\n");
    CHECK_THROWS_AS(cmd_check(cfg, any), UsageError);
}

TEST_CASE("rho") {
    ExperimentConfig cfg;
    std::istringstream in(graph6_encode(complete_bipartite(4, 4)) + "\n" + graph6_encode(complete(5)) +
                          "\nCh\n");
    const Report r = cmd_rho(cfg, in);
    REQUIRE(r.rows.size() == 3);
    CHECK(std::get<double>(r.rows[0][1]) == doctest::Approx(4));
    CHECK(std::get<double>(r.rows[0][2]) == doctest::Approx(4));
    CHECK(std::get<double>(r.rows[0][3]) == doctest::Approx(4));
    CHECK(std::get<double>(r.rows[1][1]) == doctest::Approx(4));
    CHECK(std::get<double>(r.rows[1][2]) == doctest::Approx(4));
    CHECK(std::get<double>(r.rows[2][1]) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(std::get<double>(r.rows[2][2]) > std::get<double>(r.rows[2][1]));
    CHECK(r.exit_code == 0);

    std::istringstream mixed("Bw\n%%%\n");
    const Report m = cmd_rho(cfg, mixed);
    CHECK(m.summary.malformed == 1);
    CHECK(m.exit_code == 0);
    std::istringstream all_bad("%%%\n");
    CHECK(cmd_rho(cfg, all_bad).exit_code == 2);
}

TEST_CASE("scan") {
    ExperimentConfig cfg = config("t1.3");
    cfg.n = 8;
    cfg.k = 2;
    std::istringstream in(graph6_encode(extremal_kfactor(8, 2)) + "\n" + graph6_encode(complete_bipartite(4, 4)) +
                          "\n");
    const Report r = cmd_scan(cfg, in);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.summary.extremal_hit == 1);
    CHECK(r.summary.consistent == 1);
    CHECK(r.exit_code == 0);

    std::istringstream empty("");
    const Report e = cmd_scan(cfg, empty);
    CHECK(e.rows.empty());
    CHECK(e.exit_code == 0);

    std::istringstream bad("%%%\n");
    CHECK(cmd_scan(cfg, bad).exit_code == 2);
}

TEST_CASE("scan confirms a bipartite non-extendable graph above the stated threshold") {
    // K_{4,4} on A = {0..3}, B = {5..8}, plus the path 0 - 9 - 4.
    std::vector<Edge> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = 5; b < 9; ++b) edges.emplace_back(a, b);
    edges.emplace_back(0, 9);
    edges.emplace_back(4, 9);
    const Graph g(10, edges);
    REQUIRE(is_connected(g));
    REQUIRE(g.min_degree() == 1);
    CHECK_FALSE(oracle::k_extendable(g, 1));
    const double rho_star = threshold_rho(Family::KextBipartite, {10, 1, 0, 1}).rho_star;
    CHECK(oracle::spectral_radius(g) > rho_star + 0.5);

    ExperimentConfig cfg = config("t1.2");
    cfg.n = 10;
    cfg.k = 1;
    cfg.delta = 1;
    std::istringstream in(graph6_encode(g) + "\n");
    const Report r = cmd_scan(cfg, in);
    CHECK(r.summary.counterexample == 1);
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify tightness rows") {
    ExperimentConfig cfg = config("t1.1");
    cfg.n = 10;
    cfg.k = 1;
    cfg.delta = 2;
    cfg.samples = 0;
    const Report r = cmd_verify(cfg);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::get<double>(r.rows[0][3])) <= 1e-8);
    CHECK(cell_string(r.rows[0][5]).find("\"vertices\":[0,1]") != std::string::npos);

    cfg = config("t1.3");
    cfg.n = 8;
    cfg.k = 2;
    cfg.samples = 0;
    const Report t13 = cmd_verify(cfg);
    CHECK(std::get<double>(t13.rows[0][2]) == doctest::Approx(3.5023251273).epsilon(1e-9));

    cfg.k = 4;
    CHECK_THROWS_AS(cmd_verify(cfg), UsageError);
    cfg = config("t9.9");
    CHECK_THROWS_AS(cmd_verify(cfg), UsageError);
}

TEST_CASE("verify searches find no counterexamples") {
    struct Case {
        const char* theorem;
        int n, k, delta;
    };
    for (const auto& c : {Case{"t1.1", 10, 1, 2}, Case{"t1.3", 8, 2, 0}, Case{"t4.3", 8, 0, 0},
                          Case{"t4.5", 15, 1, 2}}) {
        ExperimentConfig cfg = config(c.theorem);
        cfg.n = c.n;
        if (c.k) cfg.k = c.k;
        if (c.delta) cfg.delta = c.delta;
        cfg.samples = 300;
        cfg.seed = 5;
        const Report r = cmd_verify(cfg);
        CAPTURE(c.theorem);
        CHECK(r.summary.counterexample == 0);
        CHECK(r.summary.failures == 0);
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("verify rows with a failing property above threshold are extremal") {
    ExperimentConfig cfg = config("t1.1");
    cfg.n = 10;
    cfg.k = 1;
    cfg.delta = 2;
    cfg.samples = 400;
    const Report r = cmd_verify(cfg);
    const Graph extremal = extremal_kext_general(10, 1, 2);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        if (std::holds_alternative<std::monostate>(row[3])) continue;
        if (std::get<double>(row[3]) < -1e-8) continue;
        const Graph g = graph6_decode(cell_string(row[0]));
        if (!oracle::k_extendable(g, 1)) CHECK(oracle::isomorphic(g, extremal));
    }
}

TEST_CASE("reports are identical across job counts") {
    for (const char* theorem : {"t1.1", "t4.5"}) {
        ExperimentConfig cfg = config(theorem);
        cfg.n = std::string(theorem) == "t1.1" ? 10 : 15;
        cfg.k = 1;
        cfg.delta = 2;
        cfg.samples = 200;
        cfg.seed = 99;
        const std::string one = render(cmd_verify(cfg), Format::Csv);
        cfg.jobs = 4;
        CHECK(render(cmd_verify(cfg), Format::Csv) == one);
    }
    ExperimentConfig cc;
    cc.n = 7;
    cc.k = 1;
    cc.samples = 50;
    const std::string one = render(cmd_cross_check(cc), Format::Json);
    cc.jobs = 3;
    CHECK(render(cmd_cross_check(cc), Format::Json) == one);
}

TEST_CASE("cross-check") {
    ExperimentConfig cfg;
    cfg.n = 6;
    cfg.k = 1;
    cfg.samples = 0;
    const Report r = cmd_cross_check(cfg);
    CHECK(r.summary.processed == 32768 + 1024 + 64 + 8 + 2 + 1);
    CHECK(r.summary.disagreements == 0);
    CHECK(r.summary.comparisons > 0);
    CHECK(r.exit_code == 0);
    cfg.n = 2;
    const Report tiny = cmd_cross_check(cfg);
    CHECK(tiny.summary.disagreements == 0);
    cfg.n = 9;
    CHECK_THROWS_AS(cmd_cross_check(cfg), UsageError);
}

TEST_CASE("inequality sweeps") {
    for (const char* theorem : {"l2.2", "l2.3", "l2.6", "c1.4"}) {
        ExperimentConfig cfg = config(theorem);
        cfg.samples = 20;
        const Report r = cmd_verify(cfg);
        CAPTURE(theorem);
        CHECK(r.summary.failures == 0);
        CHECK(r.exit_code == 0);
        CHECK_FALSE(r.rows.empty());
    }
}

TEST_CASE("sampling helpers") {
    auto a = detail::rng_for(1, 5), b = detail::rng_for(1, 5), c = detail::rng_for(1, 6);
    CHECK(a() == b());
    CHECK(detail::rng_for(1, 5)() != c());
    auto rng = detail::rng_for(3, 0);
    const Graph g = detail::force_min_degree(rng, detail::random_graph(rng, 12, 0.3), 3);
    CHECK(g.min_degree() == 3);
    const Graph h = detail::random_regular_bipartite(rng, 10, 4);
    for (Vertex v = 0; v < h.order(); ++v) CHECK(h.degree(v) == 4);
    const auto balanced = detail::balanced_bipartition(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}}));
    REQUIRE(balanced);
    CHECK(balanced->side_set(Side::A).size() == 2);
    CHECK_FALSE(detail::balanced_bipartition(complete_bipartite(1, 3)));
    CHECK_FALSE(detail::balanced_bipartition(complete(4)));
    const Graph p = detail::perturb(rng, complete_bipartite(4, 4), 3);
    CHECK(p.has_bipartition());
}

TEST_CASE("command line exit codes") {
    CHECK(run_cli("construct --family kfactor-bipartite --n 8 --k 2").out == "G?\\rf_\n");
    CHECK(run_cli("construct --family kfactor-bipartite --n 8 --k 4").code == 2);
    CHECK(run_cli("--bogus-flag construct").code == 2);
    CHECK(run_cli("verify --theorem t1.1 --n 10 --k 1 --delta 2 --samples 50").code == 0);
    CHECK(run_cli("verify --theorem t1.2 --n 10 --k 1 --delta 1 --samples 200 --seed 7").code == 1);
    CHECK(run_cli("scan --theorem t1.3 --n 8 --k 2", "").code == 0);
    CHECK(run_cli("rho", "%%%\\n").code == 2);
    const auto check = run_cli("check --property hamiltonian", "GhCGKC\\n");
    CHECK(check.code == 0);
    CHECK(first_line(check.out) == "graph,rho,rho_star,margin,verdict,certificate,extremal");
    const auto json = run_cli("--format json rho", "C~\\n");
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out)["rows"].size() == 1);
}
