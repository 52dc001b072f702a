#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "xspec/harness.hpp"

using namespace xspec::harness;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral thresholds for matching extension, factors and Hamiltonicity"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; explicit flags override it");

    ExperimentConfig cfg;
    int n = 0, k = 0, delta = 0, s = 0;
    std::string format = "csv", input;
    auto* opt_n = app.add_option("--n", n, "Order (cross-check: largest order)");
    auto* opt_k = app.add_option("--k", k, "Matching/factor parameter");
    auto* opt_delta = app.add_option("--delta", delta, "Minimum degree");
    auto* opt_s = app.add_option("--s", s, "Block size of kext-bipartite");
    app.add_option("--family", cfg.family, "kext-general | kext-bipartite | kfactor-bipartite | kfc-general | hamilton-bipartite");
    app.add_option("--theorem", cfg.theorem, "t1.1 | t1.2 | t1.3 | t4.3 | t4.5 | l2.2 | l2.3 | l2.6 | c1.4");
    app.add_option("--property", cfg.property, "check: property name; cross-check: all | general | bipartite");
    app.add_option("--samples", cfg.samples, "Sample count")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Spectral margin tolerance")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--exhaustive-limit", cfg.exhaustive_limit, "Largest order for subset enumeration")
        ->capture_default_str();
    app.add_option("--input", input, "graph6 file (default: standard input)");

    auto* construct = app.add_subcommand("construct", "Print an extremal graph as graph6");
    auto* rho = app.add_subcommand("rho", "Spectral radius and bounds per input graph");
    auto* check = app.add_subcommand("check", "Decide a property per input graph, with certificates");
    auto* verify = app.add_subcommand("verify", "Tightness and counterexample search, or inequality sweeps");
    auto* cross = app.add_subcommand("cross-check", "Criterion checkers against definitional oracles");
    auto* scan = app.add_subcommand("scan", "Classify input graphs against a theorem threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (opt_n->count()) cfg.n = n;
    if (opt_k->count()) cfg.k = k;
    if (opt_delta->count()) cfg.delta = delta;
    if (opt_s->count()) cfg.s = s;

    try {
        cfg.format = parse_format(format);
        std::ifstream file;
        if (!input.empty()) {
            file.open(input);
            if (!file) throw UsageError("cannot open " + input);
        }
        std::istream& in = input.empty() ? std::cin : file;

        if (*construct) {
            cfg.mode = Mode::Construct;
            std::cout << cmd_construct(cfg) << '\n';
            return 0;
        }
        Report report;
        if (*rho) {
            cfg.mode = Mode::Rho;
            report = cmd_rho(cfg, in);
        } else if (*check) {
            cfg.mode = Mode::Check;
            report = cmd_check(cfg, in);
        } else if (*verify) {
            cfg.mode = Mode::Verify;
            report = cmd_verify(cfg);
        } else if (*cross) {
            cfg.mode = Mode::CrossCheck;
            report = cmd_cross_check(cfg);
        } else if (*scan) {
            cfg.mode = Mode::Scan;
            report = cmd_scan(cfg, in);
        }
        std::cout << render(report, cfg.format);
        return report.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
