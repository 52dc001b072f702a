#include <cmath>
#include <istream>

#include "internal.hpp"
#include "xspec/checkers.hpp"
#include "xspec/graph6.hpp"
#include "xspec/spectra.hpp"

namespace xspec::harness {

using namespace detail;

std::string cmd_construct(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.family.empty()) throw UsageError("missing parameter --family");
    Family f;
    try {
        f = parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    FamilyParams p;
    p.n = require_param(cfg.n, "n");
    if (f != Family::HamiltonBipartite) p.k = require_param(cfg.k, "k");
    if (f == Family::KextGeneral || f == Family::KfcGeneral) p.delta = require_param(cfg.delta, "delta");
    if (f == Family::KextBipartite) p.s = cfg.s ? *cfg.s : require_param(cfg.delta, "s");
    try {
        return graph6_encode(construct(f, p));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

namespace {

std::optional<Graph> try_decode(const std::string& text, std::string& error) {
    try {
        return graph6_decode(text);
    } catch (const std::exception& e) {
        error = e.what();
        return std::nullopt;
    }
}

Verdict perfect_matching_verdict(const Graph& g) {
    const auto coloring = two_coloring(g);
    const Matching m = coloring ? max_matching_bipartite(ensure_bipartition(g)) : max_matching_general(g);
    if (2 * m.size() != static_cast<std::size_t>(g.order())) return {false, std::nullopt};
    Certificate c;
    c.kind = CertificateKind::FactorSubgraph;
    c.criterion = Criterion::Factor;
    c.k = 1;
    c.edges = m.edges;
    c.targets.assign(g.order(), 1);
    return {true, std::move(c)};
}

// Bipartite view for factor questions: balanced if possible.
std::optional<Graph> bipartite_view(const Graph& g) {
    if (auto b = balanced_bipartition(g)) return b;
    if (two_coloring(g)) return ensure_bipartition(g);
    return std::nullopt;
}

VerdictRow check_one(const ExperimentConfig& cfg, const Graph& g) {
    VerdictRow row;
    row.graph = graph6_encode(g);
    if (g.order() >= 1) row.rho = spectral_radius(g).rho;
    const std::string& prop = cfg.property;
    auto skip = [&](const std::string& why) {
        row.verdict = "skipped: " + why;
        row.cls = RowClass::Skipped;
        return row;
    };
    const int limit = cfg.exhaustive_limit;
    Verdict v;
    try {
        if (prop == "k-extendable" || prop == "k-extendable-def") {
            const int k = require_param(cfg.k, "k");
            if (g.order() % 2 != 0 || !is_connected(g)) return skip("needs a connected graph of even order");
            if (prop == "k-extendable-def") {
                v = is_k_extendable_definitional(g, k);
            } else if (two_coloring(g)) {
                v = is_k_extendable_plummer(ensure_bipartition(g), k, PlummerMethod::Auto, limit);
            } else {
                v = is_k_extendable_chen(g, k, limit);
            }
        } else if (prop == "k-factor") {
            const int k = require_param(cfg.k, "k");
            const auto b = bipartite_view(g);
            if (!b) return skip("not bipartite");
            v = find_k_factor_flow(*b, k);
        } else if (prop == "k-factor-critical") {
            v = is_k_factor_critical(g, require_param(cfg.k, "k"), limit);
        } else if (prop == "hamiltonian") {
            v = hamiltonian_cycle(g);
        } else if (prop == "perfect-matching") {
            v = perfect_matching_verdict(g);
        } else if (prop == "connected-k-factor") {
            const int k = require_param(cfg.k, "k");
            const auto b = bipartite_view(g);
            if (!b) return skip("not bipartite");
            const SearchResult s = connected_k_factor_search(*b, k);
            row.verdict = s.outcome == SearchOutcome::Found ? "holds" : s.outcome == SearchOutcome::NotFound ? "fails" : "unknown";
            if (s.certificate) row.certificate = to_json(*s.certificate);
            return row;
        } else {
            throw UsageError("unknown property '" + prop + "'");
        }
    } catch (const GraphError& e) {
        return skip(e.what());
    }
    row.verdict = v.holds ? "holds" : "fails";
    if (v.certificate) row.certificate = to_json(*v.certificate);
    return row;
}

}  // namespace

Report cmd_check(const ExperimentConfig& cfg, std::istream& in) {
    cfg.validate();
    if (cfg.property.empty()) throw UsageError("missing parameter --property");
    if (std::find(std::begin(kProperties), std::end(kProperties), cfg.property) == std::end(kProperties))
        throw UsageError("unknown property '" + cfg.property + "'");
    const auto lines = read_graph_lines(in);
    std::vector<Graph> graphs;
    for (const auto& line : lines) {
        std::string error;
        auto g = try_decode(line.text, error);
        if (!g) throw UsageError("line " + std::to_string(line.index + 1) + ": " + error);
        graphs.push_back(std::move(*g));
    }
    Report r;
    r.title = "check property=" + cfg.property + (cfg.k ? " k=" + std::to_string(*cfg.k) : "");
    r.columns = kVerdictColumns;
    std::vector<VerdictRow> rows(graphs.size());
    parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) { rows[i] = check_one(cfg, graphs[i]); });
    for (const auto& row : rows) r.add(row);
    return r;
}

Report cmd_rho(const ExperimentConfig& cfg, std::istream& in) {
    cfg.validate();
    const auto lines = read_graph_lines(in);
    Report r;
    r.title = "rho";
    r.columns = {"graph", "rho", "fms_bound", "sqrt_m", "identity"};
    std::vector<std::vector<Cell>> rows(lines.size());
    std::vector<char> malformed(lines.size(), 0);
    parallel_for(lines.size(), cfg.jobs, [&](std::size_t i) {
        std::string error;
        auto g = try_decode(lines[i].text, error);
        if (!g) {
            malformed[i] = 1;
            rows[i] = {lines[i].text, {}, {}, {}, std::string("parse-error: ") + error};
            return;
        }
        std::vector<Cell> row{graph6_encode(*g)};
        row.push_back(g->order() >= 1 ? Cell{spectral_radius(*g, spectral_tol(g->order(), cfg.tol)).rho} : Cell{});
        row.push_back(g->order() >= 2 && is_connected(*g) ? Cell{fms_bound(*g).bound} : Cell{});
        row.push_back(g->size() >= 1 && two_coloring(*g) ? Cell{sqrt_m_bound(ensure_bipartition(*g))} : Cell{});
        bool identity = true;
        for (Vertex u = 0; u < g->order(); ++u) {
            const auto id = degree_sum_identity(*g, u);
            identity = identity && id.lhs == id.rhs;
        }
        row.push_back(std::string(identity ? "pass" : "fail"));
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        r.rows.push_back(std::move(rows[i]));
        if (malformed[i]) {
            ++r.summary.malformed;
        } else {
            ++r.summary.processed;
            if (std::get<std::string>(r.rows.back().back()) == "fail") ++r.summary.failures;
        }
    }
    if (!lines.empty() && r.summary.malformed == static_cast<std::int64_t>(lines.size())) r.exit_code = 2;
    else if (r.summary.failures > 0) r.exit_code = 1;
    return r;
}

Report cmd_scan(const ExperimentConfig& cfg, std::istream& in) {
    cfg.validate();
    if (cfg.theorem.empty()) throw UsageError("missing parameter --theorem");
    const TheoremCase tc = make_theorem_case(cfg);
    const Threshold th = threshold_rho(tc.family, tc.params, cfg.tol);
    const auto lines = read_graph_lines(in);
    Report r;
    r.title = "scan " + tc.id;
    r.columns = kVerdictColumns;
    r.notes = tc.notes;
    std::vector<VerdictRow> rows(lines.size());
    std::vector<char> malformed(lines.size(), 0);
    parallel_for(lines.size(), cfg.jobs, [&](std::size_t i) {
        std::string error;
        auto g = try_decode(lines[i].text, error);
        if (!g) {
            malformed[i] = 1;
            rows[i].graph = lines[i].text;
            rows[i].verdict = "malformed: " + error;
            return;
        }
        rows[i] = evaluate(tc, th.rho_star, *g, cfg.tol);
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (malformed[i]) {
            r.rows.push_back({rows[i].graph, {}, {}, {}, rows[i].verdict, {}, {}});
            ++r.summary.malformed;
        } else {
            r.add(rows[i]);
        }
    }
    if (!lines.empty() && r.summary.malformed == static_cast<std::int64_t>(lines.size())) r.exit_code = 2;
    else if (r.summary.counterexample > 0 || r.summary.failures > 0) r.exit_code = 1;
    return r;
}

namespace {

struct Disagreement {
    std::string graph, check;
    int k = 0;
    std::string verdict_a, verdict_b, certificate_a, certificate_b;
};

std::string verdict_text(const Verdict& v) { return v.holds ? "holds" : "fails"; }
std::string cert_text(const Verdict& v) { return v.certificate ? to_json(*v.certificate) : ""; }

class CrossChecker {
public:
    CrossChecker(const ExperimentConfig& cfg, const std::string& graph_id, const Graph& g)
        : cfg_(cfg), id_(graph_id), g_(g) {}

    void run() {
        const std::string& filter = cfg_.property;
        const bool general = filter.empty() || filter == "all" || filter == "general";
        const bool bipartite = filter.empty() || filter == "all" || filter == "bipartite";
        std::vector<int> ks = cfg_.k ? std::vector<int>{*cfg_.k} : std::vector<int>{1, 2};
        std::vector<int> factor_ks = cfg_.k ? std::vector<int>{*cfg_.k} : std::vector<int>{1, 2, 3};
        const int n = g_.order();
        const bool connected_even = n >= 2 && n % 2 == 0 && is_connected(g_);
        if (general) {
            for (int k : ks) {
                if (connected_even && 2 * k <= n)
                    compare("chen-vs-definitional", k, [&] { return is_k_extendable_chen(g_, k, cfg_.exhaustive_limit); },
                            [&] { return is_k_extendable_definitional(g_, k); }, g_);
                if (k <= n) kfc(k);
            }
            if (n >= 3)
                compare("hamilton-vs-dp", 0, [&] { return hamiltonian_cycle(g_); },
                        [&] { return Verdict{has_hamiltonian_cycle_dp(g_), std::nullopt}; }, g_);
        }
        if (bipartite) {
            if (const auto b = balanced_bipartition(g_); b && connected_even) {
                for (int k : ks) {
                    if (2 * k > n) continue;
                    compare("plummer-enumeration-vs-definitional", k,
                            [&] { return is_k_extendable_plummer(*b, k, PlummerMethod::Enumeration, cfg_.exhaustive_limit); },
                            [&] { return is_k_extendable_definitional(*b, k); }, *b);
                    compare("plummer-surplus-vs-definitional", k,
                            [&] { return is_k_extendable_plummer(*b, k, PlummerMethod::Surplus); },
                            [&] { return is_k_extendable_definitional(*b, k); }, *b);
                }
            }
            if (const auto b = bipartite_view(g_)) {
                for (int k : factor_ks) {
                    const FactorSpec f = FactorSpec::constant(n, k);
                    compare("ore-vs-flow", k, [&] { return has_f_factor_ore(*b, f, cfg_.exhaustive_limit); },
                            [&] { return find_f_factor_flow(*b, f); }, *b);
                }
            }
        }
    }

    std::vector<Disagreement> disagreements;
    std::int64_t comparisons = 0;

private:
    template <class A, class B>
    void compare(const std::string& check, int k, A first, B second, const Graph& on) {
        ++comparisons;
        const Verdict a = first();
        const Verdict b = second();
        const bool cert_a = !a.certificate || revalidate(on, *a.certificate);
        const bool cert_b = !b.certificate || revalidate(on, *b.certificate);
        if (a.holds == b.holds && cert_a && cert_b) return;
        Disagreement d{id_, check, k, verdict_text(a), verdict_text(b), cert_text(a), cert_text(b)};
        if (!cert_a) d.verdict_a += " (certificate rejected)";
        if (!cert_b) d.verdict_b += " (certificate rejected)";
        disagreements.push_back(std::move(d));
    }

    void kfc(int k) {
        ++comparisons;
        try {
            const Verdict v = is_k_factor_critical(g_, k, cfg_.exhaustive_limit);
            if (v.certificate && !revalidate(g_, *v.certificate))
                disagreements.push_back({id_, "favaron-yu-certificate", k, verdict_text(v), "certificate rejected",
                                         cert_text(v), ""});
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
            disagreements.push_back({id_, "favaron-yu-vs-definitional", k, "disagree", e.what(), "", ""});
        }
    }

    const ExperimentConfig& cfg_;
    std::string id_;
    const Graph& g_;
};

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

Report cmd_cross_check(const ExperimentConfig& cfg) {
    cfg.validate();
    const int max_n = cfg.n.value_or(6);
    if (max_n < 1 || max_n > 8) throw UsageError("cross-check needs 1 <= n <= 8");
    const std::string& filter = cfg.property;
    if (!(filter.empty() || filter == "all" || filter == "general" || filter == "bipartite"))
        throw UsageError("cross-check filter must be all, general or bipartite");
    if (cfg.k && (*cfg.k < 1 || *cfg.k > 3)) throw UsageError("cross-check needs 1 <= k <= 3");

    // Work items: (order, labeled edge mask) exhaustively, then seeded samples.
    struct Item {
        int n;
        std::uint64_t mask;
        std::int64_t sample;  // -1 for exhaustive items
    };
    std::vector<Item> items;
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < total; ++m) items.push_back({n, m, -1});
    }
    if (max_n >= 7)
        for (std::int64_t i = 0; i < cfg.samples; ++i) items.push_back({7 + static_cast<int>(i % (max_n - 6)), 0, i});

    std::vector<std::vector<Disagreement>> found(items.size());
    std::vector<std::int64_t> counts(items.size(), 0);
    parallel_for(items.size(), cfg.jobs, [&](std::size_t i) {
        const Item& it = items[i];
        Graph g;
        if (it.sample < 0) {
            g = graph_from_mask(it.n, it.mask);
        } else {
            Rng rng = rng_for(cfg.seed, static_cast<std::uint64_t>(it.sample));
            const double p = kEdgeProbabilities[(it.sample / 2) % std::size(kEdgeProbabilities)];
            const bool bip = filter == "bipartite" || (filter != "general" && it.sample % 2 == 1);
            g = bip ? random_bipartite(rng, it.n / 2, it.n - it.n / 2, p).without_bipartition()
                    : random_graph(rng, it.n, p);
        }
        CrossChecker checker(cfg, graph6_encode(g), g);
        checker.run();
        found[i] = std::move(checker.disagreements);
        counts[i] = checker.comparisons;
    });

    Report r;
    r.title = "cross-check n<=" + std::to_string(max_n) + " samples=" + std::to_string(cfg.samples) +
              " seed=" + std::to_string(cfg.seed) + (filter.empty() ? "" : " filter=" + filter);
    r.columns = {"graph", "check", "k", "verdict_a", "verdict_b", "certificate_a", "certificate_b"};
    for (std::size_t i = 0; i < items.size(); ++i) {
        ++r.summary.processed;
        r.summary.comparisons += counts[i];
        for (const auto& d : found[i]) {
            r.rows.push_back({d.graph, d.check, static_cast<std::int64_t>(d.k), d.verdict_a, d.verdict_b,
                              d.certificate_a.empty() ? Cell{} : Cell{d.certificate_a},
                              d.certificate_b.empty() ? Cell{} : Cell{d.certificate_b}});
            ++r.summary.disagreements;
        }
    }
    r.exit_code = r.summary.disagreements > 0 ? 1 : 0;
    return r;
}

}  // namespace xspec::harness
