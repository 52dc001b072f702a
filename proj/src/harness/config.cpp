#include <cmath>

#include "xspec/harness.hpp"

namespace xspec::harness {

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Construct: return "construct";
        case Mode::Rho: return "rho";
        case Mode::Check: return "check";
        case Mode::Verify: return "verify";
        case Mode::CrossCheck: return "cross-check";
        case Mode::Scan: return "scan";
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    for (Mode m : {Mode::Construct, Mode::Rho, Mode::Check, Mode::Verify, Mode::CrossCheck, Mode::Scan})
        if (to_string(m) == name) return m;
    throw UsageError("unknown mode '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw UsageError("unknown format '" + std::string(name) + "' (csv or json)");
}

void ExperimentConfig::validate() const {
    if (samples < 0) throw UsageError("samples must be >= 0");
    if (!(tol > 0) || !std::isfinite(tol)) throw UsageError("tol must be a positive number");
    if (jobs < 1) throw UsageError("jobs must be >= 1");
    if (exhaustive_limit < 1 || exhaustive_limit > 63) throw UsageError("exhaustive-limit must be in [1, 63]");
}

std::string_view to_string(RowClass c) {
    switch (c) {
        case RowClass::Consistent: return "consistent";
        case RowClass::ExtremalHit: return "extremal-hit";
        case RowClass::Counterexample: return "counterexample";
        case RowClass::Borderline: return "borderline";
        case RowClass::Skipped: return "skipped";
        case RowClass::Failure: return "failure";
    }
    return "?";
}

void Summary::count(RowClass c) {
    switch (c) {
        case RowClass::Consistent: ++consistent; break;
        case RowClass::ExtremalHit: ++extremal_hit; break;
        case RowClass::Counterexample: ++counterexample; break;
        case RowClass::Borderline: ++borderline; break;
        case RowClass::Skipped: ++skipped; return;
        case RowClass::Failure: ++failures; break;
    }
    ++processed;
}

std::vector<std::pair<std::string, std::int64_t>> Summary::fields() const {
    return {{"processed", processed},     {"consistent", consistent},       {"extremal_hit", extremal_hit},
            {"counterexample", counterexample}, {"borderline", borderline}, {"skipped", skipped},
            {"failures", failures},       {"malformed", malformed},         {"comparisons", comparisons},
            {"disagreements", disagreements}};
}

namespace {

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

}  // namespace

void Report::add(const VerdictRow& row) {
    rows.push_back({row.graph, opt(row.rho), opt(row.rho_star), opt(row.margin), row.verdict,
                    row.certificate.empty() ? Cell{} : Cell{row.certificate},
                    row.extremal ? Cell{*row.extremal} : Cell{}});
    if (row.cls == RowClass::Borderline) borderline.push_back(row.graph);
    summary.count(row.cls);
}

}  // namespace xspec::harness
