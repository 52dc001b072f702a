#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xspec/matching.hpp"

namespace xspec::harness {

enum class Mode { Construct, Rho, Check, Verify, CrossCheck, Scan };
enum class Format { Csv, Json };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view name);
Format parse_format(std::string_view name);

/// Bad flags, bad parameters or violated hypotheses; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kTheorems[] = {"t1.1", "t1.2", "t1.3", "t4.3", "t4.5",
                                                 "l2.2", "l2.3", "l2.6", "c1.4"};
inline constexpr std::string_view kProperties[] = {
    "k-extendable", "k-extendable-def", "k-factor", "k-factor-critical",
    "hamiltonian",  "perfect-matching", "connected-k-factor"};

struct ExperimentConfig {
    Mode mode = Mode::Verify;
    std::optional<int> n, k, delta, s;
    std::string family;    // construct
    std::string theorem;   // verify, scan
    std::string property;  // check; cross-check filter: all | general | bipartite
    long samples = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int jobs = 1;
    Format format = Format::Csv;
    int exhaustive_limit = kExhaustiveLimit;

    /// Throws UsageError when samples < 0, tol <= 0 or jobs < 1.
    void validate() const;
};

using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

/// How a verdict row counts in the summary.
enum class RowClass {
    Consistent,      // below threshold, or the property holds
    ExtremalHit,     // recognized as the extremal graph
    Counterexample,  // confirmed: margin > tol, property fails twice, certificate revalidated
    Borderline,      // |margin| <= tol, or a failure that did not survive re-verification
    Skipped,         // outside the hypothesis class, or beyond checker limits
    Failure,         // a tightness check or swept inequality did not hold
};

std::string_view to_string(RowClass c);

/// One row of the fixed verdict schema.
struct VerdictRow {
    std::string graph;
    std::optional<double> rho, rho_star, margin;
    std::string verdict;
    std::string certificate;
    std::optional<bool> extremal;
    RowClass cls = RowClass::Consistent;
};

inline const std::vector<std::string> kVerdictColumns = {"graph",  "rho",         "rho_star", "margin",
                                                         "verdict", "certificate", "extremal"};

struct Summary {
    std::int64_t processed = 0;
    std::int64_t consistent = 0;
    std::int64_t extremal_hit = 0;
    std::int64_t counterexample = 0;
    std::int64_t borderline = 0;
    std::int64_t skipped = 0;
    std::int64_t failures = 0;
    std::int64_t malformed = 0;
    std::int64_t comparisons = 0;
    std::int64_t disagreements = 0;

    void count(RowClass c);
    [[nodiscard]] std::vector<std::pair<std::string, std::int64_t>> fields() const;
};

struct Report {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> borderline;  // graph ids with |margin| <= tol, listed apart
    std::vector<std::string> notes;
    Summary summary;
    int exit_code = 0;

    /// Appends a verdict row and counts it.
    void add(const VerdictRow& row);
};

std::string render(const Report& r, Format f);

// Subcommands. Each throws UsageError on bad parameters.
std::string cmd_construct(const ExperimentConfig& cfg);
Report cmd_rho(const ExperimentConfig& cfg, std::istream& in);
Report cmd_check(const ExperimentConfig& cfg, std::istream& in);
Report cmd_verify(const ExperimentConfig& cfg);
Report cmd_cross_check(const ExperimentConfig& cfg);
Report cmd_scan(const ExperimentConfig& cfg, std::istream& in);

}  // namespace xspec::harness
