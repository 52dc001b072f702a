#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "xspec/certificate.hpp"
#include "xspec/families.hpp"
#include "xspec/graph.hpp"
#include "xspec/harness.hpp"

namespace xspec::harness::detail {

using Rng = std::mt19937_64;

/// Per-item generator seeded from (seed, index); independent of job count.
Rng rng_for(std::uint64_t seed, std::uint64_t index);

inline constexpr double kEdgeProbabilities[] = {0.3, 0.5, 0.7, 0.9};

Graph random_graph(Rng& rng, int n, double p);
/// Sides A = 0..a-1, B = a..a+b-1.
Graph random_bipartite(Rng& rng, int a, int b, double p);
/// Raises every vertex below delta with random new edges, then, if the
/// minimum is still above delta, lowers one random vertex to exactly delta
/// by dropping edges to neighbors that can spare them. Sides are kept.
Graph force_min_degree(Rng& rng, const Graph& g, int delta);
/// Toggles between 1 and max_edits random vertex pairs (cross pairs only
/// when g has a bipartition).
Graph perturb(Rng& rng, const Graph& g, int max_edits);
/// Random k-regular graph on two sides of size half: a circulant shuffled
/// by degree-preserving edge switches.
Graph random_regular_bipartite(Rng& rng, int half, int k);

/// g with a balanced bipartition attached (components flipped as needed),
/// or nullopt when g is not bipartite or cannot be balanced.
std::optional<Graph> balanced_bipartition(const Graph& g);

struct InputLine {
    std::size_t index = 0;  // 0-based among nonblank lines
    std::string text;
};
std::vector<InputLine> read_graph_lines(std::istream& in);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// A theorem's hypothesis class, property and extremal graph.
struct TheoremCase {
    std::string id;
    Family family = Family::KextGeneral;
    FamilyParams params;
    bool bipartite = false;
    /// Membership test; bipartite cases return the graph with a balanced
    /// bipartition attached.
    std::function<std::optional<Graph>(const Graph&)> admit;
    std::function<Verdict(const Graph&)> property;
    /// Independent second route; true when it also says the property fails.
    std::function<bool(const Graph&)> confirm_failure;
    /// One random draw (not necessarily in the class).
    std::function<Graph(Rng&, double)> draw;
    std::vector<std::string> notes;
};

/// Throws UsageError naming the violated hypothesis.
TheoremCase make_theorem_case(const ExperimentConfig& cfg);

/// Classifies one graph against the case's threshold.
VerdictRow evaluate(const TheoremCase& tc, double rho_star, const Graph& g, double tol);

/// Spectral tolerance used for comparisons at margin tolerance tol.
double spectral_tol(int order, double tol);

int require_param(const std::optional<int>& v, const char* name);

}  // namespace xspec::harness::detail
