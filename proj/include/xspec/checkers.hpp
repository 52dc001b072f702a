#pragma once

#include <vector>

#include "xspec/certificate.hpp"
#include "xspec/graph.hpp"
#include "xspec/matching.hpp"

namespace xspec {

/// Per-vertex target degrees f(v).
struct FactorSpec {
    std::vector<int> targets;
    static FactorSpec constant(int order, int k) { return {std::vector<int>(order, k)}; }
};

/// Every size-k matching extends to a perfect matching (and one exists).
/// Requires connected g, even order, k >= 1. On failure the certificate is
/// the lexicographically first failing matching.
Verdict is_k_extendable_definitional(const Graph& g, int k, int limit = kExactMatchingLimit);

/// o(G-S) <= |S| - 2k for every S whose induced graph has k independent
/// edges, plus the existence of some matching of size k. Subsets are
/// scanned in increasing bitmask order; the first violator is returned
/// with a size-k matching inside G[S].
Verdict is_k_extendable_chen(const Graph& g, int k, int limit = kExhaustiveLimit);

enum class PlummerMethod { Auto, Enumeration, Surplus };

/// |A| = |B| and |N(X)| >= |X| + k for nonempty X in A with |X| <= |A| - k.
/// Enumeration returns the X of least surplus |N(X)| - |X| (ties: least
/// bitmask); Surplus uses maximum matchings in G - N(a) - N(b) for each
/// non-adjacent a in A, b in B. Auto runs both when |A| <= limit and
/// requires agreement.
Verdict is_k_extendable_plummer(const Graph& g, int k, PlummerMethod method = PlummerMethod::Auto,
                                int limit = kExhaustiveLimit);

/// Ore's criterion, enumerated over X in A (|A| <= limit). The first
/// violating X in bitmask order is returned with its Y1/Y2 split.
Verdict has_f_factor_ore(const Graph& g, const FactorSpec& f, int limit = kExhaustiveLimit);

/// Max-flow construction: source -> a (cap f(a)), a -> b per edge (cap 1),
/// b -> sink (cap f(b)). Success yields a FactorSubgraph; failure yields the
/// source side of a minimum cut as a ViolatingSubsetX.
Verdict find_f_factor_flow(const Graph& g, const FactorSpec& f);

/// k-factor of a balanced bipartite graph; throws GraphError when unbalanced.
Verdict find_k_factor_flow(const Graph& g, int k);

/// k pairwise edge-disjoint perfect matchings covering E(h) of a k-regular
/// balanced bipartite graph.
std::vector<Matching> decompose_edge_disjoint_pms(const Graph& h);

/// Favaron/Yu criterion and the definition (every |S| = k leaves a perfect
/// matching), both computed; std::logic_error if they disagree.
Verdict is_k_factor_critical(const Graph& g, int k, int limit = kExhaustiveLimit);

inline constexpr int kHamiltonLimit = 20;

/// Backtracking with degree pruning and a failed-state memo.
Verdict hamiltonian_cycle(const Graph& g, int limit = kHamiltonLimit);

/// Held-Karp reachability over (visited set, endpoint); independent of the
/// backtracking search and used to recheck its negative answers.
bool has_hamiltonian_cycle_dp(const Graph& g, int limit = kHamiltonLimit);

enum class SearchOutcome { Found, NotFound, Unknown };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Unknown;
    std::optional<Certificate> certificate;
    long factors_examined = 0;
};

inline constexpr int kConnectedFactorLimit = 16;
inline constexpr long kConnectedFactorBudget = 2'000'000;

/// Looks for a connected k-factor. Exploration only: Unknown when the node
/// budget runs out.
SearchResult connected_k_factor_search(const Graph& g, int k, long budget = kConnectedFactorBudget);

}  // namespace xspec
