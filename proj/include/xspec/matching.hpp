#pragma once

#include <cstdint>
#include <vector>

#include "xspec/graph.hpp"

namespace xspec {

/// Default order cap for exact general matching and the subset enumerations.
inline constexpr int kExactMatchingLimit = 24;
inline constexpr int kExhaustiveLimit = 20;

/// Vertex-disjoint edges, each stored with u < v, sorted.
struct Matching {
    std::vector<Edge> edges;

    [[nodiscard]] std::size_t size() const { return edges.size(); }
    void normalize();
    friend bool operator==(const Matching&, const Matching&) = default;
};

/// True iff the edges are pairwise vertex-disjoint edges of g.
bool is_matching(const Graph& g, const Matching& m);
bool is_perfect_matching(const Graph& g, const Matching& m);

/// Hopcroft-Karp; requires a bipartition.
Matching max_matching_bipartite(const Graph& g);

/// Edmonds' blossom algorithm. Throws GraphError when order > limit.
Matching max_matching_general(const Graph& g, int limit = kExactMatchingLimit);

bool has_perfect_matching(const Graph& g, int limit = kExactMatchingLimit);

/// Blossom matching restricted to the vertices of `mask`, over adjacency
/// masks (order <= 64). Used by the subset enumerations.
class MaskMatcher {
public:
    explicit MaskMatcher(const Graph& g);
    explicit MaskMatcher(std::vector<std::uint64_t> rows);

    [[nodiscard]] int order() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const std::vector<std::uint64_t>& rows() const { return rows_; }

    /// Maximum matching of G[mask]; mate[v] == -1 for unmatched vertices.
    [[nodiscard]] std::vector<int> mates(std::uint64_t mask) const;
    [[nodiscard]] int max_matching_size(std::uint64_t mask) const;
    [[nodiscard]] bool has_perfect_matching(std::uint64_t mask) const;

    /// Lexicographically first k vertex-disjoint edges inside G[mask], if any.
    [[nodiscard]] bool find_k_matching(std::uint64_t mask, int k, std::vector<Edge>& out) const;

    /// Number of odd components of G[mask].
    [[nodiscard]] int odd_components(std::uint64_t mask) const;

private:
    std::vector<std::uint64_t> rows_;
};

}  // namespace xspec
