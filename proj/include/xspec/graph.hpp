#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Side : std::uint8_t { A, B };

/// Raised when a graph operation's precondition does not hold.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free subset of 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet range(Vertex first, Vertex last);  // [first, last)
    static VertexSet from_mask(std::uint64_t mask);

    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }
    [[nodiscard]] std::uint64_t mask() const;  // requires every member < 64

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Undirected simple graph on vertices 0..n-1, immutable once built.
///
/// Neighbor lists are kept sorted. An optional bipartition labels every
/// vertex A or B; when present every edge joins the two sides.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);  // edgeless

    /// Builds from an edge list. Throws GraphError on loops, duplicates,
    /// out-of-range endpoints or an edge inside one side of `sides`.
    Graph(int order, std::span<const Edge> edges,
          std::optional<std::vector<Side>> sides = std::nullopt);

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] std::size_t size() const { return edge_count_; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::vector<Edge> edges() const;  // u < v, lexicographic

    [[nodiscard]] bool has_bipartition() const { return sides_.has_value(); }
    [[nodiscard]] const std::vector<Side>& sides() const;
    [[nodiscard]] Side side(Vertex v) const { return sides().at(v); }
    [[nodiscard]] VertexSet side_set(Side s) const;

    [[nodiscard]] Graph with_bipartition(std::vector<Side> sides) const;
    [[nodiscard]] Graph without_bipartition() const;
    /// Vertex v of *this becomes perm[v] in the result.
    [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;
    [[nodiscard]] Graph induced(const VertexSet& keep) const;
    [[nodiscard]] Graph without_vertices(const VertexSet& drop) const;
    [[nodiscard]] Graph with_edge_toggled(Vertex u, Vertex v) const;

    /// Adjacency rows as 64-bit masks; requires order() <= 64.
    [[nodiscard]] std::vector<std::uint64_t> masks() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    std::optional<std::vector<Side>> sides_;
};

// Construction algebra. The first operand's vertices are numbered first.
Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int p, int q);  // side A = 0..p-1, side B = p..p+q-1
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge from side A of g1 to side B of g2.
Graph bipartite_join(const Graph& g1, const Graph& g2);
/// Deletes the edges from `center` to its `leaf_count` lowest-indexed neighbors.
Graph remove_star(const Graph& g, Vertex center, int leaf_count);

// Structural queries.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
int odd_component_count(const Graph& g, const VertexSet& removed);
VertexSet neighborhood(const Graph& g, const VertexSet& x);

struct EdgeCounts {
    std::size_t inside;  // e(X)
    std::size_t across;  // e(X, Y)
};
/// Throws GraphError when X and Y overlap.
EdgeCounts edge_counts(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Proper 2-coloring with the lowest vertex of each component on side A,
/// or nullopt when g has an odd cycle.
std::optional<std::vector<Side>> two_coloring(const Graph& g);

/// Returns g carrying a bipartition: its own if present, else a 2-coloring.
/// Throws GraphError when g is not bipartite.
Graph ensure_bipartition(const Graph& g);

}  // namespace xspec
