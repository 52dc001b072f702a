#include "xspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace xspec {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
    std::vector<Vertex> m;
    for (Vertex v = first; v < last; ++v) m.push_back(v);
    return VertexSet(std::move(m));
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<Vertex> m;
    while (mask) {
        m.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (Vertex v : members_) {
        if (v < 0 || v >= 64) throw GraphError("vertex set does not fit in a 64-bit mask");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

Graph::Graph(int order) {
    if (order < 0) throw GraphError("negative order");
    adj_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges, std::optional<std::vector<Side>> sides)
    : Graph(order) {
    if (sides && static_cast<int>(sides->size()) != order)
        throw GraphError("bipartition size does not match order");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (sides && (*sides)[u] == (*sides)[v])
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " lies inside one side of the bipartition");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw GraphError("duplicate edge");
    }
    edge_count_ = edges.size();
    sides_ = std::move(sides);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::vector<Side>& Graph::sides() const {
    if (!sides_) throw GraphError("graph carries no bipartition");
    return *sides_;
}

VertexSet Graph::side_set(Side s) const {
    std::vector<Vertex> m;
    for (Vertex v = 0; v < order(); ++v)
        if (sides()[v] == s) m.push_back(v);
    return VertexSet(std::move(m));
}

Graph Graph::with_bipartition(std::vector<Side> sides) const {
    auto e = edges();
    return Graph(order(), e, std::move(sides));
}

Graph Graph::without_bipartition() const {
    Graph g = *this;
    g.sides_.reset();
    return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != order()) throw GraphError("permutation size mismatch");
    std::vector<bool> seen(order(), false);
    for (Vertex p : perm) {
        if (p < 0 || p >= order() || seen[p]) throw GraphError("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> e;
    for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
    std::optional<std::vector<Side>> s;
    if (sides_) {
        s.emplace(order());
        for (Vertex v = 0; v < order(); ++v) (*s)[perm[v]] = (*sides_)[v];
    }
    return Graph(order(), e, std::move(s));
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<Vertex> index(order(), -1);
    int next = 0;
    for (Vertex v : keep) index.at(v) = next++;
    std::vector<Edge> e;
    for (auto [u, v] : edges())
        if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
    std::optional<std::vector<Side>> s;
    if (sides_) {
        s.emplace();
        for (Vertex v : keep) s->push_back((*sides_)[v]);
    }
    return Graph(next, e, std::move(s));
}

Graph Graph::without_vertices(const VertexSet& drop) const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < order(); ++v)
        if (!drop.contains(v)) keep.push_back(v);
    return induced(VertexSet(std::move(keep)));
}

Graph Graph::with_edge_toggled(Vertex u, Vertex v) const {
    if (u == v) throw GraphError("self-loop");
    auto e = edges();
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::find(e.begin(), e.end(), key);
    if (it != e.end())
        e.erase(it);
    else
        e.push_back(key);
    return Graph(order(), e, sides_);
}

std::vector<std::uint64_t> Graph::masks() const {
    if (order() > 64) throw GraphError("graph too large for 64-bit adjacency masks");
    std::vector<std::uint64_t> rows(order(), 0);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u]) rows[u] |= std::uint64_t{1} << v;
    return rows;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.sides_ == b.sides_;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_bipartite(int p, int q) {
    if (p < 0 || q < 0) throw GraphError("negative part size");
    std::vector<Edge> e;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = p; v < p + q; ++v) e.emplace_back(u, v);
    std::vector<Side> s(p, Side::A);
    s.resize(p + q, Side::B);
    return Graph(p + q, e, std::move(s));
}

namespace {

std::vector<Edge> shifted_edges(const Graph& g, int offset) {
    auto e = g.edges();
    for (auto& [u, v] : e) {
        u += offset;
        v += offset;
    }
    return e;
}

std::vector<Edge> union_edges(const Graph& g, const Graph& h) {
    auto e = g.edges();
    auto f = shifted_edges(h, g.order());
    e.insert(e.end(), f.begin(), f.end());
    return e;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
    auto e = union_edges(g, h);
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < h.order(); ++v) e.emplace_back(u, n + v);
    return Graph(n + h.order(), e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::optional<std::vector<Side>> s;
    if (g.has_bipartition() && h.has_bipartition()) {
        s = g.sides();
        s->insert(s->end(), h.sides().begin(), h.sides().end());
    }
    auto e = union_edges(g, h);
    return Graph(g.order() + h.order(), e, std::move(s));
}

Graph bipartite_join(const Graph& g1, const Graph& g2) {
    if (!g1.has_bipartition() || !g2.has_bipartition())
        throw GraphError("bipartite join needs both operands to carry a bipartition");
    Graph u = disjoint_union(g1, g2);
    auto e = u.edges();
    const int off = g1.order();
    for (Vertex x = 0; x < g1.order(); ++x) {
        if (g1.side(x) != Side::A) continue;
        for (Vertex y = 0; y < g2.order(); ++y)
            if (g2.side(y) == Side::B) e.emplace_back(x, off + y);
    }
    return Graph(u.order(), e, u.sides());
}

Graph remove_star(const Graph& g, Vertex center, int leaf_count) {
    if (center < 0 || center >= g.order()) throw GraphError("star center out of range");
    if (leaf_count < 0 || g.degree(center) < leaf_count)
        throw GraphError("star center has degree " + std::to_string(g.degree(center)) +
                         " < leaf count " + std::to_string(leaf_count));
    auto nb = g.neighbors(center);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        Vertex other = u == center ? v : (v == center ? u : -1);
        if (other >= 0 && std::find(nb.begin(), nb.begin() + leaf_count, other) != nb.begin() + leaf_count)
            continue;
        e.emplace_back(u, v);
    }
    std::optional<std::vector<Side>> s;
    if (g.has_bipartition()) s = g.sides();
    return Graph(g.order(), e, std::move(s));
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int odd_component_count(const Graph& g, const VertexSet& removed) {
    for (Vertex v : removed)
        if (v < 0 || v >= g.order()) throw GraphError("vertex set outside graph");
    int odd = 0;
    for (const auto& c : components(g.without_vertices(removed)))
        if (c.size() % 2 == 1) ++odd;
    return odd;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<Vertex> m;
    for (Vertex v : x)
        for (Vertex w : g.neighbors(v)) m.push_back(w);
    return VertexSet(std::move(m));
}

EdgeCounts edge_counts(const Graph& g, const VertexSet& x, const VertexSet& y) {
    EdgeCounts c{0, 0};
    for (Vertex v : y)
        if (x.contains(v)) throw GraphError("edge_counts needs disjoint X and Y");
    for (Vertex u : x)
        for (Vertex w : g.neighbors(u)) {
            if (u < w && x.contains(w)) ++c.inside;
            if (y.contains(w)) ++c.across;
        }
    return c;
}

std::optional<std::vector<Side>> two_coloring(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> sides(n);
    for (Vertex v = 0; v < n; ++v) sides[v] = color[v] == 0 ? Side::A : Side::B;
    return sides;
}

Graph ensure_bipartition(const Graph& g) {
    if (g.has_bipartition()) return g;
    auto c = two_coloring(g);
    if (!c) throw GraphError("graph is not bipartite");
    return g.with_bipartition(std::move(*c));
}

}  // namespace xspec
