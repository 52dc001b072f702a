#include "xspec/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <queue>

namespace xspec {

void Matching::normalize() {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
}

bool is_matching(const Graph& g, const Matching& m) {
    std::vector<bool> used(g.order(), false);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = true;
    }
    return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
    return is_matching(g, m) && 2 * m.size() == static_cast<std::size_t>(g.order());
}

Matching max_matching_bipartite(const Graph& g) {
    const auto& sides = g.sides();
    const int n = g.order();
    constexpr int kNil = -1;
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<Vertex> left;
    for (Vertex v = 0; v < n; ++v)
        if (sides[v] == Side::A) left.push_back(v);

    std::vector<int> mate(n, kNil);
    std::vector<int> dist(n, kInf);

    auto bfs = [&]() {
        std::queue<Vertex> q;
        bool found = false;
        for (Vertex a : left) {
            if (mate[a] == kNil) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = kInf;
            }
        }
        while (!q.empty()) {
            Vertex a = q.front();
            q.pop();
            for (Vertex b : g.neighbors(a)) {
                Vertex next = mate[b];
                if (next == kNil) {
                    found = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[a] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    };

    // Iterative DFS along the layered graph.
    std::vector<std::size_t> it(n, 0);
    auto dfs = [&](Vertex root) {
        std::vector<Vertex> path{root};
        std::vector<Vertex> via;
        while (!path.empty()) {
            Vertex a = path.back();
            auto nb = g.neighbors(a);
            bool advanced = false;
            while (it[a] < nb.size()) {
                Vertex b = nb[it[a]++];
                Vertex next = mate[b];
                if (next == kNil) {
                    via.push_back(b);
                    for (std::size_t i = 0; i < path.size(); ++i) {
                        mate[path[i]] = via[i];
                        mate[via[i]] = path[i];
                    }
                    return true;
                }
                if (dist[next] == dist[a] + 1) {
                    via.push_back(b);
                    path.push_back(next);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                dist[a] = kInf;
                path.pop_back();
                if (!via.empty()) via.pop_back();
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (Vertex a : left)
            if (mate[a] == kNil) dfs(a);
    }

    Matching m;
    for (Vertex a : left)
        if (mate[a] != kNil) m.edges.emplace_back(std::min(a, mate[a]), std::max(a, mate[a]));
    m.normalize();
    return m;
}

MaskMatcher::MaskMatcher(const Graph& g) : rows_(g.masks()) {}

MaskMatcher::MaskMatcher(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
    if (rows_.size() > 64) throw GraphError("mask matcher supports at most 64 vertices");
}

namespace {

constexpr int kMaxMask = 64;

// Edmonds' blossom algorithm (BFS form) on the vertices of `mask`.
class Blossom {
public:
    Blossom(const std::vector<std::uint64_t>& rows, std::uint64_t mask) : rows_(rows), mask_(mask) {
        match_.fill(-1);
    }

    std::array<int, kMaxMask> solve() {
        // Greedy start, then augment from every exposed vertex.
        for (std::uint64_t m = mask_; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (match_[v] != -1) continue;
            for (std::uint64_t nb = rows_[v] & mask_; nb; nb &= nb - 1) {
                int u = std::countr_zero(nb);
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (std::uint64_t m = mask_; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (match_[v] != -1) continue;
            int end = find_path(v);
            while (end != -1) {
                int pv = parent_[end];
                int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::array<bool, kMaxMask> seen{};
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.fill(false);
        parent_.fill(-1);
        for (int i = 0; i < kMaxMask; ++i) base_[i] = i;
        used_[root] = true;
        std::array<int, kMaxMask> queue{};
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int v = queue[head++];
            for (std::uint64_t nb = rows_[v] & mask_; nb; nb &= nb - 1) {
                int to = std::countr_zero(nb);
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    in_blossom_.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::uint64_t m = mask_; m; m &= m - 1) {
                        int i = std::countr_zero(m);
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    int next = match_[to];
                    used_[next] = true;
                    queue[tail++] = next;
                }
            }
        }
        return -1;
    }

    const std::vector<std::uint64_t>& rows_;
    std::uint64_t mask_;
    std::array<int, kMaxMask> match_{};
    std::array<int, kMaxMask> parent_{};
    std::array<int, kMaxMask> base_{};
    std::array<bool, kMaxMask> used_{};
    std::array<bool, kMaxMask> in_blossom_{};
};

}  // namespace

std::vector<int> MaskMatcher::mates(std::uint64_t mask) const {
    auto m = Blossom(rows_, mask).solve();
    return std::vector<int>(m.begin(), m.begin() + order());
}

int MaskMatcher::max_matching_size(std::uint64_t mask) const {
    auto m = Blossom(rows_, mask).solve();
    int matched = 0;
    for (std::uint64_t b = mask; b; b &= b - 1)
        if (m[std::countr_zero(b)] != -1) ++matched;
    return matched / 2;
}

bool MaskMatcher::has_perfect_matching(std::uint64_t mask) const {
    if (std::popcount(mask) % 2 != 0) return false;
    return 2 * max_matching_size(mask) == std::popcount(mask);
}

bool MaskMatcher::find_k_matching(std::uint64_t mask, int k, std::vector<Edge>& out) const {
    out.clear();
    if (k <= 0) return true;
    if (max_matching_size(mask) < k) return false;
    // Greedy descent: at every step keep the lowest choice that still admits
    // a matching of the remaining size.
    while (k > 0) {
        int v = std::countr_zero(mask);
        bool matched = false;
        for (std::uint64_t nb = rows_[v] & mask; nb; nb &= nb - 1) {
            int u = std::countr_zero(nb);
            std::uint64_t rest = mask & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u);
            if (max_matching_size(rest) >= k - 1) {
                out.emplace_back(v, u);
                mask = rest;
                --k;
                matched = true;
                break;
            }
        }
        if (!matched) mask &= ~(std::uint64_t{1} << v);
    }
    return true;
}

int MaskMatcher::odd_components(std::uint64_t mask) const {
    int odd = 0;
    while (mask) {
        std::uint64_t comp = mask & (~mask + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        if (std::popcount(comp) % 2 == 1) ++odd;
        mask &= ~comp;
    }
    return odd;
}

Matching max_matching_general(const Graph& g, int limit) {
    if (g.order() > limit)
        throw GraphError("exact general matching is limited to order " + std::to_string(limit));
    if (g.order() > 64) throw GraphError("exact general matching supports at most 64 vertices");
    MaskMatcher mm(g);
    const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    auto mate = mm.mates(all);
    Matching m;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

bool has_perfect_matching(const Graph& g, int limit) {
    return 2 * max_matching_general(g, limit).size() == static_cast<std::size_t>(g.order());
}

}  // namespace xspec
