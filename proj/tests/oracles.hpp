#pragma once

// Brute-force references for tests. Deliberately naive: no shared code
// paths with the library beyond the Graph container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "xspec/graph.hpp"

namespace oracle {

using xspec::Edge;
using xspec::Graph;
using xspec::Side;
using xspec::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

/// Perfect matching on the vertices flagged alive, by pairing the lowest alive vertex.
inline bool perfect_matching(const std::vector<std::vector<bool>>& a, std::vector<bool> alive) {
    const int n = static_cast<int>(a.size());
    int first = -1;
    for (int v = 0; v < n && first < 0; ++v)
        if (alive[v]) first = v;
    if (first < 0) return true;
    alive[first] = false;
    for (int w = first + 1; w < n; ++w) {
        if (!alive[w] || !a[first][w]) continue;
        alive[w] = false;
        if (perfect_matching(a, alive)) return true;
        alive[w] = true;
    }
    return false;
}

inline bool has_perfect_matching(const Graph& g) {
    return perfect_matching(matrix(g), std::vector<bool>(g.order(), true));
}

/// Every matching of size k, as edge lists.
inline std::vector<std::vector<Edge>> matchings_of_size(const Graph& g, int k) {
    std::vector<std::vector<Edge>> out;
    const auto edges = g.edges();
    std::vector<Edge> cur;
    std::vector<bool> used(g.order(), false);
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = true;
            cur.push_back(edges[i]);
            walk(i + 1);
            cur.pop_back();
            used[u] = used[v] = false;
        }
    };
    walk(0);
    return out;
}

inline bool k_extendable(const Graph& g, int k) {
    const auto a = matrix(g);
    const auto ms = matchings_of_size(g, k);
    if (ms.empty()) return false;
    for (const auto& m : ms) {
        std::vector<bool> alive(g.order(), true);
        for (auto [u, v] : m) alive[u] = alive[v] = false;
        if (!perfect_matching(a, alive)) return false;
    }
    return true;
}

inline bool k_factor_critical(const Graph& g, int k) {
    const int n = g.order();
    const auto a = matrix(g);
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<bool> alive(n);
        for (int v = 0; v < n; ++v) alive[v] = pick[v] == 0;
        if (!perfect_matching(a, alive)) return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return true;
}

/// Spanning subgraph with every degree equal to k, by edge-by-edge backtracking.
inline bool has_k_factor(const Graph& g, int k) {
    const auto edges = g.edges();
    std::vector<int> deg(g.order(), 0);
    std::vector<int> remaining(g.order(), 0);
    for (auto [u, v] : edges) ++remaining[u], ++remaining[v];
    std::function<bool(std::size_t)> walk = [&](std::size_t i) {
        if (i == edges.size()) return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k; });
        auto [u, v] = edges[i];
        --remaining[u], --remaining[v];
        bool ok = false;
        if (deg[u] < k && deg[v] < k) {
            ++deg[u], ++deg[v];
            ok = walk(i + 1);
            --deg[u], --deg[v];
        }
        if (!ok && deg[u] + remaining[u] >= k && deg[v] + remaining[v] >= k) ok = walk(i + 1);
        ++remaining[u], ++remaining[v];
        return ok;
    };
    return walk(0);
}

inline bool hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    const auto a = matrix(g);
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = a[0][perm.front()] && a[perm.back()][0];
        for (int i = 0; ok && i + 1 < n - 1; ++i) ok = a[perm[i]][perm[i + 1]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    const auto a = matrix(g), b = matrix(h);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; ok && u < g.order(); ++u)
            for (int v = u + 1; ok && v < g.order(); ++v) ok = a[u][v] == b[perm[u]][perm[v]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Characteristic polynomial coefficients c[0..n] (c[n] = 1) by Faddeev-LeVerrier.
inline std::vector<long double> charpoly(const std::vector<std::vector<long double>>& m) {
    const std::size_t n = m.size();
    std::vector<long double> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<long double>> mk(n, std::vector<long double>(n, 0)), prev = mk;
    for (std::size_t k = 1; k <= n; ++k) {
        // mk = m * (prev + c[n-k+1] I)
        auto shifted = prev;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[n - k + 1];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long double s = 0;
                for (std::size_t t = 0; t < n; ++t) s += m[i][t] * shifted[t][j];
                mk[i][j] = s;
            }
        long double trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
        c[n - k] = -trace / static_cast<long double>(k);
        prev = mk;
    }
    return c;
}

/// Largest real root of a polynomial whose roots are all real and lie in [-bound, bound].
inline long double largest_real_root(const std::vector<long double>& c, long double bound) {
    auto eval = [&](long double x) {
        long double v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };
    // Scan down from the bound for the first sign change, then bisect.
    const int steps = 20000;
    long double hi = bound, lo = bound;
    const long double sign_top = eval(bound);
    for (int i = 1; i <= steps; ++i) {
        lo = bound - 2 * bound * i / steps;
        if ((eval(lo) > 0) != (sign_top > 0) || eval(lo) == 0) break;
        hi = lo;
    }
    for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        if ((eval(mid) > 0) == (sign_top > 0)) hi = mid;
        else lo = mid;
    }
    return (lo + hi) / 2;
}

/// Spectral radius by characteristic polynomial root finding (small graphs).
inline double spectral_radius(const Graph& g) {
    std::vector<std::vector<long double>> m(g.order(), std::vector<long double>(g.order(), 0));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
    return static_cast<double>(largest_real_root(charpoly(m), g.max_degree() + 1.0L));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    std::vector<Side> sides(a + b, Side::B);
    std::fill(sides.begin(), sides.begin() + a, Side::A);
    return Graph(a + b, edges, sides);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracle
