#include "xspec/families.hpp"

#include <algorithm>
#include <cmath>

#include "xspec/isomorphism.hpp"

namespace xspec {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::KextGeneral: return "kext-general";
        case Family::KextBipartite: return "kext-bipartite";
        case Family::KfactorBipartite: return "kfactor-bipartite";
        case Family::KfcGeneral: return "kfc-general";
        case Family::HamiltonBipartite: return "hamilton-bipartite";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::KextGeneral, Family::KextBipartite, Family::KfactorBipartite, Family::KfcGeneral,
                     Family::HamiltonBipartite})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

void require(bool ok, const std::string& inequality) {
    if (!ok) throw HypothesisError("hypothesis violated: " + inequality);
}

// K_delta joined with K_clique is one clique on the first delta + clique
// vertices; the independent vertices see only the join set.
Graph join_family(int delta, int clique, int independent) {
    const int big = delta + clique;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(big) * (big - 1) / 2 + static_cast<std::size_t>(delta) * independent);
    for (Vertex u = 0; u < big; ++u) {
        for (Vertex v = u + 1; v < big; ++v) edges.emplace_back(u, v);
        if (u < delta)
            for (Vertex w = big; w < big + independent; ++w) edges.emplace_back(u, w);
    }
    return Graph(big + independent, edges);
}

}  // namespace

namespace {

void check_kext_general(int n, int k, int delta) {
    require(n % 2 == 0, "n even");
    require(k >= 1, "k >= 1");
    require(delta >= 2 * k, "delta >= 2k");
    require(n - 2 * delta + 2 * k - 1 >= 1, "n - 2*delta + 2k - 1 >= 1");
}

void check_kext_bipartite(int n, int k, int s) {
    require(n % 2 == 0, "n even");
    require(k >= 1, "k >= 1");
    require(s >= 1, "s >= 1");
    require(n / 2 - s - k - 1 >= 0, "n/2 - s - k - 1 >= 0");
}

void check_kfactor(int n, int k) {
    require(n % 2 == 0, "n even");
    require(k >= 2, "k >= 2");
    require(k <= n / 2 - 1, "k <= n/2 - 1");
}

void check_kfc(int n, int k, int delta) {
    require(k >= 1, "k >= 1");
    require(delta >= k, "delta >= k");
    require((n - k) % 2 == 0, "n = k (mod 2)");
    require(n >= 8 * delta - 5 * k + 4, "n >= 8*delta - 5k + 4");
    require(static_cast<std::int64_t>(n) >=
                static_cast<std::int64_t>(delta) * (delta - k) * (delta - k) + delta - 1,
            "n >= delta*(delta - k)^2 + delta - 1");
    require(n - 2 * delta + k - 1 >= 1, "n - 2*delta + k - 1 >= 1");
}

void check_hamilton(int n) {
    require(n % 2 == 0, "n even");
    require(n >= 8, "n >= 8");
}

void check(Family f, const FamilyParams& p) {
    switch (f) {
        case Family::KextGeneral: return check_kext_general(p.n, p.k, p.delta);
        case Family::KextBipartite: return check_kext_bipartite(p.n, p.k, p.s);
        case Family::KfactorBipartite: return check_kfactor(p.n, p.k);
        case Family::KfcGeneral: return check_kfc(p.n, p.k, p.delta);
        case Family::HamiltonBipartite: return check_hamilton(p.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace

Graph extremal_kext_general(int n, int k, int delta) {
    check_kext_general(n, k, delta);
    return join_family(delta, n - 2 * delta + 2 * k - 1, delta - 2 * k + 1);
}

Graph extremal_kext_bipartite(int n, int k, int s) {
    check_kext_bipartite(n, k, s);
    // Same labels as bipartite_join(K_{s,s+k+1}, K_{n/2-s,n/2-s-k-1}): X1, Y1, X2, Y2.
    const int h = n / 2;
    const int y1 = s, x2 = 2 * s + k + 1, y2 = x2 + (h - s);
    std::vector<Edge> edges;
    std::vector<Side> sides(n, Side::B);
    for (Vertex v = 0; v < y1; ++v) sides[v] = Side::A;
    for (Vertex v = x2; v < y2; ++v) sides[v] = Side::A;
    for (Vertex x = 0; x < y1; ++x)
        for (Vertex y = y1; y < x2; ++y) edges.emplace_back(x, y);
    for (Vertex x = 0; x < y2; ++x) {
        if (sides[x] != Side::A) continue;
        for (Vertex y = y2; y < n; ++y) edges.emplace_back(x, y);
    }
    return Graph(n, edges, std::move(sides));
}

Graph extremal_kfactor(int n, int k) {
    check_kfactor(n, k);
    return remove_star(complete_bipartite(n / 2, n / 2), 0, n / 2 - k + 1);
}

Graph extremal_kfc(int n, int k, int delta) {
    check_kfc(n, k, delta);
    return join_family(delta, n - 2 * delta + k - 1, delta - k + 1);
}

Graph extremal_hamilton(int n) {
    check_hamilton(n);
    return extremal_kfactor(n, 2);
}

Graph construct(Family f, const FamilyParams& p) {
    switch (f) {
        case Family::KextGeneral: return extremal_kext_general(p.n, p.k, p.delta);
        case Family::KextBipartite: return extremal_kext_bipartite(p.n, p.k, p.s);
        case Family::KfactorBipartite: return extremal_kfactor(p.n, p.k);
        case Family::KfcGeneral: return extremal_kfc(p.n, p.k, p.delta);
        case Family::HamiltonBipartite: return extremal_hamilton(p.n);
    }
    throw std::invalid_argument("unknown family");
}

std::int64_t threshold_F(std::int64_t k, std::int64_t delta) {
    require(k >= 1, "k >= 1");
    require(delta >= 2 * k, "delta >= 2k");
    return std::max(8 * delta - 10 * k + 4, delta * (delta - 2 * k) * (delta - 2 * k) + delta - 1);
}

namespace {

struct Layout {
    std::vector<std::pair<int, int>> ranges;  // [first, last) per class, quotient order
    std::vector<std::vector<std::int64_t>> counts;
};

Layout layout(Family f, const FamilyParams& p) {
    check(f, p);
    Layout l;
    switch (f) {
        case Family::KextGeneral:
        case Family::KfcGeneral: {
            const int d = p.delta;
            const int b = f == Family::KextGeneral ? p.n - 2 * d + 2 * p.k - 1 : p.n - 2 * d + p.k - 1;
            const int c = p.n - d - b;
            l.ranges = {{0, d}, {d, d + b}, {d + b, p.n}};
            l.counts = {{d - 1, b, c}, {d, b - 1, 0}, {d, 0, 0}};
            break;
        }
        case Family::KextBipartite: {
            const int h = p.n / 2, s = p.s, k = p.k;
            const int t = h - s - k - 1;
            const int x1 = 0, y1 = s, x2 = 2 * s + k + 1, y2 = x2 + (h - s);
            l.ranges = {{x1, y1}, {x2, y2}, {y1, x2}, {y2, p.n}};
            l.counts = {{0, 0, s + k + 1, t}, {0, 0, 0, t}, {s, 0, 0, 0}, {s, h - s, 0, 0}};
            if (t == 0) {
                l.ranges.pop_back();
                l.counts = {{0, 0, s + k + 1}, {0, 0, 0}, {s, 0, 0}};
            }
            break;
        }
        case Family::KfactorBipartite:
        case Family::HamiltonBipartite: {
            const int h = p.n / 2;
            const int k = f == Family::HamiltonBipartite ? 2 : p.k;
            const int removed = h - k + 1;
            l.ranges = {{0, 1}, {1, h}, {h + removed, p.n}, {h, h + removed}};
            l.counts = {{0, 0, k - 1, 0}, {0, 0, k - 1, removed}, {1, h - 1, 0, 0}, {0, h - 1, 0, 0}};
            break;
        }
    }
    return l;
}

}  // namespace

Partition family_partition(Family f, const FamilyParams& p) {
    const Layout l = layout(f, p);
    std::vector<VertexSet> classes;
    int n = 0;
    for (auto [a, b] : l.ranges) {
        classes.push_back(VertexSet::range(a, b));
        n += b - a;
    }
    return Partition(n, std::move(classes));
}

QuotientMatrix family_quotient(Family f, const FamilyParams& p) {
    Layout l = layout(f, p);
    std::vector<std::int64_t> sizes;
    for (auto [a, b] : l.ranges) sizes.push_back(b - a);
    return QuotientMatrix(std::move(l.counts), std::move(sizes));
}

Threshold threshold_rho(Family f, const FamilyParams& p, double margin_tol) {
    QuotientMatrix q = family_quotient(f, p);
    const double star = q.largest_eigenvalue();
    const Graph g = construct(f, p);
    const double dense = spectral_radius(g, std::min(margin_tol / 10, default_tolerance(g.order()))).rho;
    if (std::abs(star - dense) > margin_tol)
        throw std::runtime_error("quotient and dense spectral radius disagree for " + std::string(to_string(f)));
    return Threshold{star, std::move(q), margin_tol, dense};
}

bool recognize(Family f, const FamilyParams& p, const Graph& g) {
    Graph expected;
    try {
        expected = construct(f, p);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return isomorphic_by_twins(g, expected);
}

}  // namespace xspec
