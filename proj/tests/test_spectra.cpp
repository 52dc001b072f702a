#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "xspec/families.hpp"
#include "xspec/spectra.hpp"

using namespace xspec;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, e);
}

std::vector<std::size_t> class_sizes(const Partition& p) {
    std::vector<std::size_t> out;
    for (const auto& c : p.classes()) out.push_back(c.size());
    return out;
}

std::vector<VertexSet> sorted_classes(const Partition& p) {
    auto c = p.classes();
    std::sort(c.begin(), c.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
    return c;
}

}  // namespace

TEST_CASE("default tolerance") {
    CHECK(default_tolerance(256) == 1e-10);
    CHECK(default_tolerance(257) == 1e-8);
}

TEST_CASE("spectral radius of complete and complete bipartite graphs") {
    CHECK(spectral_radius(complete(10)).rho == doctest::Approx(9).epsilon(1e-12));
    CHECK(std::abs(spectral_radius(complete_bipartite(4, 4)).rho - 4.0) <= 1e-10);
    CHECK(std::abs(spectral_radius(complete_bipartite(3, 7)).rho - std::sqrt(21.0)) <= 1e-10);
    CHECK(spectral_radius(empty_graph(3)).rho == 0.0);
    CHECK_THROWS_AS(spectral_radius(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("spectral radius of the k-factor extremal graph") {
    const auto r = spectral_radius(extremal_kfactor(8, 2));
    CHECK(std::abs(r.rho - std::sqrt((13 + std::sqrt(133.0)) / 2)) <= 1e-9);
    CHECK(r.residual <= r.tol);
}

TEST_CASE("Perron vector is an eigenvector and positive on connected graphs") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 50; ++rep) {
        const Graph g = oracle::random_graph(rng, 9, 0.5);
        const auto r = spectral_radius(g);
        const auto a = SymMatrix::adjacency(g);
        double worst = 0;
        for (int i = 0; i < g.order(); ++i) {
            double s = 0;
            for (int j = 0; j < g.order(); ++j) s += a(i, j) * r.perron[j];
            worst = std::max(worst, std::abs(s - r.rho * r.perron[i]));
        }
        CHECK(worst <= 1e-8);
        if (is_connected(g))
            for (double x : r.perron) CHECK(x > 0);
    }
}

TEST_CASE("spectral radius matches the characteristic polynomial oracle") {
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 100) {
        const Graph g = oracle::random_graph(rng, 7, 0.6);
        if (!is_connected(g)) continue;
        CHECK(std::abs(spectral_radius(g).rho - oracle::spectral_radius(g)) <= 1e-8);
        ++checked;
    }
}

TEST_CASE("disconnected graphs take the largest component") {
    const Graph g = disjoint_union(complete(3), complete(5));
    CHECK(std::abs(spectral_radius(g).rho - 4.0) <= 1e-10);
}

TEST_CASE("full spectrum") {
    const auto k2 = full_spectrum(SymMatrix::adjacency(complete(2)));
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == doctest::Approx(1));
    CHECK(k2[1] == doctest::Approx(-1));
    for (double x : full_spectrum(SymMatrix(4))) CHECK(std::abs(x) <= 1e-12);
    const auto c4 = full_spectrum(SymMatrix::adjacency(cycle(4)));
    const std::vector<double> expected{2, 0, 0, -2};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(c4[i] - expected[i]) <= 1e-10);
}

TEST_CASE("Jacobi eigensystem of a cycle matches the closed form") {
    const int n = 11;
    auto values = full_spectrum(SymMatrix::adjacency(cycle(n)));
    std::vector<double> expected;
    for (int j = 0; j < n; ++j) expected.push_back(2 * std::cos(2 * M_PI * j / n));
    std::sort(expected.rbegin(), expected.rend());
    for (int i = 0; i < n; ++i) CHECK(std::abs(values[i] - expected[i]) <= 1e-10);
}

TEST_CASE("SymMatrix validation") {
    CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix::from_rows({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix::from_rows({{NAN}}), std::invalid_argument);
}

TEST_CASE("equitable refinement") {
    const Graph g1 = extremal_kext_general(10, 1, 2);
    CHECK(class_sizes(refine_equitable(g1, Partition::trivial(10))) == std::vector<std::size_t>{2, 7, 1});
    CHECK(refine_equitable(cycle(7), Partition::trivial(7)).size() == 1);
    const Graph g3 = extremal_kfactor(8, 2);
    const Partition refined = refine_equitable(g3, Partition::trivial(8));
    CHECK(refined.size() == 4);
    CHECK(sorted_classes(refined) == sorted_classes(family_partition(Family::KfactorBipartite, {8, 2, 0, 0})));
    CHECK_THROWS_AS(Partition(3, {VertexSet({0, 1})}), std::invalid_argument);
}

TEST_CASE("quotient matrices") {
    const Graph g2 = extremal_kext_bipartite(10, 1, 1);
    const auto q2 = quotient(g2, family_partition(Family::KextBipartite, {10, 1, 0, 1}));
    const std::vector<std::vector<std::int64_t>> rows{{0, 0, 3, 2}, {0, 0, 0, 2}, {1, 0, 0, 0}, {1, 4, 0, 0}};
    CHECK(q2.counts() == rows);

    const auto qk = quotient(complete(6), Partition::trivial(6));
    CHECK(qk.size() == 1);
    CHECK(qk.count(0, 0) == 5);

    for (auto [n, k, d] : {std::tuple{10, 1, 2}, {18, 1, 3}, {16, 2, 4}}) {
        const auto q = quotient(extremal_kext_general(n, k, d), family_partition(Family::KextGeneral, {n, k, d, 0}));
        const std::vector<std::vector<std::int64_t>> want{
            {d - 1, n - 2 * d + 2 * k - 1, d - 2 * k + 1}, {d, n - 2 * d + 2 * k - 2, 0}, {d, 0, 0}};
        CHECK(q.counts() == want);
        CHECK(std::abs(q.largest_eigenvalue() - spectral_radius(extremal_kext_general(n, k, d)).rho) <= 1e-8);
    }
    CHECK_THROWS_AS(quotient(path(4), Partition::trivial(4)), NotEquitableError);
}

TEST_CASE("quotient eigenvalues lie in the dense spectrum") {
    for (int n = 8; n <= 20; n += 2) {
        const Graph g = extremal_hamilton(n);
        const auto q = quotient(g, family_partition(Family::HamiltonBipartite, {n, 2, 0, 0}));
        const auto dense = full_spectrum(SymMatrix::adjacency(g));
        for (double lam : q.eigenvalues()) {
            double best = 1e9;
            for (double mu : dense) best = std::min(best, std::abs(lam - mu));
            CHECK(best <= 1e-8);
        }
    }
}

TEST_CASE("bipartite family characteristic polynomial") {
    const auto p = charpoly_bipartite_family(10, 1, 1);
    CHECK(p.c4 == Rational(1));
    CHECK(p.c2 == Rational(-13));
    CHECK(p.c0 == Rational(24));
    CHECK(std::abs(p.largest_root() - spectral_radius(extremal_kext_bipartite(10, 1, 1)).rho) <= 1e-10);
    CHECK_THROWS_AS(charpoly_bipartite_family(11, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_bipartite_family(10, 1, 4), std::invalid_argument);

    for (int k = 1; k <= 4; ++k)
        for (int s = 1; s <= 5; ++s)
            for (int n = 4 * s + 2 * k + 2; n <= 60; n += 2) {
                const auto q = quotient(extremal_kext_bipartite(n, k, s),
                                        family_partition(Family::KextBipartite, {n, k, 0, s}));
                std::vector<std::vector<long double>> m(4, std::vector<long double>(4));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) m[i][j] = static_cast<long double>(q.count(i, j));
                const auto c = oracle::charpoly(m);
                const auto poly = charpoly_bipartite_family(n, k, s);
                CHECK(std::abs(static_cast<double>(c[2]) - boost::rational_cast<double>(poly.c2)) < 1e-6);
                CHECK(std::abs(static_cast<double>(c[0]) - boost::rational_cast<double>(poly.c0)) < 1e-6);
                CHECK(std::abs(static_cast<double>(c[3])) < 1e-9);
                CHECK(std::abs(static_cast<double>(c[1])) < 1e-9);
                CHECK(std::abs(poly.largest_root() - q.largest_eigenvalue()) <= 1e-10);
            }
}

TEST_CASE("degree-sum bound") {
    CHECK(fms_bound(cycle(7)).bound == doctest::Approx(2));
    CHECK(fms_bound(complete_bipartite(2, 5)).bound == doctest::Approx(std::sqrt(10.0)));
    // P3 is the semiregular K_{1,2}, so the bound is attained.
    CHECK(fms_bound(path(3)).bound == doctest::Approx(std::sqrt(2.0)));
    CHECK(fms_bound(path(4)).bound > spectral_radius(path(4)).rho + 0.1);
    CHECK_THROWS(fms_bound(empty_graph(2)));
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g = oracle::random_graph(rng, 8, 0.5);
        if (!is_connected(g)) continue;
        CHECK(fms_bound(g).bound >= spectral_radius(g).rho - 1e-9);
    }
}

TEST_CASE("degree-sum identity") {
    const auto star = degree_sum_identity(complete_bipartite(1, 3), 0);
    CHECK(star.lhs == 3);
    CHECK(star.rhs == 3);
    const auto k6 = degree_sum_identity(complete(6), 2);
    CHECK(k6.lhs == 25);
    CHECK(k6.rhs == 25);
    const auto e3 = degree_sum_identity(extremal_kfactor(8, 2), 0);
    CHECK(e3.lhs == 4);
    CHECK(e3.rhs == 4);
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 300; ++rep) {
        const Graph g = oracle::random_graph(rng, 9, 0.4);
        const auto id = degree_sum_identity(g, static_cast<Vertex>(rng() % 9));
        CHECK(id.lhs == id.rhs);
    }
}

TEST_CASE("sqrt(m) bound") {
    CHECK(sqrt_m_bound(complete_bipartite(4, 4)) == doctest::Approx(4));
    CHECK(sqrt_m_bound(ensure_bipartition(cycle(6))) == doctest::Approx(std::sqrt(6.0)));
    CHECK(sqrt_m_bound(complete_bipartite(1, 1)) == doctest::Approx(1));
    CHECK_THROWS(sqrt_m_bound(Graph(2, std::vector<Edge>{}, std::vector<Side>{Side::A, Side::B})));
}
