#include <algorithm>
#include <cmath>
#include <numeric>

#include "xspec/spectra.hpp"

namespace xspec {

double default_tolerance(int dimension) { return dimension <= 256 ? 1e-10 : 1e-8; }

SymMatrix::SymMatrix(int dimension) : n_(dimension), a_(static_cast<std::size_t>(dimension) * dimension, 0.0) {
    if (dimension < 0) throw std::invalid_argument("negative matrix dimension");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j])) throw std::invalid_argument("non-finite matrix entry");
            if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
            m.a_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
        }
    }
    return m;
}

SymMatrix SymMatrix::adjacency(const Graph& g) {
    SymMatrix m(g.order());
    for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

namespace {

struct ComponentPower {
    double rho;
    std::vector<double> x;
    double residual;
};

// Power iteration on one connected component given as local adjacency lists.
ComponentPower power_iterate(const std::vector<std::vector<int>>& adj, double tol, long& budget) {
    const std::size_t n = adj.size();
    if (n == 1) return {0.0, {1.0}, 0.0};
    double shift = 0.0;
    for (const auto& row : adj) shift = std::max(shift, static_cast<double>(row.size()));

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double best = INFINITY;
    while (true) {
        if (budget <= 0)
            throw ConvergenceError("spectral radius did not converge within the matvec budget", best);
        --budget;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j : adj[i]) s += x[j];
            y[i] = s;
        }
        double rho = 0.0;
        for (std::size_t i = 0; i < n; ++i) rho += x[i] * y[i];
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rho * x[i]));
        best = std::min(best, residual);
        if (residual <= tol) return {rho, x, residual};

        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (g.order() < 1) throw std::invalid_argument("spectral radius needs at least one vertex");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

    SpectralResult out;
    out.tol = tol;
    out.rho = -1.0;
    out.perron.assign(g.order(), 0.0);
    long budget = kMatvecBudget;

    std::vector<int> local(g.order(), -1);
    for (const VertexSet& comp : components(g)) {
        int idx = 0;
        for (Vertex v : comp) local[v] = idx++;
        std::vector<std::vector<int>> adj(comp.size());
        for (Vertex v : comp)
            for (Vertex w : g.neighbors(v)) adj[local[v]].push_back(local[w]);

        ComponentPower r = power_iterate(adj, tol, budget);
        out.residual = std::max(out.residual, r.residual);
        if (r.rho > out.rho) {
            out.rho = r.rho;
            std::fill(out.perron.begin(), out.perron.end(), 0.0);
            for (Vertex v : comp) out.perron[v] = r.x[local[v]];
        }
    }
    out.matvecs = kMatvecBudget - budget;
    return out;
}

SpectralResult spectral_radius(const Graph& g) { return spectral_radius(g, default_tolerance(g.order())); }

Eigensystem eigensystem(const SymMatrix& m, double tol) {
    const int n = m.dimension();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (std::sqrt(off) <= 1e-15 * frob || off == 0.0) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) > A(j, j); });

    Eigensystem es;
    double worst = 0.0;
    for (int idx : order) {
        const double lambda = A(idx, idx);
        std::vector<double> vec(n);
        for (int k = 0; k < n; ++k) vec[k] = V(k, idx);
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m(i, j) * vec[j];
            res = std::max(res, std::abs(s - lambda * vec[i]));
        }
        worst = std::max(worst, res);
        es.values.push_back(lambda);
        es.vectors.push_back(std::move(vec));
        es.residuals.push_back(res);
    }
    if (worst > tol) throw ConvergenceError("Jacobi eigenpairs exceed tolerance", worst);
    return es;
}

std::vector<double> full_spectrum(const SymMatrix& m, double tol) { return eigensystem(m, tol).values; }

std::vector<double> full_spectrum(const SymMatrix& m) { return full_spectrum(m, default_tolerance(m.dimension())); }

}  // namespace xspec
