#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

#include "xspec/graph.hpp"

namespace xspec {

/// Default eigen tolerance: 1e-10 up to dimension 256, 1e-8 above.
double default_tolerance(int dimension);

inline constexpr long kMatvecBudget = 1'000'000;

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}
    [[nodiscard]] double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

/// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
    explicit SymMatrix(int dimension = 0);
    /// Throws std::invalid_argument unless `entries` is square, symmetric and finite.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix adjacency(const Graph& g);

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double value);

private:
    int n_;
    std::vector<double> a_;
};

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;  // unit 2-norm; zero outside the dominant component
    double residual = 0.0;       // max-norm of A x - rho x
    double tol = 0.0;
    long matvecs = 0;
};

/// Largest adjacency eigenvalue by power iteration on A + Delta*I
/// (Delta = max degree) from the all-ones vector, run per connected
/// component; the largest component value is returned.
/// Throws ConvergenceError when the matvec budget runs out.
SpectralResult spectral_radius(const Graph& g, double tol);
SpectralResult spectral_radius(const Graph& g);

struct Eigensystem {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
    std::vector<double> residuals;
};

/// Cyclic Jacobi. Every eigenpair is checked against `tol`.
Eigensystem eigensystem(const SymMatrix& m, double tol);
std::vector<double> full_spectrum(const SymMatrix& m, double tol);
std::vector<double> full_spectrum(const SymMatrix& m);

/// Ordered list of disjoint, nonempty classes covering 0..n-1.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless the classes partition 0..order-1.
    Partition(int order, std::vector<VertexSet> classes);
    static Partition trivial(int order);

    [[nodiscard]] const std::vector<VertexSet>& classes() const { return classes_; }
    [[nodiscard]] std::size_t size() const { return classes_.size(); }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] std::vector<int> class_of() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int order_ = 0;
    std::vector<VertexSet> classes_;
};

/// Coarsest equitable refinement. A split class is replaced in place by its
/// pieces ordered by smallest member; classes are revisited in index order
/// until no signature splits anything.
Partition refine_equitable(const Graph& g, const Partition& seed);

class NotEquitableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// b(i,j) = neighbors in class j of any vertex of class i (exact counts).
class QuotientMatrix {
public:
    QuotientMatrix(std::vector<std::vector<std::int64_t>> counts, std::vector<std::int64_t> class_sizes);

    [[nodiscard]] int size() const { return static_cast<int>(counts_.size()); }
    [[nodiscard]] std::int64_t count(int i, int j) const { return counts_[i][j]; }
    [[nodiscard]] double operator()(int i, int j) const { return static_cast<double>(counts_[i][j]); }
    [[nodiscard]] const std::vector<std::int64_t>& class_sizes() const { return sizes_; }
    [[nodiscard]] const std::vector<std::vector<std::int64_t>>& counts() const { return counts_; }

    /// D^{1/2} B D^{-1/2} with D = diag(class sizes); symmetric with the
    /// same spectrum as B.
    [[nodiscard]] SymMatrix symmetrized() const;
    [[nodiscard]] std::vector<double> eigenvalues(double tol = 1e-12) const;  // descending
    [[nodiscard]] double largest_eigenvalue(double tol = 1e-12) const;

private:
    std::vector<std::vector<std::int64_t>> counts_;
    std::vector<std::int64_t> sizes_;
};

/// Throws NotEquitableError when some class pair has non-constant counts.
QuotientMatrix quotient(const Graph& g, const Partition& p);

using Rational = boost::rational<std::int64_t>;

/// x^4 + c2 x^2 + c0 for the 4x4 quotient of K_{s,s+k+1} bipartite-joined
/// with K_{n/2-s, n/2-s-k-1}.
struct EvenQuartic {
    Rational c4{1};
    Rational c2;
    Rational c0;
    [[nodiscard]] double largest_root() const;
};

/// Throws std::invalid_argument unless n is even and every part size is >= 0.
EvenQuartic charpoly_bipartite_family(std::int64_t n, std::int64_t k, std::int64_t s);

struct DegreeSumBound {
    double bound;    // sqrt(max_u R_u)
    Vertex vertex;   // lowest-indexed u attaining the max
    std::int64_t degree_sum;  // R_u = sum of d(v) over v in N(u)
};

/// rho(G) <= max_u sqrt(R_u), equality iff regular or semiregular bipartite.
/// Requires a connected graph with n >= 2.
DegreeSumBound fms_bound(const Graph& g);

struct DegreeSumIdentity {
    std::int64_t lhs;  // sum of d(v), v in N(u)
    std::int64_t rhs;  // d(u) + 2 e(N(u)) + e(N(u), V \ (N(u) + u))
};
DegreeSumIdentity degree_sum_identity(const Graph& g, Vertex u);

/// sqrt(m) for a bipartite graph with at least one edge.
double sqrt_m_bound(const Graph& g);

}  // namespace xspec
