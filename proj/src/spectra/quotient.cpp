#include <algorithm>
#include <cmath>
#include <map>

#include "xspec/spectra.hpp"

namespace xspec {

Partition::Partition(int order, std::vector<VertexSet> classes) : order_(order), classes_(std::move(classes)) {
    std::vector<bool> seen(order, false);
    std::size_t covered = 0;
    for (const auto& c : classes_) {
        if (c.empty()) throw std::invalid_argument("partition has an empty class");
        for (Vertex v : c) {
            if (v < 0 || v >= order || seen[v]) throw std::invalid_argument("partition classes overlap or leave range");
            seen[v] = true;
            ++covered;
        }
    }
    if (static_cast<int>(covered) != order) throw std::invalid_argument("partition does not cover every vertex");
}

Partition Partition::trivial(int order) {
    if (order == 0) return Partition(0, {});
    return Partition(order, {VertexSet::range(0, order)});
}

std::vector<int> Partition::class_of() const {
    std::vector<int> out(order_, -1);
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (Vertex v : classes_[i]) out[v] = static_cast<int>(i);
    return out;
}

namespace {

std::vector<std::int64_t> signature(const Graph& g, Vertex v, const std::vector<int>& cls, std::size_t classes) {
    std::vector<std::int64_t> sig(classes, 0);
    for (Vertex w : g.neighbors(v)) ++sig[cls[w]];
    return sig;
}

}  // namespace

Partition refine_equitable(const Graph& g, const Partition& seed) {
    if (seed.order() != g.order()) throw std::invalid_argument("seed partition order mismatch");
    std::vector<std::vector<Vertex>> classes;
    for (const auto& c : seed.classes()) classes.push_back(c.members());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::vector<int> cls(g.order());
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (Vertex v : classes[c]) cls[v] = static_cast<int>(c);

            std::vector<std::vector<std::int64_t>> keys;
            std::vector<std::vector<Vertex>> pieces;
            for (Vertex v : classes[i]) {
                auto sig = signature(g, v, cls, classes.size());
                auto it = std::find(keys.begin(), keys.end(), sig);
                if (it == keys.end()) {
                    keys.push_back(std::move(sig));
                    pieces.push_back({v});
                } else {
                    pieces[it - keys.begin()].push_back(v);
                }
            }
            if (pieces.size() > 1) {
                classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(i));
                classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
                changed = true;
            }
        }
    }
    std::vector<VertexSet> out;
    for (auto& c : classes) out.emplace_back(std::move(c));
    return Partition(g.order(), std::move(out));
}

QuotientMatrix::QuotientMatrix(std::vector<std::vector<std::int64_t>> counts, std::vector<std::int64_t> class_sizes)
    : counts_(std::move(counts)), sizes_(std::move(class_sizes)) {
    const std::size_t c = counts_.size();
    if (sizes_.size() != c) throw std::invalid_argument("class size count mismatch");
    for (std::size_t i = 0; i < c; ++i) {
        if (counts_[i].size() != c) throw std::invalid_argument("quotient matrix is not square");
        if (sizes_[i] <= 0) throw std::invalid_argument("class sizes must be positive");
        for (std::size_t j = 0; j < c; ++j)
            if (counts_[i][j] < 0) throw std::invalid_argument("quotient entries must be nonnegative");
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (counts_[i][j] * sizes_[i] != counts_[j][i] * sizes_[j])
                throw std::invalid_argument("quotient entries are inconsistent with an undirected graph");
}

SymMatrix QuotientMatrix::symmetrized() const {
    const int c = size();
    SymMatrix s(c);
    for (int i = 0; i < c; ++i)
        for (int j = i; j < c; ++j)
            s.set(i, j, std::sqrt(static_cast<double>(counts_[i][j]) * static_cast<double>(counts_[j][i])));
    return s;
}

std::vector<double> QuotientMatrix::eigenvalues(double tol) const {
    double scale = 1.0;
    for (const auto& row : counts_)
        for (auto x : row) scale = std::max(scale, static_cast<double>(x));
    return full_spectrum(symmetrized(), tol * scale);
}

double QuotientMatrix::largest_eigenvalue(double tol) const { return eigenvalues(tol).front(); }

QuotientMatrix quotient(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) throw std::invalid_argument("partition order mismatch");
    const auto cls = p.class_of();
    const std::size_t c = p.size();
    std::vector<std::vector<std::int64_t>> counts(c);
    std::vector<std::int64_t> sizes(c);
    for (std::size_t i = 0; i < c; ++i) {
        const auto& members = p.classes()[i].members();
        sizes[i] = static_cast<std::int64_t>(members.size());
        counts[i] = signature(g, members.front(), cls, c);
        for (Vertex v : members)
            if (signature(g, v, cls, c) != counts[i])
                throw NotEquitableError("partition is not equitable at class " + std::to_string(i) + " (vertex " +
                                        std::to_string(v) + ")");
    }
    return QuotientMatrix(std::move(counts), std::move(sizes));
}

double EvenQuartic::largest_root() const {
    const double b = boost::rational_cast<double>(c2);
    const double c = boost::rational_cast<double>(c0);
    const double y = (-b + std::sqrt(std::max(0.0, b * b - 4.0 * c))) / 2.0;
    return std::sqrt(std::max(0.0, y));
}

EvenQuartic charpoly_bipartite_family(std::int64_t n, std::int64_t k, std::int64_t s) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("order must be even and nonnegative");
    if (k < 0 || s < 0) throw std::invalid_argument("k and s must be nonnegative");
    if (n / 2 - s - k - 1 < 0) throw std::invalid_argument("part size n/2 - s - k - 1 is negative");
    EvenQuartic q;
    q.c2 = Rational((2 * k + 2 * s + 2 - n) * n, 4) - Rational((s + k + 1) * s);
    q.c0 = -Rational(s * (n - 2 * s) * (s + k + 1) * (2 * s - n + 2 * k + 2), 4);
    return q;
}

DegreeSumBound fms_bound(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("degree-sum bound needs at least two vertices");
    if (!is_connected(g)) throw std::invalid_argument("degree-sum bound needs a connected graph");
    DegreeSumBound best{0.0, -1, -1};
    for (Vertex u = 0; u < g.order(); ++u) {
        std::int64_t r = 0;
        for (Vertex v : g.neighbors(u)) r += g.degree(v);
        if (r > best.degree_sum) best = {0.0, u, r};
    }
    best.bound = std::sqrt(static_cast<double>(best.degree_sum));
    return best;
}

DegreeSumIdentity degree_sum_identity(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
    DegreeSumIdentity id{0, 0};
    for (Vertex v : g.neighbors(u)) id.lhs += g.degree(v);

    const VertexSet nu(std::vector<Vertex>(g.neighbors(u).begin(), g.neighbors(u).end()));
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != u && !nu.contains(v)) rest.push_back(v);
    const EdgeCounts ec = edge_counts(g, nu, VertexSet(std::move(rest)));
    id.rhs = g.degree(u) + 2 * static_cast<std::int64_t>(ec.inside) + static_cast<std::int64_t>(ec.across);
    return id;
}

double sqrt_m_bound(const Graph& g) {
    if (!g.has_bipartition() && !two_coloring(g)) throw std::invalid_argument("sqrt(m) bound needs a bipartite graph");
    if (g.size() == 0) throw std::invalid_argument("sqrt(m) bound needs at least one edge");
    return std::sqrt(static_cast<double>(g.size()));
}

}  // namespace xspec
