#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

#include "xspec/checkers.hpp"

namespace xspec {

namespace {

void require_targets(const Graph& g, const FactorSpec& f) {
    if (static_cast<int>(f.targets.size()) != g.order()) throw std::invalid_argument("factor spec size mismatch");
    for (int t : f.targets)
        if (t < 0) throw std::invalid_argument("factor targets must be nonnegative");
}

std::optional<Certificate> sum_mismatch(const Graph& g, const FactorSpec& f, int k) {
    long sa = 0, sb = 0;
    for (Vertex v = 0; v < g.order(); ++v) (g.side(v) == Side::A ? sa : sb) += f.targets[v];
    if (sa == sb) return std::nullopt;
    Certificate c;
    c.kind = CertificateKind::ViolatingSubsetX;
    c.criterion = Criterion::Ore;
    c.k = k;
    c.vertices = g.side_set(sa > sb ? Side::A : Side::B).members();
    c.targets = f.targets;
    c.note = "sum-mismatch";
    return c;
}

Certificate ore_certificate(const Graph& g, const FactorSpec& f, int k, std::vector<Vertex> xs) {
    Certificate c;
    c.kind = CertificateKind::ViolatingSubsetX;
    c.criterion = Criterion::Ore;
    c.k = k;
    c.targets = f.targets;
    const VertexSet x(xs);
    for (Vertex y : neighborhood(g, x)) {
        int dx = 0;
        for (Vertex w : g.neighbors(y)) dx += x.contains(w) ? 1 : 0;
        (dx >= f.targets[y] ? c.y1 : c.y2).push_back(y);
    }
    c.vertices = std::move(xs);
    return c;
}

int uniform_target(const FactorSpec& f) {
    if (f.targets.empty()) return 0;
    for (int t : f.targets)
        if (t != f.targets.front()) return -1;
    return f.targets.front();
}

// Dinic's algorithm; arcs are scanned in insertion order.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    int add_arc(int from, int to, long cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    long run(int s, int t) {
        long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (long pushed = dfs(s, t, std::numeric_limits<long>::max())) total += pushed;
        }
        return total;
    }

    [[nodiscard]] long flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

    /// Nodes reachable from s in the residual graph.
    [[nodiscard]] std::vector<bool> reachable(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
                    seen[arcs_[e].to] = true;
                    stack.push_back(arcs_[e].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
                    level_[arcs_[e].to] = level_[v] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    long dfs(int v, int t, long limit) {
        if (v == t) return limit;
        for (int& e = it_[v]; e != -1; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            long pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                arcs_[e ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace

Verdict has_f_factor_ore(const Graph& g, const FactorSpec& f, int limit) {
    if (!g.has_bipartition()) throw GraphError("Ore's criterion needs a bipartition");
    require_targets(g, f);
    const int k = uniform_target(f);
    if (auto c = sum_mismatch(g, f, k)) return {false, std::move(c)};

    const auto a = g.side_set(Side::A).members();
    const auto b = g.side_set(Side::B).members();
    const int na = static_cast<int>(a.size());
    if (na > limit || na > 63) throw GraphError("side A too large for subset enumeration");
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < na; ++i) local[a[i]] = i;
    std::vector<std::uint64_t> into(b.size(), 0);  // A-neighbors of each y as a local mask
    for (std::size_t j = 0; j < b.size(); ++j)
        for (Vertex x : g.neighbors(b[j])) into[j] |= std::uint64_t{1} << local[x];

    const std::uint64_t top = std::uint64_t{1} << na;
    for (std::uint64_t x = 1; x < top; ++x) {
        long lhs = 0;
        for (std::uint64_t m = x; m; m &= m - 1) lhs += f.targets[a[std::countr_zero(m)]];
        long rhs = 0;
        for (std::size_t j = 0; j < b.size() && rhs < lhs; ++j)
            rhs += std::min<long>(f.targets[b[j]], std::popcount(into[j] & x));
        if (lhs > rhs) {
            std::vector<Vertex> xs;
            for (std::uint64_t m = x; m; m &= m - 1) xs.push_back(a[std::countr_zero(m)]);
            return {false, ore_certificate(g, f, k, std::move(xs))};
        }
    }
    return {true, std::nullopt};
}

Verdict find_f_factor_flow(const Graph& g, const FactorSpec& f) {
    if (!g.has_bipartition()) throw GraphError("factor flow needs a bipartition");
    require_targets(g, f);
    const int k = uniform_target(f);
    if (auto c = sum_mismatch(g, f, k)) return {false, std::move(c)};

    const int n = g.order();
    const int source = n, sink = n + 1;
    MaxFlow flow(n + 2);
    long need = 0;
    std::vector<std::pair<Edge, int>> edge_arcs;
    for (Vertex v = 0; v < n; ++v) {
        if (g.side(v) == Side::A) {
            flow.add_arc(source, v, f.targets[v]);
            need += f.targets[v];
        } else {
            flow.add_arc(v, sink, f.targets[v]);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.side(v) != Side::A) continue;
        for (Vertex w : g.neighbors(v)) edge_arcs.push_back({{v, w}, flow.add_arc(v, w, 1)});
    }
    const long value = flow.run(source, sink);
    if (value == need) {
        Certificate c;
        c.kind = CertificateKind::FactorSubgraph;
        c.criterion = Criterion::Factor;
        c.k = k;
        c.targets = f.targets;
        for (const auto& [e, arc] : edge_arcs)
            if (flow.flow_on(arc) > 0) c.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
        std::sort(c.edges.begin(), c.edges.end());
        return {true, std::move(c)};
    }
    const auto reach = flow.reachable(source);
    std::vector<Vertex> xs;
    for (Vertex v = 0; v < n; ++v)
        if (g.side(v) == Side::A && reach[v]) xs.push_back(v);
    return {false, ore_certificate(g, f, k, std::move(xs))};
}

Verdict find_k_factor_flow(const Graph& g, int k) {
    if (!g.has_bipartition()) throw GraphError("k-factor flow needs a bipartition");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (g.side_set(Side::A).size() != g.side_set(Side::B).size())
        throw GraphError("k-factor flow needs balanced sides");
    return find_f_factor_flow(g, FactorSpec::constant(g.order(), k));
}

std::vector<Matching> decompose_edge_disjoint_pms(const Graph& h) {
    const Graph g = ensure_bipartition(h);
    if (g.side_set(Side::A).size() != g.side_set(Side::B).size())
        throw GraphError("decomposition needs balanced sides");
    const int k = g.order() == 0 ? 0 : g.degree(0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) throw GraphError("decomposition needs a regular graph");

    std::vector<Matching> out;
    auto edges = g.edges();
    for (int round = 0; round < k; ++round) {
        const Graph cur(g.order(), edges, g.sides());
        Matching m = max_matching_bipartite(cur);
        if (!is_perfect_matching(cur, m)) throw std::logic_error("regular bipartite graph without a perfect matching");
        std::vector<Edge> rest;
        std::set_difference(edges.begin(), edges.end(), m.edges.begin(), m.edges.end(), std::back_inserter(rest));
        edges = std::move(rest);
        out.push_back(std::move(m));
    }
    return out;
}

Verdict is_k_factor_critical(const Graph& g, int k, int limit) {
    const int n = g.order();
    if (k < 0 || k > n) throw std::invalid_argument("k-factor-criticality needs 0 <= k <= n");
    if (n > limit || n > 63) throw GraphError("order exceeds the exhaustive limit");
    const MaskMatcher mm(g);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    std::optional<Certificate> violation;
    for (std::uint64_t s = 0; s <= all; ++s) {
        const int size = std::popcount(s);
        if (size >= k && n - size > size - k && mm.odd_components(all & ~s) > size - k) {
            Certificate c;
            c.kind = CertificateKind::ViolatingSetS;
            c.criterion = Criterion::FavaronYu;
            c.k = k;
            c.vertices = VertexSet::from_mask(s).members();
            if ((n - k) % 2 != 0) c.note = "parity";
            violation = std::move(c);
            break;
        }
    }
    bool definitional = true;
    for (std::uint64_t s = 0; s <= all && definitional; ++s)
        if (std::popcount(s) == k && !mm.has_perfect_matching(all & ~s)) definitional = false;

    if (definitional == violation.has_value())
        throw std::logic_error("Favaron-Yu criterion and definition disagree");
    if (violation) return {false, std::move(violation)};
    return {true, std::nullopt};
}

namespace {

class HamiltonSearch {
public:
    explicit HamiltonSearch(const Graph& g) : n_(g.order()), rows_(g.masks()) {
        dead_.assign((std::size_t{1} << (n_ - 1)) * n_, false);
        path_.reserve(n_);
    }

    bool run() {
        path_.push_back(0);
        return extend(0, 1);
    }

    [[nodiscard]] const std::vector<Vertex>& cycle() const { return path_; }

private:
    bool extend(int v, std::uint64_t visited) {
        const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
        if (visited == all) return (rows_[v] & 1) != 0;
        const std::size_t key = static_cast<std::size_t>(visited >> 1) * n_ + v;
        if (dead_[key]) return false;

        const std::uint64_t open = all & ~visited;
        const std::uint64_t usable = open | (std::uint64_t{1} << v) | 1;
        for (std::uint64_t m = open; m; m &= m - 1)
            if (std::popcount(rows_[std::countr_zero(m)] & usable) < 2) {
                dead_[key] = true;
                return false;
            }
        for (std::uint64_t m = rows_[v] & open; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            path_.push_back(w);
            if (extend(w, visited | (std::uint64_t{1} << w))) return true;
            path_.pop_back();
        }
        dead_[key] = true;
        return false;
    }

    int n_;
    std::vector<std::uint64_t> rows_;
    std::vector<bool> dead_;
    std::vector<Vertex> path_;
};

}  // namespace

Verdict hamiltonian_cycle(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit || n > 63) throw GraphError("order exceeds the Hamilton search limit");
    if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return {false, std::nullopt};
    if (g.has_bipartition() && g.side_set(Side::A).size() != g.side_set(Side::B).size()) return {false, std::nullopt};
    HamiltonSearch search(g);
    if (!search.run()) return {false, std::nullopt};
    Certificate c;
    c.kind = CertificateKind::HamCycle;
    c.criterion = Criterion::Hamiltonian;
    c.vertices = search.cycle();
    return {true, std::move(c)};
}

bool has_hamiltonian_cycle_dp(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit || n > 31) throw GraphError("order exceeds the Hamilton search limit");
    if (n < 3) return false;
    const auto rows = g.masks();
    // reach[mask]: endpoints of paths from vertex 0 covering exactly mask.
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); mask += 2) {
        for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
            const int v = std::countr_zero(ends);
            for (auto next = static_cast<std::uint32_t>(rows[v]) & ~mask; next; next &= next - 1) {
                const int w = std::countr_zero(next);
                reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    return (reach[all] & static_cast<std::uint32_t>(rows[0])) != 0;
}

SearchResult connected_k_factor_search(const Graph& input, int k, long budget) {
    const Graph g = ensure_bipartition(input);
    if (g.order() > kConnectedFactorLimit) throw GraphError("order exceeds the connected-factor search limit");
    if (k < 1) throw std::invalid_argument("connected factor search needs k >= 1");
    SearchResult out;
    if (g.side_set(Side::A).size() != g.side_set(Side::B).size()) {
        out.outcome = SearchOutcome::NotFound;
        return out;
    }
    Verdict first = find_k_factor_flow(g, k);
    if (!first.holds) {
        out.outcome = SearchOutcome::NotFound;
        out.certificate = std::move(first.certificate);
        return out;
    }
    ++out.factors_examined;
    if (is_connected(Graph(g.order(), first.certificate->edges))) {
        out.outcome = SearchOutcome::Found;
        out.certificate = std::move(first.certificate);
        return out;
    }

    const auto edges = g.edges();
    const int n = g.order();
    std::vector<int> deg(n, 0), open(n, 0);
    for (auto [u, v] : edges) {
        ++open[u];
        ++open[v];
    }
    std::vector<Edge> chosen;
    long nodes = 0;
    bool exhausted_budget = false;

    auto walk = [&](auto&& self, std::size_t i) -> bool {
        if (++nodes > budget) {
            exhausted_budget = true;
            return false;
        }
        if (i == edges.size()) {
            for (int d : deg)
                if (d != k) return false;
            ++out.factors_examined;
            return is_connected(Graph(n, chosen));
        }
        auto [u, v] = edges[i];
        --open[u];
        --open[v];
        bool found = false;
        if (deg[u] < k && deg[v] < k) {
            ++deg[u];
            ++deg[v];
            chosen.push_back(edges[i]);
            found = self(self, i + 1);
            if (!found) chosen.pop_back();
            --deg[u];
            --deg[v];
        }
        if (!found && !exhausted_budget && k - deg[u] <= open[u] && k - deg[v] <= open[v]) found = self(self, i + 1);
        ++open[u];
        ++open[v];
        return found;
    };

    if (walk(walk, 0)) {
        Certificate c;
        c.kind = CertificateKind::FactorSubgraph;
        c.criterion = Criterion::Factor;
        c.k = k;
        c.targets.assign(n, k);
        c.edges = chosen;
        out.outcome = SearchOutcome::Found;
        out.certificate = std::move(c);
    } else {
        out.outcome = exhausted_budget ? SearchOutcome::Unknown : SearchOutcome::NotFound;
        if (!exhausted_budget) out.certificate.reset();
    }
    return out;
}

}  // namespace xspec
