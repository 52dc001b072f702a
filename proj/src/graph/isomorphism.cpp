#include "xspec/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xspec {

namespace {

struct Invariant {
    int degree;
    std::vector<int> neighbor_degrees;
    friend bool operator==(const Invariant&, const Invariant&) = default;
    friend auto operator<=>(const Invariant&, const Invariant&) = default;
};

std::vector<Invariant> invariants(const Graph& g) {
    std::vector<Invariant> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out[v].degree = g.degree(v);
        for (Vertex w : g.neighbors(v)) out[v].neighbor_degrees.push_back(g.degree(w));
        std::sort(out[v].neighbor_degrees.begin(), out[v].neighbor_degrees.end());
    }
    return out;
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h)
        : g_(g), h_(h), gi_(invariants(g)), hi_(invariants(h)), map_(g.order(), -1), used_(h.order(), false) {
        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), 0);
        // Most constrained first: high degree, then rarer invariants.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return extend(0); }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        for (Vertex w = 0; w < h_.order(); ++w) {
            if (used_[w] || !(gi_[v] == hi_[w])) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const Vertex u = order_[d];
                ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
            }
            if (!ok) continue;
            map_[v] = w;
            used_[w] = true;
            if (extend(depth + 1)) return true;
            used_[w] = false;
            map_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Invariant> gi_, hi_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
};

}  // namespace

bool isomorphic_small(const Graph& g, const Graph& h) {
    if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
        throw GraphError("isomorphic_small supports order <= " + std::to_string(kIsomorphismMaxOrder));
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto a = invariants(g);
    auto b = invariants(h);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return Matcher(g, h).run();
}

TwinQuotient twin_quotient(const Graph& g) {
    const int n = g.order();
    std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        open[nb].push_back(v);
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
        closed[nb].push_back(v);
    }
    std::vector<int> cls(n, -1);
    std::vector<std::vector<Vertex>> groups;
    std::vector<bool> clique;
    auto take = [&](const auto& buckets, bool is_clique) {
        for (const auto& [key, members] : buckets) {
            if (members.size() < 2) continue;
            for (Vertex v : members) cls[v] = static_cast<int>(groups.size());
            groups.push_back(members);
            clique.push_back(is_clique);
        }
    };
    take(open, false);
    take(closed, true);
    for (Vertex v = 0; v < n; ++v)
        if (cls[v] < 0) {
            cls[v] = static_cast<int>(groups.size());
            groups.push_back({v});
            clique.push_back(false);
        }

    std::vector<std::size_t> idx(groups.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return groups[a][0] < groups[b][0]; });
    std::vector<int> rank(groups.size());
    for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r);

    TwinQuotient q;
    const std::size_t c = groups.size();
    q.joined.assign(c, std::vector<bool>(c, false));
    for (std::size_t r = 0; r < c; ++r) {
        q.classes.emplace_back(groups[idx[r]]);
        q.clique.push_back(clique[idx[r]]);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.neighbors(u)) {
            int a = rank[cls[u]], b = rank[cls[w]];
            if (a != b) q.joined[a][b] = true;
        }
    return q;
}

bool isomorphic_by_twins(const Graph& g, const Graph& h, int max_classes) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    const TwinQuotient a = twin_quotient(g);
    const TwinQuotient b = twin_quotient(h);
    const std::size_t c = a.classes.size();
    if (c != b.classes.size()) return false;
    if (static_cast<int>(c) > max_classes) throw GraphError("twin quotient has too many classes");

    std::vector<std::size_t> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < c && ok; ++i) {
            const std::size_t j = perm[i];
            ok = a.classes[i].size() == b.classes[j].size() && a.clique[i] == b.clique[j];
        }
        for (std::size_t i = 0; i < c && ok; ++i)
            for (std::size_t k = 0; k < c && ok; ++k) ok = a.joined[i][k] == b.joined[perm[i]][perm[k]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace xspec
