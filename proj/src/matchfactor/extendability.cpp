#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>

#include "xspec/checkers.hpp"

namespace xspec {

namespace {

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_extendability_input(const Graph& g, int k, int limit) {
    if (k < 1) throw GraphError("extendability needs k >= 1");
    if (g.order() % 2 != 0) throw GraphError("extendability needs even order");
    if (!is_connected(g)) throw GraphError("extendability needs a connected graph");
    if (g.order() > limit || g.order() > 64)
        throw GraphError("order " + std::to_string(g.order()) + " exceeds the exhaustive limit " +
                         std::to_string(limit));
}

Certificate no_k_matching(int k) {
    Certificate c;
    c.kind = CertificateKind::FailingMatching;
    c.criterion = Criterion::NoKMatching;
    c.k = k;
    c.note = "no matching of size k";
    return c;
}

}  // namespace

Verdict is_k_extendable_definitional(const Graph& g, int k, int limit) {
    require_extendability_input(g, k, limit);
    const MaskMatcher mm(g);
    const std::uint64_t all = full_mask(g.order());
    const auto edges = g.edges();

    std::vector<Edge> chosen;
    bool any = false;
    std::optional<Certificate> failure;
    std::function<bool(std::size_t, std::uint64_t)> walk = [&](std::size_t from, std::uint64_t used) {
        if (static_cast<int>(chosen.size()) == k) {
            any = true;
            if (mm.has_perfect_matching(all & ~used)) return false;
            Certificate c;
            c.kind = CertificateKind::FailingMatching;
            c.criterion = Criterion::Extension;
            c.k = k;
            c.edges = chosen;
            failure = std::move(c);
            return true;
        }
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            const std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (used & bits) continue;
            chosen.push_back(edges[i]);
            if (walk(i + 1, used | bits)) return true;
            chosen.pop_back();
        }
        return false;
    };
    walk(0, 0);
    if (failure) return {false, std::move(failure)};
    if (!any) return {false, no_k_matching(k)};
    return {true, std::nullopt};
}

Verdict is_k_extendable_chen(const Graph& g, int k, int limit) {
    require_extendability_input(g, k, limit);
    const int n = g.order();
    const MaskMatcher mm(g);
    const std::uint64_t all = full_mask(n);
    if (mm.max_matching_size(all) < k) return {false, no_k_matching(k)};
    std::vector<Edge> inside;
    for (std::uint64_t s = 0; s <= all; ++s) {
        const int size = std::popcount(s);
        const int bound = size - 2 * k;
        if (bound < 0 || n - size <= bound) {
            if (s == all) break;
            continue;
        }
        if (mm.odd_components(all & ~s) > bound && mm.find_k_matching(s, k, inside)) {
            Certificate c;
            c.kind = CertificateKind::ViolatingSetS;
            c.criterion = Criterion::Chen;
            c.k = k;
            c.vertices = VertexSet::from_mask(s).members();
            c.edges = inside;
            return {false, std::move(c)};
        }
        if (s == all) break;
    }
    return {true, std::nullopt};
}

namespace {

struct SidedView {
    std::vector<Vertex> a, b;
    std::vector<int> local;  // index within its side
};

SidedView sided_view(const Graph& g) {
    SidedView v;
    v.local.assign(g.order(), -1);
    for (Vertex x = 0; x < g.order(); ++x) {
        auto& side = g.side(x) == Side::A ? v.a : v.b;
        v.local[x] = static_cast<int>(side.size());
        side.push_back(x);
    }
    return v;
}

Certificate plummer_certificate(int k, std::vector<Vertex> x) {
    Certificate c;
    c.kind = CertificateKind::ViolatingSubsetX;
    c.criterion = Criterion::Plummer;
    c.k = k;
    c.vertices = std::move(x);
    return c;
}

std::optional<Verdict> plummer_trivial(const Graph& g, const SidedView& view, int k) {
    if (view.a.size() != view.b.size()) {
        Certificate c;
        c.kind = CertificateKind::ViolatingSubsetX;
        c.criterion = Criterion::SideBalance;
        c.k = k;
        c.note = "|A|=" + std::to_string(view.a.size()) + " |B|=" + std::to_string(view.b.size());
        return Verdict{false, std::move(c)};
    }
    const int half = static_cast<int>(view.a.size());
    if (k >= half) {
        // No X satisfies 1 <= |X| <= |A| - k; decide by matching size directly.
        const bool ok = k == half && 2 * max_matching_bipartite(g).size() == static_cast<std::size_t>(g.order());
        if (ok) return Verdict{true, std::nullopt};
        return Verdict{false, no_k_matching(k)};
    }
    return std::nullopt;
}

Verdict plummer_enumerate(const Graph& g, const SidedView& view, int k, int limit) {
    if (auto t = plummer_trivial(g, view, k)) return *t;
    const int half = static_cast<int>(view.a.size());
    if (half > limit || half > 63) throw GraphError("side too large for subset enumeration");
    std::vector<std::uint64_t> nb(half, 0);
    for (int i = 0; i < half; ++i)
        for (Vertex y : g.neighbors(view.a[i])) nb[i] |= std::uint64_t{1} << view.local[y];

    int best_surplus = std::numeric_limits<int>::max();
    std::uint64_t best = 0;
    const std::uint64_t top = std::uint64_t{1} << half;
    for (std::uint64_t x = 1; x < top; ++x) {
        const int size = std::popcount(x);
        if (size > half - k) continue;
        std::uint64_t n = 0;
        for (std::uint64_t b = x; b; b &= b - 1) n |= nb[std::countr_zero(b)];
        const int surplus = std::popcount(n) - size;
        if (surplus < k && surplus < best_surplus) {
            best_surplus = surplus;
            best = x;
        }
    }
    if (best == 0) return {true, std::nullopt};
    std::vector<Vertex> xs;
    for (std::uint64_t b = best; b; b &= b - 1) xs.push_back(view.a[std::countr_zero(b)]);
    return {false, plummer_certificate(k, std::move(xs))};
}

Verdict plummer_surplus(const Graph& g, const SidedView& view, int k) {
    if (auto t = plummer_trivial(g, view, k)) return *t;
    const int half = static_cast<int>(view.a.size());
    for (Vertex a : view.a) {
        for (Vertex b : view.b) {
            if (g.adjacent(a, b)) continue;
            // Largest independent set containing a and b lives in G - N(a) - N(b).
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < g.order(); ++v) {
                const bool drop = g.side(v) == Side::A ? g.adjacent(v, b) : g.adjacent(v, a);
                if (!drop) keep.push_back(v);
            }
            const VertexSet kept(keep);
            const Graph h = g.induced(kept);
            const Matching m = max_matching_bipartite(h);
            const int independent = h.order() - static_cast<int>(m.size());
            if (independent < half - k + 1) continue;

            // Koenig: alternating reachability from exposed A vertices.
            std::vector<int> mate(h.order(), -1);
            for (auto [u, v] : m.edges) {
                mate[u] = v;
                mate[v] = u;
            }
            std::vector<bool> reach(h.order(), false);
            std::vector<Vertex> stack;
            for (Vertex v = 0; v < h.order(); ++v)
                if (h.side(v) == Side::A && mate[v] == -1) {
                    reach[v] = true;
                    stack.push_back(v);
                }
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : h.neighbors(v)) {
                    if (reach[w]) continue;
                    reach[w] = true;
                    if (mate[w] != -1 && !reach[mate[w]]) {
                        reach[mate[w]] = true;
                        stack.push_back(mate[w]);
                    }
                }
            }
            std::vector<Vertex> xs;
            for (Vertex v = 0; v < h.order(); ++v)
                if (h.side(v) == Side::A && reach[v]) xs.push_back(keep[v]);
            if (static_cast<int>(xs.size()) > half - k) xs.resize(half - k);
            return {false, plummer_certificate(k, std::move(xs))};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

Verdict is_k_extendable_plummer(const Graph& g, int k, PlummerMethod method, int limit) {
    if (!g.has_bipartition()) throw GraphError("Plummer's criterion needs a bipartition");
    if (k < 1) throw GraphError("extendability needs k >= 1");
    const SidedView view = sided_view(g);
    switch (method) {
        case PlummerMethod::Enumeration: return plummer_enumerate(g, view, k, limit);
        case PlummerMethod::Surplus: return plummer_surplus(g, view, k);
        case PlummerMethod::Auto: break;
    }
    if (static_cast<int>(view.a.size()) > limit) return plummer_surplus(g, view, k);
    Verdict e = plummer_enumerate(g, view, k, limit);
    Verdict s = plummer_surplus(g, view, k);
    if (e.holds != s.holds) throw std::logic_error("Plummer enumeration and surplus routes disagree");
    return e;
}

}  // namespace xspec
