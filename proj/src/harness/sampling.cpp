#include <algorithm>
#include <istream>
#include <numeric>

#include "internal.hpp"

namespace xspec::harness::detail {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Mutable adjacency matrix used while editing random graphs.
class Editor {
public:
    explicit Editor(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_) * n_, 0) {
        if (g.has_bipartition()) sides_ = g.sides();
        for (auto [u, v] : g.edges()) set(u, v, true);
    }
    Editor(int n, std::optional<std::vector<Side>> sides)
        : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), sides_(std::move(sides)) {}

    [[nodiscard]] bool has(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    void set(int u, int v, bool on) {
        adj_[static_cast<std::size_t>(u) * n_ + v] = on;
        adj_[static_cast<std::size_t>(v) * n_ + u] = on;
    }
    [[nodiscard]] bool allowed(int u, int v) const {
        return u != v && (!sides_ || (*sides_)[u] != (*sides_)[v]);
    }
    [[nodiscard]] int degree(int v) const {
        int d = 0;
        for (int w = 0; w < n_; ++w) d += has(v, w) ? 1 : 0;
        return d;
    }
    [[nodiscard]] int order() const { return n_; }

    [[nodiscard]] Graph build() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has(u, v)) edges.emplace_back(u, v);
        return Graph(n_, edges, sides_);
    }

private:
    int n_;
    std::vector<std::uint8_t> adj_;
    std::optional<std::vector<Side>> sides_;
};

}  // namespace

Rng rng_for(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

Graph random_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Editor e(n, std::nullopt);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.set(u, v, true);
    return e.build();
}

Graph random_bipartite(Rng& rng, int a, int b, double p) {
    std::vector<Side> sides(a + b, Side::B);
    std::fill(sides.begin(), sides.begin() + a, Side::A);
    std::bernoulli_distribution coin(p);
    Editor e(a + b, sides);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (coin(rng)) e.set(u, v, true);
    return e.build();
}

Graph force_min_degree(Rng& rng, const Graph& g, int delta) {
    Editor e(g);
    const int n = e.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int v = 0; v < n; ++v) {
        std::shuffle(order.begin(), order.end(), rng);
        for (int w : order) {
            if (e.degree(v) >= delta) break;
            if (e.allowed(v, w) && !e.has(v, w)) e.set(v, w, true);
        }
    }
    int low = n;
    for (int v = 0; v < n; ++v) low = std::min(low, e.degree(v));
    if (low > delta) {
        const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        std::shuffle(order.begin(), order.end(), rng);
        for (int w : order) {
            if (e.degree(v) <= delta) break;
            if (e.has(v, w) && e.degree(w) > delta) e.set(v, w, false);
        }
    }
    return e.build();
}

Graph perturb(Rng& rng, const Graph& g, int max_edits) {
    Editor e(g);
    const int n = e.order();
    const int edits = std::uniform_int_distribution<int>(1, max_edits)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int done = 0; done < edits;) {
        const int u = pick(rng), v = pick(rng);
        if (!e.allowed(u, v)) continue;
        e.set(u, v, !e.has(u, v));
        ++done;
    }
    return e.build();
}

Graph random_regular_bipartite(Rng& rng, int half, int k) {
    if (k < 0 || k > half) throw std::invalid_argument("regular bipartite graph needs 0 <= k <= half");
    std::vector<Side> sides(2 * half, Side::B);
    std::fill(sides.begin(), sides.begin() + half, Side::A);
    Editor e(2 * half, sides);
    std::vector<Edge> edges;
    for (int a = 0; a < half; ++a)
        for (int j = 0; j < k; ++j) {
            edges.emplace_back(a, half + (a + j) % half);
            e.set(edges.back().first, edges.back().second, true);
        }
    if (edges.size() >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const std::size_t switches = 10 * edges.size();
        for (std::size_t done = 0; done < switches; ++done) {
            auto& [a1, b1] = edges[pick(rng)];
            auto& [a2, b2] = edges[pick(rng)];
            if (a1 == a2 || b1 == b2 || e.has(a1, b2) || e.has(a2, b1)) continue;
            e.set(a1, b1, false);
            e.set(a2, b2, false);
            e.set(a1, b2, true);
            e.set(a2, b1, true);
            std::swap(b1, b2);
        }
    }
    return e.build();
}

std::optional<Graph> balanced_bipartition(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) return std::nullopt;
    if (g.has_bipartition() && g.side_set(Side::A).size() * 2 == static_cast<std::size_t>(n)) return g;
    auto coloring = two_coloring(g);
    if (!coloring) return std::nullopt;
    const auto comps = components(g);
    // reach[i][t]: choice over the first i components reaches t vertices on side A.
    const std::size_t c = comps.size();
    std::vector<std::vector<char>> reach(c + 1, std::vector<char>(n + 1, 0));
    std::vector<int> count_a(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (Vertex v : comps[i]) count_a[i] += (*coloring)[v] == Side::A ? 1 : 0;
    reach[0][0] = 1;
    for (std::size_t i = 0; i < c; ++i) {
        const int keep = count_a[i], flip = static_cast<int>(comps[i].size()) - count_a[i];
        for (int t = 0; t <= n; ++t) {
            if (!reach[i][t]) continue;
            if (t + keep <= n) reach[i + 1][t + keep] = 1;
            if (t + flip <= n) reach[i + 1][t + flip] = 1;
        }
    }
    if (!reach[c][n / 2]) return std::nullopt;
    std::vector<Side> sides = *coloring;
    int t = n / 2;
    for (std::size_t i = c; i-- > 0;) {
        const int keep = count_a[i];
        if (t - keep >= 0 && reach[i][t - keep]) {
            t -= keep;
            continue;
        }
        for (Vertex v : comps[i]) sides[v] = sides[v] == Side::A ? Side::B : Side::A;
        t -= static_cast<int>(comps[i].size()) - keep;
    }
    return g.with_bipartition(std::move(sides));
}

std::vector<InputLine> read_graph_lines(std::istream& in) {
    std::vector<InputLine> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back({out.size(), line.substr(start)});
    }
    return out;
}

int require_param(const std::optional<int>& v, const char* name) {
    if (!v) throw UsageError(std::string("missing parameter --") + name);
    return *v;
}

}  // namespace xspec::harness::detail
