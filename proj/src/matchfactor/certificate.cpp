#include "xspec/certificate.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace xspec {

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::ViolatingSetS: return "ViolatingSetS";
        case CertificateKind::ViolatingSubsetX: return "ViolatingSubsetX";
        case CertificateKind::FactorSubgraph: return "FactorSubgraph";
        case CertificateKind::MatchingList: return "MatchingList";
        case CertificateKind::HamCycle: return "HamCycle";
        case CertificateKind::FailingMatching: return "FailingMatching";
    }
    return "?";
}

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::Chen: return "chen";
        case Criterion::FavaronYu: return "favaron-yu";
        case Criterion::Plummer: return "plummer";
        case Criterion::SideBalance: return "side-balance";
        case Criterion::Ore: return "ore";
        case Criterion::Extension: return "extension";
        case Criterion::NoKMatching: return "no-k-matching";
        case Criterion::Factor: return "factor";
        case Criterion::Decomposition: return "decomposition";
        case Criterion::Hamiltonian: return "hamiltonian";
    }
    return "?";
}

namespace {

bool in_range(const Graph& g, const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 0 && v < g.order(); });
}

bool is_set(const std::vector<Vertex>& vs) {
    return std::set<Vertex>(vs.begin(), vs.end()).size() == vs.size();
}

Graph with_sides(const Graph& g) { return g.has_bipartition() ? g : ensure_bipartition(g); }

std::size_t max_matching(const Graph& g) {
    if (auto sides = two_coloring(g)) return max_matching_bipartite(g.with_bipartition(*sides)).size();
    return max_matching_general(g, 64).size();
}

bool check_ore(const Graph& g, const Certificate& c) {
    if (static_cast<int>(c.targets.size()) != g.order()) return false;
    const Graph b = with_sides(g);
    if (c.note == "sum-mismatch") {
        long sa = 0, sb = 0;
        for (Vertex v = 0; v < g.order(); ++v) (b.side(v) == Side::A ? sa : sb) += c.targets[v];
        return sa != sb;
    }
    if (c.vertices.empty() || !in_range(g, c.vertices) || !is_set(c.vertices)) return false;
    const Side side = b.side(c.vertices.front());
    for (Vertex x : c.vertices)
        if (b.side(x) != side) return false;
    const VertexSet x(c.vertices);
    long lhs = 0;
    for (Vertex v : x) lhs += c.targets[v];
    long rhs = 0;
    for (Vertex y : neighborhood(g, x)) {
        long dx = 0;
        for (Vertex w : g.neighbors(y)) dx += x.contains(w) ? 1 : 0;
        rhs += std::min<long>(c.targets[y], dx);
    }
    return lhs > rhs;
}

}  // namespace

bool revalidate(const Graph& g, const Certificate& c) {
    try {
        switch (c.criterion) {
            case Criterion::Chen: {
                if (!in_range(g, c.vertices) || !is_set(c.vertices)) return false;
                const VertexSet s(c.vertices);
                Matching m{c.edges};
                if (static_cast<int>(m.size()) != c.k || !is_matching(g, m)) return false;
                for (auto [u, v] : m.edges)
                    if (!s.contains(u) || !s.contains(v)) return false;
                return odd_component_count(g, s) > static_cast<int>(s.size()) - 2 * c.k;
            }
            case Criterion::FavaronYu: {
                if (!in_range(g, c.vertices) || !is_set(c.vertices)) return false;
                const VertexSet s(c.vertices);
                if (static_cast<int>(s.size()) < c.k) return false;
                return odd_component_count(g, s) > static_cast<int>(s.size()) - c.k;
            }
            case Criterion::Plummer: {
                const Graph b = with_sides(g);
                if (c.vertices.empty() || !in_range(g, c.vertices) || !is_set(c.vertices)) return false;
                const int side_a = static_cast<int>(b.side_set(Side::A).size());
                for (Vertex x : c.vertices)
                    if (b.side(x) != Side::A) return false;
                const VertexSet x(c.vertices);
                if (static_cast<int>(x.size()) > side_a - c.k) return false;
                return neighborhood(g, x).size() < x.size() + static_cast<std::size_t>(c.k);
            }
            case Criterion::SideBalance: {
                const Graph b = with_sides(g);
                return b.side_set(Side::A).size() != b.side_set(Side::B).size();
            }
            case Criterion::Ore: return check_ore(g, c);
            case Criterion::Extension: {
                Matching m{c.edges};
                if (static_cast<int>(m.size()) != c.k || !is_matching(g, m)) return false;
                std::vector<Vertex> used;
                for (auto [u, v] : m.edges) {
                    used.push_back(u);
                    used.push_back(v);
                }
                const Graph rest = g.without_vertices(VertexSet(used));
                return 2 * max_matching(rest) < static_cast<std::size_t>(rest.order());
            }
            case Criterion::NoKMatching: return max_matching(g) < static_cast<std::size_t>(c.k);
            case Criterion::Factor: {
                if (static_cast<int>(c.targets.size()) != g.order()) return false;
                std::vector<int> deg(g.order(), 0);
                std::set<Edge> seen;
                for (auto [u, v] : c.edges) {
                    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
                    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
                    ++deg[u];
                    ++deg[v];
                }
                return deg == c.targets;
            }
            case Criterion::Decomposition: {
                std::set<Edge> seen;
                for (const auto& m : c.matchings) {
                    if (!is_perfect_matching(g, m)) return false;
                    for (auto [u, v] : m.edges)
                        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
                }
                return seen.size() == g.size() && static_cast<int>(c.matchings.size()) == c.k;
            }
            case Criterion::Hamiltonian: {
                const auto& cyc = c.vertices;
                if (g.order() < 3 || static_cast<int>(cyc.size()) != g.order()) return false;
                if (!in_range(g, cyc) || !is_set(cyc)) return false;
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
                return true;
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

std::string to_json(const Certificate& c) {
    nlohmann::json payload;
    payload["criterion"] = std::string(to_string(c.criterion));
    payload["k"] = c.k;
    payload["vertices"] = c.vertices;
    auto edge_list = [](const std::vector<Edge>& es) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [u, v] : es) arr.push_back({u, v});
        return arr;
    };
    payload["edges"] = edge_list(c.edges);
    if (!c.matchings.empty()) {
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& m : c.matchings) ms.push_back(edge_list(m.edges));
        payload["matchings"] = ms;
    }
    if (!c.y1.empty() || !c.y2.empty()) {
        payload["y1"] = c.y1;
        payload["y2"] = c.y2;
    }
    if (!c.targets.empty()) payload["targets"] = c.targets;
    if (!c.note.empty()) payload["note"] = c.note;
    nlohmann::json j;
    j["kind"] = std::string(to_string(c.kind));
    j["payload"] = payload;
    return j.dump();
}

}  // namespace xspec
