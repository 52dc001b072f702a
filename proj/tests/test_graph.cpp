#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xspec/graph.hpp"
#include "xspec/graph6.hpp"
#include "xspec/isomorphism.hpp"

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

}  // namespace

TEST_CASE("graph construction rejects malformed edge lists") {
    const std::vector<Edge> loop{{1, 1}}, dup{{0, 1}, {1, 0}}, range{{0, 5}};
    CHECK_THROWS_AS(Graph(3, loop), GraphError);
    CHECK_THROWS_AS(Graph(3, dup), GraphError);
    CHECK_THROWS_AS(Graph(3, range), GraphError);
    const std::vector<Edge> inside{{0, 1}};
    CHECK_THROWS_AS(Graph(2, inside, std::vector<Side>{Side::A, Side::A}), GraphError);
}

TEST_CASE("complete graphs") {
    CHECK(complete(0).order() == 0);
    CHECK(complete(1).size() == 0);
    CHECK(complete(4).size() == 6);
    CHECK(complete(4).min_degree() == 3);
}

TEST_CASE("complete bipartite graphs") {
    CHECK(isomorphic_small(complete_bipartite(2, 2), cycle(4)));
    CHECK(complete_bipartite(4, 4).size() == 16);
    const Graph star = complete_bipartite(1, 3);
    CHECK(star.degree(0) == 3);
    CHECK(star.side(0) == Side::A);
    CHECK(star.side_set(Side::B).size() == 3);
}

TEST_CASE("join and disjoint union") {
    const Graph inner = disjoint_union(complete(7), complete(1));
    CHECK(inner.size() == 21);
    const Graph g = join(complete(2), inner);
    CHECK(g.order() == 10);
    CHECK(g.min_degree() == 2);
    CHECK(join(complete(1), complete(1)) == complete(2));
    CHECK(join(empty_graph(0), g) == g);
    CHECK(disjoint_union(g, empty_graph(0)) == g);
    CHECK(disjoint_union(empty_graph(1), empty_graph(2)).size() == 0);
}

TEST_CASE("bipartite join") {
    const Graph g = bipartite_join(complete_bipartite(1, 3), complete_bipartite(4, 2));
    CHECK(g.order() == 10);
    CHECK(g.size() == 13);
    CHECK(g.degree(0) == 5);
    CHECK(g.has_bipartition());
    const Graph h = complete_bipartite(2, 3);
    const Graph empty_b(0, std::vector<Edge>{}, std::vector<Side>{});
    CHECK(bipartite_join(h, empty_b) == h);
}

TEST_CASE("remove_star") {
    const Graph k44 = complete_bipartite(4, 4);
    const Graph g = remove_star(k44, 0, 3);
    CHECK(g.degree(0) == 1);
    CHECK(g.size() == 13);
    CHECK(remove_star(k44, 0, 0) == k44);
    CHECK(remove_star(complete_bipartite(5, 5), 0, 4).size() == 21);
}

TEST_CASE("odd components") {
    const Graph g = join(complete(2), disjoint_union(complete(7), complete(1)));
    CHECK(odd_component_count(g, VertexSet({0, 1})) == 2);
    CHECK(odd_component_count(g, VertexSet::range(0, 10)) == 0);
    CHECK(odd_component_count(complete(4), VertexSet{}) == 0);
}

TEST_CASE("neighborhoods") {
    const Graph g = join(complete(1), path(4));
    CHECK(neighborhood(g, VertexSet({0})) == VertexSet::range(1, 5));
    CHECK(neighborhood(g, VertexSet{}).empty());
    // X1 = {0}, Y1 = {1,2,3}, X2 = {4..7}, Y2 = {8,9}.
    const Graph b = bipartite_join(complete_bipartite(1, 3), complete_bipartite(4, 2));
    CHECK(neighborhood(b, VertexSet::range(4, 8)) == VertexSet::range(8, 10));
}

TEST_CASE("edge counts") {
    CHECK(edge_counts(complete(6), VertexSet::range(0, 4), VertexSet{}).inside == 6);
    const Graph k = complete_bipartite(3, 4);
    CHECK(edge_counts(k, VertexSet::range(0, 3), VertexSet::range(3, 7)).across == 12);
    CHECK_THROWS_AS(edge_counts(k, VertexSet({0, 1}), VertexSet({1, 2})), GraphError);

    // Degree-1 vertex u = 0 of K_{4,4} minus a 3-edge star: N(u) = {7}.
    const Graph g = remove_star(complete_bipartite(4, 4), 0, 3);
    const VertexSet nu = neighborhood(g, VertexSet({0}));
    CHECK(nu == VertexSet({7}));
    const auto counts = edge_counts(g, nu, VertexSet({1, 2, 3, 4, 5, 6}));
    CHECK(counts.inside == 0);
    CHECK(counts.across == 3);
}

TEST_CASE("connectivity and two-coloring") {
    CHECK(is_connected(path(5)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(components(disjoint_union(complete(3), complete(2))).size() == 2);
    CHECK(two_coloring(cycle(6)).has_value());
    CHECK_FALSE(two_coloring(cycle(5)).has_value());
    CHECK_THROWS_AS(ensure_bipartition(complete(3)), GraphError);
    const auto colored = ensure_bipartition(cycle(6));
    CHECK(colored.side_set(Side::A).size() == 3);
}

TEST_CASE("relabel, induce and toggle") {
    const Graph g = path(4);
    const std::vector<Vertex> perm{3, 2, 1, 0};
    CHECK(g.relabeled(perm) == g);
    CHECK(g.induced(VertexSet({0, 1, 2})).size() == 2);
    CHECK(g.without_vertices(VertexSet({1})).size() == 1);
    CHECK(g.with_edge_toggled(0, 3).size() == 4);
    CHECK(g.with_edge_toggled(0, 1).size() == 2);
}

TEST_CASE("graph6 known encodings") {
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_encode(empty_graph(1)) == "@");
    CHECK(graph6_encode(empty_graph(0)) == "?");
    CHECK(graph6_encode(complete(4)) == "C~");
    CHECK(graph6_encode(path(3)) == "Bg");
    CHECK(graph6_encode(cycle(8)) == "GhCGKC");
    CHECK(graph6_encode(complete_bipartite(4, 4)) == "G?~vf_");
    const std::vector<Edge> sparse{{0, 1}, {2, 9}, {5, 7}};
    CHECK(graph6_encode(Graph(10, sparse)) == "I_???G?G?");
    const std::string p70 = graph6_encode(path(70));
    CHECK(p70.size() == 407);
    CHECK(p70.rfind("~?@E", 0) == 0);
}

TEST_CASE("graph6 decoding") {
    CHECK(graph6_decode("Bw") == complete(3));
    CHECK(graph6_decode("C~\r\n") == complete(4));
    CHECK(graph6_decode("?").order() == 0);
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);       // truncated
    CHECK_THROWS_AS(graph6_decode("C~~"), Graph6Error);     // trailing data
    CHECK_THROWS_AS(graph6_decode("B\x7f"), Graph6Error);   // byte out of range
    CHECK_THROWS_AS(graph6_decode("Bx"), Graph6Error);      // nonzero padding bits
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int n : {0, 1, 2, 5, 31, 62, 63, 64, 100}) {
        for (int rep = 0; rep < 5; ++rep) {
            const Graph g = oracle::random_graph(rng, n, 0.4);
            CHECK(graph6_decode(graph6_encode(g)) == g.without_bipartition());
        }
    }
}

TEST_CASE("small isomorphism") {
    const Graph g = remove_star(complete_bipartite(4, 4), 0, 3);
    CHECK(isomorphic_small(g, g));
    CHECK_FALSE(isomorphic_small(complete_bipartite(3, 3), cycle(6)));
    std::mt19937_64 rng(3);
    const auto perm = oracle::random_permutation(rng, g.order());
    CHECK(isomorphic_small(g, g.relabeled(perm)));
    CHECK_THROWS_AS(isomorphic_small(complete(17), complete(17)), GraphError);
}

TEST_CASE("isomorphism tests agree with brute force") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        Graph h = oracle::random_graph(rng, n, 0.5);
        if (rep % 2 == 0) h = g.relabeled(oracle::random_permutation(rng, n));
        const bool expected = oracle::isomorphic(g, h);
        CHECK(isomorphic_small(g, h) == expected);
        CHECK(isomorphic_by_twins(g, h, 8) == expected);
    }
}
