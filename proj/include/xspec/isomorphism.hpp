#pragma once

#include <vector>

#include "xspec/graph.hpp"

namespace xspec {

inline constexpr int kIsomorphismMaxOrder = 16;

/// Exact isomorphism test by backtracking, pruned by degree and by the
/// multiset of neighbor degrees. Throws GraphError above kIsomorphismMaxOrder.
bool isomorphic_small(const Graph& g, const Graph& h);

/// Twin classes: u ~ v iff N(u) \ {v} == N(v) \ {u}. Each class of size
/// >= 2 is a clique (true twins) or an independent set (false twins), and
/// any two classes are joined completely or not at all, so the graph is
/// recovered up to isomorphism from its TwinQuotient.
struct TwinQuotient {
    std::vector<VertexSet> classes;   // ordered by smallest member
    std::vector<bool> clique;         // class induces a clique (size-1 classes: false)
    std::vector<std::vector<bool>> joined;
};

TwinQuotient twin_quotient(const Graph& g);

/// Exact isomorphism via twin quotients. Quotients with different class
/// counts are non-isomorphic; equal counts above `max_classes` throw.
bool isomorphic_by_twins(const Graph& g, const Graph& h, int max_classes = 8);

}  // namespace xspec
