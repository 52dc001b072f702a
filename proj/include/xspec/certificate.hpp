#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xspec/graph.hpp"
#include "xspec/matching.hpp"

namespace xspec {

enum class CertificateKind {
    ViolatingSetS,
    ViolatingSubsetX,
    FactorSubgraph,
    MatchingList,
    HamCycle,
    FailingMatching,
};

std::string_view to_string(CertificateKind kind);

/// Which claim a certificate witnesses; drives revalidation.
enum class Criterion {
    Chen,            // o(G-S) > |S| - 2k with k independent edges in G[S]
    FavaronYu,       // o(G-S) > |S| - k with |S| >= k
    Plummer,         // |N(X)| < |X| + k, 1 <= |X| <= |A| - k
    SideBalance,     // |A| != |B|
    Ore,             // sum_X f > sum_{N(X)} min(f(y), d_X(y)), or unequal side sums
    Extension,       // size-k matching whose removal leaves no perfect matching
    NoKMatching,     // the graph has no matching of size k
    Factor,          // spanning subgraph with d_H(v) = f(v)
    Decomposition,   // edge-disjoint perfect matchings covering E(H)
    Hamiltonian,     // vertex order of a spanning cycle
};

std::string_view to_string(Criterion c);

struct Certificate {
    CertificateKind kind = CertificateKind::ViolatingSetS;
    Criterion criterion = Criterion::Chen;
    int k = 0;
    std::vector<Vertex> vertices;      // S, X, or the cycle order
    std::vector<Edge> edges;           // matching inside G[S], failing matching, or factor edges
    std::vector<Matching> matchings;   // MatchingList payload
    std::vector<Vertex> y1, y2;        // split of N(X): d_X(y) >= f(y) / < f(y)
    std::vector<int> targets;          // f, for Ore and Factor certificates
    std::string note;
};

/// Rechecks the witness against g from scratch (no checker code paths).
bool revalidate(const Graph& g, const Certificate& c);

/// {"kind": ..., "payload": {...}} as compact JSON text.
std::string to_json(const Certificate& c);

struct Verdict {
    bool holds = false;
    std::optional<Certificate> certificate;
};

}  // namespace xspec
