#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xspec/graph.hpp"
#include "xspec/spectra.hpp"

namespace xspec {

/// Extremal families, with stable identifiers.
enum class Family {
    KextGeneral,       // "kext-general":       K_d + (K_{n-2d+2k-1} u (d-2k+1)K_1)
    KextBipartite,     // "kext-bipartite":     K_{s,s+k+1} bipartite-joined with K_{n/2-s, n/2-s-k-1}
    KfactorBipartite,  // "kfactor-bipartite":  K_{n/2,n/2} minus the edges of K_{1,n/2-k+1}
    KfcGeneral,        // "kfc-general":        K_d + (K_{n-2d+k-1} u (d-k+1)K_1)
    HamiltonBipartite, // "hamilton-bipartite": K_{n/2,n/2} minus the edges of K_{1,n/2-1}
};

std::string_view to_string(Family f);
/// Throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);

struct FamilyParams {
    int n = 0;
    int k = 0;
    int delta = 0;  // minimum degree, general families
    int s = 0;      // small side of the left block, bipartite k-extendable family
};

/// Parameters that violate a family's hypotheses. The message names the
/// failed inequality.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Graph extremal_kext_general(int n, int k, int delta);
Graph extremal_kext_bipartite(int n, int k, int s);
Graph extremal_kfactor(int n, int k);
Graph extremal_kfc(int n, int k, int delta);
Graph extremal_hamilton(int n);

Graph construct(Family f, const FamilyParams& p);

/// max{8d - 10k + 4, d (d - 2k)^2 + d - 1}; requires k >= 1 and d >= 2k.
std::int64_t threshold_F(std::int64_t k, std::int64_t delta);

/// Canonical equitable partition of the constructed member, in quotient order:
/// join families (join set, clique, independent set); kext-bipartite
/// (X1, X2, Y1, Y2); kfactor/hamilton ({u}, A-u, N(u), B-N(u)).
Partition family_partition(Family f, const FamilyParams& p);
QuotientMatrix family_quotient(Family f, const FamilyParams& p);

struct Threshold {
    double rho_star = 0.0;        // largest eigenvalue of the family quotient
    QuotientMatrix source;
    double margin_tol = 1e-8;
    double dense_rho = 0.0;       // spectral radius of the constructed graph
};

/// rho* from the small quotient, cross-checked against the dense spectral
/// radius; std::runtime_error if they differ by more than margin_tol.
Threshold threshold_rho(Family f, const FamilyParams& p, double margin_tol = 1e-8);

/// True iff g is isomorphic to construct(f, p); false for invalid params.
bool recognize(Family f, const FamilyParams& p, const Graph& g);

}  // namespace xspec
