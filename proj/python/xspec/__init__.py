"""Spectral thresholds for matching extension, factors and Hamiltonicity."""

from ._core import (
    Graph,
    Graph6Error,
    GraphError,
    HypothesisError,
    UsageError,
    bipartite_family_charpoly,
    construct,
    fms_bound,
    hamiltonian,
    isomorphic,
    k_extendable,
    k_factor,
    k_factor_critical,
    k_factor_ore,
    max_matching_size,
    recognize,
    run,
    spectral_radius,
    spectrum,
    sqrt_m_bound,
    threshold_F,
    threshold_rho,
)

__all__ = [
    "Graph",
    "Graph6Error",
    "GraphError",
    "HypothesisError",
    "UsageError",
    "bipartite_family_charpoly",
    "construct",
    "fms_bound",
    "hamiltonian",
    "isomorphic",
    "k_extendable",
    "k_factor",
    "k_factor_critical",
    "k_factor_ore",
    "max_matching_size",
    "recognize",
    "run",
    "spectral_radius",
    "spectrum",
    "sqrt_m_bound",
    "threshold_F",
    "threshold_rho",
]
