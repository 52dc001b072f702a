import json
import math
import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

import xspec


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_graph6_matches_networkx():
    rng = random.Random(3)
    for n in (1, 2, 5, 12, 40, 70):
        h = nx.gnp_random_graph(n, 0.4, seed=rng.randrange(10**6))
        g = xspec.Graph(n, list(h.edges()))
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert g.graph6() == expected
        assert xspec.Graph.from_graph6(expected) == g


def test_bad_graph6_raises():
    with pytest.raises(ValueError):
        xspec.Graph.from_graph6("C")


def test_spectral_radius_matches_numpy():
    rng = random.Random(5)
    for _ in range(20):
        h = nx.gnp_random_graph(12, 0.5, seed=rng.randrange(10**6))
        g = xspec.Graph(12, list(h.edges()))
        top = max(np.linalg.eigvalsh(nx.to_numpy_array(h)))
        assert abs(xspec.spectral_radius(g) - top) < 1e-8
        assert np.allclose(sorted(xspec.spectrum(g)), sorted(np.linalg.eigvalsh(nx.to_numpy_array(h))), atol=1e-9)


def test_family_thresholds():
    g = xspec.construct("kfactor-bipartite", 8, k=2)
    assert [g.degree(v) for v in range(8)] == [1, 4, 4, 4, 3, 3, 3, 4]
    assert abs(xspec.threshold_rho("kfactor-bipartite", 8, k=2) - math.sqrt((13 + math.sqrt(133)) / 2)) < 1e-10
    assert xspec.bipartite_family_charpoly(10, 1, 1) == (Fraction(1), Fraction(-13), Fraction(24))
    assert xspec.threshold_F(1, 2) == 10
    with pytest.raises(ValueError):
        xspec.construct("kfactor-bipartite", 8, k=4)


def test_checkers_agree_with_networkx():
    g = xspec.construct("kext-general", 10, k=1, delta=2)
    holds, cert = xspec.k_extendable(g, 1, method="chen")
    assert not holds
    assert json.loads(cert)["payload"]["vertices"] == [0, 1]
    assert xspec.max_matching_size(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    h = xspec.construct("hamilton-bipartite", 8)
    assert not xspec.hamiltonian(h)[0]
    assert xspec.hamiltonian(xspec.construct("kfactor-bipartite", 10, k=4))[0]
    assert not xspec.k_factor(xspec.construct("kfactor-bipartite", 8, k=2), 2)[0]
    assert not xspec.k_factor_critical(xspec.construct("kfc-general", 15, k=1, delta=2), 1)[0]


def test_recognize_relabeled():
    g = xspec.construct("kext-general", 10, k=1, delta=2)
    perm = list(range(10))
    random.Random(1).shuffle(perm)
    relabeled = xspec.Graph(10, [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()])
    assert xspec.recognize("kext-general", relabeled, 10, k=1, delta=2)
    assert nx.is_isomorphic(to_nx(g), to_nx(relabeled))


def test_run_verify_and_scan():
    code, text = xspec.run("verify", theorem="t1.3", n=8, k=2, samples=200, seed=7)
    report = json.loads(text)
    assert code == 0
    assert report["summary"]["counterexample"] == 0
    assert report["columns"] == ["graph", "rho", "rho_star", "margin", "verdict", "certificate", "extremal"]
    code, _ = xspec.run("scan", theorem="t1.3", n=8, k=2, input="")
    assert code == 0
    code, text = xspec.run("construct", family="kext-general", n=10, k=1, delta=2)
    assert code == 0 and xspec.Graph.from_graph6(text.strip()).order == 10
    with pytest.raises(ValueError):
        xspec.run("verify", theorem="t1.3", n=8, k=4)
