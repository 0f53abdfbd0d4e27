import itertools

import numpy as np
import pytest
from scipy.sparse.csgraph import connected_components

from grouptrees import spectra as sp
from grouptrees.graphs import (
    Graph,
    are_isomorphic,
    commuting_graph,
    edge_count,
    graph_from_edges,
    power_graph,
)
from grouptrees.groups import build_group, catalog
from grouptrees.structure import cyclic_subgroups, power_commuting_characterization, power_equals_commuting


def _brute_power_edges(G):
    """Edge count straight from the definition, by listing powers."""
    powers = []
    for g in range(G.order):
        seen, x = {0}, g
        while x != 0:
            seen.add(x)
            x = G.mult(x, g)
        powers.append(seen)
    return sum(1 for a, b in itertools.combinations(range(G.order), 2) if a in powers[b] or b in powers[a])


@pytest.mark.parametrize("spec", ["Z:6", "Z:12", "S:3", "Q:8", "D:10", "A:4", "Z:2 x Z:4"])
def test_power_edge_count_matches_definition(group, spec):
    G = group(spec)
    assert edge_count(power_graph(G)) == _brute_power_edges(G)


def test_small_examples(group):
    assert edge_count(power_graph(group("Z:6"))) == 13
    assert power_graph(group("Z:8")).is_complete()
    g = power_graph(group("S:3"), "nonidentity")
    assert g.n == 5 and g.component_count() == 4


@pytest.mark.parametrize(
    "spec, kind, expr",
    [
        ("Z:6", "power", "K(3) * (K(2) + K(1))"),
        ("Q:8", "commuting", "K(2) * (3 x K(2))"),
        ("S:3", "commuting", "K(1) * (K(2) + E(3))"),
        ("S:3", "power", "K(1) * (K(2) + E(3))"),
        ("D:8", "power", "K(1) * (K(1) * K(2) + E(4))"),
    ],
)
def test_structural_isomorphisms(group, spec, kind, expr):
    build = power_graph if kind == "power" else commuting_graph
    assert are_isomorphic(build(group(spec)), sp.realize(sp.parse_expr(expr)))


def test_isomorphism_negative():
    assert not are_isomorphic(graph_from_edges(4, [(0, 1), (2, 3)]), graph_from_edges(4, [(0, 1), (1, 2)]))


@pytest.mark.parametrize("spec", catalog(64))
def test_complete_iff_cyclic_prime_power(group, spec):
    G = group(spec)
    n = G.order
    prime_power = n == 1 or len(G.prime_divisors()) == 1
    assert power_graph(G).is_complete() == (G.is_cyclic and prime_power)


@pytest.mark.parametrize("spec", ["S:3", "D:10", "A:4", "Z:2 x Z:2", "S:4"])
def test_nonidentity_components_are_punctured_maximal_cyclics(group, spec):
    # maximal cyclic subgroups of these groups meet trivially
    G = group(spec)
    subs = cyclic_subgroups(G)
    maximal = [set(s) - {0} for s in subs if not any(set(s) < set(t) for t in subs)]
    g = power_graph(G, "nonidentity")
    _, labels = connected_components(g.adjacency)
    comps = {frozenset(g.labels[v] for v in np.flatnonzero(labels == c)) for c in set(labels.tolist())}
    assert comps == {frozenset(m) for m in maximal}


@pytest.mark.parametrize("spec", catalog(64))
def test_power_equals_commuting_characterization(group, spec):
    G = group(spec)
    assert power_equals_commuting(G) == power_commuting_characterization(G)


def test_adjacency_is_symmetric_without_loops(group):
    for spec in ["A:5", "PSL2:7", "Q:16"]:
        for g in (power_graph(group(spec)), commuting_graph(group(spec))):
            a = g.adjacency
            assert (a == a.T).all() and not a.diagonal().any()


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(np.ones((2, 2), dtype=bool))
    with pytest.raises(ValueError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(ValueError):
        power_graph(build_group("Z:3"), [])


def test_dump_roundtrip(tmp_path, group):
    g = commuting_graph(group("D:12"))
    path = tmp_path / "g.txt"
    g.dump(path)
    assert Graph.load(path).same_edges(g)
    with pytest.raises(ValueError):
        Graph.loads("3\n010\n101\n")
