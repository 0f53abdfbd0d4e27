"""Named invariant suites, run by ``grouptrees verify --suite NAME``.

Each suite yields ``(item, passed)`` pairs; nothing here raises on a failed
check so that a report always covers every item.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator

from . import spectra as sp
from .arith import parse_factored
from .graphs import commuting_graph, complete_graph, power_graph
from .groups import build_group, catalog
from .structure import (
    check_extension_bound,
    check_subgroup_product_bound,
    classify_power_free,
    cyclic_subgroups,
    find_power_free_decomposition,
    kappa_power,
    power_commuting_characterization,
    power_equals_commuting,
    universal_vertices,
)
from .suzuki import (
    kappa_suzuki_closed,
    kappa_sylow_closed,
    suzuki_commuting_expr,
    suzuki_params,
    sylow_commuting_expr,
)
from .treecount import count_spanning_trees_brute, tree_number

Item = tuple[str, bool]

# Target tree-numbers of power graphs of three simple groups.
TARGET_FINGERPRINTS = {
    "PSL2:7": "2^84 * 3^28 * 7^40",
    "A:5": "2^20 * 3^10 * 5^18",
    "A:6": "2^180 * 3^40 * 5^108",
}


def random_expr(rng: random.Random, budget: int) -> sp.GraphExpr:
    """Random expression with at most ``budget`` vertices (budget >= 1)."""
    roll = rng.random()
    if budget < 2 or roll < 0.3:
        size = rng.randint(1, max(1, min(budget, 6)))
        return sp.Complete(size) if rng.random() < 0.5 else sp.Coclique(size)
    if roll < 0.45 and budget >= 2:
        k = rng.randint(2, min(4, budget))
        return sp.Repeat(k, random_expr(rng, budget // k))
    left_budget = rng.randint(1, budget - 1)
    left = random_expr(rng, left_budget)
    right = random_expr(rng, budget - left.vertex_count)
    return sp.Join(left, right) if rng.random() < 0.5 else sp.Union(left, right)


def fingerprints(include_slow: bool = False) -> Iterator[Item]:
    for spec, expected in TARGET_FINGERPRINTS.items():
        if spec == "A:6" and not include_slow:
            continue
        value = tree_number(power_graph(build_group(spec)))
        yield f"kappa_P({spec}) = {expected}", value == parse_factored(expected).value()


def closed_forms() -> Iterator[Item]:
    for n in range(2, 31):
        yield f"K_{n}", tree_number(complete_graph(n)) == n ** (n - 2)
    for a in range(1, 13):
        for b in range(1, 13):
            kab = sp.Join(sp.Coclique(a), sp.Coclique(b))
            spl = sp.Join(sp.Complete(a), sp.Coclique(b))
            want_kab = sp.complete_bipartite_kappa(a, b)
            want_spl = sp.split_kappa(a, b)
            yield f"K_{a},{b}", (
                tree_number(sp.realize(kab)) == want_kab == sp.kappa_from_spectrum(sp.spectrum(kab))
            )
            yield f"K_{a} v E_{b}", (
                tree_number(sp.realize(spl)) == want_spl == sp.kappa_from_spectrum(sp.spectrum(spl))
            )


def oracle(count: int = 200, max_vertices: int = 60, seed: int = 20240601) -> Iterator[Item]:
    rng = random.Random(seed)
    for i in range(count):
        e = random_expr(rng, rng.randint(1, max_vertices))
        g = sp.realize(e)
        s = sp.spectrum(e)
        ok = sp.kappa_from_spectrum(s) == tree_number(g)
        ok &= s.trace() == 2 * g.edge_count()
        ok &= s.zero_multiplicity == g.component_count()
        if g.n <= 8 and g.is_connected():
            ok &= count_spanning_trees_brute(g) == tree_number(g)
        yield f"expr[{i}] {e}", ok


def classification(max_order: int = 64) -> Iterator[Item]:
    for spec in catalog(max_order):
        G = build_group(spec)
        if G.order < 2:
            continue
        yield spec, classify_power_free(G).consistent
    for k in (3, 4, 5):
        G = build_group(f"Q:{2**k}")
        ok = find_power_free_decomposition(G, 1) is None
        ok &= find_power_free_decomposition(G, 2) is not None
        yield f"Q:{2**k} 2-decomposition only", ok
    for n in range(2, 33):
        G = build_group(f"Z:{n}")
        yield f"Z:{n} none", all(find_power_free_decomposition(G, k) is None for k in (1, 2, 3))


def _trivially_intersecting(subs):
    chosen = []
    for s in sorted(subs, key=len, reverse=True):
        if all(set(s) & set(c) == {0} for c in chosen):
            chosen.append(s)
    return chosen


def inequalities(max_order: int = 32) -> Iterator[Item]:
    for spec in catalog(max_order):
        G = build_group(spec)
        subs = [s for s in cyclic_subgroups(G) if 1 < len(s) < G.order]
        if not subs:
            continue
        yield f"{spec} product bound", check_subgroup_product_bound(G, _trivially_intersecting(subs)).holds
        H = subs[-1]
        for m in sorted({int(G.element_orders[g]) for g in range(G.order) if g not in set(H)}):
            r = check_extension_bound(G, H, m)
            ok = r.holds and r.equality == r.outside_involutions
            ok &= r.equality or not r.frobenius_structure
            yield f"{spec} extension bound m={m}", ok
    S3, Z3 = build_group("S:3"), build_group("Z:3")
    yield "kappa_P(S3) = kappa_P(Z3) = 3", kappa_power(S3) == kappa_power(Z3) == 3
    D18, Z9 = build_group("D:18"), build_group("Z:9")
    yield "kappa_P(D18) = kappa_P(Z9) = 3^14", kappa_power(D18) == kappa_power(Z9) == 3**14


def universal() -> Iterator[Item]:
    expected = {
        "Z:12": ("CyclicNonPrimePower", 5),
        "Z:8": ("CyclicPrimePower", 8),
        "Q:8": ("GeneralizedQuaternion", 2),
        "Q:16": ("GeneralizedQuaternion", 2),
        "S:3": ("TrivialOnly", 1),
        "A:4": ("TrivialOnly", 1),
    }
    for spec, (case, size) in expected.items():
        r = universal_vertices(build_group(spec))
        yield f"{spec} {case}", r.classification.value == case and len(r.universal_set) == size
    for spec in catalog(64):
        G = build_group(spec)
        yield f"{spec} P=C characterization", power_equals_commuting(G) == power_commuting_characterization(G)


def suzuki() -> Iterator[Item]:
    for n in (1, 2, 3, 4):
        s = suzuki_params(n)
        yield f"n={n} partition", s.partition_total() == s.order
    for n in (1, 2, 3):
        q = suzuki_params(n).q
        route = sp.kappa_from_spectrum_factored(sp.spectrum(suzuki_commuting_expr(q)))
        yield f"q={q} closed = spectral", route == kappa_suzuki_closed(q)
    g = sp.realize(sylow_commuting_expr(8))
    yield "q=8 Sylow matrix-tree", tree_number(g) == kappa_sylow_closed(8).value() == 2**256


def group_checks() -> Iterator[Item]:
    for spec in catalog(64) + ["PSL2:7", "A:6"]:
        G = build_group(spec)
        P, C = power_graph(G).adjacency, commuting_graph(G).adjacency
        yield f"{spec} P subset C", bool((~P | C).all())
    for spec in ("PSL2:7", "A:5"):
        G = build_group(spec)
        census = G.order_census()
        yield f"{spec} p^2-1 elements of order p", all(census.get(p, 0) >= p * p - 1 for p in G.prime_divisors())


SUITES: dict[str, Callable[[], Iterator[Item]]] = {
    "fingerprints": fingerprints,
    "closed-forms": closed_forms,
    "oracle": oracle,
    "classification": classification,
    "inequalities": inequalities,
    "universal": universal,
    "suzuki": suzuki,
    "groups": group_checks,
}


def run_suite(name: str) -> list[Item]:
    if name == "all":
        return [item for suite in SUITES.values() for item in suite()]
    try:
        return list(SUITES[name]())
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all") from None


__all__ = ["SUITES", "run_suite", "random_expr", "TARGET_FINGERPRINTS"]
