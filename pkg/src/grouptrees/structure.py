"""Structural questions about power graphs of finite groups.

Universal vertices, independent sets from involutions and coprime orders,
power-free decompositions ``G = C + B_1 + ... + B_n`` (C a cyclic subgroup of
prime-power order, each B_i an independent set of size > 1), and the two
tree-number inequalities for subgroups.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .arith import prime_power_base, small_factorization, totient
from .graphs import commuting_graph, power_graph
from .groups import Group
from .treecount import tree_number


class UniversalCase(str, enum.Enum):
    CYCLIC_PRIME_POWER = "CyclicPrimePower"
    CYCLIC_NON_PRIME_POWER = "CyclicNonPrimePower"
    GENERALIZED_QUATERNION = "GeneralizedQuaternion"
    TRIVIAL_ONLY = "TrivialOnly"


class Family(str, enum.Enum):
    ELEMENTARY_ABELIAN_2 = "ElementaryAbelian2"
    DIHEDRAL_2_POWER = "Dihedral2Power"
    DIHEDRAL_FROBENIUS = "DihedralFrobenius2pn"


def kappa_power(G: Group) -> int:
    return tree_number(power_graph(G))


def kappa_commuting(G: Group) -> int:
    return tree_number(commuting_graph(G))


def _power_adjacency(G: Group) -> np.ndarray:
    m = G.cyclic_membership
    a = m | m.T
    np.fill_diagonal(a, False)
    return a


def is_independent(G: Group, vertices) -> bool:
    idx = np.asarray(sorted(vertices), dtype=np.int64)
    return not _power_adjacency(G)[np.ix_(idx, idx)].any()


def cyclic_subgroups(G: Group) -> list[tuple[int, ...]]:
    """Distinct cyclic subgroups, sorted by (order, elements)."""
    seen = {tuple(np.flatnonzero(row).tolist()) for row in G.cyclic_membership}
    return sorted(seen, key=lambda s: (len(s), s))


def is_generalized_quaternion(G: Group) -> bool:
    """A noncyclic 2-group with exactly one involution."""
    n = G.order
    return n >= 8 and n & (n - 1) == 0 and not G.is_cyclic and len(G.elements_of_order(2)) == 1


# --- universal vertices and independent sets -------------------------------------


@dataclass(frozen=True)
class UniversalReport:
    universal_set: tuple[int, ...]
    classification: UniversalCase

    def to_json(self) -> dict:
        return {"universal_set": list(self.universal_set), "classification": self.classification.value}


def universal_vertices(G: Group) -> UniversalReport:
    adj = _power_adjacency(G)
    n = G.order
    S = tuple(np.flatnonzero(adj.sum(axis=1) == n - 1).tolist())
    if len(S) == 1:
        case = UniversalCase.TRIVIAL_ONLY
    elif G.is_cyclic and prime_power_base(n) is not None:
        case = UniversalCase.CYCLIC_PRIME_POWER
        assert len(S) == n
    elif G.is_cyclic:
        case = UniversalCase.CYCLIC_NON_PRIME_POWER
        assert len(S) == 1 + totient(n)
    elif is_generalized_quaternion(G):
        case = UniversalCase.GENERALIZED_QUATERNION
        assert S == (0, G.elements_of_order(2)[0])
    else:
        raise RuntimeError(f"{G.label}: {len(S)} universal vertices fit no known case")
    return UniversalReport(S, case)


def coprime_witness(G: Group) -> list[int]:
    """One element of each prime order dividing |G|; pairwise nonadjacent."""
    witness = [G.elements_of_order(p)[0] for p in G.prime_divisors()]
    assert is_independent(G, witness)
    return witness


def involution_set(G: Group) -> list[int]:
    inv = G.elements_of_order(2)
    assert is_independent(G, inv)
    return inv


# --- power-free decompositions ---------------------------------------------------


@dataclass(frozen=True)
class PowerFreeDecomposition:
    clique_part: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def prime(self) -> int:
        return prime_power_base(len(self.clique_part))

    def to_json(self, G: Group) -> dict:
        def describe(s):
            return [{"index": i, "order": int(G.element_orders[i])} for i in s]

        return {
            "group": G.label,
            "n": self.n,
            "C": describe(self.clique_part),
            "blocks": [describe(b) for b in self.blocks],
        }


def prime_power_cyclic_subgroups(G: Group, maximality: str = "global") -> list[tuple[int, ...]]:
    """Candidates for the clique part C.

    ``global``: cyclic subgroups of prime-power order whose order is the largest
    such order over all primes. ``per_prime``: for each prime p, the cyclic
    p-subgroups of the largest order among cyclic p-subgroups.
    """
    subs = [s for s in cyclic_subgroups(G) if len(s) > 1 and prime_power_base(len(s))]
    if not subs:
        return []
    if maximality == "global":
        top = max(len(s) for s in subs)
        return [s for s in subs if len(s) == top]
    if maximality == "per_prime":
        best: dict[int, int] = {}
        for s in subs:
            p = prime_power_base(len(s))
            best[p] = max(best.get(p, 0), len(s))
        return [s for s in subs if best[prime_power_base(len(s))] == len(s)]
    raise ValueError(f"unknown maximality {maximality!r}")


def _block_coloring(adj: np.ndarray, colors: int, min_size: int = 2) -> list[int] | None:
    """Proper coloring with exactly ``colors`` classes, each of size >= min_size.

    Vertices go in descending degree; a vertex may open at most one new color,
    which removes color-permutation symmetry.
    """
    k = adj.shape[0]
    if k < colors * min_size:
        return None
    order = sorted(range(k), key=lambda v: (-int(adj[v].sum()), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in np.flatnonzero(adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    assign = [-1] * k
    sizes = [0] * colors

    def deficit() -> int:
        return sum(max(0, min_size - s) for s in sizes)

    def place(i: int, used: int) -> bool:
        if deficit() > k - i:
            return False
        if i == k:
            return used == colors
        banned = {assign[j] for j in earlier[i]}
        for c in range(min(used + 1, colors)):
            if c in banned:
                continue
            assign[i] = c
            sizes[c] += 1
            if place(i + 1, max(used, c + 1)):
                return True
            sizes[c] -= 1
        assign[i] = -1
        return False

    if not place(0, 0):
        return None
    out = [0] * k
    for i, v in enumerate(order):
        out[v] = assign[i]
    return out


def find_power_free_decomposition(
    G: Group, n: int, maximality: str = "global"
) -> PowerFreeDecomposition | None:
    """Exhaustive search; None means no maximal C admits valid blocks."""
    if n < 1:
        raise ValueError("block count must be >= 1")
    if G.order < 2:
        raise ValueError("power-free decompositions need |G| >= 2")
    adj = _power_adjacency(G)
    for C in prime_power_cyclic_subgroups(G, maximality):
        inside = set(C)
        rest = [g for g in range(G.order) if g not in inside]
        idx = np.array(rest, dtype=np.int64)
        coloring = _block_coloring(adj[np.ix_(idx, idx)], n) if rest else None
        if coloring is None:
            continue
        blocks = tuple(tuple(g for g, c in zip(rest, coloring) if c == b) for b in range(n))
        dec = PowerFreeDecomposition(tuple(C), blocks)
        verify_decomposition(G, dec, maximality)
        return dec
    return None


@dataclass(frozen=True)
class DecompositionCheck:
    necessary_condition: bool  # phi(o(b)) <= n for every b outside C
    prime_support: bool  # pi(G) inside pi((n+1)!) + {p}
    # None when p divides (n+1)!, otherwise "C normal and C_C(b) = 1 for b outside C"
    normal_fixed_point_free: bool | None


def verify_decomposition(G: Group, dec: PowerFreeDecomposition, maximality: str = "global") -> DecompositionCheck:
    """Re-check every defining property; AssertionError on any violation."""
    C = set(dec.clique_part)
    parts = [C] + [set(b) for b in dec.blocks]
    assert sum(map(len, parts)) == G.order and set().union(*parts) == set(range(G.order))
    assert G.is_subgroup(C), "C is not a subgroup"
    assert any(len(C) == int(G.element_orders[g]) for g in C), "C is not cyclic"
    assert tuple(sorted(C)) in prime_power_cyclic_subgroups(G, maximality), "C is not of maximal order"
    for b in dec.blocks:
        assert len(b) > 1 and is_independent(G, b)

    n = dec.n
    p = dec.prime
    outside = [g for g in range(G.order) if g not in C]
    necessary = all(totient(int(G.element_orders[b])) <= n for b in outside)
    allowed = set(small_factorization(math.factorial(n + 1))) | {p}
    support = set(G.prime_divisors()) <= allowed
    assert necessary and support

    fpf = None
    if p not in small_factorization(math.factorial(n + 1)):
        inv = G.inverses
        normal = all(int(G.table[G.table[inv[g], c], g]) in C for g in range(G.order) for c in C)
        centralizer_trivial = all(
            not any(G.table[b, c] == G.table[c, b] for c in C if c != 0) for b in outside
        )
        fpf = normal and centralizer_trivial
    return DecompositionCheck(necessary, support, fpf)


def recognize_family(G: Group) -> Family | None:
    """Decide membership in the three families from cheap invariants.

    Exact for these families: a group of order 2m with an element r of order m
    and every element outside <r> an involution is dihedral.
    """
    n = G.order
    orders = G.element_orders
    if n >= 4 and n & (n - 1) == 0 and (orders <= 2).all():
        return Family.ELEMENTARY_ABELIAN_2
    if n < 6 or n % 2:
        return None
    m = n // 2
    rots = np.flatnonzero(orders == m)
    if rots.size == 0:
        return None
    R = G.cyclic_membership[rots[0]]
    if not (orders[~R] == 2).all():
        return None
    if n & (n - 1) == 0:
        return Family.DIHEDRAL_2_POWER
    if m % 2 and prime_power_base(m):
        return Family.DIHEDRAL_FROBENIUS
    return None


@dataclass(frozen=True)
class ClassificationVerdict:
    has_1pfd: bool
    predicted: Family | None
    decomposition: PowerFreeDecomposition | None = field(default=None, compare=False)

    @property
    def consistent(self) -> bool:
        return self.has_1pfd == (self.predicted is not None)

    def to_json(self) -> dict:
        return {
            "has_1pfd": self.has_1pfd,
            "predicted": self.predicted.value if self.predicted else None,
            "consistent": self.consistent,
        }


def classify_power_free(G: Group) -> ClassificationVerdict:
    if G.order < 2:
        return ClassificationVerdict(False, None)
    dec = find_power_free_decomposition(G, 1)
    return ClassificationVerdict(dec is not None, recognize_family(G), dec)


# --- tree-number inequalities ----------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    lhs: int
    rhs: int
    holds: bool
    factors: tuple[int, ...] = ()
    equality: bool = False
    frobenius_structure: bool | None = None
    # every element outside H is an involution; this is what equality tracks
    outside_involutions: bool | None = None

    @property
    def equality_is_frobenius_case(self) -> bool:
        return self.equality

    def to_json(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "frobenius_structure": self.frobenius_structure,
            "outside_involutions": self.outside_involutions,
        }


def _validate_subgroup(G: Group, H) -> tuple[int, ...]:
    s = tuple(sorted(set(int(x) for x in H)))
    if not G.is_subgroup(s):
        raise ValueError(f"{list(s)} is not a subgroup of {G.label}")
    return s


def check_subgroup_product_bound(G: Group, subgroups) -> BoundReport:
    subs = [_validate_subgroup(G, H) for H in subgroups]
    if any(len(H) < 2 for H in subs):
        raise ValueError("subgroups must be nontrivial")
    for H, K in itertools.combinations(subs, 2):
        if set(H) & set(K) != {0}:
            raise ValueError(f"subgroups {list(H)} and {list(K)} intersect nontrivially")
    factors = tuple(kappa_power(G.subgroup(H)) for H in subs)
    lhs = kappa_power(G)
    rhs = math.prod(factors)
    return BoundReport(lhs, rhs, lhs >= rhs, factors, lhs == rhs)


def is_frobenius_over(G: Group, H) -> bool:
    """G is Frobenius with kernel H and a complement of order 2.

    Equivalent to: [G:H] = 2, |H| odd, and every element outside H an involution
    (such an element then inverts H, so acts without fixed points).
    """
    H = set(H)
    if 2 * len(H) != G.order or len(H) % 2 == 0:
        return False
    return all(G.element_orders[g] == 2 for g in range(G.order) if g not in H)


def check_extension_bound(G: Group, H, m: int) -> BoundReport:
    s = _validate_subgroup(G, H)
    if len(s) == G.order:
        raise ValueError("H must be a proper subgroup")
    inside = set(s)
    if not any(G.element_orders[g] == m for g in range(G.order) if g not in inside):
        raise ValueError(f"no element of order {m} outside H")
    phi = totient(m)
    factor = (phi + 1) ** (phi - 1)
    kh = kappa_power(G.subgroup(s))
    lhs = kappa_power(G)
    rhs = factor * kh
    involutions_only = all(G.element_orders[g] == 2 for g in range(G.order) if g not in inside)
    return BoundReport(
        lhs, rhs, lhs >= rhs, (factor, kh), lhs == kh, is_frobenius_over(G, s), involutions_only
    )


# --- P(G) = C(G) -------------------------------------------------------------------


def power_equals_commuting(G: Group) -> bool:
    return power_graph(G).same_edges(commuting_graph(G))


def is_frobenius_cyclic_kernel_complement(G: Group) -> bool:
    """Frobenius with cyclic p-kernel and cyclic q-complement, p != q.

    Brute force over pairs of cyclic subgroups (K normal, |K||H| = |G|, and no
    nonidentity element of H centralizes a nonidentity element of K).
    """
    subs = [s for s in cyclic_subgroups(G) if len(s) > 1 and prime_power_base(len(s))]
    t, inv = G.table, G.inverses
    for K in subs:
        Kset = set(K)
        if any(int(t[t[inv[g], k], g]) not in Kset for g in range(G.order) for k in K):
            continue
        for H in subs:
            if len(K) * len(H) != G.order or prime_power_base(len(H)) == prime_power_base(len(K)):
                continue
            if all(t[h, k] != t[k, h] for h in H[1:] for k in K[1:]):
                return True
    return False


def power_commuting_characterization(G: Group) -> bool:
    """Membership in the families where the power and commuting graphs coincide."""
    n = G.order
    return (
        (G.is_cyclic and (n == 1 or prime_power_base(n) is not None))
        or is_generalized_quaternion(G)
        or is_frobenius_cyclic_kernel_complement(G)
    )
