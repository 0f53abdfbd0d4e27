"""Finite groups as Cayley tables over element indices.

Every group is stored as an ``n x n`` table with index 0 the identity.
Groups that come from permutations also keep the permutation of each element
(``perms[i]`` is a tuple image of ``range(degree)``).

Spec strings::

    Z:n        cyclic of order n
    D:m        dihedral of order m (m even, m >= 4)
    Q:m        generalized quaternion of order m (m = 2^k >= 8)
    EA:q       elementary abelian of order q = p^k
    S:n, A:n   symmetric / alternating on n points
    PSL2:p     PSL(2, p) acting on the projective line, p >= 5 prime
    file:PATH  Cayley-table file
    G x H      direct product (also ``G * H``)
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .arith import is_prime, prime_power_base, small_factorization, totient

EXHAUSTIVE_AXIOM_LIMIT = 512
RANDOM_AXIOM_TRIPLES = 10_000


class GroupSpecError(ValueError):
    """Malformed group spec or violated family constraint."""


class CayleyTableError(ValueError):
    """Unreadable Cayley-table file, or a table that is not a group."""


@dataclass(frozen=True, eq=False)
class Group:
    table: np.ndarray
    label: str = ""
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.table.setflags(write=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    @property
    def backing(self) -> str:
        return "permutation" if self.perms is not None else "table"

    @property
    def degree(self) -> int | None:
        return len(self.perms[0]) if self.perms is not None else None

    def mult(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == 0)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        return inv

    @cached_property
    def _powers(self) -> np.ndarray:
        """Row k holds g**k for every g, for k = 0 .. exponent."""
        n = self.order
        ident = np.zeros(n, dtype=np.int64)
        rows = [ident]
        cur = np.arange(n, dtype=np.int64)
        while True:
            rows.append(cur)
            if not cur.any():
                break
            cur = self.table[cur, np.arange(n)].astype(np.int64)
        return np.array(rows)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        p = self._powers
        for k in range(1, p.shape[0]):
            hit = (p[k] == 0) & (orders == 0)
            orders[hit] = k
        orders[0] = 1
        return orders

    @cached_property
    def cyclic_membership(self) -> np.ndarray:
        """Boolean matrix M with M[g, h] true iff h lies in <g>."""
        n = self.order
        m = np.zeros((n, n), dtype=bool)
        cols = np.arange(n)
        for row in self._powers:
            m[cols, row] = True
        m.setflags(write=False)
        return m

    @property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in self.element_orders))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @property
    def is_cyclic(self) -> bool:
        return bool((self.element_orders == self.order).any())

    def order_census(self) -> dict[int, int]:
        vals, counts = np.unique(self.element_orders, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def elements_of_order(self, k: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.element_orders == k)]

    def cyclic_subgroup(self, i: int) -> list[int]:
        return [int(h) for h in np.flatnonzero(self.cyclic_membership[i])]

    def prime_divisors(self) -> list[int]:
        return sorted(small_factorization(self.order)) if self.order > 1 else []

    def is_subgroup(self, subset) -> bool:
        s = sorted(set(int(x) for x in subset))
        if not s or s[0] != 0:
            return False
        idx = np.array(s)
        closed = np.isin(self.table[np.ix_(idx, idx)], idx)
        return bool(closed.all())

    def subgroup(self, subset, label: str | None = None) -> "Group":
        """Standalone group on a subgroup, keeping the relative index order."""
        s = sorted(set(int(x) for x in subset))
        if not self.is_subgroup(s):
            raise ValueError(f"{s} is not a subgroup of {self.label}")
        idx = np.array(s)
        relabel = np.full(self.order, -1, dtype=np.int64)
        relabel[idx] = np.arange(len(s))
        sub = relabel[self.table[np.ix_(idx, idx)]]
        perms = tuple(self.perms[i] for i in s) if self.perms is not None else None
        return Group(sub, label or f"{self.label}[{len(s)}]", perms)

    def check_axioms(self, rng: np.random.Generator | None = None) -> None:
        verify_group_table(self.table, rng=rng)
        if self.perms is not None:
            p = np.array(self.perms)
            composed = p[np.arange(self.order)[:, None, None], p[None, :, :]]
            if not (composed == p[self.table]).all():
                raise CayleyTableError("permutations disagree with the Cayley table")


@dataclass(frozen=True)
class ElementInfo:
    index: int
    order: int
    cyclic_subgroup: tuple[int, ...]
    # elements h with <h> = <g>; there are phi(order) of them
    generators: tuple[int, ...]


def element_info(G: Group, i: int) -> ElementInfo:
    if not 0 <= i < G.order:
        raise IndexError(f"element index {i} out of range for order {G.order}")
    order = int(G.element_orders[i])
    sub = tuple(G.cyclic_subgroup(i))
    gens = tuple(h for h in sub if G.element_orders[h] == order)
    assert len(sub) == order and len(gens) == totient(order)
    return ElementInfo(i, order, sub, gens)


def _check_distinct(i: int, j: int):
    if i == j:
        raise ValueError("adjacency is only defined for distinct elements")


def is_power_related(G: Group, i: int, j: int) -> bool:
    _check_distinct(i, j)
    m = G.cyclic_membership
    return bool(m[i, j] or m[j, i])


def commutes(G: Group, i: int, j: int) -> bool:
    _check_distinct(i, j)
    return bool(G.table[i, j] == G.table[j, i])


# --- table verification ------------------------------------------------------


def verify_group_table(table: np.ndarray, rng: np.random.Generator | None = None) -> None:
    """Raise CayleyTableError unless ``table`` is a group with identity 0."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise CayleyTableError(f"table must be square and nonempty, got shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise CayleyTableError("table entries must lie in 0..n-1")
    ar = np.arange(n)
    if not ((t[0] == ar).all() and (t[:, 0] == ar).all()):
        raise CayleyTableError("index 0 is not a two-sided identity")
    # Latin square gives inverses on both sides once an identity exists.
    sorted_rows = np.sort(t, axis=1)
    sorted_cols = np.sort(t, axis=0)
    if not ((sorted_rows == ar).all() and (sorted_cols == ar[:, None]).all()):
        raise CayleyTableError("table is not a Latin square (missing inverses)")
    if n <= EXHAUSTIVE_AXIOM_LIMIT:
        for a in range(n):
            if not (t[t[a]] == t[a][t]).all():
                raise CayleyTableError(f"associativity fails with left factor {a}")
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, RANDOM_AXIOM_TRIPLES))
        if not (t[t[a, b], c] == t[a, t[b, c]]).all():
            raise CayleyTableError("associativity fails on a random triple")


# --- constructors ------------------------------------------------------------


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupSpecError("cyclic order must be >= 1")
    ar = np.arange(n)
    return Group((ar[:, None] + ar[None, :]) % n, f"Z:{n}")


def dihedral(order: int) -> Group:
    """r^k s^e has index k + m*e, with m = order/2 rotations."""
    if order < 4 or order % 2:
        raise GroupSpecError(f"D:{order} needs an even order >= 4")
    m = order // 2
    k = np.arange(order) % m
    e = np.arange(order) // m
    # (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
    sign = np.where(e == 1, -1, 1)
    kk = (k[:, None] + sign[:, None] * k[None, :]) % m
    ee = (e[:, None] + e[None, :]) % 2
    return Group(kk + m * ee, f"D:{order}")


def quaternion(order: int) -> Group:
    """x^a y^e has index a + m*e, with m = order/2; y^2 = x^(m/2), x^y = x^-1."""
    if order < 8 or order & (order - 1):
        raise GroupSpecError(f"Q:{order} needs a power of two >= 8")
    m = order // 2
    a = np.arange(order) % m
    e = np.arange(order) // m
    sign = np.where(e == 1, -1, 1)
    aa = a[:, None] + sign[:, None] * a[None, :]
    both = (e[:, None] == 1) & (e[None, :] == 1)
    aa = (aa + np.where(both, m // 2, 0)) % m
    ee = (e[:, None] + e[None, :]) % 2
    return Group(aa + m * ee, f"Q:{order}")


def elementary_abelian(q: int) -> Group:
    p = prime_power_base(q) if q > 1 else None
    if p is None:
        raise GroupSpecError(f"EA:{q} needs a prime power order")
    k = small_factorization(q)[p]
    G = cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic(p))
    return Group(G.table.copy(), f"EA:{q}")


def direct_product(G: Group, H: Group) -> Group:
    """Pairs (g, h) indexed lexicographically as g * |H| + h."""
    nh = H.order
    tg = np.asarray(G.table)
    th = np.asarray(H.table)
    table = (tg[:, None, :, None] * nh + th[None, :, None, :]).reshape(G.order * nh, G.order * nh)
    return Group(table, f"{G.label} x {H.label}")


def permutation_group(generators, degree: int, label: str = "") -> Group:
    """Close a set of permutations under composition by BFS.

    Indices follow discovery order starting from the identity; products are
    ``(p_i * p_j)(x) = p_i(p_j(x))``.
    """
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    index = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(g[x] for x in s)
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
                queue.append(h)
    p = np.array(elems, dtype=np.int64)
    n = len(elems)
    composed = p[np.arange(n)[:, None, None], p[None, :, :]]
    weights = degree ** np.arange(degree, dtype=np.int64)
    keys = p @ weights
    order = np.argsort(keys)
    pos = np.searchsorted(keys[order], composed @ weights)
    table = order[pos]
    return Group(table, label, tuple(elems))


def symmetric(n: int) -> Group:
    if n < 1:
        raise GroupSpecError("S:n needs n >= 1")
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return permutation_group(gens, n, f"S:{n}")


def alternating(n: int) -> Group:
    if n < 1:
        raise GroupSpecError("A:n needs n >= 1")
    gens = []
    for k in range(2, n):
        cyc = list(range(n))
        cyc[0], cyc[1], cyc[k] = 1, k, 0
        gens.append(tuple(cyc))
    return permutation_group(gens, n, f"A:{n}")


def psl2(p: int) -> Group:
    """PSL(2, p) on the projective line {0..p-1, inf}, inf encoded as p."""
    if p < 5 or not is_prime(p):
        raise GroupSpecError(f"PSL2:{p} needs a prime p >= 5")
    inf = p
    shift = tuple((x + 1) % p for x in range(p)) + (inf,)
    invert = [0] * (p + 1)
    invert[0], invert[inf] = inf, 0
    for x in range(1, p):
        invert[x] = (-pow(x, -1, p)) % p
    return permutation_group([shift, tuple(invert)], p + 1, f"PSL2:{p}")


def read_cayley_file(path: str | Path) -> Group:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CayleyTableError(f"cannot read {path}: {exc}") from exc
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        n = int(lines[0][0])
        if len(lines[0]) != 1 or len(lines) != n + 1:
            raise CayleyTableError(f"{path}: expected n on line 1 and then {n} rows")
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        if isinstance(exc, CayleyTableError):
            raise
        raise CayleyTableError(f"{path}: malformed Cayley table ({exc})") from exc
    if any(len(r) != n for r in rows):
        raise CayleyTableError(f"{path}: every row needs {n} entries")
    table = np.array(rows, dtype=np.int64).reshape(n, n)
    verify_group_table(table)
    return Group(table, f"file:{path}")


def write_cayley_file(G: Group, path: str | Path) -> None:
    lines = [str(G.order)] + [" ".join(str(int(x)) for x in row) for row in G.table]
    Path(path).write_text("\n".join(lines) + "\n")


_ATOM = re.compile(r"^(Z|D|Q|EA|S|A|PSL2):(\d+)$")
_PRODUCT_SPLIT = re.compile(r"\s+x\s+|\s*\*\s*|\s*×\s*")

_FAMILIES = {
    "Z": cyclic,
    "D": dihedral,
    "Q": quaternion,
    "EA": elementary_abelian,
    "S": symmetric,
    "A": alternating,
    "PSL2": psl2,
}


def _build_atom(spec: str) -> Group:
    spec = spec.strip()
    if spec.startswith("file:"):
        return read_cayley_file(spec[5:])
    m = _ATOM.match(spec)
    if not m:
        raise GroupSpecError(f"malformed group spec {spec!r}")
    return _FAMILIES[m.group(1)](int(m.group(2)))


def build_group(spec: str, check: bool = True) -> Group:
    if spec.strip().startswith("file:"):
        parts = [spec]
    else:
        parts = _PRODUCT_SPLIT.split(spec.strip())
    if not parts or any(not p.strip() for p in parts):
        raise GroupSpecError(f"malformed group spec {spec!r}")
    G = _build_atom(parts[0])
    for part in parts[1:]:
        G = direct_product(G, _build_atom(part))
    G = Group(G.table, spec.strip(), G.perms)
    if check:
        G.check_axioms()
    return G


def catalog(max_order: int = 64) -> list[str]:
    """Group specs used throughout the invariant suites, small to large."""
    specs = [f"Z:{n}" for n in range(1, max_order + 1)]
    specs += [f"D:{m}" for m in range(4, max_order + 1, 2)]
    specs += [f"Q:{2**k}" for k in range(3, 8) if 2**k <= max_order]
    specs += [f"EA:{q}" for q in (4, 8, 9, 16, 25, 27, 32, 49, 64) if q <= max_order]
    products = [
        "Z:2 x Z:4", "Z:2 x Z:6", "Z:2 x Z:8", "Z:4 x Z:4", "Z:3 x Z:6",
        "Z:2 x Z:2 x Z:4", "Z:4 x Z:8", "Z:2 x Z:3 x Z:5", "Z:2 x Z:10",
    ]
    small = {"S:3": 6, "S:4": 24, "A:4": 12, "A:5": 60}
    specs += [s for s in products if _product_order(s) <= max_order]
    specs += [s for s, n in small.items() if n <= max_order]
    return specs


def _product_order(spec: str) -> int:
    return math.prod(int(part.split(":")[1]) for part in _PRODUCT_SPLIT.split(spec))


def family_order(spec: str) -> int | None:
    """Known order of a family spec, or None for files."""
    total = 1
    for part in _PRODUCT_SPLIT.split(spec.strip()):
        m = _ATOM.match(part.strip())
        if not m:
            return None
        fam, k = m.group(1), int(m.group(2))
        if fam == "S":
            total *= math.factorial(k)
        elif fam == "A":
            total *= max(1, math.factorial(k) // 2)
        elif fam == "PSL2":
            total *= k * (k * k - 1) // 2
        else:
            total *= k
    return total
