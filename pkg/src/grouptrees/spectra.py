"""Laplacian spectra of graphs built from cliques and cocliques.

Graphs assembled from ``K(n)`` and ``E(n)`` by disjoint union and join have
integral Laplacian spectra that compose exactly:

* union: the multiset union of the two spectra;
* join of an m-vertex and an n-vertex graph: drop one zero from each side,
  shift the rest by the other side's size, then add ``m + n`` and ``0``.

Text grammar (whitespace-insensitive)::

    K(n)      complete graph         e1 + e2   disjoint union
    E(n)      coclique               e1 * e2   join
    k x e     k disjoint copies of e (binds tightest, then *, then +)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from .arith import FactoredInteger, small_factorization
from .graphs import Graph

REALIZE_LIMIT = 10**5


class GraphExpr:
    """Base class of the expression tree."""

    @cached_property
    def vertex_count(self) -> int:
        raise NotImplementedError

    def __add__(self, other: "GraphExpr") -> "Union":
        return Union(self, other)

    def __mul__(self, other: "GraphExpr") -> "Join":
        return Join(self, other)

    def __rmul__(self, k: int) -> "Repeat":
        return Repeat(k, self)


def _positive(name: str, value: int):
    if not isinstance(value, (int, np.integer)) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class Complete(GraphExpr):
    n: int

    def __post_init__(self):
        _positive("clique size", self.n)

    @cached_property
    def vertex_count(self) -> int:
        return self.n

    def __str__(self):
        return f"K({self.n})"


@dataclass(frozen=True)
class Coclique(GraphExpr):
    n: int

    def __post_init__(self):
        _positive("coclique size", self.n)

    @cached_property
    def vertex_count(self) -> int:
        return self.n

    def __str__(self):
        return f"E({self.n})"


@dataclass(frozen=True)
class Join(GraphExpr):
    left: GraphExpr
    right: GraphExpr

    @cached_property
    def vertex_count(self) -> int:
        return self.left.vertex_count + self.right.vertex_count

    def __str__(self):
        return f"{_wrap(self.left, Union)} * {_wrap(self.right, Union)}"


@dataclass(frozen=True)
class Union(GraphExpr):
    left: GraphExpr
    right: GraphExpr

    @cached_property
    def vertex_count(self) -> int:
        return self.left.vertex_count + self.right.vertex_count

    def __str__(self):
        return f"{self.left} + {self.right}"


@dataclass(frozen=True)
class Repeat(GraphExpr):
    k: int
    sub: GraphExpr

    def __post_init__(self):
        _positive("repeat count", self.k)

    @cached_property
    def vertex_count(self) -> int:
        return self.k * self.sub.vertex_count

    def __str__(self):
        return f"{self.k} x {_wrap(self.sub, (Union, Join))}"


def _wrap(e: GraphExpr, kinds) -> str:
    return f"({e})" if isinstance(e, kinds) else str(e)


def union(*exprs: GraphExpr) -> GraphExpr:
    return reduce(Union, exprs)


# --- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[KE()+*x])")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'a token'} at token {self.pos} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> GraphExpr:
        e = self.union()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.pos} in {self.text!r}")
        return e

    def union(self) -> GraphExpr:
        e = self.join()
        while self.peek() == "+":
            self.take()
            e = Union(e, self.join())
        return e

    def join(self) -> GraphExpr:
        e = self.term()
        while self.peek() == "*":
            self.take()
            e = Join(e, self.term())
        return e

    def term(self) -> GraphExpr:
        tok = self.take()
        if tok.isdigit():
            self.take("x")
            return Repeat(int(tok), self.term())
        if tok in ("K", "E"):
            self.take("(")
            size = self.take()
            if not size.isdigit():
                raise ValueError(f"size must be an integer in {self.text!r}")
            self.take(")")
            return Complete(int(size)) if tok == "K" else Coclique(int(size))
        if tok == "(":
            e = self.union()
            self.take(")")
            return e
        raise ValueError(f"unexpected {tok!r} in {self.text!r}")


def parse_expr(text: str) -> GraphExpr:
    return _Parser(text).parse()


# --- spectra -------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Multiset of integer Laplacian eigenvalues, largest first."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts) -> "Spectrum":
        clean = {int(v): int(m) for v, m in dict(counts).items() if m}
        if any(m < 0 for m in clean.values()) or any(v < 0 for v in clean):
            raise ValueError("eigenvalues and multiplicities must be nonnegative")
        return cls(tuple(sorted(clean.items(), reverse=True)))

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        return cls.from_counts(Counter(int(v) for v in values))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.items)

    def multiplicity(self, value: int) -> int:
        return self.counts.get(value, 0)

    @property
    def zero_multiplicity(self) -> int:
        return self.multiplicity(0)

    def trace(self) -> int:
        return sum(v * m for v, m in self.items)

    def values(self) -> list[int]:
        """Expanded eigenvalue list; only sensible for small spectra."""
        return [v for v, m in self.items for _ in range(m)]

    def __str__(self):
        return "{" + ", ".join(f"{v}^{m}" if m > 1 else str(v) for v, m in self.items) + "}"

    def to_json(self) -> list[list[int]]:
        return [[v, m] for v, m in self.items]


def _merge(*counters: Counter) -> Counter:
    out: Counter = Counter()
    for c in counters:
        out.update(c)
    return out


def _shifted_without_zero(c: Counter, shift: int) -> Counter:
    c = Counter(c)
    c[0] -= 1
    return Counter({v + shift: m for v, m in c.items() if m})


def _spectrum_counts(e: GraphExpr) -> Counter:
    if isinstance(e, Complete):
        return Counter({e.n: e.n - 1, 0: 1}) if e.n > 1 else Counter({0: 1})
    if isinstance(e, Coclique):
        return Counter({0: e.n})
    if isinstance(e, Union):
        return _merge(_spectrum_counts(e.left), _spectrum_counts(e.right))
    if isinstance(e, Repeat):
        return Counter({v: m * e.k for v, m in _spectrum_counts(e.sub).items()})
    if isinstance(e, Join):
        m, n = e.left.vertex_count, e.right.vertex_count
        left = _shifted_without_zero(_spectrum_counts(e.left), n)
        right = _shifted_without_zero(_spectrum_counts(e.right), m)
        return _merge(left, right, Counter({m + n: 1, 0: 1}))
    raise TypeError(f"not a graph expression: {e!r}")


def spectrum(e: GraphExpr) -> Spectrum:
    return Spectrum.from_counts(_spectrum_counts(e))


def kappa_from_spectrum(s: Spectrum) -> int:
    """Spanning-tree count as the product of nonzero eigenvalues over n."""
    n = s.n
    if n < 1:
        raise ValueError("empty spectrum")
    z = s.zero_multiplicity
    if z == 0:
        raise ArithmeticError("a Laplacian spectrum always contains 0")
    if z > 1:
        return 0
    prod = 1
    for v, m in s.items:
        if v:
            prod *= v**m
    q, r = divmod(prod, n)
    if r:
        raise ArithmeticError(f"eigenvalue product is not divisible by n = {n}")
    return q


def kappa_from_spectrum_factored(s: Spectrum) -> FactoredInteger:
    """Same quantity as `kappa_from_spectrum`, tracked as prime exponents.

    Never forms the product, so spectra with astronomically large counts
    (hundreds of millions of repeated eigenvalues) stay cheap.
    """
    n = s.n
    if n < 1:
        raise ValueError("empty spectrum")
    z = s.zero_multiplicity
    if z == 0:
        raise ArithmeticError("a Laplacian spectrum always contains 0")
    if z > 1:
        return FactoredInteger((), 0)
    exps: Counter = Counter()
    for v, m in s.items:
        if v:
            for p, e in small_factorization(v).items():
                exps[p] += e * m
    for p, e in small_factorization(n).items():
        exps[p] -= e
        if exps[p] < 0:
            raise ArithmeticError(f"eigenvalue product is not divisible by n = {n}")
    return FactoredInteger.from_exponents(exps)


# --- closed forms --------------------------------------------------------------


def complete_bipartite_spectrum(a: int, b: int) -> Spectrum:
    return Spectrum.from_counts(_merge(Counter({a + b: 1, 0: 1}), Counter({b: a - 1}), Counter({a: b - 1})))


def split_spectrum(a: int, b: int) -> Spectrum:
    """Spectrum of K_a joined with a b-vertex coclique."""
    return Spectrum.from_counts(_merge(Counter({a + b: a, 0: 1}), Counter({a: b - 1})))


def cayley_kappa(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1


def complete_bipartite_kappa(a: int, b: int) -> int:
    return b ** (a - 1) * a ** (b - 1)


def split_kappa(a: int, b: int) -> int:
    return (a + b) ** (a - 1) * a ** (b - 1)


# --- realization ---------------------------------------------------------------


def _adjacency(e: GraphExpr) -> np.ndarray:
    if isinstance(e, Complete):
        return ~np.eye(e.n, dtype=bool)
    if isinstance(e, Coclique):
        return np.zeros((e.n, e.n), dtype=bool)
    if isinstance(e, Repeat):
        sub = _adjacency(e.sub)
        return np.kron(np.eye(e.k, dtype=bool), sub).astype(bool)
    a, b = _adjacency(e.left), _adjacency(e.right)
    cross = isinstance(e, Join)
    out = np.full((len(a) + len(b),) * 2, cross, dtype=bool)
    out[: len(a), : len(a)] = a
    out[len(a) :, len(a) :] = b
    return out


def realize(e: GraphExpr, limit: int = REALIZE_LIMIT) -> Graph:
    if e.vertex_count >= limit:
        raise ValueError(f"refusing to realize {e.vertex_count} vertices (limit {limit})")
    return Graph(_adjacency(e))
