"""Exact spanning-tree counts via the matrix-tree theorem.

The count is the determinant of the Laplacian with the row and column of
vertex 0 removed. Two exact routes compute it:

* ``bareiss``: fraction-free Gaussian elimination over Python integers.
* ``modular``: determinants modulo word-sized primes, recombined by the
  Chinese remainder theorem until the product of moduli exceeds the
  Hadamard bound of the matrix.

Both return the same integer for every input; tests hold them to that.
"""

from __future__ import annotations

import math

import numpy as np

from .arith import FactoredInteger, factorize
from .graphs import Graph

__all__ = [
    "bareiss_determinant",
    "modular_determinant",
    "reduced_laplacian",
    "tree_number",
    "factorize",
    "FactoredInteger",
    "count_spanning_trees_brute",
]

_MODULUS_CEILING = 2**31


def reduced_laplacian(g: Graph) -> np.ndarray:
    return g.laplacian()[1:, 1:]


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix.

    Pivot is the first nonzero entry in the current column; every division is
    exact by Sylvester's identity.
    """
    m = [[int(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        pivot_tail = m[k][k + 1 :]
        for i in range(k + 1, n):
            row = m[i]
            f = row[k]
            tail = row[k + 1 :]
            if f == 0:
                if pivot == prev:
                    new = tail
                else:
                    new = [pivot * x // prev for x in tail]
            elif prev == 1:
                new = [pivot * x - f * y for x, y in zip(tail, pivot_tail)]
            else:
                new = [(pivot * x - f * y) // prev for x, y in zip(tail, pivot_tail)]
            row[k + 1 :] = new
        prev = pivot
    return sign * m[n - 1][n - 1]


def _is_prime_32(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # bases 2, 7, 61 are deterministic below 4.7e9
    for a in (2, 7, 61):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _moduli():
    p = _MODULUS_CEILING - 1
    while True:
        if _is_prime_32(p):
            yield p
        p -= 2


def _det_mod(matrix: np.ndarray, p: int) -> int:
    a = np.mod(matrix, p).astype(np.int64)
    n = a.shape[0]
    det = 1
    for k in range(n):
        col = a[k:, k]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return 0
        j = k + int(nz[0])
        if j != k:
            a[[k, j]] = a[[j, k]]
            det = -det
        pivot = int(a[k, k])
        det = det * pivot % p
        if k + 1 == n:
            break
        inv = pow(pivot, -1, p)
        factors = a[k + 1 :, k] * inv % p
        a[k + 1 :, k + 1 :] = (a[k + 1 :, k + 1 :] - np.outer(factors, a[k, k + 1 :]) % p) % p
    return det % p


def hadamard_bound(matrix: np.ndarray) -> int:
    """Integer upper bound on |det| from the product of row norms."""
    sq = 1
    for row in np.asarray(matrix, dtype=object):
        sq *= int(sum(int(x) * int(x) for x in row))
    return math.isqrt(sq) + 1


def modular_determinant(matrix, nonnegative: bool = True) -> int:
    """Exact determinant by CRT over 31-bit primes, certified by Hadamard's bound.

    With ``nonnegative`` the result is read from [0, M); otherwise from the
    symmetric range, which costs one extra bit of modulus.
    """
    a = np.asarray(matrix, dtype=np.int64)
    if a.shape[0] == 0:
        return 1
    bound = hadamard_bound(a)
    target = bound if nonnegative else 2 * bound
    x, modulus = 0, 1
    for p in _moduli():
        r = _det_mod(a, p)
        t = (r - x) * pow(modulus, -1, p) % p
        x += modulus * t
        modulus *= p
        if modulus > target:
            break
    if not nonnegative and x > modulus // 2:
        x -= modulus
    return x


def tree_number(g: Graph, method: str = "bareiss") -> int:
    """Number of spanning trees of ``g`` (0 when disconnected)."""
    if g.n == 1:
        return 1
    if not g.is_connected():
        return 0
    lap = reduced_laplacian(g)
    if method == "bareiss":
        det = bareiss_determinant(lap.tolist())
    elif method == "modular":
        det = modular_determinant(lap)
    else:
        raise ValueError(f"unknown method {method!r}")
    # The reduced Laplacian is positive semidefinite.
    assert det >= 0
    return abs(det)


def count_spanning_trees_brute(g: Graph) -> int:
    """Enumerate spanning trees one by one (include/exclude each edge).

    Independent of any linear algebra; only for graphs with a handful of
    vertices, since the work is proportional to the number of trees.
    """
    n = g.n
    edges = g.edges()
    m = len(edges)

    def walk(pos: int, comp: list[int], picked: int) -> int:
        if picked == n - 1:
            return 1
        if m - pos < n - 1 - picked:
            return 0
        u, v = edges[pos]
        total = walk(pos + 1, comp, picked)
        cu, cv = comp[u], comp[v]
        if cu != cv:
            merged = [cu if c == cv else c for c in comp]
            total += walk(pos + 1, merged, picked + 1)
        return total

    return walk(0, list(range(n)), 0)
