"""Integer helpers: totient, primality, trial-division factorization.

`FactoredInteger` is the reporting type used for tree-numbers, which are
usually far too large to print in decimal but always smooth.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_TRIAL_BOUND = 10**6


def trial_bound_from_env() -> int:
    """Factorization bound, overridable with ``KAPPA_TRIAL_BOUND``."""
    raw = os.environ.get("KAPPA_TRIAL_BOUND")
    if not raw:
        return DEFAULT_TRIAL_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError(f"KAPPA_TRIAL_BOUND must be >= 2, got {bound}")
    return bound


@lru_cache(maxsize=8)
def primes_below(bound: int) -> tuple[int, ...]:
    """All primes p < bound (sieve of Eratosthenes)."""
    if bound <= 2:
        return ()
    sieve = np.ones(bound, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def small_factorization(n: int) -> dict[int, int]:
    """Prime factorization of a modest positive integer by trial division."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_base(n: int) -> int | None:
    """Return p if n = p^k with k >= 1, else None."""
    f = small_factorization(n) if n > 1 else {}
    return next(iter(f)) if len(f) == 1 else None


def totient(n: int) -> int:
    """Euler's phi."""
    result = n
    for p in small_factorization(n):
        result = result // p * (p - 1)
    return result


@dataclass(frozen=True)
class FactoredInteger:
    """An exact nonnegative integer as ``prod(p**e) * cofactor``.

    ``factors`` holds (prime, exponent) pairs with strictly increasing primes.
    ``cofactor`` is 1 when the factorization is complete, 0 for the integer 0,
    and otherwise a part with no prime factor below the trial bound.
    """

    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e <= 0 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if self.cofactor < 0:
            raise ValueError("cofactor must be nonnegative")
        if self.cofactor == 0 and self.factors:
            raise ValueError("zero carries no prime factors")

    @classmethod
    def from_exponents(cls, exponents: dict[int, int], cofactor: int = 1) -> "FactoredInteger":
        items = tuple(sorted((p, e) for p, e in exponents.items() if e != 0))
        return cls(items, cofactor)

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def is_complete(self) -> bool:
        return self.cofactor in (0, 1)

    def value(self) -> int:
        if self.cofactor == 0:
            return 0
        v = self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def bit_length_estimate(self) -> float:
        """log2 of the value, without materializing it."""
        if self.cofactor == 0:
            return float("-inf")
        return sum(e * math.log2(p) for p, e in self.factors) + math.log2(self.cofactor)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        if self.cofactor == 0 or other.cofactor == 0:
            return ZERO
        exps = self.exponents
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return FactoredInteger.from_exponents(exps, self.cofactor * other.cofactor)

    def __pow__(self, k: int) -> "FactoredInteger":
        if k < 0:
            raise ValueError("negative powers are not integers")
        if k == 0:
            return ONE
        return FactoredInteger(tuple((p, e * k) for p, e in self.factors), self.cofactor**k)

    def __str__(self) -> str:
        if self.cofactor == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        return " * ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "factors": [[p, e] for p, e in self.factors],
            "cofactor": str(self.cofactor),
            "factored": str(self),
        }


ZERO = FactoredInteger((), 0)
ONE = FactoredInteger((), 1)


def factorize(value: int, trial_bound: int | None = None) -> FactoredInteger:
    """Pull out every prime factor below ``trial_bound`` by trial division.

    A leftover below ``trial_bound**2`` is necessarily prime and is listed as a
    factor; anything larger stays in ``cofactor``.
    """
    if trial_bound is None:
        trial_bound = trial_bound_from_env()
    if trial_bound < 2:
        raise ValueError(f"trial_bound must be >= 2, got {trial_bound}")
    if value < 0:
        raise ValueError("only nonnegative integers are supported")
    if value == 0:
        return ZERO
    exps: dict[int, int] = {}
    n = value
    for p in primes_below(trial_bound):
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        # Peel off big powers first: κ values carry exponents in the thousands.
        chunk, chunk_e = p, 1
        while n % (chunk * chunk) == 0:
            chunk, chunk_e = chunk * chunk, chunk_e * 2
        while chunk_e:
            while n % chunk == 0:
                n //= chunk
                e += chunk_e
            chunk_e //= 2
            chunk = math.isqrt(chunk) if chunk_e else chunk
        exps[p] = e
    if n > 1 and n < trial_bound * trial_bound:
        exps[n] = exps.get(n, 0) + 1
        n = 1
    return FactoredInteger.from_exponents(exps, n)


def parse_factored(text: str) -> FactoredInteger:
    """Inverse of ``str(FactoredInteger)`` for fully factored values."""
    text = text.strip()
    if text == "0":
        return ZERO
    if text == "1":
        return ONE
    exps: dict[int, int] = {}
    for term in text.split("*"):
        base, _, exp = term.strip().partition("^")
        p = int(base)
        exps[p] = exps.get(p, 0) + (int(exp) if exp else 1)
    return FactoredInteger.from_exponents(exps)
