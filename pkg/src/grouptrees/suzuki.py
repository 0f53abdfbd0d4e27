"""Tree-numbers of commuting graphs of the Suzuki groups Sz(q), q = 2^(2n+1).

Sz(q) is never built as a group. Its commuting graph is the identity joined
to a disjoint union of pieces coming from the TI-subgroups: q^2+1 copies of
the Sylow 2-subgroup minus the identity, and the nonidentity parts of the
cyclic subgroups of orders q-1, q-r+1 and q+r+1.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .arith import ONE, FactoredInteger, small_factorization
from .spectra import Complete, GraphExpr, Join, Repeat, union


@dataclass(frozen=True)
class SuzukiParams:
    n: int
    q: int
    r: int
    alpha: int
    beta: int
    order: int
    p_cosets: int
    a: int
    b: int
    c: int

    def partition_total(self) -> int:
        """Element count of the union of all conjugate TI-subgroups."""
        q = self.q
        return (
            1
            + self.p_cosets * (q * q - 1)
            + self.a * (q - 2)
            + self.b * (self.alpha - 1)
            + self.c * (self.beta - 1)
        )

    def to_json(self) -> dict:
        return asdict(self)


def suzuki_params(n: int) -> SuzukiParams:
    if n < 1:
        raise ValueError(f"Suzuki parameter n must be >= 1, got {n}")
    q = 2 ** (2 * n + 1)
    r = 2 ** (n + 1)
    alpha, beta = q - r + 1, q + r + 1
    order = q * q * (q - 1) * (q * q + 1)
    a_num, b_num, c_num = q * q * (q * q + 1), q * q * (q - 1) * beta, q * q * (q - 1) * alpha
    assert a_num % 2 == 0 and b_num % 4 == 0 and c_num % 4 == 0
    params = SuzukiParams(
        n=n, q=q, r=r, alpha=alpha, beta=beta, order=order,
        p_cosets=q * q + 1, a=a_num // 2, b=b_num // 4, c=c_num // 4,
    )
    assert order == q * q * (q - 1) * alpha * beta
    assert params.partition_total() == order
    return params


def _n_from_q(q: int) -> int:
    """Inverse of q = 2^(2n+1); raises unless q has that form with n >= 1."""
    if q < 8 or q & (q - 1):
        raise ValueError(f"q must be 2^(2n+1) >= 8, got {q}")
    k = q.bit_length() - 1
    if k % 2 == 0:
        raise ValueError(f"q must be an odd power of 2, got 2^{k}")
    return (k - 1) // 2


def kappa_sylow_closed(q: int) -> FactoredInteger:
    """2^((q-1)^2) * q^(q^2+q-3), all in base 2."""
    n = _n_from_q(q)
    return FactoredInteger(((2, (q - 1) ** 2 + (2 * n + 1) * (q * q + q - 3)),))


def sylow_commuting_expr(q: int) -> GraphExpr:
    """Center K_q joined to q-1 cliques K_q, one per centralizer coset class."""
    _n_from_q(q)
    return Join(Complete(q), Repeat(q - 1, Complete(q)))


def sylow_punctured_expr(q: int) -> GraphExpr:
    """Commuting graph of the Sylow 2-subgroup with the identity removed."""
    _n_from_q(q)
    return Join(Complete(q - 1), Repeat(q - 1, Complete(q)))


def suzuki_commuting_expr(q: int) -> GraphExpr:
    s = suzuki_params(_n_from_q(q))
    pieces = union(
        Repeat(s.p_cosets, sylow_punctured_expr(q)),
        Repeat(s.a, Complete(q - 2)),
        Repeat(s.b, Complete(s.alpha - 1)),
        Repeat(s.c, Complete(s.beta - 1)),
    )
    return Join(Complete(1), pieces)


def _factored_power(base: int, exponent: int) -> FactoredInteger:
    if exponent == 0:
        return ONE
    return FactoredInteger.from_exponents({p: e * exponent for p, e in small_factorization(base).items()})


def kappa_suzuki_closed(q: int) -> FactoredInteger:
    s = suzuki_params(_n_from_q(q))
    return (
        kappa_sylow_closed(q) ** s.p_cosets
        * _factored_power(q - 1, (q - 3) * s.a)
        * _factored_power(s.alpha, (s.alpha - 2) * s.b)
        * _factored_power(s.beta, (s.beta - 2) * s.c)
    )


def suzuki_report(n: int) -> dict:
    """Parameters and both closed forms, in factored notation."""
    s = suzuki_params(n)
    return {
        **s.to_json(),
        "kappa_sylow": str(kappa_sylow_closed(s.q)),
        "kappa_suzuki": str(kappa_suzuki_closed(s.q)),
    }


__all__ = [
    "SuzukiParams",
    "suzuki_params",
    "kappa_sylow_closed",
    "sylow_commuting_expr",
    "sylow_punctured_expr",
    "suzuki_commuting_expr",
    "kappa_suzuki_closed",
    "suzuki_report",
]
