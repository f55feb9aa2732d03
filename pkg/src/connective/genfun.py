"""SAW generating functions of factors and of their free product.

A factor is described by ``M_i = P_i / Q_i`` (``Q_i = 1`` for finite graphs),
the series whose n-th coefficient counts n-step SAWs from the factor root.
For the free product the walk generating function satisfies

    M = 1 / (1 - sum_i M_i / (1 + M_i)),

and its dominant pole is the least positive zero of the cleared denominator

    D~ = prod_i B_i - sum_i P_i prod_{j != i} B_j,     B_i = Q_i + P_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, TruncatedSeries
from .walks import SawCounts

__all__ = [
    "FactorGenFun",
    "GenFunError",
    "build_D",
    "build_N",
    "expand_M",
    "expand_M_star",
    "factor_series",
    "genfun_from_counts",
    "genfun_from_rational",
    "NONNEG_CHECK_DEPTH",
    "SERIES_ORDER",
]

NONNEG_CHECK_DEPTH = 64
SERIES_ORDER = 64


class GenFunError(ValueError):
    pass


@dataclass(frozen=True)
class FactorGenFun:
    """``M_i(z) = numerator / denominator`` with ``P(0) = 0`` and ``Q(0) = 1``.

    ``pole_radius_lower_bound`` is ``math.inf`` for polynomial factors and a
    rational lower bound on the least positive pole otherwise.
    """

    numerator: Polynomial
    denominator: Polynomial
    pole_radius_lower_bound: Fraction | float = math.inf
    name: str = ""

    @property
    def is_polynomial(self) -> bool:
        return self.denominator == 1

    @property
    def B(self) -> Polynomial:
        """Cleared ``1 + M_i``, i.e. ``Q_i + P_i``."""
        return self.denominator + self.numerator

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_rational(self.numerator, self.denominator, order)

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    def __str__(self) -> str:
        if self.name:
            return self.name
        if self.is_polynomial:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def genfun_from_counts(counts: SawCounts | Sequence[int], name: str = "") -> FactorGenFun:
    """Polynomial ``sum_{n>=1} counts[n] z^n`` of a finite factor."""
    cs = list(counts.counts if isinstance(counts, SawCounts) else counts)
    num = Polynomial([0] + cs[1:])
    if not num:
        raise GenFunError("factor has no walk of length >= 1")
    return FactorGenFun(num, Polynomial([1]), math.inf, name)


def genfun_from_rational(
    num: Polynomial, den: Polynomial, name: str = "", check_depth: int = NONNEG_CHECK_DEPTH
) -> FactorGenFun:
    """Validate and normalise a user-supplied rational SAW generating function.

    The nonnegativity scan to ``check_depth`` is a guard only; it cannot prove
    the input really counts walks on a quasi-transitive graph.
    """
    from .roots import NoPositiveRoot, smallest_positive_root

    if den[0] == 0:
        raise GenFunError("denominator vanishes at z = 0")
    scale = den[0]
    num = Polynomial([c / scale for c in num.coeffs])
    den = Polynomial([c / scale for c in den.coeffs])
    g = num.gcd(den)
    if g.degree > 0:
        # cancel a common factor; g(0) != 0 because den(0) != 0
        g = Polynomial([c / g[0] for c in g.coeffs])
        num, den = num // g, den // g
    if num[0] != 0:
        raise GenFunError(f"M(0) must be 0, got constant term {num[0]}")
    if not num:
        raise GenFunError("zero generating function")
    s = TruncatedSeries.from_rational(num, den, check_depth)
    for n, c in enumerate(s):
        if c < 0 or c.denominator != 1:
            raise GenFunError(f"series coefficient {n} is {c}, not a nonnegative integer")
    if den.degree == 0:
        bound: Fraction | float = math.inf
    else:
        # series has nonnegative coefficients, so its radius is the least
        # positive pole (Pringsheim)
        try:
            bound = smallest_positive_root(den, Fraction(1, 10**12)).lo
        except NoPositiveRoot:
            raise GenFunError("denominator has no positive zero; nonnegative series impossible") from None
    return FactorGenFun(num, den, bound, name)


def _check_count(factors: Sequence[FactorGenFun]) -> None:
    if len(factors) < 2:
        raise GenFunError(f"a free product needs at least 2 factors, got {len(factors)}")


def build_N(factors: Sequence[FactorGenFun]) -> tuple[Polynomial, Polynomial]:
    """``N = prod (1 + M_i)`` as (numerator, denominator) = (prod B_i, prod Q_i)."""
    _check_count(factors)
    num, den = Polynomial([1]), Polynomial([1])
    for f in factors:
        num = num * f.B
        den = den * f.denominator
    return num, den


def build_D(factors: Sequence[FactorGenFun]) -> Polynomial:
    """Cleared denominator ``prod B_i - sum_i P_i prod_{j != i} B_j``; ``D~(0) = 1``."""
    _check_count(factors)
    Bs = [f.B for f in factors]
    out = Polynomial([1])
    for b in Bs:
        out = out * b
    for i, f in enumerate(factors):
        term = f.numerator
        for j, b in enumerate(Bs):
            if j != i:
                term = term * b
        out = out - term
    return out


def factor_series(factors: Sequence[FactorGenFun], order: int) -> list[TruncatedSeries]:
    return [f.series(order) for f in factors]


def _ratio_terms(ms: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
    # M_i / (1 + M_i)
    return [m * (m + 1).reciprocal() for m in ms]


def expand_M(factors: Sequence[FactorGenFun], order: int) -> TruncatedSeries:
    """Walk counts of the free product through ``z**order`` (exact)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    ms = factor_series(factors, order)
    total = TruncatedSeries([], order)
    for t in _ratio_terms(ms):
        total = total + t
    return (1 - total).reciprocal()


def expand_M_star(factors: Sequence[FactorGenFun], i: int, order: int) -> TruncatedSeries:
    """Series of walks that visit ``V_i^x``; ``i`` is 1-based.

    Uses ``M_i^* = M * M_i / (1 + M_i)``.
    """
    if not 1 <= i <= len(factors):
        raise IndexError(f"factor index {i} out of range 1..{len(factors)}")
    m = factors[i - 1].series(order)
    return expand_M(factors, order) * m * (m + 1).reciprocal()
