"""Amplitude of ``sigma_n ~ A mu^n`` and ratio diagnostics.

Near the simple pole ``z*`` the free-product series behaves like
``N~(z*) / (D~'(z*) (z - z*))``, and extracting the n-th coefficient of that
term gives

    A = -N~(z*) / (z* D~'(z*)),      N~ = prod_i B_i.

The clearing factor ``prod Q_i`` cancels between numerator and denominator,
so the cleared polynomials can be used directly. This closed form is
checked against ``sigma_n mu^-n`` from the exact series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .genfun import FactorGenFun, build_D, build_N, expand_M
from .roots import DEFAULT_TOL, RootInterval, find_z_star

__all__ = [
    "AmplitudeEstimate",
    "AsymptoticReport",
    "NotCertified",
    "amplitude",
    "amplitude_interval",
    "convergence_report",
]

GAMMA = 1  # sigma_n ~ A mu^n n^(gamma - 1)


class NotCertified(ValueError):
    pass


@dataclass(frozen=True)
class AmplitudeEstimate:
    value: float
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None


def amplitude_interval(factors: Sequence[FactorGenFun], z: RootInterval) -> AmplitudeEstimate:
    """Enclosure of ``A`` over the whole ``z`` interval plus the midpoint value."""
    num, _ = build_N(factors)
    dD = build_D(factors).derivative()
    if z.exact:
        d = dD(z.lo)
        if d >= 0:
            raise NotCertified(f"D~'(z*) = {d} is not negative")
        a = -num(z.lo) / (z.lo * d)
        return AmplitudeEstimate(float(a), a, a, a)
    dlo, dhi = dD.enclose(z.lo, z.hi)
    if dhi >= 0:
        raise NotCertified("derivative enclosure of D~ contains 0")
    nlo, nhi = num.enclose(z.lo, z.hi)
    if nlo <= 0:
        raise NotCertified("N~ enclosure is not positive")
    lo = nlo / (z.hi * -dlo)
    hi = nhi / (z.lo * -dhi)
    m = z.mid
    return AmplitudeEstimate(float(-num(m) / (m * dD(m))), lo, hi)


def amplitude(factors: Sequence[FactorGenFun], z: RootInterval) -> float:
    return amplitude_interval(factors, z).value


@dataclass(frozen=True)
class AsymptoticReport:
    amplitude: float
    ratios: list[tuple[int, float]]
    converged: bool
    mu: float

    def gaps(self) -> list[tuple[int, float]]:
        return [(n, abs(r - self.amplitude)) for n, r in self.ratios]


def exact_ratios(
    factors: Sequence[FactorGenFun], horizon: int, z: RootInterval
) -> list[tuple[int, Fraction]]:
    """``sigma_n z^n`` at the interval midpoint, in exact arithmetic."""
    s = expand_M(factors, horizon)
    m = z.mid
    return [(n, s[n] * m**n) for n in range(horizon + 1)]


def convergence_report(
    factors: Sequence[FactorGenFun], horizon: int, tol: Fraction = DEFAULT_TOL
) -> AsymptoticReport:
    """Ratios ``sigma_n mu^-n`` for ``n <= horizon`` against the closed-form amplitude.

    Converged means the last two ratios agree to 1% and the last is within 2%
    of the amplitude.
    """
    if horizon < 10:
        raise ValueError("horizon must be >= 10")
    z, _, _ = find_z_star(factors, tol)
    a = amplitude(factors, z)
    ratios = [(n, float(r)) for n, r in exact_ratios(factors, horizon, z)]
    r1, r2 = ratios[-2][1], ratios[-1][1]
    converged = abs(r2 - r1) < 0.01 * abs(r2) and abs(r2 - a) < 0.02 * a
    return AsymptoticReport(a, ratios, converged, float(1 / z.mid))
