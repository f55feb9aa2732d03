"""End-to-end computation of the connective constant of a free product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .asymptotics import AmplitudeEstimate, NotCertified, amplitude_interval
from .genfun import FactorGenFun
from .poly import Polynomial, coeffs_to_json
from .roots import (
    DEFAULT_MARGIN,
    DEFAULT_TOL,
    Check,
    RootInterval,
    dominant_singularity_check,
    find_z_star,
    sturm_count,
    validate_z_star,
)

__all__ = ["ConnectiveResult", "connective_constant", "isolation_check"]


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _g(x: float, digits: int) -> float:
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class ConnectiveResult:
    z_star: RootInterval
    witness_poly: Polynomial
    amplitude: AmplitudeEstimate | None
    diagnostics: tuple[Check, ...]

    @property
    def mu_lo(self) -> Fraction:
        return 1 / self.z_star.hi

    @property
    def mu_hi(self) -> Fraction:
        return 1 / self.z_star.lo

    @property
    def mu(self) -> float:
        return float((self.mu_lo + self.mu_hi) / 2)

    @property
    def certified(self) -> bool:
        return all(c.passed for c in self.diagnostics)

    def to_json(self, digits: int = 6) -> dict:
        z = self.z_star
        out = {
            "certified": self.certified,
            "z_star": {"lo": _q(z.lo), "hi": _q(z.hi), "exact": z.exact, "value": _g(float(z.mid), digits)},
            "mu": {"lo": _q(self.mu_lo), "hi": _q(self.mu_hi), "exact": z.exact, "value": _g(self.mu, digits)},
            "witness_poly": coeffs_to_json(self.witness_poly),
            "amplitude": None,
            "diagnostics": [
                {"name": c.name, "passed": c.passed, "detail": c.detail, **({"flag": c.flag} if c.flag else {})}
                for c in self.diagnostics
            ],
        }
        if self.amplitude is not None:
            a = self.amplitude
            out["amplitude"] = {
                "value": _g(a.value, digits),
                "lo": _g(float(a.lo), digits),
                "hi": _g(float(a.hi), digits),
            }
        return out


def isolation_check(D: Polynomial, z: RootInterval) -> Check:
    """Sturm counts certify ``z`` holds the least positive root of ``D``."""
    if z.exact:
        ok = D(z.lo) == 0 and sturm_count(D, Fraction(0), z.lo) == 1
        detail = f"exact root {_q(z.lo)}"
    else:
        below = sturm_count(D, Fraction(0), z.lo)
        upto = sturm_count(D, Fraction(0), z.hi)
        ok = below == 0 and upto == 1 and D(z.lo) > 0 > D(z.hi)
        detail = f"roots in (0, lo]: {below}, in (0, hi]: {upto}"
    return Check("least_root_isolated", ok, detail)


def connective_constant(
    factors: Sequence[FactorGenFun],
    tol: Fraction = DEFAULT_TOL,
    margin: float = DEFAULT_MARGIN,
) -> ConnectiveResult:
    """Certified ``z*`` and ``mu = 1/z*`` with all side-condition diagnostics."""
    z, D, notes = find_z_star(factors, Fraction(tol))
    checks = [Check("witness_normalised", D[0] == 1, f"D~(0) = {_q(D[0])}")]
    checks.append(isolation_check(D, z))
    checks += validate_z_star(factors, z)
    checks.append(dominant_singularity_check(D, z, margin).as_check())
    for note in notes:
        checks.append(Check("spurious_root_rejected", True, note))
    try:
        amp = amplitude_interval(factors, z)
    except NotCertified as exc:
        amp = None
        checks.append(Check("amplitude", False, str(exc)))
    return ConnectiveResult(z, D, amp, tuple(checks))
