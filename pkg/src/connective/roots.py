"""Certified isolation of the least positive zero of the cleared denominator.

Decisions are made with exact rational arithmetic: Sturm sequences for root
counts, bisection on rational endpoints, and monotone interval enclosures for
the side conditions. Floating point is used only by the all-roots modulus
check, which is reported as a diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .genfun import FactorGenFun, build_D
from .poly import Polynomial

__all__ = [
    "Check",
    "NoPositiveRoot",
    "RootInterval",
    "cauchy_bound",
    "dominant_singularity_check",
    "find_z_star",
    "positive_root_intervals",
    "smallest_positive_root",
    "sturm_count",
    "sturm_sequence",
    "validate_z_star",
    "DEFAULT_TOL",
    "DEFAULT_MARGIN",
]

DEFAULT_TOL = Fraction(1, 10**12)
DEFAULT_MARGIN = 1e-6


class NoPositiveRoot(ValueError):
    pass


@dataclass(frozen=True)
class RootInterval:
    """``[lo, hi]`` holding exactly one real root; ``lo == hi`` for an exact rational root."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def reciprocal(self) -> tuple[Fraction, Fraction]:
        return 1 / self.hi, 1 / self.lo


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    flag: str = ""


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r)
    return seq


def _variations(seq: Sequence[Polynomial], x: Fraction) -> int:
    signs = [s for s in (q(x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(p: Polynomial, a: Fraction, b: Fraction, seq: Sequence[Polynomial] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``."""
    if a >= b:
        return 0
    seq = seq if seq is not None else sturm_sequence(p.squarefree())
    return _variations(seq, a) - _variations(seq, b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """Every root ``x`` satisfies ``|x| < 1 + max |c_k / c_deg|``."""
    lead = p.lead
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def _rational_root_near(p: Polynomial, lo: Fraction, hi: Fraction, max_den: int) -> Fraction | None:
    cand = ((lo + hi) / 2).limit_denominator(max_den)
    if lo <= cand <= hi and p(cand) == 0:
        return cand
    return None


def _refine(sf: Polynomial, lo: Fraction, hi: Fraction, tol: Fraction) -> RootInterval:
    """Bisect an isolating interval ``(lo, hi]`` of a squarefree polynomial.

    A rational root ``p/q`` of an integer polynomial has ``q | lead``, and two
    such candidates are at least ``1/lead**2`` apart, so once the interval is
    narrower than ``1/(2 lead**2)`` the closest fraction with denominator at
    most ``|lead|`` is the only possible rational root.
    """
    # clear denominators so the lead coefficient is an integer
    den = math.lcm(*(c.denominator for c in sf.coeffs))
    ip = Polynomial([c * den for c in sf.coeffs])
    content = math.gcd(*(int(c) for c in ip.coeffs))
    ip = Polynomial([c / content for c in ip.coeffs])
    lead = abs(int(ip.lead))
    detect_width = Fraction(1, 2 * lead * lead)
    if sf(hi) == 0:
        return RootInterval(hi, hi)
    # one simple root in (lo, hi]: the sign just right of lo is opposite to hi
    s_lo = not sf(hi) > 0
    checked = False
    while True:
        width = hi - lo
        if not checked and width < detect_width:
            checked = True
            r = _rational_root_near(ip, lo, hi, lead)
            if r is not None:
                return RootInterval(r, r)
        if width <= tol and checked:
            return RootInterval(lo, hi)
        mid = (lo + hi) / 2
        v = sf(mid)
        if v == 0:
            return RootInterval(mid, mid)
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid


def positive_root_intervals(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals ``(lo, hi]`` of all positive roots, increasing."""
    sf = p.squarefree()
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(0), bound)]
    while stack:
        a, b = stack.pop()
        n = sturm_count(sf, a, b, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        stack += [(m, b), (a, m)]
    return sorted(out)


def smallest_positive_root(p: Polynomial, tol: Fraction = DEFAULT_TOL, skip: int = 0) -> RootInterval:
    """Certified interval of width <= ``tol`` around the least positive root of ``p``.

    ``skip`` selects the (skip+1)-th positive root instead. Requires
    ``p(0) > 0`` so that the interval brackets a sign change from + to -
    whenever the root is simple.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p[0] <= 0:
        raise ValueError(f"polynomial must be positive at 0, got {p[0]}")
    intervals = positive_root_intervals(p)
    if len(intervals) <= skip:
        raise NoPositiveRoot(f"{p} has no positive real root" + (f" beyond #{skip}" if skip else ""))
    lo, hi = intervals[skip]
    return _refine(p.squarefree(), lo, hi, tol)


def _vanishes_in(p: Polynomial, D: Polynomial, z: RootInterval) -> bool:
    """Does the root of ``D`` isolated by ``z`` also annihilate ``p``?"""
    g = p.gcd(D)
    if g.degree <= 0:
        return False
    if z.exact:
        return g(z.lo) == 0
    return sturm_count(g, z.lo, z.hi) > 0 or g(z.lo) == 0


def find_z_star(factors: Sequence[FactorGenFun], tol: Fraction = DEFAULT_TOL) -> tuple[RootInterval, Polynomial, list[str]]:
    """Least positive zero of ``D~`` that is not an artefact of clearing denominators.

    Returns the interval, ``D~`` and notes on any rejected candidates.
    """
    D = build_D(factors)
    notes = []
    k = 0
    while True:
        z = smallest_positive_root(D, tol, skip=k)
        spurious = [
            f"{f}" for f in factors
            if not f.is_polynomial and (_vanishes_in(f.denominator, D, z) or _vanishes_in(f.B, D, z))
        ]
        if not spurious:
            return z, D, notes
        notes.append(f"rejected root near {float(z.mid):.6g}: denominator of {', '.join(spurious)} vanishes")
        k += 1


def _enclose_factor(f: FactorGenFun, z: RootInterval) -> tuple[Fraction, Fraction]:
    plo, phi = f.numerator.enclose(z.lo, z.hi)
    qlo, qhi = f.denominator.enclose(z.lo, z.hi)
    if qlo <= 0:
        raise ZeroDivisionError("denominator enclosure contains 0")
    cands = [plo / qlo, plo / qhi, phi / qlo, phi / qhi]
    return min(cands), max(cands)


def validate_z_star(factors: Sequence[FactorGenFun], z: RootInterval) -> list[Check]:
    """Side conditions for ``z`` to be the radius of the free-product series.

    (a) below every factor's pole radius, (b) each ``M_i > 0``,
    (c) ``sum M_i / (1 + M_i)`` encloses 1, (d) ``D~' < 0`` on the interval.
    """
    checks = []
    bad = [str(f) for f in factors if not z.hi < f.pole_radius_lower_bound]
    checks.append(Check(
        "below_factor_radii", not bad,
        "z* < min R(M_i)" if not bad else f"z* not below pole radius of {', '.join(bad)}",
    ))
    try:
        encs = [_enclose_factor(f, z) for f in factors]
    except ZeroDivisionError as exc:
        checks.append(Check("factor_positive", False, str(exc)))
        checks.append(Check("fixed_point_equation", False, str(exc)))
    else:
        neg = [str(f) for f, (lo, _) in zip(factors, encs) if lo <= 0]
        checks.append(Check(
            "factor_positive", not neg,
            "M_i(z*) > 0 for all i" if not neg else f"M not positive for {', '.join(neg)}",
        ))
        if not neg:
            # t -> t / (1 + t) is increasing for t > 0
            s_lo = sum(lo / (1 + lo) for lo, _ in encs)
            s_hi = sum(hi / (1 + hi) for _, hi in encs)
            ok = s_lo <= 1 <= s_hi
            checks.append(Check(
                "fixed_point_equation", ok,
                f"sum M_i/(1+M_i) in [{float(s_lo):.12g}, {float(s_hi):.12g}]",
            ))
        else:
            checks.append(Check("fixed_point_equation", False, "factor enclosure not positive"))
    D = build_D(factors)
    dlo, dhi = D.derivative().enclose(z.lo, z.hi)
    checks.append(Check(
        "simple_zero", dhi < 0,
        f"D~' in [{float(dlo):.6g}, {float(dhi):.6g}]",
    ))
    return checks


def _polish(coeffs: np.ndarray, x: complex, steps: int = 8) -> tuple[complex, float]:
    dp = np.polynomial.polynomial.polyder(coeffs)
    for _ in range(steps):
        v = np.polynomial.polynomial.polyval(x, coeffs)
        d = np.polynomial.polynomial.polyval(x, dp)
        if d == 0:
            break
        x = x - v / d
    scale = np.polynomial.polynomial.polyval(abs(x), np.abs(coeffs))
    return x, abs(np.polynomial.polynomial.polyval(x, coeffs)) / scale


@dataclass(frozen=True)
class SingularityCheck:
    passed: bool
    boundary: bool
    certified: bool
    min_other_modulus: float
    detail: str = field(default="")

    def as_check(self) -> Check:
        return Check("dominant_singularity", self.passed and self.certified, self.detail,
                     "boundary case" if self.boundary else ("" if self.certified else "non-certified"))


def dominant_singularity_check(p: Polynomial, z: RootInterval, margin: float = DEFAULT_MARGIN) -> SingularityCheck:
    """All roots of ``p`` other than the one in ``z`` have modulus >= ``z.hi (1 + margin)``.

    Roots come from companion-matrix eigenvalues, Newton-polished. A root
    with modulus equal to ``z*`` up to the margin is reported as a boundary
    case, not a failure.
    """
    coeffs = np.array(p.to_floats())
    if len(coeffs) <= 2:
        return SingularityCheck(True, False, True, math.inf, "no other roots")
    raw = np.polynomial.polynomial.polyroots(coeffs)
    roots, worst = [], 0.0
    for r in raw:
        x, res = _polish(coeffs, complex(r))
        roots.append(x)
        worst = max(worst, res)
    certified = bool(worst < 1e-8)
    zf_lo, zf_hi = float(z.lo), float(z.hi)
    slack = max(1e-9, 4 * (zf_hi - zf_lo))
    # drop the root sitting in z (closest real root)
    idx = min(range(len(roots)), key=lambda k: abs(roots[k] - float(z.mid)))
    if abs(roots[idx].imag) > slack or not (zf_lo - slack <= roots[idx].real <= zf_hi + slack):
        return SingularityCheck(False, False, False, math.nan,
                                f"no numerical root found in z* interval (nearest {roots[idx]:.6g})")
    others = [abs(x) for k, x in enumerate(roots) if k != idx]
    m = float(min(others))
    need = zf_hi * (1 + margin)
    if m >= need:
        return SingularityCheck(True, False, certified, m,
                                f"min other root modulus {m:.6g} > z* = {zf_hi:.6g}")
    if m >= zf_lo * (1 - margin):
        return SingularityCheck(True, True, certified, m,
                                f"other root of modulus {m:.6g} equal to z* (boundary case)")
    return SingularityCheck(False, False, certified, m,
                            f"other root of modulus {m:.6g} < z* = {zf_hi:.6g}")
