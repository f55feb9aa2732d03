import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from connective.genfun import FactorGenFun, build_D
from connective.poly import Polynomial
from connective.roots import (
    NoPositiveRoot,
    RootInterval,
    cauchy_bound,
    dominant_singularity_check,
    find_z_star,
    positive_root_intervals,
    smallest_positive_root,
    sturm_count,
    validate_z_star,
)

from conftest import G1, Cinf, K

P = Polynomial
TOL = Fraction(1, 10**9)


def from_roots(roots):
    p = P([1])
    for r in roots:
        p = p * P([-r, 1])
    return p


distinct_roots = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=6, unique=True
)


@given(distinct_roots, st.fractions(-6, 6, max_denominator=5), st.fractions(-6, 6, max_denominator=5))
def test_sturm_count_matches_known_roots(roots, a, b):
    a, b = sorted((a, b))
    p = from_roots(roots)
    assert sturm_count(p, a, b) == sum(1 for r in roots if a < r <= b)


@given(distinct_roots, st.integers(1, 2))
def test_sturm_counts_distinct_roots_with_multiplicity(roots, k):
    p = from_roots(roots) ** k
    assert sturm_count(p, Fraction(-6), Fraction(6)) == len(roots)


@given(distinct_roots)
def test_cauchy_bound(roots):
    p = from_roots(roots)
    assert all(abs(r) < cauchy_bound(p) for r in roots)


def test_example_cubic():
    z = smallest_positive_root(P([1, 0, -2, -2]), TOL)
    assert z.width <= TOL
    assert abs(float(z.mid) - 0.565198) < 5e-7
    assert P([1, 0, -2, -2])(z.lo) > 0 > P([1, 0, -2, -2])(z.hi)


def test_example_sextic():
    z = smallest_positive_root(P([1, 0, -11, -38, -66, -60, -24]), TOL)
    assert abs(float(z.mid) - 0.210631) < 5e-7


def test_exact_rational_root():
    z = smallest_positive_root(P([1, 1]) * P([1, -2]))
    assert z.exact and z.lo == Fraction(1, 2)


def test_exact_rational_root_with_rational_coefficients():
    p = P([1, Fraction(-10, 3)]) * P([1, 0, -1])
    z = smallest_positive_root(p)
    assert z.exact and z.lo == Fraction(3, 10)


def test_irrational_root():
    # (2 - z^2)(3 - z): least positive root sqrt(2)
    z = smallest_positive_root(P([2, 0, -1]) * P([3, -1]), Fraction(1, 10**15))
    assert not z.exact
    assert z.lo**2 < 2 < z.hi**2
    assert abs(float(z.mid) - math.sqrt(2)) < 1e-14


def test_no_positive_root():
    with pytest.raises(NoPositiveRoot):
        smallest_positive_root(P([1, 1]))
    with pytest.raises(NoPositiveRoot):
        smallest_positive_root(P([1, 0, 1]))


def test_bad_arguments():
    with pytest.raises(ValueError):
        smallest_positive_root(P([1, -1]), Fraction(0))
    with pytest.raises(ValueError):
        smallest_positive_root(P([-1, 1]))


@given(distinct_roots.filter(lambda rs: any(r > 0 for r in rs)))
def test_least_positive_root_certified(roots):
    # shift sign so p(0) > 0; roots at 0 excluded
    roots = [r for r in roots if r != 0]
    if not any(r > 0 for r in roots):
        return
    p = from_roots(roots)
    if p[0] < 0:
        p = -p
    z = smallest_positive_root(p, Fraction(1, 10**6))
    least = min(r for r in roots if r > 0)
    assert z.lo <= least <= z.hi
    assert sturm_count(p, Fraction(0), z.lo) == (1 if z.exact else 0)
    assert sturm_count(p, Fraction(0), z.hi) == 1


def test_monotone_refinement():
    p = P([1, 0, -11, -38, -66, -60, -24])
    prev = smallest_positive_root(p, Fraction(1, 10))
    for k in range(2, 40):
        cur = smallest_positive_root(p, Fraction(1, 2**k))
        assert prev.lo <= cur.lo <= cur.hi <= prev.hi
        prev = cur


def test_positive_root_intervals_ordered():
    p = from_roots([Fraction(1, 3), Fraction(1, 2), 2, -1])
    ivs = positive_root_intervals(p)
    assert len(ivs) == 3
    assert all(a[1] <= b[0] for a, b in zip(ivs, ivs[1:]))


def test_validate_k2_k3():
    fs = [K(2), K(3)]
    z = smallest_positive_root(build_D(fs))
    checks = validate_z_star(fs, z)
    assert [c.name for c in checks] == [
        "below_factor_radii", "factor_positive", "fixed_point_equation", "simple_zero",
    ]
    assert all(c.passed for c in checks)


def test_validate_diamond_chain_below_pole():
    fs = [G1(), K(4)]
    z, _, _ = find_z_star(fs)
    assert abs(float(z.mid) - 0.203143) < 5e-7
    assert z.hi < fs[0].pole_radius_lower_bound
    assert fs[0].pole_radius_lower_bound <= Fraction(7072, 10000)
    assert all(c.passed for c in validate_z_star(fs, z))


def test_validate_line_exact_fixed_point():
    fs = [K(2), Cinf()]
    z, _, _ = find_z_star(fs)
    assert z.exact and z.lo == Fraction(1, 2)
    # M_1(1/2) = 1/2, M_2(1/2) = 2: 1/3 + 2/3 = 1 exactly
    assert fs[0](z.lo) == Fraction(1, 2) and fs[1](z.lo) == 2
    check = next(c for c in validate_z_star(fs, z) if c.name == "fixed_point_equation")
    assert check.passed


def test_validate_flags_bad_interval():
    fs = [K(2), K(3)]
    z = RootInterval(Fraction(1, 10), Fraction(2, 10))
    checks = {c.name: c for c in validate_z_star(fs, z)}
    assert not checks["fixed_point_equation"].passed


def test_validate_flags_pole():
    fs = [G1(), K(4)]
    z = RootInterval(Fraction(7, 10), Fraction(8, 10))
    checks = {c.name: c for c in validate_z_star(fs, z)}
    assert not checks["below_factor_radii"].passed


def test_dominant_cubic():
    p = P([1, 0, -2, -2])
    z = smallest_positive_root(p)
    res = dominant_singularity_check(p, z)
    assert res.passed and not res.boundary and res.certified
    # product of the three roots is 1/2
    assert abs(res.min_other_modulus - math.sqrt(0.5 / float(z.mid))) < 1e-9


def test_dominant_tree():
    p = P([1, 1]) ** 2 * P([1, -2])
    res = dominant_singularity_check(p, smallest_positive_root(p))
    assert res.passed and not res.boundary
    assert abs(res.min_other_modulus - 1) < 1e-6


def test_dominant_line_boundary():
    p = build_D([K(2), K(2)])
    assert p == P([1, 0, -1])
    res = dominant_singularity_check(p, smallest_positive_root(p))
    assert res.passed and res.boundary
    check = res.as_check()
    assert check.passed and check.flag == "boundary case"


def test_dominant_detects_violation():
    # roots 1/2 and -2/5: the negative root is closer to 0
    p = P([1, -2]) * P([2, 5]) * Fraction(1, 2)
    z = smallest_positive_root(p)
    res = dominant_singularity_check(p, z)
    assert not res.passed


def test_spurious_root_rejected():
    # M_1 = z(1-2z)/(1-2z) left unreduced: the clearing factor 1-2z puts a
    # root at 1/2 that is not a pole of the free-product series
    odd = FactorGenFun(P([0, 1]) * P([1, -2]), P([1, -2]), Fraction(1, 2), "odd")
    fs = [odd, K(2)]
    D = build_D(fs)
    assert D == P([1, -2]) * P([1, 0, -1])
    z, _, notes = find_z_star(fs)
    assert z.exact and z.lo == 1
    assert notes and "rejected" in notes[0]


@settings(deadline=None, max_examples=25)
@given(st.lists(st.integers(2, 5), min_size=2, max_size=4))
def test_complete_products_certified(sizes):
    fs = [K(n) for n in sizes]
    D = build_D(fs)
    z = smallest_positive_root(D, Fraction(1, 10**12))
    assert all(c.passed for c in validate_z_star(fs, z))
    assert D(z.lo) > 0 > D(z.hi) or z.exact
    # numpy as an independent float check of the root
    r = np.polynomial.polynomial.polyroots(D.to_floats())
    pos = min(x.real for x in r if abs(x.imag) < 1e-9 and x.real > 0)
    assert abs(pos - float(z.mid)) < 1e-9
