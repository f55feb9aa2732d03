from fractions import Fraction

import pytest

from connective.asymptotics import (
    NotCertified,
    amplitude,
    amplitude_interval,
    convergence_report,
    exact_ratios,
)
from connective.roots import RootInterval, find_z_star

from conftest import FINITE_SUITE, TIGHT, Cinf, K


def ratio_limit(fs, horizon=60):
    """sigma_n z*^n at large n, from exact series coefficients only."""
    z, _, _ = find_z_star(fs, TIGHT)
    return float(exact_ratios(fs, horizon, z)[-1][1])


# the closed form is trusted only after it reproduces these exactly
def test_amplitude_line():
    fs = [K(2), K(2)]
    z, _, _ = find_z_star(fs)
    a = amplitude_interval(fs, z)
    assert z.exact and a.exact == 2


def test_amplitude_tree():
    fs = [K(2)] * 3
    z, _, _ = find_z_star(fs)
    assert amplitude_interval(fs, z).exact == Fraction(3, 2)


def test_amplitude_tree_via_rational_factor():
    fs = [K(2), Cinf()]
    z, _, _ = find_z_star(fs)
    assert amplitude_interval(fs, z).exact == Fraction(3, 2)


def test_amplitude_k2_k3():
    fs = [K(2), K(3)]
    z, _, _ = find_z_star(fs)
    a = amplitude(fs, z)
    assert abs(a - 1.836) < 1e-3
    assert abs(a - ratio_limit(fs)) < 1e-9


@pytest.mark.parametrize("label", sorted(FINITE_SUITE))
def test_amplitude_matches_ratio_limit(label):
    fs = FINITE_SUITE[label]()
    z, _, _ = find_z_star(fs, TIGHT)
    a = amplitude_interval(fs, z)
    assert a.value > 0
    assert a.lo <= a.hi
    assert abs(a.value - ratio_limit(fs, 80)) < 1e-8 * a.value


def test_amplitude_encloses_midpoint_value():
    fs = [K(2), K(3), K(4)]
    z, _, _ = find_z_star(fs, Fraction(1, 10**6))
    a = amplitude_interval(fs, z)
    assert float(a.lo) <= a.value <= float(a.hi)
    assert float(a.hi - a.lo) < 1e-4


def test_amplitude_rejects_bad_interval():
    fs = [K(2), K(3)]
    with pytest.raises(NotCertified):
        # D~' changes sign around z = 0 (D~'(0) = 0)
        amplitude_interval(fs, RootInterval(Fraction(0), Fraction(1, 10)))


def test_report_tree_exact():
    rep = convergence_report([K(2)] * 3, 20)
    assert all(r == 1.5 for n, r in rep.ratios[1:])
    assert rep.converged and rep.amplitude == 1.5 and rep.mu == 2.0


@pytest.mark.parametrize("fs", [lambda: [K(2), K(3)], lambda: [K(2), K(3), K(4)]])
def test_report_converges(fs):
    fs = fs()
    rep = convergence_report(fs, 30)
    assert rep.converged
    assert abs(rep.ratios[-1][1] - rep.amplitude) < 0.02 * rep.amplitude


def test_report_horizon_guard():
    with pytest.raises(ValueError):
        convergence_report([K(2), K(3)], 5)


def test_tree_ratios_exact_fractions():
    for fs in ([K(2), K(2)], [K(2)] * 3, [K(2)] * 4):
        z, _, _ = find_z_star(fs)
        a = amplitude_interval(fs, z).exact
        assert all(r == a for n, r in exact_ratios(fs, 25, z)[1:])


@pytest.mark.parametrize("label", ["K2*K3", "K2*K3*K4", "K2*K4", "K3*K4", "C2*C5"])
def test_gap_envelope_decays(label):
    # the subdominant poles are complex, so single gaps oscillate; maxima
    # over blocks of 4 consecutive n decrease
    fs = FINITE_SUITE[label]()
    z, _, _ = find_z_star(fs, TIGHT)
    a = amplitude_interval(fs, z)
    mid = (a.lo + a.hi) / 2
    gaps = [abs(r - mid) for n, r in exact_ratios(fs, 58, z)]
    blocks = [max(gaps[n : n + 4]) for n in range(10, 58, 4)]
    assert all(b < a for a, b in zip(blocks, blocks[1:]))
