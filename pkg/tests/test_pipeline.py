import json
from fractions import Fraction

import pytest

from connective.pipeline import connective_constant

from conftest import G1, Cinf, K


def test_result_fields():
    res = connective_constant([K(2), K(3)])
    assert res.certified
    assert res.mu_lo == 1 / res.z_star.hi and res.mu_hi == 1 / res.z_star.lo
    assert res.mu_lo <= Fraction(176929, 100000) + Fraction(5, 10**5)
    assert str(res.witness_poly) == "1 - 2*z^2 - 2*z^3"
    names = [c.name for c in res.diagnostics]
    assert names == [
        "witness_normalised", "least_root_isolated", "below_factor_radii",
        "factor_positive", "fixed_point_equation", "simple_zero", "dominant_singularity",
    ]


def test_json_schema():
    doc = connective_constant([G1(), K(4)]).to_json()
    assert set(doc) == {"certified", "z_star", "mu", "witness_poly", "amplitude", "diagnostics"}
    assert doc["mu"]["value"] == 4.92264
    assert doc["z_star"]["value"] == 0.203143
    assert doc["witness_poly"] == ["1", "0", "-14", "-36", "-60", "-48", "-24"]
    assert all(isinstance(c, str) for c in doc["witness_poly"])
    assert Fraction(doc["mu"]["lo"]) < Fraction(doc["mu"]["hi"])


def test_json_deterministic():
    a = json.dumps(connective_constant([K(2), K(3), K(4)]).to_json())
    b = json.dumps(connective_constant([K(2), K(3), K(4)]).to_json())
    assert a == b


def test_exact_result():
    res = connective_constant([K(2), Cinf()])
    assert res.z_star.exact and res.mu_lo == res.mu_hi == 2
    assert res.to_json()["mu"] == {"lo": "2", "hi": "2", "exact": True, "value": 2.0}


def test_boundary_case_is_certified():
    res = connective_constant([K(2), K(2)])
    assert res.certified
    dom = next(c for c in res.diagnostics if c.name == "dominant_singularity")
    assert dom.passed and dom.flag == "boundary case"


def test_digits():
    doc = connective_constant([K(2), K(3)]).to_json(digits=10)
    assert doc["mu"]["value"] == 1.769292354


@pytest.mark.parametrize("sizes", [(2, 2), (2, 2, 2), (2, 3), (3, 4), (2, 3, 4)])
def test_complete_products_meet_regular_bound(sizes):
    d = sum(n - 1 for n in sizes)
    res = connective_constant([K(n) for n in sizes])
    assert res.mu_hi**2 >= d - 1
    if all(n == 2 for n in sizes):
        assert res.mu_lo == res.mu_hi == d - 1
