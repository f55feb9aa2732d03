from fractions import Fraction

import pytest

from connective import (
    build_complete,
    build_cycle,
    factor_genfun,
    genfun_from_rational,
)
from connective.poly import Polynomial


def _cycle(n):
    return build_complete(2) if n == 2 else build_cycle(n)


def K(n):
    return factor_genfun(build_complete(n))


def C(n):
    return factor_genfun(_cycle(n))


def G1():
    """Infinite diamond chain: (4z+4z^2+4z^3)/(1-2z^2)."""
    return genfun_from_rational(Polynomial([0, 4, 4, 4]), Polynomial([1, 0, -2]), "G1")


def Cinf():
    return genfun_from_rational(Polynomial([0, 2]), Polynomial([1, -1]), "Cinf")


# finite-factor products as graphs, for brute force
FINITE_GRAPHS = {
    "K2*K3": lambda: [build_complete(2), build_complete(3)],
    "K2*K4": lambda: [build_complete(2), build_complete(4)],
    "K3*K4": lambda: [build_complete(3), build_complete(4)],
    "K2*K3*K4": lambda: [build_complete(2), build_complete(3), build_complete(4)],
    "K2*K2": lambda: [build_complete(2), build_complete(2)],
    "K2*K2*K2": lambda: [build_complete(2)] * 3,
    "C2*C5": lambda: [_cycle(2), _cycle(5)],
}

FINITE_SUITE = {
    label: (lambda make=make: [factor_genfun(g) for g in make()])
    for label, make in FINITE_GRAPHS.items()
}

RATIONAL_SUITE = {
    "G1*K4": lambda: [G1(), K(4)],
    "K2*Cinf": lambda: [K(2), Cinf()],
}

FULL_SUITE = {**FINITE_SUITE, **RATIONAL_SUITE}


@pytest.fixture(params=sorted(FULL_SUITE))
def product(request):
    return request.param, FULL_SUITE[request.param]()


@pytest.fixture(params=sorted(FINITE_SUITE))
def finite_product(request):
    return request.param, FINITE_SUITE[request.param]()


TIGHT = Fraction(1, 10**40)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: package exit criteria")
    config.addinivalue_line("markers", "criterion(label): one acceptance criterion")


_CRITERIA = []


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = dict(report.user_properties).get("criterion")
        if label:
            _CRITERIA.append((report.passed, label))


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark:
        item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for passed, label in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
