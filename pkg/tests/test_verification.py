import numpy as np
import pytest

from disent.service.exceptions import DomainError
from disent.service.model import GaussianParams, PhysicalConstants
from disent.service.oracles import relative_deviation, verify_closed_forms

NATURAL = PhysicalConstants()


def test_relative_deviation():
    assert relative_deviation(1.1, 1.0) == pytest.approx(0.1)
    assert relative_deviation(-2.0, -1.0) == 1.0
    assert relative_deviation(1e-3, 0.0) == 1e-3


def _grid(n, seed=11):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        a11 = rng.uniform(0.5, 4.0)
        ratio = rng.uniform(0.05, 0.95) * rng.choice([-1.0, 1.0])
        yield (
            GaussianParams(float(a11), float(a11 * ratio)),
            float(rng.uniform(0.05, 3.0)),
            float(rng.uniform(-10.0, 10.0)),
        )


def test_numerical_chain_matches_closed_forms_on_a_grid():
    for params, temperature, t in _grid(100):
        report = verify_closed_forms(params, temperature, t, NATURAL, 1e-10)
        assert report.passed, (params, temperature, t, report.failures)


def test_closed_forms_with_explicit_constants_and_length_scale():
    consts = PhysicalConstants(m=0.7, hbar=1.3, k=2.0)
    report = verify_closed_forms(
        GaussianParams(1.2, -0.5), 0.8, 4.0, consts, 1e-10, L=3.0
    )
    assert report.passed, report.failures


def test_product_state_verifies():
    report = verify_closed_forms(
        GaussianParams(2.0, 0.0), 0.5, 3.0, NATURAL, 1e-10
    )
    assert report.passed, report.failures
    assert report.deviations["c"] == 0.0
    assert report.deviations["det_c"] == 0.0


def test_report_names_every_quantity():
    report = verify_closed_forms(
        GaussianParams(2.0, 1.0), 1.0, 1.0, NATURAL, 1e-10
    )
    assert set(report.deviations) == {
        "xx",
        "x1x2",
        "pp",
        "p1p2",
        "xp_sym",
        "x_cross_p",
        "det_g",
        "det_c",
        "det_m",
        "g",
        "c",
        "c_prime",
        "duan_value",
    }
    assert report.max_deviation == max(report.deviations.values())


def test_impossible_tolerance_fails():
    report = verify_closed_forms(
        GaussianParams(1.7, 0.9), 1.3, 7.0, NATURAL, 1e-18
    )
    assert not report.passed
    assert report.failures


@pytest.mark.parametrize("tol", [0.0, -1e-9, float("nan")])
def test_tolerance_must_be_positive(tol):
    with pytest.raises(DomainError):
        verify_closed_forms(GaussianParams(2.0, 1.0), 0.5, 0.0, NATURAL, tol)
