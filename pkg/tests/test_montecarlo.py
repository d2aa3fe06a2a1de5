import asyncio

import pytest

from disent.service.exceptions import (
    NegativeTemperatureError,
    SamplingError,
)
from disent.service.model import (
    MOMENT_NAMES,
    GaussianParams,
    PhysicalConstants,
    evolve_moments,
    thermal_moments,
)
from disent.service.oracles import McConfig, mc_thermal_moments
from disent.service.oracles.montecarlo import (
    SAMPLE_BLOCK,
    mc_thermal_moments_async,
)

NATURAL = PhysicalConstants()
EXAMPLE = GaussianParams(2.0, 1.0)


def _expected(params, temperature, t, consts=NATURAL):
    return evolve_moments(
        thermal_moments(params, temperature, consts), t, consts
    )


@pytest.mark.parametrize("t", [0.0, 1.5, -40.0])
def test_zero_temperature_is_exact(t):
    estimate = mc_thermal_moments(
        EXAMPLE, 0.0, t, NATURAL, McConfig(n_samples=3 * SAMPLE_BLOCK + 5)
    )
    assert estimate.moments == _expected(EXAMPLE, 0.0, t)
    assert estimate.std_errors.as_tuple() == (0.0,) * 6


@pytest.mark.parametrize(
    "params, temperature, t, consts",
    [
        (EXAMPLE, 0.5, 0.0, NATURAL),
        (EXAMPLE, 0.5, 2.0, NATURAL),
        (
            GaussianParams(1.3, -0.4),
            1.7,
            -3.0,
            PhysicalConstants(m=2.0, hbar=0.8, k=0.6),
        ),
    ],
)
def test_estimate_within_five_standard_errors(params, temperature, t, consts):
    estimate = mc_thermal_moments(params, temperature, t, consts)
    assert estimate.n_samples == 1_000_000
    expected = _expected(params, temperature, t, consts)
    for name, value, reference, std_error in zip(
        MOMENT_NAMES,
        estimate.moments.as_tuple(),
        expected.as_tuple(),
        estimate.std_errors.as_tuple(),
    ):
        assert abs(value - reference) <= 5 * std_error or (
            std_error == 0 and value == reference
        ), name


def test_velocity_free_entries_have_no_spread():
    estimate = mc_thermal_moments(
        EXAMPLE, 0.8, 3.0, NATURAL, McConfig(n_samples=20_000)
    )
    expected = _expected(EXAMPLE, 0.8, 3.0)
    for name in ("x1x2", "p1p2", "x_cross_p"):
        assert getattr(estimate.std_errors, name) == 0.0
        assert getattr(estimate.moments, name) == getattr(expected, name)
    for name in ("xx", "pp", "xp_sym"):
        assert getattr(estimate.std_errors, name) > 0.0


def test_estimate_does_not_depend_on_batching():
    estimates = [
        mc_thermal_moments(
            EXAMPLE,
            0.5,
            2.0,
            NATURAL,
            McConfig(n_samples=70_001, seed=3, batch_size=batch_size),
        )
        for batch_size in (1, SAMPLE_BLOCK, 3 * SAMPLE_BLOCK, 10**6)
    ]
    assert all(estimate == estimates[0] for estimate in estimates[1:])


def test_seed_changes_the_estimate():
    first, second = (
        mc_thermal_moments(
            EXAMPLE, 0.5, 0.0, NATURAL, McConfig(n_samples=10_000, seed=seed)
        )
        for seed in (1, 2)
    )
    assert first.moments.pp != second.moments.pp


def test_standard_error_shrinks_like_inverse_square_root():
    small, large = (
        mc_thermal_moments(
            EXAMPLE, 0.5, 1.0, NATURAL, McConfig(n_samples=n_samples)
        )
        for n_samples in (10_000, 1_000_000)
    )
    for name in ("xx", "pp", "xp_sym"):
        ratio = getattr(small.std_errors, name) / getattr(
            large.std_errors, name
        )
        assert 8.0 < ratio < 12.0, name


def test_async_entry_point_matches():
    cfg = McConfig(n_samples=5_000, seed=9)
    estimate = asyncio.run(
        mc_thermal_moments_async(EXAMPLE, 0.5, 1.0, NATURAL, cfg)
    )
    assert estimate == mc_thermal_moments(EXAMPLE, 0.5, 1.0, NATURAL, cfg)


def test_single_sample():
    estimate = mc_thermal_moments(
        EXAMPLE, 0.5, 1.0, NATURAL, McConfig(n_samples=1)
    )
    assert estimate.n_samples == 1
    assert estimate.std_errors.as_tuple() == (0.0,) * 6


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_samples": 0},
        {"n_samples": -5},
        {"batch_size": 0},
        {"seed": -1},
        {"seed": 2**64},
    ],
)
def test_invalid_sampling_config(kwargs):
    with pytest.raises(SamplingError):
        McConfig(**kwargs)


def test_negative_temperature_is_rejected():
    with pytest.raises(NegativeTemperatureError):
        mc_thermal_moments(
            EXAMPLE, -0.5, 0.0, NATURAL, McConfig(n_samples=10)
        )
