import dataclasses

import pytest

from disent.config import Config
from disent.service import commands, events
from disent.service.exceptions import (
    DomainError,
    RunFileError,
    SweepSpecError,
)
from disent.service.oracles.montecarlo import DEFAULT_SEED
from disent.service.schemas import SWEEP_COLUMNS, SweepSpec

pytestmark = pytest.mark.usefixtures("isolated_user_config")


def test_builtin_defaults():
    cfg = commands.load_config()
    assert (cfg.a11, cfg.a12, cfg.temperature, cfg.time) == (
        2.0,
        1.0,
        0.0,
        0.0,
    )
    assert cfg.length_scale is None
    assert cfg.L == pytest.approx(2**-0.5)
    assert cfg.seed == DEFAULT_SEED
    assert cfg.samples == 1_000_000
    assert cfg.tolerance == 1e-9


def test_layers_override_in_order(tmp_path):
    Config.CONFIG_LOCATION.write_text(
        "[defaults]\ntemp = 0.25\ntime = 3.0\nsamples = 2000\n"
    )
    Config.reset()
    run_file = tmp_path.joinpath("point.run")
    run_file.write_text("time = 5.0\na12 = 0.5\n")

    cfg = commands.load_config(run_file, overrides={"a12": -0.5})

    assert cfg.temperature == 0.25
    assert cfg.samples == 2000
    assert cfg.time == 5.0
    assert cfg.a12 == -0.5


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("DISENT_DEFAULTS_SEED", "0x10")
    assert commands.load_config().seed == 16


def test_invalid_user_default():
    Config.CONFIG_LOCATION.write_text('[defaults]\ntemp = "warm"\n')
    Config.reset()
    with pytest.raises(RunFileError):
        commands.load_config()


def test_missing_run_file(tmp_path):
    with pytest.raises(RunFileError):
        commands.load_config(tmp_path.joinpath("absent.run"))


def test_invalid_point_is_a_domain_error():
    with pytest.raises(DomainError):
        commands.load_config(overrides={"a11": 1.0, "a12": 2.0})


def test_sweep_crosses_the_threshold():
    cfg = commands.load_config()
    rows = list(
        commands.sweep_rows(
            cfg, SweepSpec("temperature", start=0.0, stop=1.0, steps=11)
        )
    )
    assert [row["axis_value"] for row in rows] == pytest.approx(
        [i / 10 for i in range(11)]
    )
    assert [row["separable"] for row in rows] == [0] * 5 + [1] * 6
    assert all(set(row) == set(SWEEP_COLUMNS) for row in rows)


def test_time_sweep_is_flat():
    cfg = commands.load_config(overrides={"temperature": 0.3})
    rows = list(
        commands.sweep_rows(cfg, SweepSpec("time", 0.0, 10.0, steps=6))
    )
    for row in rows[1:]:
        for column in ("det_g", "det_c", "det_m", "duan_value"):
            assert row[column] == pytest.approx(rows[0][column], rel=1e-10)
        assert row["separable"] == rows[0]["separable"]


def test_sweep_validates_every_point_first():
    cfg = commands.load_config()
    rows = commands.sweep_rows(cfg, SweepSpec("a12", 1.0, 3.0, steps=3))
    with pytest.raises(DomainError):
        next(rows)


@pytest.mark.parametrize(
    "axis, start, stop, steps",
    [
        ("temperature", 0.0, 1.0, 1),
        ("temperature", 1.0, 1.0, 5),
        ("temperature", 1.0, 0.0, 5),
        ("mass", 0.0, 1.0, 5),
        ("time", 0.0, float("inf"), 5),
    ],
)
def test_degenerate_sweep_spec(axis, start, stop, steps):
    with pytest.raises(SweepSpecError):
        SweepSpec(axis, start, stop, steps)


def test_verification_grid_is_fixed():
    cfg = commands.load_config()
    first = commands.verification_grid(cfg)
    assert first == commands.verification_grid(cfg)
    assert len(first) == commands.VERIFY_GRID_POINTS
    for point in first:
        assert 0.05 <= point.temperature <= 3.0
        assert 0.05 <= abs(point.a12) / point.a11 <= 0.95


def test_verify_passes_with_defaults():
    cfg = commands.load_config(overrides={"samples": 100_000})
    results = commands.verify(cfg)
    failed = [
        result for result in results if isinstance(result, events.CheckFailed)
    ]
    assert not failed
    assert any("monte carlo" in result.name for result in results)
    assert any("quadrature" in result.name for result in results)


def test_verify_fails_with_impossible_tolerance():
    cfg = commands.load_config(overrides={"samples": 10_000})
    cfg = dataclasses.replace(cfg, tolerance=1e-18)
    results = commands.verify_closed_form_chain(cfg)
    assert any(isinstance(result, events.CheckFailed) for result in results)


def test_monte_carlo_check_at_zero_temperature_is_exact():
    cfg = commands.load_config(overrides={"samples": 20_000, "time": 4.0})
    results = commands.verify_monte_carlo(cfg)
    assert all(result.deviation == 0.0 for result in results)


def test_run_file_at_the_boundary_point(tmp_path):
    run_file = tmp_path.joinpath("boundary.run")
    run_file.write_text("a11=2\na12=1\ntemp=0.5")
    cfg = commands.load_config(run_file)
    assert (cfg.a11, cfg.a12, cfg.temperature) == (2.0, 1.0, 0.5)
    assert commands.report_point(cfg).report.separable


def test_flag_overrides_run_file(tmp_path):
    run_file = tmp_path.joinpath("point.run")
    run_file.write_text("a11=4\na12=3\n")
    cfg = commands.load_config(run_file, overrides={"a12": 1.0})
    assert cfg.a12 == 1.0


def test_hyphenated_default_from_the_environment(monkeypatch):
    monkeypatch.setenv("DISENT_DEFAULTS_LENGTH_SCALE", "2.5")
    assert commands.load_config().length_scale == 2.5
