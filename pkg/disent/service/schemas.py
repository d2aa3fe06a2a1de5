from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, TypedDict

from disent.service.exceptions import DomainError, SweepSpecError
from disent.service.model import (
    GaussianParams,
    PhysicalConstants,
    check_temperature,
    validate_params,
)
from disent.service.oracles.montecarlo import McConfig
from disent.service.separability import default_length_scale

SweepAxis = Literal["temperature", "a12", "time"]
SWEEP_AXES: tuple[str, ...] = ("temperature", "a12", "time")

SWEEP_COLUMNS = (
    "axis_value",
    "det_g",
    "det_c",
    "det_m",
    "g",
    "c",
    "c_prime",
    "duan_value",
    "margin",
    "separable",
)

REPORT_COLUMNS = (
    "a11",
    "a12",
    "temperature",
    "time",
    "length_scale",
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
    "margin",
    "separable",
    "critical_temperature",
    "critical_a12",
)


class SweepRow(TypedDict):
    axis_value: float
    det_g: float
    det_c: float
    det_m: float
    g: float
    c: float
    c_prime: float
    duan_value: float
    margin: float
    separable: int


@dataclass(frozen=True)
class RunConfig:
    a11: float
    a12: float
    temperature: float
    time: float
    mass: float
    hbar: float
    boltzmann: float
    # None means 1/sqrt(a11).
    length_scale: float | None
    seed: int
    samples: int
    tolerance: float

    def __post_init__(self):
        validate_params(self.a11, self.a12)
        PhysicalConstants(m=self.mass, hbar=self.hbar, k=self.boltzmann)
        check_temperature(self.temperature)
        if not math.isfinite(self.time):
            raise DomainError(
                f"time must be finite, got {self.time!r}",
                condition="t finite",
            )
        if self.length_scale is not None and not (
            math.isfinite(self.length_scale) and self.length_scale > 0
        ):
            raise DomainError(
                "length scale must be positive or 'auto', got "
                f"{self.length_scale!r}",
                condition="L > 0",
            )
        if not (math.isfinite(self.tolerance) and self.tolerance > 0):
            raise DomainError(
                f"tolerance must be positive, got {self.tolerance!r}",
                condition="tolerance > 0",
            )
        McConfig(n_samples=self.samples, seed=self.seed)

    @property
    def params(self) -> GaussianParams:
        return validate_params(self.a11, self.a12)

    @property
    def consts(self) -> PhysicalConstants:
        return PhysicalConstants(
            m=self.mass, hbar=self.hbar, k=self.boltzmann
        )

    @property
    def L(self) -> float:
        if self.length_scale is None:
            return default_length_scale(self.params)
        return self.length_scale

    @property
    def mc_config(self) -> McConfig:
        return McConfig(n_samples=self.samples, seed=self.seed)


@dataclass(frozen=True)
class SweepSpec:
    axis: SweepAxis
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.axis not in SWEEP_AXES:
            raise SweepSpecError(
                f"unknown sweep axis '{self.axis}', "
                f"expected one of {', '.join(SWEEP_AXES)}"
            )
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise SweepSpecError("sweep bounds must be finite")
        if self.steps < 2:
            raise SweepSpecError(
                f"sweep needs at least 2 steps, got {self.steps}"
            )
        if not self.start < self.stop:
            raise SweepSpecError(
                f"sweep needs start < stop, got start={self.start!r}, "
                f"stop={self.stop!r}"
            )

    def points(self) -> list[float]:
        span = self.stop - self.start
        return [
            self.start + span * i / (self.steps - 1)
            for i in range(self.steps)
        ]
