"""Two free particles in a symmetric Gaussian state.

The initial wave function is

    psi(x1, x2; 0) = (a11^2 - a12^2)^(1/4) / sqrt(2 pi)
        * exp(-(a11 x1^2 + 2 a12 x1 x2 + a11 x2^2) / 4
              + i m / hbar (v1 x1 + v2 x2))

and all second moments are raw (taken about zero). Units are whatever the
caller chooses, as long as m, hbar and k are expressed consistently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from disent.service.exceptions import (
    AsymmetricDriftError,
    DomainError,
    NegativeTemperatureError,
    NonFiniteError,
)


def _require_finite(**values: float):
    for name, value in values.items():
        if not math.isfinite(value):
            raise NonFiniteError(
                f"'{name}' must be finite, got {value!r}",
                condition=f"{name} finite",
            )


@dataclass(frozen=True)
class GaussianParams:
    a11: float
    a12: float

    def __post_init__(self):
        _require_finite(a11=self.a11, a12=self.a12)
        if self.a11 <= 0:
            raise DomainError(
                f"a11 must be positive, got {self.a11!r}",
                condition="a11 > 0",
            )
        if self.a11 * self.a11 - self.a12 * self.a12 <= 0:
            raise DomainError(
                "state is not square-integrable: a11^2 - a12^2 must be "
                f"positive (|a12| < a11), got a11={self.a11!r}, "
                f"a12={self.a12!r}",
                condition="a11^2 - a12^2 > 0",
            )

    @property
    def determinant(self) -> float:
        return self.a11 * self.a11 - self.a12 * self.a12


@dataclass(frozen=True)
class PhysicalConstants:
    m: float = 1.0
    hbar: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        _require_finite(m=self.m, hbar=self.hbar, k=self.k)
        for name in ("m", "hbar", "k"):
            if getattr(self, name) <= 0:
                raise DomainError(
                    f"'{name}' must be positive, got {getattr(self, name)!r}",
                    condition=f"{name} > 0",
                )


@dataclass(frozen=True)
class VelocityPair:
    v1: float = 0.0
    v2: float = 0.0

    def __post_init__(self):
        _require_finite(v1=self.v1, v2=self.v2)


@dataclass(frozen=True)
class MomentSet:
    """Second moments of a state symmetric under particle exchange.

    xx = <x1^2> = <x2^2>, pp = <p1^2> = <p2^2>,
    xp_sym = <x1 p1 + p1 x1> / 2 (same for particle 2),
    x_cross_p = <x2 p1> = <x1 p2>.
    """

    xx: float
    x1x2: float
    pp: float
    p1p2: float
    xp_sym: float
    x_cross_p: float

    def __post_init__(self):
        _require_finite(
            xx=self.xx,
            x1x2=self.x1x2,
            pp=self.pp,
            p1p2=self.p1p2,
            xp_sym=self.xp_sym,
            x_cross_p=self.x_cross_p,
        )
        if self.xx <= 0 or self.pp <= 0:
            raise DomainError(
                f"moment set needs xx > 0 and pp > 0, got xx={self.xx!r}, "
                f"pp={self.pp!r}",
                condition="xx > 0, pp > 0",
            )

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.xx,
            self.x1x2,
            self.pp,
            self.p1p2,
            self.xp_sym,
            self.x_cross_p,
        )


MOMENT_NAMES = ("xx", "x1x2", "pp", "p1p2", "xp_sym", "x_cross_p")


def validate_params(a11: float, a12: float) -> GaussianParams:
    return GaussianParams(float(a11), float(a12))


def check_temperature(temperature: float) -> float:
    temperature = float(temperature)
    _require_finite(temperature=temperature)
    if temperature < 0:
        raise NegativeTemperatureError(
            f"temperature must be non-negative, got {temperature!r}",
            condition="T >= 0",
        )
    return temperature


def wavefunction_amplitude(
    params: GaussianParams,
    v: VelocityPair,
    consts: PhysicalConstants,
    x1: ArrayLike,
    x2: ArrayLike,
):
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    if not (np.all(np.isfinite(x1)) and np.all(np.isfinite(x2))):
        raise NonFiniteError(
            "positions must be finite", condition="x1, x2 finite"
        )
    prefactor = params.determinant**0.25 / math.sqrt(2 * math.pi)
    envelope = -(
        params.a11 * x1 * x1
        + 2 * params.a12 * x1 * x2
        + params.a11 * x2 * x2
    ) / 4
    phase = consts.m / consts.hbar * (v.v1 * x1 + v.v2 * x2)
    return prefactor * np.exp(envelope + 1j * phase)


def _moments(
    params: GaussianParams,
    consts: PhysicalConstants,
    velocity_sq: float,
) -> MomentSet:
    det = params.determinant
    hbar_sq = consts.hbar * consts.hbar
    return MomentSet(
        xx=params.a11 / det,
        x1x2=-params.a12 / det,
        pp=consts.m * consts.m * velocity_sq + hbar_sq * params.a11 / 4,
        p1p2=hbar_sq * params.a12 / 4,
        xp_sym=0.0,
        x_cross_p=0.0,
    )


def initial_moments(
    params: GaussianParams, v: VelocityPair, consts: PhysicalConstants
) -> MomentSet:
    v1_sq = v.v1 * v.v1
    if v1_sq != v.v2 * v.v2:
        raise AsymmetricDriftError(
            f"drift velocities v1={v.v1!r}, v2={v.v2!r} give different "
            "<p1^2> and <p2^2>; a symmetric moment set needs v1^2 == v2^2 "
            "(use thermal_moments for thermal drift)"
        )
    return _moments(params, consts, v1_sq)


def thermal_moments(
    params: GaussianParams, temperature: float, consts: PhysicalConstants
) -> MomentSet:
    temperature = check_temperature(temperature)
    return _moments(params, consts, consts.k * temperature / consts.m)


def evolve_moments(
    m0: MomentSet, t: float, consts: PhysicalConstants
) -> MomentSet:
    """Free flight: x(t) = x(0) + p(0) t / m, p(t) = p(0)."""
    _require_finite(t=t)
    tau = t / consts.m
    return MomentSet(
        xx=m0.xx + 2 * tau * m0.xp_sym + tau * tau * m0.pp,
        x1x2=m0.x1x2 + 2 * tau * m0.x_cross_p + tau * tau * m0.p1p2,
        pp=m0.pp,
        p1p2=m0.p1p2,
        xp_sym=m0.xp_sym + tau * m0.pp,
        x_cross_p=m0.x_cross_p + tau * m0.p1p2,
    )


def uncertainty_gap(moments: MomentSet, consts: PhysicalConstants) -> float:
    return (
        moments.xx * moments.pp
        - moments.xp_sym * moments.xp_sym
        - consts.hbar * consts.hbar / 4
    )
