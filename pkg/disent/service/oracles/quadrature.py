"""Moments of the initial wave function by direct integration.

The integrals run over a Gauss-Legendre tensor grid on a window aligned with
the principal axes u = (x1 + x2)/sqrt(2), w = (x1 - x2)/sqrt(2) of |psi|^2,
whose standard deviations are 1/sqrt(a11 + a12) and 1/sqrt(a11 - a12).
Momentum moments use the analytic gradient of psi; a closed Gaussian-moment
evaluation of the same integrals is kept alongside as a second path.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from disent.service.exceptions import (
    AsymmetricDriftError,
    QuadratureContractError,
)
from disent.service.model import (
    GaussianParams,
    MomentSet,
    PhysicalConstants,
    VelocityPair,
    wavefunction_amplitude,
)
from disent.service.oracles.verification import relative_deviation

logger = logging.getLogger(__name__)

MIN_HALF_WIDTH = 6.0
MIN_POINTS_PER_AXIS = 64

_SYMMETRY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class QuadratureSpec:
    # In units of the standard deviation along each principal axis.
    half_width: float = 8.0
    points_per_axis: int = 128

    def __post_init__(self):
        if not self.half_width > 0 or self.points_per_axis < 1:
            raise QuadratureContractError(
                "quadrature window and grid must be non-empty, got "
                f"half_width={self.half_width!r}, "
                f"points_per_axis={self.points_per_axis!r}"
            )

    def check_contract(self):
        if (
            self.half_width < MIN_HALF_WIDTH
            or self.points_per_axis < MIN_POINTS_PER_AXIS
        ):
            raise QuadratureContractError(
                "quadrature spec below the accuracy contract: need "
                f"half_width >= {MIN_HALF_WIDTH} and points_per_axis >= "
                f"{MIN_POINTS_PER_AXIS}, got half_width={self.half_width!r}, "
                f"points_per_axis={self.points_per_axis!r}"
            )


@dataclass(frozen=True)
class QuadratureMoments:
    """Raw moments of |psi|^2 and of the momentum operators.

    ``xp1_sym`` is <x1 p1 + p1 x1>/2, ``x2p1`` is <x2 p1> and so on.
    """

    norm: float
    mean_x1: float
    mean_x2: float
    mean_p1: float
    mean_p2: float
    x1x1: float
    x2x2: float
    x1x2: float
    p1p1: float
    p2p2: float
    p1p2: float
    xp1_sym: float
    xp2_sym: float
    x2p1: float
    x1p2: float
    analytic_deviation: float

    def to_moment_set(self) -> MomentSet:
        """Pool the two particles; cross entries are taken connected."""
        for first, second in (
            (self.x1x1, self.x2x2),
            (self.p1p1, self.p2p2),
            (self.xp1_sym, self.xp2_sym),
        ):
            if relative_deviation(first, second) > _SYMMETRY_TOLERANCE:
                raise AsymmetricDriftError(
                    "integrated moments are not symmetric under particle "
                    f"exchange ({first!r} vs {second!r})"
                )
        return MomentSet(
            xx=(self.x1x1 + self.x2x2) / 2,
            x1x2=self.x1x2 - self.mean_x1 * self.mean_x2,
            pp=(self.p1p1 + self.p2p2) / 2,
            p1p2=self.p1p2 - self.mean_p1 * self.mean_p2,
            xp_sym=(self.xp1_sym + self.xp2_sym) / 2,
            x_cross_p=(
                self.x2p1
                - self.mean_x2 * self.mean_p1
                + self.x1p2
                - self.mean_x1 * self.mean_p2
            )
            / 2,
        )


def _principal_grid(params: GaussianParams, spec: QuadratureSpec):
    nodes, weights = np.polynomial.legendre.leggauss(spec.points_per_axis)
    axes = []
    for precision in (params.a11 + params.a12, params.a11 - params.a12):
        half = spec.half_width / math.sqrt(precision)
        axes.append((half * nodes, half * weights))
    (u, u_weights), (w, w_weights) = axes
    U, W = np.meshgrid(u, w, indexing="ij")
    return (
        (U + W) / math.sqrt(2),
        (U - W) / math.sqrt(2),
        np.outer(u_weights, w_weights),
    )


def _analytic_moments(
    params: GaussianParams, v: VelocityPair, consts: PhysicalConstants
) -> dict[str, float]:
    # |psi|^2 is a zero-mean normal density with precision matrix A.
    A = np.array([[params.a11, params.a12], [params.a12, params.a11]])
    sigma = np.linalg.inv(A)
    drift = consts.m * np.array([v.v1, v.v2])
    momentum = consts.hbar**2 / 4 * A @ sigma @ A + np.outer(drift, drift)
    return {
        "norm": 1.0,
        "x1x1": sigma[0, 0],
        "x2x2": sigma[1, 1],
        "x1x2": sigma[0, 1],
        "p1p1": momentum[0, 0],
        "p2p2": momentum[1, 1],
        "p1p2": momentum[0, 1],
        "mean_p1": drift[0],
        "mean_p2": drift[1],
    }


def quadrature_moments(
    params: GaussianParams,
    v: VelocityPair,
    consts: PhysicalConstants,
    spec: QuadratureSpec = QuadratureSpec(),
    enforce_contract: bool = True,
) -> QuadratureMoments:
    if enforce_contract:
        spec.check_contract()
    X1, X2, weights = _principal_grid(params, spec)
    logger.debug(
        "integrating on a %dx%d grid, half-width %s standard deviations",
        spec.points_per_axis,
        spec.points_per_axis,
        spec.half_width,
    )

    psi = wavefunction_amplitude(params, v, consts, X1, X2)
    wave_number = consts.m / consts.hbar
    d1 = psi * (
        -(params.a11 * X1 + params.a12 * X2) / 2 + 1j * wave_number * v.v1
    )
    d2 = psi * (
        -(params.a12 * X1 + params.a11 * X2) / 2 + 1j * wave_number * v.v2
    )
    psi_conj = psi.conj()
    density = (psi_conj * psi).real
    hbar = consts.hbar

    def integrate(values):
        return np.sum(weights * values)

    values = {
        "norm": float(integrate(density)),
        "mean_x1": float(integrate(X1 * density)),
        "mean_x2": float(integrate(X2 * density)),
        "mean_p1": float(hbar * integrate(psi_conj * d1).imag),
        "mean_p2": float(hbar * integrate(psi_conj * d2).imag),
        "x1x1": float(integrate(X1 * X1 * density)),
        "x2x2": float(integrate(X2 * X2 * density)),
        "x1x2": float(integrate(X1 * X2 * density)),
        "p1p1": float(hbar**2 * integrate((d1.conj() * d1).real)),
        "p2p2": float(hbar**2 * integrate((d2.conj() * d2).real)),
        "p1p2": float(hbar**2 * integrate(d1.conj() * d2).real),
        "xp1_sym": float(hbar * integrate(psi_conj * X1 * d1).imag),
        "xp2_sym": float(hbar * integrate(psi_conj * X2 * d2).imag),
        "x2p1": float(hbar * integrate(psi_conj * X2 * d1).imag),
        "x1p2": float(hbar * integrate(psi_conj * X1 * d2).imag),
    }
    analytic = _analytic_moments(params, v, consts)
    analytic_deviation = max(
        relative_deviation(values[name], float(expected))
        for name, expected in analytic.items()
    )
    logger.debug("grid vs analytic Gaussian moments: %.3e", analytic_deviation)
    return QuadratureMoments(**values, analytic_deviation=analytic_deviation)
