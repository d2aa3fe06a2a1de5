"""Duan separability test on the symmetric two-mode variance matrix.

The 4x4 matrix M = [[G, C], [C, G]] is built from the moments, scaled by a
length L. Local rotations and squeezes bring G to g*I and C to diag(c, c')
while preserving det G, det C and det M, so the standard-form quantities
follow from the three determinants alone.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from disent.service.exceptions import (
    DomainError,
    InfeasibleInvariantsError,
    InvariantMismatchError,
)
from disent.service.model import (
    GaussianParams,
    MomentSet,
    PhysicalConstants,
    check_temperature,
    evolve_moments,
    thermal_moments,
)

logger = logging.getLogger(__name__)

DUAN_BOUND = 0.25
DEFAULT_TOLERANCE = 1e-9

# Relative slack for round-off in the invariants; long free flights lose
# about eps * t^2 in det G.
_ROOT_SLACK = 1e-6
# Scaled det G of a minimum-uncertainty state.
_UNCERTAINTY_BOUND = 0.25
_DET_CROSS_CHECK = 1e-9


@dataclass(frozen=True)
class CovarianceBlocks:
    G: np.ndarray
    C: np.ndarray
    L: float

    @property
    def M(self) -> np.ndarray:
        return np.block([[self.G, self.C], [self.C, self.G]])


@dataclass(frozen=True)
class DetInvariants:
    det_g: float
    det_c: float
    det_m: float


@dataclass(frozen=True)
class StandardForm:
    g: float
    c: float
    c_prime: float


@dataclass(frozen=True)
class SeparabilityReport:
    duan_value: float
    margin: float
    separable: bool
    critical_temperature: float | None = None
    critical_a12: float | None = None


@dataclass(frozen=True)
class Assessment:
    moments: MomentSet
    blocks: CovarianceBlocks
    invariants: DetInvariants
    standard_form: StandardForm
    report: SeparabilityReport


def default_length_scale(params: GaussianParams) -> float:
    return 1 / math.sqrt(params.a11)


def covariance_blocks(
    m: MomentSet, L: float, consts: PhysicalConstants
) -> CovarianceBlocks:
    if not math.isfinite(L) or L <= 0:
        raise DomainError(
            f"length scale must be positive and finite, got {L!r}",
            condition="L > 0",
        )
    L_sq = L * L
    hbar = consts.hbar
    hbar_sq = hbar * hbar
    G = np.array(
        [
            [m.xx / L_sq, m.xp_sym / hbar],
            [m.xp_sym / hbar, L_sq * m.pp / hbar_sq],
        ]
    )
    C = np.array(
        [
            [m.x1x2 / L_sq, m.x_cross_p / hbar],
            [m.x_cross_p / hbar, L_sq * m.p1p2 / hbar_sq],
        ]
    )
    return CovarianceBlocks(G=G, C=C, L=L)


def _det2(a: float, b: float, c: float, d: float) -> float:
    return a * d - b * c


def det_invariants(blocks: CovarianceBlocks) -> DetInvariants:
    (g00, g01), (g10, g11) = blocks.G.tolist()
    (c00, c01), (c10, c11) = blocks.C.tolist()
    det_g = _det2(g00, g01, g10, g11)
    det_c = _det2(c00, c01, c10, c11)
    det_m = _det2(g00 + c00, g01 + c01, g10 + c10, g11 + c11) * _det2(
        g00 - c00, g01 - c01, g10 - c10, g11 - c11
    )

    M = blocks.M
    direct = float(np.linalg.det(M))
    # Hadamard bound on a positive semi-definite matrix sets the scale.
    scale = max(float(np.prod(np.abs(np.diag(M)))), abs(det_m))
    if abs(direct - det_m) > _DET_CROSS_CHECK * scale:
        raise InvariantMismatchError(
            f"det M from the block identity ({det_m!r}) disagrees with the "
            f"direct 4x4 determinant ({direct!r})"
        )
    return DetInvariants(det_g=det_g, det_c=det_c, det_m=det_m)


def standard_form(inv: DetInvariants) -> StandardForm:
    """Solve det G = g^2, det C = c c', det M = (g^2 - c^2)(g^2 - c'^2).

    c^2 and c'^2 are the roots of u^2 - s u + det C^2 with
    s = (det G^2 + det C^2 - det M) / det G; the larger root goes to c^2.
    Round-off is judged against the size of the invariants, not of s: for
    pure or weakly coupled states s and the discriminant are themselves
    differences of nearly equal numbers.
    """
    if not inv.det_g >= _UNCERTAINTY_BOUND * (1 - _ROOT_SLACK):
        raise InfeasibleInvariantsError(
            f"det G must be at least {_UNCERTAINTY_BOUND}, got "
            f"{inv.det_g!r}; the invariants do not describe a physical "
            "state"
        )
    det_c_sq = inv.det_c * inv.det_c
    scale = (inv.det_g + abs(inv.det_c)) ** 2
    s = (inv.det_g * inv.det_g + det_c_sq - inv.det_m) / inv.det_g
    if s < 0:
        if s * inv.det_g < -_ROOT_SLACK * scale:
            raise InfeasibleInvariantsError(
                f"c^2 + c'^2 = {s!r} is negative; the invariants do not "
                "describe a physical state"
            )
        logger.debug("clamping round-off in c^2 + c'^2: %r", s)
        s = 0.0
    discriminant = s * s - 4 * det_c_sq
    if discriminant < 0:
        if discriminant < -_ROOT_SLACK * scale:
            raise InfeasibleInvariantsError(
                f"quadratic for c^2, c'^2 has negative discriminant "
                f"{discriminant!r}; the invariants do not describe a "
                "physical state"
            )
        logger.debug("clamping round-off in discriminant: %r", discriminant)
        discriminant = 0.0
    larger_root = (s + math.sqrt(discriminant)) / 2
    if larger_root == 0:
        return StandardForm(g=math.sqrt(inv.det_g), c=0.0, c_prime=0.0)
    c = math.sqrt(larger_root)
    return StandardForm(g=math.sqrt(inv.det_g), c=c, c_prime=inv.det_c / c)


def duan_separable(
    sf: StandardForm, tol: float = DEFAULT_TOLERANCE
) -> SeparabilityReport:
    # (g - |c|)(g - |c'|): with the negative c' of the closed forms, the
    # unsigned product is the one that reduces to the threshold condition.
    duan_value = (sf.g - abs(sf.c)) * (sf.g - abs(sf.c_prime))
    return SeparabilityReport(
        duan_value=duan_value,
        margin=duan_value - DUAN_BOUND,
        separable=duan_value >= DUAN_BOUND - tol,
    )


def thermal_parameter(temperature: float, consts: PhysicalConstants) -> float:
    """4 m k T / hbar^2."""
    temperature = check_temperature(temperature)
    return 4 * consts.m * consts.k * temperature / (consts.hbar * consts.hbar)


def separability_threshold(
    params: GaussianParams, consts: PhysicalConstants
) -> float:
    return (
        consts.hbar
        * consts.hbar
        * abs(params.a12)
        / (2 * consts.m * consts.k)
    )


def critical_a12(temperature: float, consts: PhysicalConstants) -> float:
    temperature = check_temperature(temperature)
    return 2 * consts.m * consts.k * temperature / (consts.hbar * consts.hbar)


def assess(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    L: float | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> Assessment:
    if L is None:
        L = default_length_scale(params)
    moments = evolve_moments(
        thermal_moments(params, temperature, consts), t, consts
    )
    blocks = covariance_blocks(moments, L, consts)
    invariants = det_invariants(blocks)
    sf = standard_form(invariants)
    report = replace(
        duan_separable(sf, tol),
        critical_temperature=separability_threshold(params, consts),
        critical_a12=critical_a12(temperature, consts),
    )
    return Assessment(
        moments=moments,
        blocks=blocks,
        invariants=invariants,
        standard_form=sf,
        report=report,
    )
