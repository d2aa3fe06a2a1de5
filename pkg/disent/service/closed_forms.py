"""Closed-form evaluation of the thermal correlations and their invariants.

These expressions are the reference the numerical chain in
``disent.service.separability`` is checked against; nothing else in the
package calls them on its main path.
"""
import math

from disent.service.model import (
    GaussianParams,
    MomentSet,
    PhysicalConstants,
    check_temperature,
)
from disent.service.separability import (
    DetInvariants,
    StandardForm,
    thermal_parameter,
)


def closed_form_moments(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
) -> MomentSet:
    temperature = check_temperature(temperature)
    a11, a12 = params.a11, params.a12
    m, hbar, kT = consts.m, consts.hbar, consts.k * temperature
    det = a11**2 - a12**2
    spread = kT / m + hbar**2 / (4 * m**2) * a11
    return MomentSet(
        xx=a11 / det + spread * t**2,
        x1x2=-a12 / det + hbar**2 / (4 * m**2) * a12 * t**2,
        pp=m * kT + hbar**2 / 4 * a11,
        p1p2=hbar**2 / 4 * a12,
        xp_sym=(hbar**2 / (4 * m) * a11 + kT) * t,
        x_cross_p=hbar**2 / (4 * m) * a12 * t,
    )


def closed_form_invariants(
    params: GaussianParams, temperature: float, consts: PhysicalConstants
) -> DetInvariants:
    a11, a12 = params.a11, params.a12
    theta = thermal_parameter(temperature, consts)
    det = a11**2 - a12**2
    return DetInvariants(
        det_g=(a11 + theta) * a11 / (4 * det),
        det_c=-(a12**2) / (4 * det),
        det_m=(0.25 + theta / (4 * (a11 - a12)))
        * (0.25 + theta / (4 * (a11 + a12))),
    )


def closed_form_standard_form(
    params: GaussianParams, temperature: float, consts: PhysicalConstants
) -> StandardForm:
    a11, abs_a12 = params.a11, abs(params.a12)
    theta = thermal_parameter(temperature, consts)
    det = a11**2 - params.a12**2
    return StandardForm(
        g=math.sqrt((a11 + theta) * a11 / det) / 2,
        c=abs_a12 / 2 * math.sqrt((a11 + theta) / (det * a11)),
        c_prime=-a11 * abs_a12 / (2 * math.sqrt(det * (a11 + theta) * a11)),
    )


def closed_form_duan_value(
    params: GaussianParams, temperature: float, consts: PhysicalConstants
) -> float:
    a11, abs_a12 = params.a11, abs(params.a12)
    theta = thermal_parameter(temperature, consts)
    return (a11 - abs_a12 + theta) / (a11 + abs_a12) / 4
