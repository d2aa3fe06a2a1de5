from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from disent.service.closed_forms import (
    closed_form_duan_value,
    closed_form_invariants,
    closed_form_moments,
    closed_form_standard_form,
)
from disent.service.exceptions import DomainError
from disent.service.model import (
    MOMENT_NAMES,
    GaussianParams,
    PhysicalConstants,
)
from disent.service.separability import assess

logger = logging.getLogger(__name__)


def relative_deviation(value: float, reference: float) -> float:
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


@dataclass(frozen=True)
class VerificationReport:
    deviations: dict[str, float]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(
            deviation <= self.tolerance
            for deviation in self.deviations.values()
        )

    @property
    def failures(self) -> list[str]:
        return [
            name
            for name, deviation in self.deviations.items()
            if not deviation <= self.tolerance
        ]

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values())


def verify_closed_forms(
    params: GaussianParams,
    temperature: float,
    t: float,
    consts: PhysicalConstants,
    tol: float,
    L: float | None = None,
) -> VerificationReport:
    """Compare the numerical chain against the closed forms, quantity-wise.

    Moments are propagated numerically, the standard form is solved from
    determinants of the scaled variance matrix; the other side evaluates the
    closed expressions directly.
    """
    if not (math.isfinite(tol) and tol > 0):
        raise DomainError(
            f"tolerance must be positive, got {tol!r}", condition="tol > 0"
        )
    numeric = assess(params, temperature, t, consts, L=L)
    moments = closed_form_moments(params, temperature, t, consts)

    pairs = dict(
        zip(
            MOMENT_NAMES,
            zip(numeric.moments.as_tuple(), moments.as_tuple()),
        )
    )
    invariants = closed_form_invariants(params, temperature, consts)
    pairs["det_g"] = (numeric.invariants.det_g, invariants.det_g)
    pairs["det_c"] = (numeric.invariants.det_c, invariants.det_c)
    pairs["det_m"] = (numeric.invariants.det_m, invariants.det_m)
    sf = closed_form_standard_form(params, temperature, consts)
    pairs["g"] = (numeric.standard_form.g, sf.g)
    pairs["c"] = (numeric.standard_form.c, sf.c)
    pairs["c_prime"] = (numeric.standard_form.c_prime, sf.c_prime)
    pairs["duan_value"] = (
        numeric.report.duan_value,
        closed_form_duan_value(params, temperature, consts),
    )

    report = VerificationReport(
        deviations={
            name: relative_deviation(value, reference)
            for name, (value, reference) in pairs.items()
        },
        tolerance=tol,
    )
    logger.debug(
        "closed forms at a11=%r a12=%r T=%r t=%r: max deviation %.3e",
        params.a11,
        params.a12,
        temperature,
        t,
        report.max_deviation,
    )
    return report
