from disent.service.oracles.montecarlo import (
    McConfig,
    McEstimate,
    MomentErrors,
    mc_thermal_moments,
)
from disent.service.oracles.quadrature import (
    QuadratureMoments,
    QuadratureSpec,
    quadrature_moments,
)
from disent.service.oracles.verification import (
    VerificationReport,
    relative_deviation,
    verify_closed_forms,
)

__all__ = [
    "McConfig",
    "McEstimate",
    "MomentErrors",
    "QuadratureMoments",
    "QuadratureSpec",
    "VerificationReport",
    "mc_thermal_moments",
    "quadrature_moments",
    "relative_deviation",
    "verify_closed_forms",
]
