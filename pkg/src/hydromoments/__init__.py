"""Radial position and momentum expectation values of D-dimensional
hydrogenic bound states: exact hypergeometric routes, closed forms,
an independent quadrature oracle, asymptotic estimators, and
uncertainty-inequality checkers."""

from .asympt import AsymptoticEstimate, Regime, gamma_ratio_asym, highD, rydberg_circular_p, rydberg_inverse_p, rydberg_p, rydberg_r
from .errors import HydromomentsError
from .momom import (
    appendix_constants,
    appendix_integral_circular_exact,
    appendix_integrals,
    inverse_momentum,
    mean_momentum,
    p_moment,
    p_moment_circular,
    p_moment_double_sum,
    p_moment_even_closed,
    reflect,
)
from .oracle import (
    entropic_moment,
    quad_p_moment,
    quad_r_moment,
    radial_momentum,
    radial_position,
    solid_angle,
)
from .posmom import Method, MomentResult, r_moment, r_moment_closed, r_moment_ground
from .specfun import ExactValue
from .states import HydrogenicState, MomentOrder, Space, check_order, make_state
from .uncertainty import (
    InequalityName,
    InequalityReport,
    daubechies_thakkar,
    fermion_product,
    heisenberg_general,
    pitt_beckner,
)

__version__ = "1.0.0"

__all__ = [
    "AsymptoticEstimate",
    "ExactValue",
    "HydrogenicState",
    "HydromomentsError",
    "InequalityName",
    "InequalityReport",
    "Method",
    "MomentOrder",
    "MomentResult",
    "Regime",
    "Space",
    "appendix_constants",
    "appendix_integral_circular_exact",
    "appendix_integrals",
    "check_order",
    "daubechies_thakkar",
    "entropic_moment",
    "fermion_product",
    "gamma_ratio_asym",
    "heisenberg_general",
    "highD",
    "inverse_momentum",
    "make_state",
    "mean_momentum",
    "p_moment",
    "p_moment_circular",
    "p_moment_double_sum",
    "p_moment_even_closed",
    "pitt_beckner",
    "quad_p_moment",
    "quad_r_moment",
    "r_moment",
    "r_moment_closed",
    "r_moment_ground",
    "radial_momentum",
    "radial_position",
    "reflect",
    "rydberg_circular_p",
    "rydberg_inverse_p",
    "rydberg_p",
    "rydberg_r",
    "solid_angle",
]
