"""Numerics for a Struve-kernel convolution operator on the unit disk.

The package covers truncated power-series arithmetic, the Struve function
family and its normalized kernel, Gauss 2F1 through three cross-checking
representations, the convolution operator with its three-term recurrence,
numeric subordination testing against Möbius targets, and the sharp bound /
radius / inclusion certificates built on top.  ``struveops verify`` replays
every certificate on seeded grids.
"""

from .bounds import (
    DominantParams,
    best_dominant_q,
    bound_report,
    briot_bouquet_target,
    inclusion_interpolant,
    lambda_negative_identity,
    lower_bound_h_minus1,
    modulus_bounds,
    q_starlike_certificate,
    radius_factor,
    radius_positivity,
    re_bounds,
    re_zqprime_over_q,
    sharp_bound_h,
)
from .classes import (
    CONTAINMENT_TOL,
    DEFAULT_RADII,
    ClassParams,
    MobiusTarget,
    Verdict,
    class_expression,
    expression_evaluator,
    iter_membership_samples,
    j_functional,
    lemma3_check,
    lemma6_check,
    membership_test,
    mobius_image_check,
    power_mu,
)
from .errors import (
    ConvergenceError,
    DomainError,
    NumericsError,
    ParameterError,
    PoleError,
)
from .hypergeom import (
    HypergeomParams,
    f21,
    f21_euler,
    f21_pfaff,
    f21_series,
    f21_symmetry_check,
)
from .operator import (
    apply_s,
    apply_s_modified,
    apply_s_struve,
    phi_series,
    recurrence_residual,
)
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    differentiate,
    evaluate,
    hadamard,
    linear_combine,
)
from .specialfn import (
    StruveParams,
    gamma,
    generalized_m,
    normalized_n_series,
    ode_residual_n,
    pochhammer,
    struve_h,
    struve_l,
)

__version__ = "0.1.0"

__all__ = [
    "CONTAINMENT_TOL",
    "ClassParams",
    "ConvergenceError",
    "DEFAULT_ORDER",
    "DEFAULT_RADII",
    "DomainError",
    "DominantParams",
    "HypergeomParams",
    "MobiusTarget",
    "NumericsError",
    "ParameterError",
    "PoleError",
    "PowerSeries",
    "StruveParams",
    "Verdict",
    "apply_s",
    "apply_s_modified",
    "apply_s_struve",
    "best_dominant_q",
    "bound_report",
    "briot_bouquet_target",
    "class_expression",
    "differentiate",
    "evaluate",
    "expression_evaluator",
    "f21",
    "f21_euler",
    "f21_pfaff",
    "f21_series",
    "f21_symmetry_check",
    "gamma",
    "generalized_m",
    "hadamard",
    "inclusion_interpolant",
    "iter_membership_samples",
    "j_functional",
    "lambda_negative_identity",
    "lemma3_check",
    "lemma6_check",
    "linear_combine",
    "lower_bound_h_minus1",
    "membership_test",
    "mobius_image_check",
    "modulus_bounds",
    "normalized_n_series",
    "ode_residual_n",
    "phi_series",
    "pochhammer",
    "power_mu",
    "q_starlike_certificate",
    "radius_factor",
    "radius_positivity",
    "re_bounds",
    "re_zqprime_over_q",
    "recurrence_residual",
    "sharp_bound_h",
    "struve_h",
    "struve_l",
]
