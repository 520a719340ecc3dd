"""The sextic trigonometric pair s' = c^5, c' = -s^5 with s(0) = 0, c(0) = 1.

Evaluation by Taylor continuation (``eval_sc``, ``eval_t``, ``eval_fg``),
the closed form s^2 c^2 = 1/wp(.; 0, 16) (``q_global``), the 4K-periodic
band extension of t = s/c (``t_band``), the Schwarz-Christoffel hexagon map,
and the constants K, L, omega.
"""

from .band import (
    band_period,
    identity_residual_s12,
    identity_residual_s24,
    in_band,
    least_band_period,
    reduce_mod_period,
    sc_inverse_residual,
    sc_monomial_extends,
    schwarz_christoffel,
    t_band,
)
from .constants import (
    DELTA_ROT,
    GAMMA_ROT,
    POINT_AT_INFINITY,
    K_gamma,
    K_quad,
    L_quad,
    constants_table,
    duplication_residual,
    gamma_fn,
    is_infinite,
    omega_gamma,
)
from .core import JetPair, continue_to, eval_fg, eval_sc, eval_t, local_taylor
from .errors import DomainError, InvalidStateError, PathNearSingularityError
from .series import TruncatedSeries, series_derivative, series_eval, series_mul, series_pow
from .weierstrass import Lattice, q_global, wp, wp_prime

__all__ = [
    "DELTA_ROT",
    "GAMMA_ROT",
    "POINT_AT_INFINITY",
    "DomainError",
    "InvalidStateError",
    "JetPair",
    "K_gamma",
    "K_quad",
    "L_quad",
    "Lattice",
    "PathNearSingularityError",
    "TruncatedSeries",
    "band_period",
    "constants_table",
    "continue_to",
    "duplication_residual",
    "eval_fg",
    "eval_sc",
    "eval_t",
    "gamma_fn",
    "identity_residual_s12",
    "identity_residual_s24",
    "in_band",
    "is_infinite",
    "least_band_period",
    "local_taylor",
    "omega_gamma",
    "q_global",
    "reduce_mod_period",
    "sc_inverse_residual",
    "sc_monomial_extends",
    "schwarz_christoffel",
    "series_derivative",
    "series_eval",
    "series_mul",
    "series_pow",
    "t_band",
    "wp",
    "wp_prime",
]
