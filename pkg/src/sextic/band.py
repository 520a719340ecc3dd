"""The quotient t = s/c on the band of hexagons, and what hangs off it.

t maps the hexagon delta*H (centre 0, vertical edges at Re z = +-K) onto the
unit disc and is continued across the vertical edges by reflection, giving a
4K-periodic function with simple poles at the odd multiples of 2K.  On that
hexagon t is the inverse of the Schwarz-Christoffel map
``w -> int_0^w (1 - zeta^6)^(-1/3) d zeta`` up to the delta rotation.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .constants import DELTA_ROT, GAMMA_ROT, L_quad, is_infinite
from .core import eval_sc, eval_t
from .errors import DomainError
from .geometry import hex_geometry
from .quadrature import adaptive_gauss_legendre
from .weierstrass import wp, wp_prime

SC_NODES = 64
SC_TOL = 1e-14
ROOT_SNAP = 1e-15
VERTEX_SNAP = 1e-13  # |w^6 - 1| below this counts as a sixth root of unity


def in_band(z: complex) -> bool:
    return hex_geometry().in_band(z)


def reduce_mod_period(z: complex) -> tuple[complex, int]:
    """Split z = z0 + 4K k with Re z0 in [-2K, 2K)."""
    z = complex(z)
    if not in_band(z):
        raise DomainError(f"{z} lies outside the band 2|Im z| < L")
    period = 4.0 * hex_geometry().K
    k = math.floor((z.real + 0.5 * period) / period)
    z0 = complex(z.real - k * period, z.imag)
    if z0.real >= 0.5 * period:  # rounding at the upper edge
        k += 1
        z0 -= period
    return z0, k


def t_band(z: complex) -> complex:
    """t on the band, via its 4K period; POINT_AT_INFINITY at the poles."""
    z0, _ = reduce_mod_period(z)
    return eval_t(z0)


def _sc_integrand(w: complex):
    w6 = w**6

    def f(u: np.ndarray) -> np.ndarray:
        return (1.0 - w6 * u**6) ** (-1.0 / 3.0)

    return f


def schwarz_christoffel(w: complex) -> complex:
    """int_0^w (1 - zeta^6)^(-1/3) d zeta along [0, w], principal cube root.

    Maps the closed unit disc onto the closed regular hexagon with vertices
    L * gamma^k.  At a sixth root of unity the value is L times that root.
    """
    w = complex(w)
    r = abs(w)
    if r > 1.0 + ROOT_SNAP:
        raise DomainError(f"schwarz_christoffel needs |w| <= 1, got |w| = {r}")
    if w == 0:
        return 0j
    if abs(w**6 - 1.0) < VERTEX_SNAP:
        k = round(cmath.phase(w) / (math.pi / 3)) % 6
        return L_quad() * GAMMA_ROT**k
    return w * adaptive_gauss_legendre(_sc_integrand(w), 0.0, 1.0, n=SC_NODES, tol=SC_TOL)


def sc_inverse_residual(z: complex) -> float:
    """Round-trip error between t on delta*H and the Schwarz-Christoffel map.

    With h(w) = conj(delta) t(delta w) inverting the map on H, a point z of
    delta*H should satisfy delta * SC(conj(delta) t(z)) = z; the reverse trip
    re-evaluates t at the reconstructed point.  Returns the larger error.
    """
    z = complex(z)
    tz = t_band(z)
    if is_infinite(tz):
        raise DomainError(f"t has a pole at {z}")
    z_back = DELTA_ROT * schwarz_christoffel(DELTA_ROT.conjugate() * tz)
    forward = abs(z_back - z)
    backward = abs(t_band(z_back) - tz)
    return max(forward, backward)


def vertex_limit(vertex: complex, offsets: tuple[float, float] = (1e-2, 1e-3), exponent: float = 1.5) -> complex:
    """Radial limit of t at a band-boundary vertex, Richardson-extrapolated.

    Near a vertex t approaches its value like |z - vertex|^(3/2) (the
    Schwarz-Christoffel map has a 2/3-power corner there).
    """
    vertex = complex(vertex)
    e1, e2 = offsets
    t1 = t_band(vertex * (1.0 - e1))
    t2 = t_band(vertex * (1.0 - e2))
    ratio = (e2 / e1) ** exponent
    return (t2 - ratio * t1) / (1.0 - ratio)


def sc_monomial_extends(m: int, n: int) -> bool:
    """Whether s^m c^n is the restriction of a function meromorphic in the plane."""
    return m == n and m % 2 == 0


def band_period(m: int, n: int) -> float:
    """Period of s^m c^n on the band (requires m + n divisible by 4)."""
    if (m + n) % 4 != 0:
        raise DomainError(f"band_period needs m + n divisible by 4, got m={m}, n={n}")
    if m == 0 and n == 0:
        raise DomainError("s^0 c^0 is constant: no least period")
    K = hex_geometry().K
    return 2.0 * K if (m - n) % 4 == 0 else 4.0 * K


def least_band_period(m: int, n: int) -> float:
    """Least period of s^m c^n on the band (m + n divisible by 4, not both zero).

    Follows from s(z + 2K) = c(z) and c(z + 2K) = -s(z): a 2K shift swaps the
    exponents, so only the balanced products s^2k c^2k have period 2K.
    """
    band_period(m, n)  # same hypotheses
    K = hex_geometry().K
    return 2.0 * K if m == n else 4.0 * K


def monomial(z: complex, m: int, n: int) -> complex:
    s, c = eval_sc(z)
    return s**m * c**n


def _reciprocals(z: complex) -> tuple[complex, complex]:
    # 1/wp and 1/wp', with the poles of wp mapped to 0
    p, dp = wp(z), wp_prime(z)
    inv_p = 0j if is_infinite(p) else 1.0 / p
    inv_dp = 0j if is_infinite(dp) else 1.0 / dp
    return inv_p, inv_dp


def identity_residual_s12(z: complex) -> float:
    """Residuals of (S + wp^-3)^2 = S and 16 wp'^-2 (S + wp^-3 - 1/2)^2 = wp^-3, S = s^12.

    Both sides are polynomials in 1/wp and 1/wp', so lattice points are fine;
    zeros of wp and of wp' are not.
    """
    s, _ = eval_sc(z)
    q, r = _reciprocals(z)
    S = s**12
    q3 = q**3
    first = abs((S + q3) ** 2 - S)
    second = abs(16.0 * r**2 * (S + q3 - 0.5) ** 2 - q3)
    return max(first, second)


def identity_residual_s24(z: complex) -> dict[str, float]:
    """Residual of 4 wp'^-2 (E - wp^-6 - wp^-3 wp'^2 / 8)^2 = (1 + wp^3 wp'^2 / 16) wp^-9.

    Evaluated for both E = s^24 and E = c^24; returns ``{"s24": .., "c24": ..}``.
    Needs z off the poles of wp.
    """
    p, dp = wp(z), wp_prime(z)
    if is_infinite(p):
        raise DomainError(f"{z} is a pole of wp")
    s, c = eval_sc(z)
    rhs = (1.0 + p**3 * dp**2 / 16.0) * p**-9
    out = {}
    for name, E in (("s24", s**24), ("c24", c**24)):
        lhs = 4.0 * dp**-2 * (E - p**-6 - p**-3 * dp**2 / 8.0) ** 2
        out[name] = abs(lhs - rhs)
    return out
