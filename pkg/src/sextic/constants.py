"""Special constants of the sextic system, each by two independent routes.

K and L are computed by quadrature of their defining integrals; K and the
real half-period omega of the Weierstrass function also have closed forms in
terms of the Gamma function, evaluated here with a Lanczos approximation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .quadrature import adaptive_gauss_legendre, tanh_sinh_unit

# Lanczos coefficients for g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

PICARD_RADIUS = Fraction(4**4, 5**5)
GAMMA_ROT = cmath.exp(1j * math.pi / 3)  # six-fold rotation
DELTA_ROT = cmath.exp(1j * math.pi / 6)  # square root of GAMMA_ROT

# Extended-complex value returned at poles.
POINT_AT_INFINITY = complex(math.inf, math.inf)


def is_infinite(value: complex) -> bool:
    return cmath.isinf(value)


def gamma_fn(x: float) -> float:
    """Gamma function for real ``x > 0`` (Lanczos, reflection below 1/2)."""
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"gamma_fn needs a finite positive argument, got {x!r}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    x -= 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, p in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += p / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def K_gamma() -> float:
    """K = Gamma(1/6)^2 / (12 Gamma(1/3))."""
    return gamma_fn(1 / 6) ** 2 / (12.0 * gamma_fn(1 / 3))


def omega_gamma() -> float:
    """Least positive zero of wp' for invariants (0, 16), via Beta/Gamma."""
    return gamma_fn(1 / 6) * gamma_fn(0.5) / (6.0 * 2.0 ** (1 / 3) * gamma_fn(2 / 3))


@lru_cache(maxsize=None)
def K_quad() -> float:
    """K = int_0^1 (1 + x^6)^(-1/3) dx by adaptive Gauss-Legendre."""
    return float(adaptive_gauss_legendre(lambda x: (1.0 + x**6) ** (-1.0 / 3.0), 0.0, 1.0, n=32, tol=1e-13))


def _l_integrand(x: np.ndarray, xc: np.ndarray) -> np.ndarray:
    # 1 - x^6 = (1 - x)(1 + x + ... + x^5), keeping the endpoint distance exact
    poly = 1.0 + x * (1.0 + x * (1.0 + x * (1.0 + x * (1.0 + x))))
    return (xc * poly) ** (-1.0 / 3.0)


@lru_cache(maxsize=None)
def L_quad() -> float:
    """L = int_0^1 (1 - x^6)^(-1/3) dx by tanh-sinh quadrature."""
    return tanh_sinh_unit(_l_integrand)


def duplication_residual(z: float) -> float:
    """Relative residual of 2 Gamma(1/2) Gamma(2z) = 2^(2z) Gamma(z) Gamma(z + 1/2)."""
    if not 0.0 < z <= 0.5:
        raise DomainError(f"duplication_residual is defined for z in (0, 1/2], got {z!r}")
    lhs = 2.0 * gamma_fn(0.5) * gamma_fn(2.0 * z)
    rhs = 2.0 ** (2.0 * z) * gamma_fn(z) * gamma_fn(z + 0.5)
    return abs(lhs - rhs) / abs(rhs)


@dataclass(frozen=True)
class ConstantsTable:
    r: Fraction
    K: float
    L: float
    omega: float
    gamma_rot: complex
    delta_rot: complex
    K_quad: float
    K_gamma: float
    omega_gamma: float

    @property
    def residuals(self) -> dict[str, float]:
        return {
            "K_quad-K_gamma": abs(self.K_quad - self.K_gamma),
            "omega-K": abs(self.omega_gamma - self.K_gamma),
            "K-sqrt3/2*L": abs(self.K - 0.5 * math.sqrt(3.0) * self.L),
            "duplication(1/6)": duplication_residual(1 / 6),
        }


@lru_cache(maxsize=None)
def constants_table() -> ConstantsTable:
    """All constants; K and omega are the Gamma-route values, L the quadrature value."""
    kq, kg, om = K_quad(), K_gamma(), omega_gamma()
    return ConstantsTable(
        r=PICARD_RADIUS,
        K=kg,
        L=L_quad(),
        omega=om,
        gamma_rot=GAMMA_ROT,
        delta_rot=DELTA_ROT,
        K_quad=kq,
        K_gamma=kg,
        omega_gamma=om,
    )
