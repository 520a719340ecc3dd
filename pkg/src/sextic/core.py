"""Taylor solution and analytic continuation of s' = c^5, c' = -s^5.

Evaluation at a point ``z`` in the horizontal band 2|Im z| < L walks the
straight segment from 0 to ``z``, re-expanding at each step.  The step at a
center is 0.4 times its distance to the nearest hexagon vertex (the branch
points of s and c), capped at 0.5, so every re-expansion is used well inside
its disc of convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constants import DELTA_ROT, POINT_AT_INFINITY
from .errors import DomainError, InvalidStateError, PathNearSingularityError
from .geometry import VERTEX_EXCLUSION, hex_geometry
from .series import TruncatedSeries, cauchy_coefficient, series_derivative, series_div, series_mul

CONTINUATION_ORDER = 32
STEP_RATIO = 0.4
MAX_STEP = 0.5
SEXTIC_TOLERANCE = 1e-9
POLE_THRESHOLD = 1e-8


def sextic_drift(s: complex, c: complex) -> float:
    return abs(s**6 + c**6 - 1.0)


def trust_radius(center: complex) -> float:
    return min(STEP_RATIO * hex_geometry().vertex_distance(center), MAX_STEP)


@dataclass(frozen=True)
class JetPair:
    """Taylor expansions of s and c about ``center``."""

    center: complex
    s_series: TruncatedSeries
    c_series: TruncatedSeries
    trust_radius: float

    def __post_init__(self) -> None:
        if self.s_series.order != self.c_series.order:
            raise ValueError("s and c series must have the same order")
        if sextic_drift(self.s, self.c) >= SEXTIC_TOLERANCE:
            raise InvalidStateError(
                f"constant terms violate s^6 + c^6 = 1 (drift {sextic_drift(self.s, self.c):.3e})"
            )

    @property
    def order(self) -> int:
        return self.s_series.order

    @property
    def s(self) -> complex:
        return self.s_series[0]

    @property
    def c(self) -> complex:
        return self.c_series[0]

    @property
    def drift(self) -> float:
        return sextic_drift(self.s, self.c)

    def __call__(self, z: complex) -> tuple[complex, complex]:
        """(s, c) at the absolute point ``z``."""
        h = complex(z) - self.center
        return self.s_series(h), self.c_series(h)

    def t_series(self) -> TruncatedSeries:
        return series_div(self.s_series, self.c_series)

    def q_series(self) -> TruncatedSeries:
        sc = series_mul(self.s_series, self.c_series)
        return series_mul(sc, sc)

    def t_prime(self) -> complex:
        return series_derivative(self.t_series())[0]

    def q_prime(self) -> complex:
        return series_derivative(self.q_series())[0]


def _taylor_coefficients(s0: complex, c0: complex, order: int) -> tuple[np.ndarray, np.ndarray]:
    # a_{n+1} = [z^n] C^5 / (n+1),  b_{n+1} = -[z^n] S^5 / (n+1); powers built one coefficient at a time
    n_coef = order + 1
    a = np.zeros(n_coef, dtype=complex)
    b = np.zeros(n_coef, dtype=complex)
    a2, a4, a5 = (np.zeros(n_coef, dtype=complex) for _ in range(3))
    b2, b4, b5 = (np.zeros(n_coef, dtype=complex) for _ in range(3))
    a[0], b[0] = s0, c0
    for n in range(order):
        a2[n] = cauchy_coefficient(a, a, n)
        a4[n] = cauchy_coefficient(a2, a2, n)
        a5[n] = cauchy_coefficient(a4, a, n)
        b2[n] = cauchy_coefficient(b, b, n)
        b4[n] = cauchy_coefficient(b2, b2, n)
        b5[n] = cauchy_coefficient(b4, b, n)
        a[n + 1] = b5[n] / (n + 1)
        b[n + 1] = -a5[n] / (n + 1)
    return a, b


def local_taylor(s0: complex, c0: complex, order: int, center: complex = 0j) -> JetPair:
    """Order-``order`` Taylor jet of the solution through (s0, c0) at ``center``."""
    if order < 1:
        raise ValueError("local_taylor needs order >= 1")
    s0, c0 = complex(s0), complex(c0)
    drift = sextic_drift(s0, c0)
    if not drift < SEXTIC_TOLERANCE:
        raise InvalidStateError(f"initial data violates s^6 + c^6 = 1 (drift {drift:.3e})")
    a, b = _taylor_coefficients(s0, c0, order)
    return JetPair(complex(center), TruncatedSeries(a), TruncatedSeries(b), trust_radius(center))


def _check_target(z: complex) -> None:
    geom = hex_geometry()
    if not geom.in_band(z):
        raise DomainError(f"{z} lies outside the band 2|Im z| < L")
    if geom.segment_vertex_distance(0j, z) < VERTEX_EXCLUSION:
        raise PathNearSingularityError(f"path from 0 to {z} passes within {VERTEX_EXCLUSION} of a hexagon vertex")


@lru_cache(maxsize=8192)
def _continue(z: complex, order: int) -> JetPair:
    jet = local_taylor(0j, 1.0 + 0j, order)
    while jet.center != z:
        remaining = z - jet.center
        dist = abs(remaining)
        if dist <= jet.trust_radius:
            nxt = z
        else:
            nxt = jet.center + remaining * (jet.trust_radius / dist)
        s, c = jet(nxt)
        jet = local_taylor(s, c, order, center=nxt)
    return jet


def continue_to(z: complex, order: int = CONTINUATION_ORDER) -> JetPair:
    """Jet centred at ``z``, reached by straight-segment continuation from 0."""
    z = complex(z)
    _check_target(z)
    return _continue(z, order)


def eval_sc(z: complex) -> tuple[complex, complex]:
    jet = continue_to(z)
    return jet.s, jet.c


def eval_t(z: complex) -> complex:
    """s/c, or POINT_AT_INFINITY at a pole (|c| below the pole threshold)."""
    s, c = eval_sc(z)
    if abs(c) < POLE_THRESHOLD:
        return POINT_AT_INFINITY
    return s / c


def eval_fg(z: complex) -> tuple[complex, complex]:
    """Hyperbolic pair f(z) = conj(delta) s(delta z), g(z) = c(delta z)."""
    s, c = eval_sc(DELTA_ROT * complex(z))
    return DELTA_ROT.conjugate() * s, c
