"""Quadrature rules used for the constants and the hexagon map.

``tanh_sinh_unit`` integrates over [0, 1] and hands the integrand both ``x``
and ``1 - x`` (the latter computed without cancellation), so integrands with
an endpoint singularity at 1 can be written in terms of the exact distance.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np


@lru_cache(maxsize=None)
def _legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def gauss_legendre(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, n: int = 32):
    """Fixed ``n``-point Gauss-Legendre on [a, b]; ``f`` is vectorized."""
    x, w = _legendre_rule(n)
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    return half * np.dot(w, f(mid + half * x))


def adaptive_gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    n: int = 32,
    tol: float = 1e-13,
    max_depth: int = 50,
):
    """Adaptive bisection of ``n``-point Gauss-Legendre panels.

    A panel is accepted once the whole-panel rule and the sum over its two
    halves agree to ``tol`` (absolute).  Works for complex-valued ``f``.
    """
    total = 0.0
    stack = [(a, b, gauss_legendre(f, a, b, n), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = gauss_legendre(f, lo, mid, n)
        right = gauss_legendre(f, mid, hi, n)
        if abs(left + right - whole) <= tol or depth >= max_depth:
            total = total + left + right
        else:
            stack.append((lo, mid, left, depth + 1))
            stack.append((mid, hi, right, depth + 1))
    return total


def tanh_sinh_unit(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    tol: float = 1e-15,
    max_level: int = 10,
) -> float:
    """Double-exponential quadrature of ``f(x, 1 - x)`` over [0, 1].

    Step size starts at 1/2 and is halved until successive estimates agree
    to ``tol``.  Nodes whose weight underflows are dropped.
    """
    t_max = 4.0  # endpoint distance ~1e-37 here; weights are negligible beyond
    prev = None
    h = 0.5
    for _ in range(max_level):
        t = np.arange(-t_max, t_max + 0.5 * h, h)
        u = 0.5 * math.pi * np.sinh(t)
        x = 1.0 / (1.0 + np.exp(-2.0 * u))
        xc = 1.0 / (1.0 + np.exp(2.0 * u))
        w = math.pi * np.cosh(t) * x * xc  # dx/dt
        keep = (x > 0.0) & (xc > 0.0) & (w > 0.0)
        est = h * float(np.sum(w[keep] * f(x[keep], xc[keep])))
        if prev is not None and abs(est - prev) <= tol * max(1.0, abs(est)):
            return est
        prev = est
        h *= 0.5
    return prev
