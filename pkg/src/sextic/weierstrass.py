"""Weierstrass wp(z; 0, 16) and its reciprocal q = s^2 c^2.

The argument is reduced to the Voronoi cell of 0 in the period lattice
(|z| <= L, while the nearest nonzero period is at 2 omega = sqrt(3) L) and
the Laurent series is summed there.  The hexagonal shape of the lattice is
not assumed: construction checks both generators as periods using the
unreduced Laurent series, and refuses to build the lattice otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .constants import GAMMA_ROT, POINT_AT_INFINITY, omega_gamma
from .geometry import nearest_lattice_point

G2 = 0.0
G3 = 16.0
LAURENT_TERMS = 36
LATTICE_GUARD = 1e-8
ZERO_GUARD = 1e-12
PERIOD_CHECK_TOL = 1e-9


def laurent_coefficients(g2: float, g3: float, n_terms: int = LAURENT_TERMS) -> np.ndarray:
    """c_2 .. c_{n_terms+1} with wp(z) = z^-2 + sum_k c_k z^(2k-2)."""
    c = np.zeros(n_terms + 2)
    c[2] = g2 / 20.0
    if n_terms > 1:
        c[3] = g3 / 28.0
    for k in range(4, n_terms + 2):
        acc = sum(c[m] * c[k - m] for m in range(2, k - 1))
        c[k] = 3.0 * acc / ((2 * k + 1) * (k - 3))
    return c[2:]


class LatticeError(RuntimeError):
    """The proposed generators failed the numerical period check."""


@dataclass(frozen=True)
class Lattice:
    g2: float
    g3: float
    omega: float
    generators: tuple[complex, complex]
    coeffs: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, g2: float = G2, g3: float = G3, omega: float | None = None) -> Lattice:
        if omega is None:
            omega = omega_gamma()
        gens = (complex(2.0 * omega), 2.0 * omega * GAMMA_ROT)
        coeffs = laurent_coefficients(g2, g3)
        coeffs.flags.writeable = False
        lat = cls(g2, g3, omega, gens, coeffs)
        lat._verify()
        return lat

    def _verify(self) -> None:
        # Points z, z + p with |z|, |z + p| close to omega: inside the raw series' disc of convergence.
        eps = (0.05 + 0.03j) * self.omega
        for p in self.generators:
            z = -0.5 * p + eps
            err = abs(self.laurent(z) - self.laurent(z + p))
            if not err < PERIOD_CHECK_TOL:
                raise LatticeError(f"{p} is not a period of wp(.; {self.g2}, {self.g3}): mismatch {err:.3e}")
        err = abs(self.laurent(self.omega) - 4.0 ** (1 / 3))
        if not err < PERIOD_CHECK_TOL:
            raise LatticeError(f"wp(omega) differs from 4^(1/3) by {err:.3e}")

    def laurent(self, z: complex) -> complex:
        """Unreduced Laurent sum; only accurate for |z| well below 2 omega."""
        z = complex(z)
        w = z * z
        acc = 0j
        for ck in self.coeffs[::-1]:
            acc = acc * w + ck
        return 1.0 / w + acc * w

    def laurent_prime(self, z: complex) -> complex:
        z = complex(z)
        w = z * z
        acc = 0j
        for k in range(len(self.coeffs) + 1, 1, -1):
            acc = acc * w + (2 * k - 2) * self.coeffs[k - 2]
        return -2.0 / (w * z) + acc * z

    def reduce(self, z: complex) -> complex:
        z = complex(z)
        return z - nearest_lattice_point(z, *self.generators)

    def wp(self, z: complex) -> complex:
        r = self.reduce(z)
        if abs(r) < LATTICE_GUARD:
            return POINT_AT_INFINITY
        return self.laurent(r)

    def wp_prime(self, z: complex) -> complex:
        r = self.reduce(z)
        if abs(r) < LATTICE_GUARD:
            return POINT_AT_INFINITY
        return self.laurent_prime(r)

    def q(self, z: complex) -> complex:
        r = self.reduce(z)
        if abs(r) < LATTICE_GUARD:
            return 0j
        p = self.laurent(r)
        if abs(p) < ZERO_GUARD:
            return POINT_AT_INFINITY
        return 1.0 / p

    def locate_zero(self, guess: complex, tol: float = 1e-15, max_iter: int = 50) -> complex:
        """Newton iteration for a zero of wp starting from ``guess``."""
        z = complex(guess)
        for _ in range(max_iter):
            step = self.wp(z) / self.wp_prime(z)
            z -= step
            if abs(step) < tol:
                break
        return z

    def zeros(self) -> tuple[complex, complex]:
        """The two zeros of wp in the period parallelogram spanned by the generators."""
        p1, p2 = self.generators
        return self.locate_zero((p1 + p2) / 3.0), self.locate_zero(2.0 * (p1 + p2) / 3.0)


@lru_cache(maxsize=None)
def default_lattice() -> Lattice:
    return Lattice.build()


def wp(z: complex) -> complex:
    return default_lattice().wp(z)


def wp_prime(z: complex) -> complex:
    return default_lattice().wp_prime(z)


def q_global(z: complex) -> complex:
    """1/wp(z): the meromorphic extension of s^2 c^2 to the whole plane."""
    return default_lattice().q(z)
