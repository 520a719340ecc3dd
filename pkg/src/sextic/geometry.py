"""Hexagon tiling geometry shared by continuation and the band extension.

The hexagons are the Voronoi cells of the period lattice generated by 2K and
2K*gamma.  Their vertices are the zeros of wp(.; 0, 16), which are the only
singularities of s and c; everything here is about staying away from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .constants import DELTA_ROT, GAMMA_ROT, constants_table

VERTEX_EXCLUSION = 1e-3


def nearest_lattice_point(z: complex, p1: complex, p2: complex) -> complex:
    """Closest point of the lattice spanned by real ``p1`` and ``p2`` (60 degrees apart)."""
    z = complex(z)
    b = z.imag / p2.imag
    a = (z.real - b * p2.real) / p1.real
    ia, ib = math.floor(a), math.floor(b)
    # the containing rhombus splits into two equilateral triangles; one of its corners wins
    best = None
    for da in (0, 1):
        for db in (0, 1):
            cand = (ia + da) * p1 + (ib + db) * p2
            if best is None or abs(z - cand) < abs(z - best):
                best = cand
    return best


@dataclass(frozen=True)
class HexGeometry:
    L: float
    K: float
    _vertex_offsets: tuple[complex, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        offsets = tuple(DELTA_ROT * self.L * GAMMA_ROT**k for k in range(6))
        object.__setattr__(self, "_vertex_offsets", offsets)

    @property
    def periods(self) -> tuple[complex, complex]:
        return 2.0 * self.K + 0j, 2.0 * self.K * GAMMA_ROT

    def center(self, n: int) -> complex:
        return complex(2 * n * self.K)

    def vertices(self, n: int = 0) -> list[complex]:
        """Vertices of the hexagon centred at 2nK, counter-clockwise from delta*L."""
        c = self.center(n)
        return [c + v for v in self._vertex_offsets]

    def in_band(self, z: complex) -> bool:
        return 2.0 * abs(complex(z).imag) < self.L

    def nearest_lattice_point(self, z: complex) -> complex:
        return nearest_lattice_point(z, *self.periods)

    def nearest_vertex(self, z: complex) -> complex:
        """Closest zero of wp to ``z``."""
        z = complex(z)
        centre = self.nearest_lattice_point(z)
        # z lies in the Voronoi cell of `centre`, so its nearest vertex is one of the six
        return min((centre + v for v in self._vertex_offsets), key=lambda v: abs(z - v))

    def vertex_distance(self, z: complex) -> float:
        return abs(complex(z) - self.nearest_vertex(z))

    def segment_vertex_distance(self, a: complex, b: complex) -> float:
        """Smallest distance from the segment [a, b] to any vertex."""
        a, b = complex(a), complex(b)
        length = abs(b - a)
        if length == 0.0:
            return self.vertex_distance(a)
        # every vertex within L of some sample belongs to that sample's cell or a neighbour
        p1, p2 = self.periods
        ring = (0j, p1, -p1, p2, -p2, p1 - p2, p2 - p1)
        n = max(1, int(math.ceil(length / (0.5 * self.L))))
        candidates = set()
        for k in range(n + 1):
            centre = self.nearest_lattice_point(a + (b - a) * (k / n))
            for shift in ring:
                for v in self._vertex_offsets:
                    candidates.add(centre + shift + v)
        d = b - a
        best = math.inf
        for v in candidates:
            tpar = ((v - a) * d.conjugate()).real / (length * length)
            tpar = min(1.0, max(0.0, tpar))
            best = min(best, abs(a + tpar * d - v))
        return best


@lru_cache(maxsize=None)
def hex_geometry() -> HexGeometry:
    table = constants_table()
    return HexGeometry(L=table.L, K=table.K)
