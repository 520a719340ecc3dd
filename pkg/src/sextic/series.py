"""Truncated complex power series.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of a power
series about some (implicit) center.  Arithmetic drops every power above
``N``.  Coefficient arrays are read-only so instances can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_ORDER = 64
MAX_ORDER = 256


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex).ravel()
        if arr.size == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        if arr.size - 1 > MAX_ORDER:
            raise ValueError(f"order {arr.size - 1} exceeds maximum {MAX_ORDER}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value: complex, order: int) -> TruncatedSeries:
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series ``z`` (requires ``order >= 1``)."""
        c = np.zeros(order + 1, dtype=complex)
        c[1] = 1.0
        return cls(c)

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __len__(self) -> int:
        return self.coeffs.size

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_orders(self, other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self.coeffs)

    def scale(self, factor: complex) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs * factor)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_pow(self, k)

    def __call__(self, z: complex) -> complex:
        return series_eval(self, z)

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs.tolist()!r})"


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} != {b.order}")


def cauchy_coefficient(a: np.ndarray, b: np.ndarray, k: int) -> complex:
    """Coefficient ``k`` of the product of two coefficient arrays.

    Only ``a[:k+1]`` and ``b[:k+1]`` are read, which is what lets recurrences
    build a product one coefficient at a time.
    """
    return complex(np.dot(a[: k + 1], b[k::-1]))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order."""
    _check_orders(a, b)
    n = a.order + 1
    return TruncatedSeries(np.convolve(a.coeffs, b.coeffs)[:n])


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a**k`` by binary exponentiation; ``a**0`` is the constant 1."""
    if k < 0:
        raise ValueError("series_pow needs a nonnegative exponent")
    result = TruncatedSeries.constant(1.0, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_eval(a: TruncatedSeries, z: complex) -> complex:
    # Horner
    acc = 0j
    for c in a.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Term-by-term derivative, one order lower (zero series for order 0)."""
    if a.order == 0:
        return TruncatedSeries.constant(0.0, 0)
    k = np.arange(1, a.order + 1)
    return TruncatedSeries(a.coeffs[1:] * k)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated quotient ``a / b``; needs ``b[0] != 0``."""
    _check_orders(a, b)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    n = a.order + 1
    q = np.zeros(n, dtype=complex)
    for k in range(n):
        acc = a.coeffs[k]
        if k:
            acc -= np.dot(q[:k], b.coeffs[k:0:-1])
        q[k] = acc / b0
    return TruncatedSeries(q)
