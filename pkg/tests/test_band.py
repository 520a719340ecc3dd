import cmath
import math

import mpmath
import pytest

from sextic.band import (
    band_period,
    identity_residual_s12,
    identity_residual_s24,
    in_band,
    least_band_period,
    monomial,
    reduce_mod_period,
    sc_inverse_residual,
    sc_monomial_extends,
    schwarz_christoffel,
    t_band,
    vertex_limit,
)
from sextic.constants import DELTA_ROT, GAMMA_ROT, L_quad, is_infinite
from sextic.core import eval_sc, eval_t
from sextic.errors import DomainError


def test_in_band(L):
    assert in_band(0)
    assert not in_band(1j * L)
    assert in_band(100 + 0.4j * L)
    assert not in_band(0.5j * L)


def test_reduce_mod_period(K, L):
    z0, k = reduce_mod_period(4 * K + 0.1)
    assert k == 1 and z0 == pytest.approx(0.1, abs=1e-15)
    assert reduce_mod_period(0.1) == (0.1, 0)
    z0, k = reduce_mod_period(-6 * K)
    assert k == -1 and z0.real == pytest.approx(-2 * K, abs=1e-14)
    z0, k = reduce_mod_period(2 * K)
    assert k == 1 and z0.real == pytest.approx(-2 * K)
    z0, k = reduce_mod_period(-2 * K)
    assert k == 0 and z0 == -2 * K
    with pytest.raises(DomainError):
        reduce_mod_period(0.6j * L)


def test_t_band_examples(K, L):
    assert t_band(0) == 0
    for z in (0.3 + 0.2j, -1.1 - 0.4j, 1.6 + 0.1j):
        assert abs(t_band(z + 4 * K) - t_band(z)) < 1e-9
        assert abs(t_band(z + 40 * K) - t_band(z)) < 1e-9
    assert is_infinite(t_band(2 * K)) and is_infinite(t_band(-6 * K))


def test_t_band_agrees_with_direct_continuation(K):
    for z in (3.1 + 0.3j, 5.0 - 0.2j, -3.5 + 0.1j):
        assert abs(t_band(z) - eval_t(z)) < 1e-10


def test_vertex_value(L):
    vertex = DELTA_ROT * L
    assert abs(t_band(vertex * (1 - 1e-3)) - DELTA_ROT) < 1e-4
    assert abs(t_band(vertex * (1 - 1e-2)) - DELTA_ROT) > abs(t_band(vertex * (1 - 1e-3)) - DELTA_ROT)
    assert abs(vertex_limit(vertex) - DELTA_ROT) < 1e-6
    # other band-boundary vertices are sixth roots of -1 too
    for v in (complex(-0.5 * math.sqrt(3) * L, 0.5 * L), complex(0.5 * math.sqrt(3) * L, -0.5 * L)):
        lim = vertex_limit(v)
        assert abs(lim**6 + 1) < 1e-5 and abs(abs(lim) - 1) < 1e-6


def test_modulus_map(K, L):
    for x in (-0.9, -0.3, 0.0, 0.5, 0.9):
        for y in (-0.45, 0.0, 0.2, 0.45):
            z = complex(x * K, y * L)
            assert abs(t_band(z)) < 1
            w = z + 2 * K
            if abs(w - 2 * K) > 1e-6:
                assert abs(t_band(w)) > 1


def test_edge_values_unimodular(K, L):
    for y in (-0.4, -0.1, 0.0, 0.3):
        assert abs(t_band(complex(K, y * L))) == pytest.approx(1, abs=1e-12)


def sc_oracle(w):
    mpmath.mp.dps = 20
    return complex(mpmath.quad(lambda u: w * (1 - (w * u) ** 6) ** (-mpmath.mpf(1) / 3), [0, 1]))


def test_schwarz_christoffel_examples():
    assert schwarz_christoffel(0) == 0
    assert abs(schwarz_christoffel(1) - L_quad()) < 1e-8
    for k in range(6):
        assert abs(schwarz_christoffel(GAMMA_ROT**k) - L_quad() * GAMMA_ROT**k) < 1e-12
    w = 0.4 + 0.3j
    assert abs(schwarz_christoffel(GAMMA_ROT * w) - GAMMA_ROT * schwarz_christoffel(w)) < 1e-13
    assert abs(schwarz_christoffel(w.conjugate()) - schwarz_christoffel(w).conjugate()) < 1e-15
    with pytest.raises(DomainError):
        schwarz_christoffel(1.01)


@pytest.mark.parametrize("w", [0.5 + 0.3j, -0.7j, 0.95, cmath.exp(0.3j), 0.999 * cmath.exp(1.2j)])
def test_schwarz_christoffel_against_quadrature_oracle(w):
    assert abs(schwarz_christoffel(w) - sc_oracle(w)) < 1e-12


def test_boundary_goes_to_hexagon_edges(K):
    # the arc between 1 and gamma lands on the edge whose outward normal is delta
    for theta in (0.1, 0.5, 1.0):
        z = schwarz_christoffel(cmath.exp(1j * theta))
        assert (z * DELTA_ROT.conjugate()).real == pytest.approx(K, abs=1e-10)


def newton_inverse(target, w0=0j):
    w = w0
    for _ in range(60):
        step = (schwarz_christoffel(w) - target) * (1 - w**6) ** (1 / 3)
        w -= step
        if abs(step) < 1e-16:
            break
    return w


@pytest.mark.parametrize("z", [0.3, 0.25 + 0.1j, -0.6 + 0.3j])
def test_t_inverts_schwarz_christoffel(z):
    w = newton_inverse(DELTA_ROT.conjugate() * z)
    assert abs(DELTA_ROT * w - t_band(z)) < 1e-10


def test_sc_inverse_residual_examples(L):
    assert sc_inverse_residual(0) == 0
    assert sc_inverse_residual(0.3) < 1e-8
    assert sc_inverse_residual(0.5 * DELTA_ROT * L) < 1e-8


def test_classifier_examples():
    assert sc_monomial_extends(2, 2)
    assert not sc_monomial_extends(4, 0)
    assert not sc_monomial_extends(3, 1)
    assert sc_monomial_extends(0, 0)
    assert sc_monomial_extends(-2, -2)
    assert not sc_monomial_extends(1, 1)
    assert not sc_monomial_extends(12, 0)


def test_classifier_exhaustive():
    for m in range(-10, 11):
        for n in range(-10, 11):
            assert sc_monomial_extends(m, n) == (m == n and m % 2 == 0)


def test_band_period_rule(K):
    assert band_period(2, 2) == 2 * K
    assert band_period(1, 3) == 4 * K
    assert band_period(4, 0) == 2 * K
    assert band_period(-3, -1) == 4 * K
    with pytest.raises(DomainError):
        band_period(1, 2)
    with pytest.raises(DomainError):
        band_period(0, 0)


def test_least_band_period(K):
    assert least_band_period(2, 2) == 2 * K
    assert least_band_period(4, 0) == 4 * K
    assert least_band_period(1, 3) == 4 * K
    pts = (-0.7 + 0.2j, -1.3 - 0.1j, -0.2 + 0.05j)
    for m, n in ((2, 2), (4, 0), (1, 3), (3, 1), (2, 6), (4, 4), (-1, -3)):
        P = least_band_period(m, n)
        assert max(abs(monomial(z + P, m, n) - monomial(z, m, n)) for z in pts) < 1e-8
        assert max(abs(monomial(z + P / 2, m, n) - monomial(z, m, n)) for z in pts) > 1e-2


def test_half_shift_swaps_s_and_c(K):
    for z in (-0.7 + 0.2j, 0.4 - 0.3j):
        s, c = eval_sc(z)
        s2, c2 = eval_sc(z + 2 * K)
        assert abs(s2 - c) < 1e-12 and abs(c2 + s) < 1e-12


def test_identity_residuals():
    assert identity_residual_s12(0.1) < 1e-8
    assert identity_residual_s12(0.3 + 0.2j) < 1e-8
    assert identity_residual_s12(1e-3) < 1e-30
    assert identity_residual_s12(0) == 0
    for z in (0.1, 0.25 + 0.1j, -1.4 + 0.3j):
        res = identity_residual_s24(z)
        assert res["s24"] < 1e-7 and res["c24"] < 1e-7
    with pytest.raises(DomainError):
        identity_residual_s24(0)
