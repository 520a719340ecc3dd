"""The twelve acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line (shown even without
``-s``) and then asserts.  Running the file as a script prints all twelve
lines without pytest.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from sextic import band, constants, core, weierstrass
from sextic.constants import DELTA_ROT, GAMMA_ROT
from sextic.geometry import VERTEX_EXCLUSION, hex_geometry
from sextic.verify import away_from_half_periods, away_from_t_poles, band_points

SEED = 20240601
MONOMIALS = ((2, 2), (4, 0), (1, 3), (3, 1), (2, 6))


def _evaluable(z: complex) -> bool:
    geom = hex_geometry()
    return geom.in_band(z) and geom.segment_vertex_distance(0j, z) >= VERTEX_EXCLUSION


def _rng(offset: int) -> np.random.Generator:
    return np.random.default_rng(SEED + offset)


def criterion_1() -> dict[str, bool]:
    K_q, K_g, om = constants.K_quad(), constants.K_gamma(), constants.omega_gamma()
    return {
        "K_quad~K_gamma~omega": max(abs(K_q - K_g), abs(K_q - om), abs(K_g - om)) < 1e-10,
        "K=sqrt3/2 L": abs(K_q - 0.5 * math.sqrt(3) * constants.L_quad()) < 1e-10,
        "duplication(1/6)": constants.duplication_residual(1 / 6) < 1e-12,
        "r=256/3125": constants.PICARD_RADIUS == Fraction(256, 3125),
    }


def criterion_2() -> dict[str, bool]:
    pts = band_points(_rng(2), 200, im_fraction=0.45)
    return {"sextic": max(core.continue_to(z).drift for z in pts) < 1e-10}


def criterion_3() -> dict[str, bool]:
    worst = 0.0
    for z in band_points(_rng(3), 100):
        s, c = core.eval_sc(z)
        worst = max(worst, abs(weierstrass.q_global(z) - (s * c) ** 2))
    return {"1/wp=s^2c^2": worst < 1e-9}


def criterion_4() -> dict[str, bool]:
    lat = weierstrass.default_lattice()
    rng = _rng(4)
    ode = period = 0.0
    count = 0
    while count < 100:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(lat.reduce(z)) < 0.25:
            continue
        count += 1
        p, dp = lat.wp(z), lat.wp_prime(z)
        ode = max(ode, abs(dp**2 - 4 * p**3 + 16))
        for g in lat.generators:
            w = -0.5 * g + 0.3 * lat.omega * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            period = max(period, abs(lat.laurent(w) - lat.laurent(w + g)))
    return {
        "wp(omega)": abs(lat.wp(lat.omega) - 4 ** (1 / 3)) < 1e-9,
        "wp ODE": ode < 1e-8,
        "periods": period < 1e-9,
    }


def criterion_5() -> dict[str, bool]:
    rng = _rng(5)
    t_res = q_res = 0.0
    for z in band_points(rng, 50, accept=away_from_t_poles):
        jet = core.continue_to(z)
        t = jet.s / jet.c
        t_res = max(t_res, abs(jet.t_prime() ** 3 - 1 - t**6))
    for z in band_points(rng, 50):
        jet = core.continue_to(z)
        q = (jet.s * jet.c) ** 2
        q_res = max(q_res, abs(jet.q_prime() ** 2 - 4 * q * (1 - 4 * q**3)))
    return {"t ODE": t_res < 1e-8, "q ODE": q_res < 1e-8}


def criterion_6() -> dict[str, bool]:
    rng = _rng(6)
    rot = par = 0.0
    for z in band_points(rng, 50, accept=lambda z: _evaluable(GAMMA_ROT * z)):
        s, c = core.eval_sc(z)
        sg, cg = core.eval_sc(GAMMA_ROT * z)
        rot = max(rot, abs(sg - GAMMA_ROT * s), abs(cg - c))
    for z in band_points(rng, 50):
        s, c = core.eval_sc(z)
        sb, cb = core.eval_sc(z.conjugate())
        sm, cm = core.eval_sc(-z)
        par = max(par, abs(sb - s.conjugate()), abs(cb - c.conjugate()), abs(sm + s), abs(cm - c))
    return {"rotation": rot < 1e-10, "parity/conjugation": par < 1e-10}


def criterion_7() -> dict[str, bool]:
    worst = 0.0
    for z in band_points(_rng(7), 50, accept=lambda z: _evaluable(DELTA_ROT * z)):
        f, g = core.eval_fg(z)
        worst = max(worst, abs(g**6 - f**6 - 1))
    return {"g^6-f^6=1": worst < 1e-10}


def criterion_8() -> dict[str, bool]:
    geom = hex_geometry()
    K, L = geom.K, geom.L
    rng = _rng(8)
    per = gap = 0.0
    for z in band_points(rng, 50, re_range=(-2 * K, 0.0), accept=away_from_t_poles):
        t = core.eval_t(z)
        per = max(per, abs(core.eval_t(z + 4 * K) - t))
        gap = max(gap, abs(core.eval_t(z + 2 * K) - t))
    inside = max(abs(band.t_band(z)) for z in band_points(rng, 50, re_range=(-0.99 * K, 0.99 * K)))
    radial = abs(band.t_band(DELTA_ROT * L * (1 - 1e-3)) - DELTA_ROT)
    return {"4K period": per < 1e-9, "2K not a period": gap > 0.1, "|t|<1 on H0": inside < 1, "radial limit": radial < 1e-4}


def criterion_9() -> dict[str, bool]:
    rng = _rng(9)
    s12 = max(band.identity_residual_s12(z) for z in band_points(rng, 20, accept=away_from_half_periods))
    s24 = max(max(band.identity_residual_s24(z).values()) for z in band_points(rng, 20, accept=away_from_half_periods))
    return {"s12": s12 < 1e-8, "s24": s24 < 1e-7}


def _shift_residual(points, m, n, shift):
    return max(abs(band.monomial(z + shift, m, n) - band.monomial(z, m, n)) for z in points)


def criterion_10() -> dict[str, bool]:
    K = hex_geometry().K
    classifier = all(
        band.sc_monomial_extends(m, n) == (m == n and m % 2 == 0) for m in range(-10, 11) for n in range(-10, 11)
    )
    rule = all(
        band.band_period(m, n) == (2 * K if (m - n) % 4 == 0 else 4 * K)
        for m in range(-8, 9)
        for n in range(-8, 9)
        if (m + n) % 4 == 0 and (m, n) != (0, 0)
    )
    pts = band_points(_rng(10), 10, re_range=(-2 * K, 0.0), im_fraction=0.3)
    confirms = all(_shift_residual(pts, m, n, band.band_period(m, n)) < 1e-8 for m, n in MONOMIALS)
    refutes = all(_shift_residual(pts, m, n, 0.5 * band.band_period(m, n)) > 1e-2 for m, n in MONOMIALS)
    return {"classifier": classifier, "period rule": rule, "numeric P confirmed": confirms, "P/2 refuted": refutes}


def criterion_11() -> dict[str, bool]:
    K = hex_geometry().K
    pts = band_points(_rng(11), 20, re_range=(-0.95 * K, 0.95 * K))
    return {
        "SC(1)=L": abs(band.schwarz_christoffel(1.0) - constants.L_quad()) < 1e-8,
        "round trip": max(band.sc_inverse_residual(z) for z in pts) < 1e-8,
    }


def criterion_12() -> dict[str, bool]:
    L = hex_geometry().L
    single = core.local_taylor(0j, 1 + 0j, 128)
    pts = band_points(
        _rng(12), 50, re_range=(-0.8 * L, 0.8 * L), im_fraction=0.5, accept=lambda z: abs(z) <= 0.8 * L and _evaluable(z)
    )
    worst = 0.0
    for z in pts:
        s, c = core.eval_sc(z)
        s1, c1 = single(z)
        worst = max(worst, abs(s - s1) / max(1.0, abs(s1)), abs(c - c1) / max(1.0, abs(c1)))
    return {"stepped vs N=128": worst < 1e-9}


CRITERIA = [globals()[f"criterion_{i}"] for i in range(1, 13)]


def report_line(i: int, checks: dict[str, bool]) -> str:
    status = "PASS" if all(checks.values()) else "FAIL"
    failed = [k for k, ok in checks.items() if not ok]
    detail = f" (failed: {', '.join(failed)})" if failed else ""
    return f"criterion {i}: {status}{detail}"


@pytest.mark.parametrize("index", range(1, 13))
def test_criterion(index, capsys):
    checks = CRITERIA[index - 1]()
    line = report_line(index, checks)
    with capsys.disabled():
        print(f"\n{line}")
    assert all(checks.values()), line


if __name__ == "__main__":
    for i, crit in enumerate(CRITERIA, start=1):
        print(report_line(i, crit()))
