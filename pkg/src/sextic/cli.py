"""Command-line interface: ``sextic {constants,verify,eval,grid}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error, 4 I/O error.  Arguments that start with a minus sign need the
``--opt=value`` form, e.g. ``--z=-0.5,0`` or ``--re=-1:1:50``.
"""

from __future__ import annotations

import argparse
import colorsys
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import band, constants, core, weierstrass
from .constants import is_infinite
from .errors import DomainError
from .verify import run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

FUNCTIONS: dict[str, Callable[[complex], complex]] = {
    "s": lambda z: core.eval_sc(z)[0],
    "c": lambda z: core.eval_sc(z)[1],
    "t": band.t_band,
    "q": weierstrass.q_global,
    "wp": weierstrass.wp,
    "wpprime": weierstrass.wp_prime,
    "f": lambda z: core.eval_fg(z)[0],
    "g": lambda z: core.eval_fg(z)[1],
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    re_count: int
    im_min: float
    im_max: float
    im_count: int
    function: str

    def __post_init__(self) -> None:
        if self.function not in FUNCTIONS:
            raise UsageError(f"unknown function {self.function!r}")
        if self.re_count < 2 or self.im_count < 2:
            raise UsageError("grid counts must be at least 2")
        if not (self.re_max > self.re_min and self.im_max > self.im_min):
            raise UsageError("grid ranges need max > min")

    def points(self) -> list[complex]:
        """Row-major samples: imaginary part outer, real part inner."""
        xs = np.linspace(self.re_min, self.re_max, self.re_count)
        ys = np.linspace(self.im_min, self.im_max, self.im_count)
        return [complex(x, y) for y in ys for x in xs]


def parse_complex(text: str) -> complex:
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise UsageError(f"expected 're,im', got {text!r}") from None


def parse_range(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, n = text.split(":")
        return float(lo), float(hi), int(n)
    except ValueError:
        raise UsageError(f"expected 'min:max:n', got {text!r}") from None


def _fmt(x: float) -> str:
    # shortest round-trip repr, without a trailing ".0"
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def safe_eval(fn: Callable[[complex], complex], z: complex) -> complex:
    """Function value, POINT_AT_INFINITY at poles, NaN where it is not evaluated."""
    try:
        return complex(fn(z))
    except DomainError:
        return complex(math.nan, math.nan)


# -- commands ---------------------------------------------------------------


def cmd_constants(as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    table = constants.constants_table()
    if as_json:
        payload = {
            "r": float(table.r),
            "r_fraction": f"{table.r.numerator}/{table.r.denominator}",
            "K_quad": table.K_quad,
            "K_gamma": table.K_gamma,
            "L": table.L,
            "omega": table.omega,
            "residuals": table.residuals,
        }
        print(json.dumps(payload, indent=2), file=out)
        return EXIT_OK
    rows = [
        ("r", f"{float(table.r)} = {table.r.numerator}/{table.r.denominator}"),
        ("K (quadrature)", _fmt(table.K_quad)),
        ("K (Gamma)", _fmt(table.K_gamma)),
        ("L (tanh-sinh)", _fmt(table.L)),
        ("omega (Gamma)", _fmt(table.omega)),
        ("gamma", f"{_fmt(table.gamma_rot.real)} {_fmt(table.gamma_rot.imag)}"),
        ("delta", f"{_fmt(table.delta_rot.real)} {_fmt(table.delta_rot.imag)}"),
    ]
    rows += [(f"residual {k}", f"{v:.3e}") for k, v in table.residuals.items()]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}", file=out)
    return EXIT_OK


def cmd_verify(tol: float | None = None, samples: int = 100, seed: int = 1, out=None) -> int:
    out = out or sys.stdout
    failures = 0
    for result in run_all(seed=seed, samples=samples, tol=tol):
        print(result.line(), file=out)
        failures += not result.passed
    print(f"{failures} failing check(s)", file=out)
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def cmd_eval(fn: str, z: complex, out=None) -> int:
    out = out or sys.stdout
    if fn not in FUNCTIONS:
        raise UsageError(f"unknown function {fn!r}")
    value = complex(FUNCTIONS[fn](z))
    if is_infinite(value):
        print("inf", file=out)
    else:
        print(f"{_fmt(value.real)} {_fmt(value.imag)}", file=out)
    return EXIT_OK


def _pixel(value: complex) -> tuple[int, int, int]:
    if is_infinite(value):
        return 255, 255, 255
    if math.isnan(value.real) or math.isnan(value.imag):
        return 0, 0, 0
    m = abs(value)
    hue = (math.atan2(value.imag, value.real) / (2.0 * math.pi)) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, m / (1.0 + m), 1.0)
    return round(255 * r), round(255 * g), round(255 * b)


def write_ppm(path: str, spec: GridSpec, values: list[complex]) -> None:
    """Binary P6 domain-colouring image, highest imaginary part on the top row."""
    rows = [values[j * spec.re_count : (j + 1) * spec.re_count] for j in range(spec.im_count)]
    body = bytearray()
    for row in reversed(rows):
        for v in row:
            body.extend(_pixel(v))
    with open(path, "wb") as fh:
        fh.write(f"P6\n{spec.re_count} {spec.im_count}\n255\n".encode("ascii"))
        fh.write(bytes(body))


def write_csv(path: str, spec: GridSpec, values: list[complex]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("re,im,val_re,val_im\n")
        for z, v in zip(spec.points(), values):
            if is_infinite(v):
                val = "inf,inf"
            elif math.isnan(v.real) or math.isnan(v.imag):
                val = "nan,nan"
            else:
                val = f"{_fmt(v.real)},{_fmt(v.imag)}"
            fh.write(f"{_fmt(z.real)},{_fmt(z.imag)},{val}\n")


def cmd_grid(spec: GridSpec, out_path: str, ppm_path: str | None = None) -> int:
    fn = FUNCTIONS[spec.function]
    values = [safe_eval(fn, z) for z in spec.points()]
    try:
        write_csv(out_path, spec, values)
        if ppm_path:
            write_ppm(ppm_path, spec, values)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sextic", description="The sextic system s' = c^5, c' = -s^5.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print r, K, L, omega and their cross-check residuals")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run every numerical verification suite")
    p.add_argument("--tol", type=float, default=None, help="override every residual tolerance")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    p.add_argument("--z", required=True, help="point as 're,im'")

    p = sub.add_parser("grid", help="sample a function on a grid; CSV and optional PPM")
    p.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    p.add_argument("--re", required=True, help="min:max:n")
    p.add_argument("--im", required=True, help="min:max:n")
    p.add_argument("--out", required=True)
    p.add_argument("--ppm")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)  # argparse itself exits with EXIT_USAGE on bad flags
    try:
        if args.command == "constants":
            return cmd_constants(args.json)
        if args.command == "verify":
            if args.samples < 5:
                raise UsageError("--samples must be at least 5")
            return cmd_verify(args.tol, args.samples, args.seed)
        if args.command == "eval":
            return cmd_eval(args.fn, parse_complex(args.z))
        spec = GridSpec(*parse_range(args.re), *parse_range(args.im), function=args.fn)
        return cmd_grid(spec, args.out, args.ppm)
    except UsageError as exc:
        print(f"sextic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"sextic: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
