"""Command-line front end for curve approximation experiments.

Commands: classify, approx, ellint, ode2, quadcheck.  Curve specs are JSON
objects {"phi": [a0,a1,a2,a3], "support": [lo, hi | "inf"],
"weight": {"kind": ..., "alpha": ..., "beta": ...}} given inline or as a
file path.  Results are CSV files with a JSON metadata sidecar.

Exit codes: 0 success, 2 invalid input, 3 solver failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import j1

from . import __version__
from .basis import CurveBasis, monomial_curve_degree
from .collocation import CollocationProblem, ode_coefficients_example2, solve
from .curve import CubicCurve, chart, classify
from .exceptions import NumericalError, SolveError
from .hp import hp_fit, hp_nodes, hp_sweep
from .interp import curve_interpolate, curve_quadrature, curve_samples, gauss_order

__all__ = ["main"]


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _load_curve_spec(text: str) -> dict:
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise CliError(f"curve spec is not valid JSON: {e}")
    if not isinstance(spec, dict) or "phi" not in spec:
        raise CliError("curve spec must be an object with a 'phi' entry")
    return spec


def _chart_from_spec(spec: dict, weight_override: str | None = None):
    phi = spec["phi"]
    if not (isinstance(phi, list) and len(phi) == 4):
        raise CliError("'phi' must be a list [a0, a1, a2, a3]")
    try:
        curve = classify([float(c) for c in phi])
    except (ValueError, TypeError) as e:
        raise CliError(f"invalid curve: {e}")
    if "support" not in spec:
        return curve, None
    support = spec["support"]
    weight = dict(spec.get("weight", {"kind": "legendre"}))
    if weight_override:
        weight["kind"] = weight_override
    kind = weight.pop("kind", "legendre")
    try:
        ch = chart(curve, tuple(support), kind, **weight)
    except (ValueError, TypeError) as e:
        raise CliError(f"invalid chart: {e}")
    return curve, ch


def _write_csv(path: str | None, header: list, rows: list, meta: dict):
    out = sys.stdout if path is None else open(path, "w", newline="")
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    finally:
        if path is not None:
            out.close()
    if path is not None:
        with open(path + ".meta.json", "w") as fh:
            json.dump({"version": __version__, **meta}, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _parse_eps(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise CliError(f"invalid --eps list {text!r}")
    if any(v < 0 for v in vals):
        raise CliError("--eps values must be >= 0")
    return vals


def cmd_classify(args) -> int:
    curve, _ = _chart_from_spec(_load_curve_spec(args.curve))
    print(f"case: {curve.case.value}")
    for r, m in curve.roots:
        print(f"root: {r:.15g} (multiplicity {m})")
    parts = ", ".join(
        f"({a:.15g}, {'inf' if math.isinf(b) else format(b, '.15g')})"
        for a, b in curve.omega)
    print(f"omega: {parts}")
    disc = curve.elliptic_discriminant
    if disc is not None:
        print(f"elliptic discriminant: {disc:.15g}")
    return 0


def _bessel_setup(eps: float):
    """Chart and on-curve/on-axis forms of the Bessel target function."""
    curve = classify([1.0, 0.0, 0.0, -eps * eps])
    lo = eps ** (2.0 / 3.0)
    hi = (1.0 + eps * eps) ** (1.0 / 3.0)
    ch = chart(curve, (lo, hi), "chebyshev")

    def f_curve(tc, y):
        return j1(10.0 * np.asarray(y) + 20.0 * ch.from_canonical(tc))

    def f_axis(t):
        t = np.asarray(t, dtype=float)
        return j1(10.0 * t + 20.0 * np.cbrt(t * t + eps * eps))

    def grid_points(npts: int = 2001):
        t = np.linspace(-1.0, 1.0, npts)
        x = np.cbrt(t * t + eps * eps)
        return t, ch.to_canonical(x), t  # axis t, canonical x, curve y (= t)

    return ch, f_curve, f_axis, grid_points


def cmd_approx(args) -> int:
    eps_list = _parse_eps(args.eps)
    header = ["eps", "n", "two_N", "max_error_curve",
              "max_error_hp1", "max_error_hp2", "max_error_hp3"]
    rows = []
    for eps in eps_list:
        ch, f_curve, f_axis, grid_points = _bessel_setup(eps)
        t_axis, tc, y = grid_points()
        f_true = f_axis(t_axis)
        for n in range(2, args.nmax + 1, 2):
            basis = CurveBasis(ch, "bracket", nmax=n)
            rule = curve_quadrature(basis, n)
            ex = curve_interpolate(basis, n, curve_samples(rule, f_curve))
            err_curve = float(np.max(np.abs(ex(tc, y) - f_true)))
            row = [eps, n, 2 * rule.N, err_curve]
            for m in (1, 2, 3):
                two_n = 2 * rule.N
                d = (two_n - m) // (m + 1)
                xs, _ = hp_nodes(two_n)
                try:
                    ap = hp_fit(f_axis(xs), m, d)
                    vals = hp_sweep(ap, t_axis, float(f_true[0]))
                    row.append(float(np.max(np.abs(vals - f_true))))
                except NumericalError:
                    row.append(float("nan"))
            rows.append(row)
    _write_csv(args.out, header, rows,
               {"command": "approx", "eps": eps_list, "nmax": args.nmax})
    return 0


def _ellint_chart(eps: float):
    co = P.polymul(P.polymul([1.0 + eps, 1.0], [2.0, 1.0]), [3.0, 1.0])
    curve = classify(list(co[::-1]))
    return chart(curve, (-1.0, 1.0), "legendre")


def cmd_ellint(args) -> int:
    eps_list = _parse_eps(args.eps)
    rows = []
    for eps in eps_list:
        ch = _ellint_chart(eps)
        basis = CurveBasis(ch, args.mode, nmax=args.nmax)
        y0 = float(ch.y(-1.0))
        problem = CollocationProblem(
            basis, 1,
            [lambda t, y: np.zeros_like(np.asarray(t, dtype=float)),
             lambda t, y: np.asarray(y, dtype=float)],
            lambda t, y: np.ones_like(np.asarray(t, dtype=float)),
            bcs=[((-1.0, y0), 0.0)])
        sol = solve(problem, args.nmax)
        value = sol(1.0, float(ch.y(1.0)))
        print(f"eps={eps:g} integral={value:.16g} "
              f"condition={sol.condition:.3e}")
        a, b = sol.expansion.a, sol.expansion.b
        for k in range(max(a.size, b.size)):
            rows.append([eps, k,
                         abs(a[k]) if k < a.size else 0.0,
                         abs(b[k]) if k < b.size else 0.0])
    _write_csv(args.out, ["eps", "k", "abs_a_k", "abs_b_k"], rows,
               {"command": "ellint", "eps": eps_list, "nmax": args.nmax,
                "mode": args.mode})
    return 0


def cmd_ode2(args) -> int:
    curve = classify([1.0, -2.0, -1.0, 2.0])   # y^2 = (1-x^2)(2-x)
    ch = chart(curve, (-1.0, 1.0), "legendre")
    c1 = 10.0
    a2, a1, a0, g = ode_coefficients_example2(ch)
    bcs = [((1.0, 0.0), math.sin(c1)), ((-1.0, 0.0), math.sin(-c1))]
    tgrid = np.linspace(-1.0, 1.0, 2001)
    ygrid = ch.y(tgrid)
    exact = np.sin(c1 * tgrid + 5.0 * tgrid * ygrid)
    exact_m = np.sin(c1 * tgrid - 5.0 * tgrid * ygrid)
    rows = []
    for n in range(6, args.nmax + 1, 2):
        row = [2 * gauss_order(n)]
        for mode in ("bracket", "angle"):
            basis = CurveBasis(ch, mode, nmax=n)
            problem = CollocationProblem(basis, 2, [a0, a1, a2], g, bcs=bcs)
            sol = solve(problem, n)
            err = max(float(np.max(np.abs(sol(tgrid, ygrid) - exact))),
                      float(np.max(np.abs(sol(tgrid, -ygrid) - exact_m))))
            row.append(err)
        rows.append(row)
    _write_csv(args.out, ["two_N", "max_error_bracket", "max_error_angle"],
               rows, {"command": "ode2", "nmax": args.nmax})
    return 0


def cmd_quadcheck(args) -> int:
    _, ch = _chart_from_spec(_load_curve_spec(args.curve), args.weight)
    if ch is None:
        raise CliError("curve spec needs a 'support' entry for quadcheck")
    basis = CurveBasis(ch, "bracket", nmax=max(args.nmax, 2))
    ref_basis = CurveBasis(ch, "bracket", nmax=2 * args.nmax + 12)
    ref = curve_quadrature(ref_basis, 2 * args.nmax + 8)
    rows = []
    worst_all = 0.0
    for n in range(2, args.nmax + 1):
        rule = curve_quadrature(basis, n)
        worst = 0.0
        for j in range(3 * n):
            for odd in (False, True):
                if monomial_curve_degree(j, odd) > 2 * n - 1:
                    continue
                f = (lambda t, y, j=j: t ** j * y) if odd else \
                    (lambda t, y, j=j: t ** j * np.ones_like(y))
                val, rv = rule.integrate(f), ref.integrate(f)
                worst = max(worst, abs(val - rv) / max(1.0, abs(rv)))
        worst_all = max(worst_all, worst)
        rows.append([n, rule.N, worst])
        print(f"n={n} N={rule.N} max_rel_error={worst:.3e}")
    _write_csv(args.out, ["n", "N", "max_rel_error"], rows,
               {"command": "quadcheck", "nmax": args.nmax})
    print(f"overall max_rel_error={worst_all:.3e}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="curvepoly",
        description="Orthogonal polynomial approximation on cubic curves")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("classify", help="classify a cubic curve")
    pc.add_argument("--curve", required=True,
                    help="curve spec JSON (inline or file path)")
    pc.set_defaults(func=cmd_classify)

    pa = sub.add_parser("approx", help="Bessel-function approximation sweep")
    pa.add_argument("--eps", default="0.01",
                    help="comma-separated list of epsilon values")
    pa.add_argument("--nmax", type=int, default=34)
    pa.add_argument("--out", default=None, help="CSV output path")
    pa.set_defaults(func=cmd_approx)

    pe = sub.add_parser("ellint", help="elliptic integral via a first-order ODE")
    pe.add_argument("--eps", default="0.001")
    pe.add_argument("--nmax", type=int, default=24)
    pe.add_argument("--mode", choices=["angle", "bracket"], default="bracket")
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_ellint)

    po = sub.add_parser("ode2", help="singular second-order ODE sweep")
    po.add_argument("--nmax", type=int, default=44)
    po.add_argument("--out", default=None)
    po.set_defaults(func=cmd_ode2)

    pq = sub.add_parser("quadcheck", help="curve quadrature exactness report")
    pq.add_argument("--curve", required=True)
    pq.add_argument("--weight", default=None, help="override weight kind")
    pq.add_argument("--nmax", type=int, default=8)
    pq.add_argument("--out", default=None)
    pq.set_defaults(func=cmd_quadcheck)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except SolveError as e:
        print(f"solver failure: {e}", file=sys.stderr)
        return 3
    except (ValueError, NumericalError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
