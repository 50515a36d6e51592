"""Orthogonal bases on the curve, Fourier expansion and Jacobi operators.

Two inner products are supported.  The "angle" product is the parametrized
arc product; its basis pairs the weight family p_k(w) with the modified
family p_k(phi*w).  The "bracket" product pairs even and odd parts under w
alone, so its basis uses only p_k(w); it is the default for computation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curve import CurveChart
from .exceptions import NumericalError, ParameterDomainError
from .families import OPFamily, gauss_rule

__all__ = ["CurveBasis", "CurveExpansion", "basis_member", "inner_product",
           "fourier_coeffs", "jacobi_operators", "monomial_curve_degree"]


def monomial_curve_degree(j: int, odd: bool = False) -> int:
    """Curve degree of x^j (even) or y*x^j (odd) in the graded basis."""
    r = j % 3
    if not odd:
        return {0: 2 * (j // 3), 1: 2 * (j // 3) + 1, 2: 2 * (j // 3) + 2}[r]
    return {1: 2 * (j + 2) // 3, 2: 2 * (j + 1) // 3 + 1, 0: 2 * (j // 3) + 1}[r]


def _x_degree(n: int, i: int) -> tuple[str, int]:
    """Map curve-degree index (n, i) to ('x'|'y', univariate degree)."""
    if n == 0:
        if i != 1:
            raise IndexError("degree 0 has a single member (i=1)")
        return "x", 0
    if n == 1:
        if i == 1:
            return "x", 1
        if i == 2:
            return "y", 0
        raise IndexError("degree 1 has members i=1,2")
    m, rem = divmod(n, 2)
    if rem == 0:
        table = {1: ("x", 3 * m), 2: ("x", 3 * m - 1), 3: ("y", 3 * m - 2)}
    else:
        table = {1: ("x", 3 * m + 1), 2: ("y", 3 * m), 3: ("y", 3 * m - 1)}
    if i not in table:
        raise IndexError(f"member index i={i} invalid for degree {n}")
    return table[i]


def _dim(n: int) -> int:
    return 1 if n == 0 else (2 if n == 1 else 3)


class CurveBasis:
    """Basis of polynomials on one chart of a cubic curve."""

    def __init__(self, chart: CurveChart, mode: str = "bracket",
                 nmax: int = 20, quad_extra: int = 5):
        if mode not in ("angle", "bracket"):
            raise ParameterDomainError(f"unknown mode {mode!r}")
        self.chart = chart
        self.mode = mode
        self.nmax = nmax
        cap_x = 3 * nmax + 16
        self.fam_x: OPFamily = chart.weight_family(cap_x)
        if mode == "angle":
            cap_y = 3 * ((nmax + 2) // 2) + 8
            self.fam_y: OPFamily = chart.second_family(cap_y)
        else:
            self.fam_y = self.fam_x
        self.default_nquad = (3 * nmax + 8) // 2 + quad_extra

    def member_degrees(self, n: int, i: int) -> tuple[str, int]:
        return _x_degree(n, i)

    def norm_H(self, n: int, i: int) -> float:
        form, k = _x_degree(n, i)
        if self.mode == "angle":
            fam = self.fam_x if form == "x" else self.fam_y
            return 2.0 * float(fam.h[k])
        return float(self.fam_x.h[k])

    def coeff_lengths(self, n: int) -> tuple[int, int]:
        """(len a, len b) of the degree-n partial sum / expansion."""
        m, rem = divmod(n, 2)
        if rem == 0:
            return 3 * m + 1, max(3 * m - 1, 0)
        return 3 * m + 2, 3 * m + 1

    def quad_nodes(self, nquad: int | None = None):
        nq = nquad or self.default_nquad
        rule = gauss_rule(self.fam_x, nq)
        return rule.nodes, rule.weights, self.chart.y(rule.nodes)


@dataclass(eq=False)
class CurveExpansion:
    """Function on the curve: sum a_k p_k(w; t) + y * sum b_k q_k(t)."""

    basis: CurveBasis
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        self.a = np.atleast_1d(np.asarray(self.a, dtype=float))
        self.b = np.atleast_1d(np.asarray(self.b, dtype=float))

    def __call__(self, t, y):
        scalar = np.ndim(t) == 0 and np.ndim(y) == 0
        t1 = np.atleast_1d(np.asarray(t, dtype=float))
        y1 = np.atleast_1d(np.asarray(y, dtype=float))
        out = np.zeros(np.broadcast(t1, y1).shape)
        if self.a.size:
            out = out + self.basis.fam_x.eval_series(self.a, t1)
        if self.b.size:
            out = out + y1 * self.basis.fam_y.eval_series(self.b, t1)
        return float(out[0]) if scalar else out

    def even_part(self, t):
        if not self.a.size:
            return np.zeros(np.shape(np.atleast_1d(t)))
        return self.basis.fam_x.eval_series(self.a, t)

    def odd_part(self, t):
        if not self.b.size:
            return np.zeros(np.shape(np.atleast_1d(t)))
        return self.basis.fam_y.eval_series(self.b, t)


def basis_member(basis: CurveBasis, n: int, i: int = 1) -> CurveExpansion:
    """The (n, i) basis polynomial as a single-term expansion."""
    form, k = _x_degree(n, i)
    if form == "x":
        a = np.zeros(k + 1)
        a[k] = 1.0
        return CurveExpansion(basis, a, np.zeros(0))
    b = np.zeros(k + 1)
    b[k] = 1.0
    return CurveExpansion(basis, np.zeros(0), b)


def _as_callable(f):
    return f if callable(f) else (lambda t, y: np.full(np.shape(t), float(f)))


def inner_product(basis: CurveBasis, f, g, nquad: int | None = None) -> float:
    """Inner product of two functions on the curve, by Gauss quadrature of w."""
    f, g = _as_callable(f), _as_callable(g)
    t, lam, y = basis.quad_nodes(nquad)
    if basis.mode == "angle":
        vals = f(t, y) * g(t, y) + f(t, -y) * g(t, -y)
    else:
        fe, fo = 0.5 * (f(t, y) + f(t, -y)), 0.5 * (f(t, y) - f(t, -y)) / y
        ge, go = 0.5 * (g(t, y) + g(t, -y)), 0.5 * (g(t, y) - g(t, -y)) / y
        vals = fe * ge + fo * go
    if not np.all(np.isfinite(vals)):
        raise NumericalError("non-finite integrand sample in inner product")
    return float(lam @ vals)


def fourier_coeffs(basis: CurveBasis, f, n: int,
                   nquad: int | None = None) -> CurveExpansion:
    """Coefficients of the degree-n partial sum of f on the curve."""
    if n > basis.nmax:
        raise IndexError(f"degree {n} exceeds basis nmax {basis.nmax}")
    f = _as_callable(f)
    t, lam, y = basis.quad_nodes(nquad)
    fp, fm = f(t, y), f(t, -y)
    if not (np.all(np.isfinite(fp)) and np.all(np.isfinite(fm))):
        raise NumericalError("non-finite sample of f on the curve")
    na, nb = basis.coeff_lengths(n)
    tab_x = basis.fam_x.eval_table(t, na - 1)
    a = (tab_x * lam) @ (0.5 * (fp + fm)) / basis.fam_x.h[:na]
    if nb > 0:
        fo = 0.5 * (fp - fm) / y
        tab_y = basis.fam_y.eval_table(t, nb - 1)
        if basis.mode == "angle":
            # <f, y q_k>_gamma / (2 h_k(phi w)); the phi factor is y^2
            b = (tab_y * lam * y * y) @ fo / basis.fam_y.h[:nb]
        else:
            b = (tab_y * lam) @ fo / basis.fam_x.h[:nb]
    else:
        b = np.zeros(0)
    return CurveExpansion(basis, a, b)


def jacobi_operators(basis: CurveBasis, n_max: int, nquad: int | None = None):
    """Multiplication-operator blocks for x and y in the orthonormal basis."""
    if basis.mode != "angle":
        raise ParameterDomainError("jacobi_operators requires the angle basis")
    nq = nquad or (3 * (n_max + 2) // 2 + 10)
    t, lam, y = basis.quad_nodes(nq)
    # orthonormal member values at (t, +y) and (t, -y)
    vals = {}
    for n in range(n_max + 2):
        rows_p, rows_m = [], []
        for i in range(1, _dim(n) + 1):
            form, k = _x_degree(n, i)
            h = basis.norm_H(n, i)
            if form == "x":
                row = basis.fam_x.eval_table(t, k)[k] / np.sqrt(h)
                rows_p.append(row)
                rows_m.append(row)
            else:
                row = basis.fam_y.eval_table(t, k)[k] / np.sqrt(h)
                rows_p.append(y * row)
                rows_m.append(-y * row)
        vals[n] = (np.array(rows_p), np.array(rows_m))

    def pair(u_p, u_m, v_p, v_m):
        return (u_p * lam) @ v_p.T + (u_m * lam) @ v_m.T

    out = {"A1": [], "B1": [], "A2": [], "B2": []}
    for n in range(n_max + 1):
        p, m_ = vals[n]
        p1, m1 = vals[n + 1]
        out["A1"].append(pair(t * p, t * m_, p1, m1))
        out["B1"].append(pair(t * p, t * m_, p, m_))
        out["A2"].append(pair(y * p, -y * m_, p1, m1))
        out["B2"].append(pair(y * p, -y * m_, p, m_))
    return out
