"""Gauss quadrature and interpolation on the curve.

The N-point Gauss rule of the weight w, with nodes mirrored to (x_k, +y_k)
and (x_k, -y_k), integrates polynomials on the curve of degree 2n-1 where
N = 3m for n = 2m and N = 3m+1 for n = 2m+1.  The same mirrored node set
supports interpolation with N coefficients in each of the even and odd
blocks, computed either by discrete sums (bracket basis) or by a dense
Vandermonde solve (angle basis).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .basis import CurveBasis, CurveExpansion
from .exceptions import NumericalError, ParameterDomainError, ShapeError
from .families import gauss_rule

__all__ = ["CurveQuadRule", "curve_quadrature", "curve_samples",
           "curve_interpolate", "curve_interpolate_angle", "discrete_inner"]


def gauss_order(n: int) -> int:
    """Univariate Gauss order N_n attached to curve degree n."""
    m, rem = divmod(n, 2)
    return 3 * m + rem


@dataclass(eq=False)
class CurveQuadRule:
    """Mirrored Gauss rule on the curve, exact on degrees <= 2n-1."""

    basis: CurveBasis
    n: int
    nodes: np.ndarray    # canonical x-nodes, ascending
    weights: np.ndarray
    y: np.ndarray        # positive branch values at the nodes

    @property
    def N(self) -> int:
        return self.nodes.size

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """All 2N points: +y block then -y block, ascending x within each."""
        return (np.concatenate([self.nodes, self.nodes]),
                np.concatenate([self.y, -self.y]))

    def integrate(self, f) -> float:
        vals = f(self.nodes, self.y) + f(self.nodes, -self.y)
        if not np.all(np.isfinite(vals)):
            raise NumericalError("non-finite integrand sample")
        return float(self.weights @ vals)


def curve_quadrature(basis: CurveBasis, n: int) -> CurveQuadRule:
    """Mirrored Gauss rule of the basis weight with order N_n."""
    if n < 1:
        raise ParameterDomainError("curve degree n must be >= 1")
    rule = gauss_rule(basis.fam_x, gauss_order(n))
    y = basis.chart.y(rule.nodes)
    if np.any(y <= 0):
        raise NumericalError("quadrature node fell on or outside the curve")
    return CurveQuadRule(basis, n, rule.nodes, rule.weights, y)


def curve_samples(rule: CurveQuadRule, f) -> np.ndarray:
    """Values of f at the 2N mirrored nodes in canonical ordering."""
    tt, yy = rule.points()
    return np.asarray(f(tt, yy), dtype=float)


def _even_odd_samples(rule: CurveQuadRule, samples):
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (2 * rule.N,):
        raise ShapeError(f"expected {2 * rule.N} samples, got {samples.shape}")
    vp, vm = samples[: rule.N], samples[rule.N:]
    return 0.5 * (vp + vm), 0.5 * (vp - vm) / rule.y


def curve_interpolate(basis: CurveBasis, n: int, samples) -> CurveExpansion:
    """Interpolant through the 2N mirrored node values, bracket basis."""
    if basis.mode != "bracket":
        raise ParameterDomainError("curve_interpolate needs a bracket basis")
    rule = curve_quadrature(basis, n)
    fe, fo = _even_odd_samples(rule, samples)
    N = rule.N
    tab = basis.fam_x.eval_table(rule.nodes, N - 1)
    wtab = tab * rule.weights
    a = wtab @ fe / basis.fam_x.h[:N]
    b = wtab @ fo / basis.fam_x.h[:N]
    return CurveExpansion(basis, a, b)


def curve_interpolate_angle(basis: CurveBasis, n: int, samples) -> CurveExpansion:
    """Interpolant in the angle basis via a dense 2N x 2N Vandermonde solve."""
    if basis.mode != "angle":
        raise ParameterDomainError("curve_interpolate_angle needs an angle basis")
    rule = curve_quadrature(basis, n)
    samples = np.asarray(samples, dtype=float)
    N = rule.N
    if samples.shape != (2 * N,):
        raise ShapeError(f"expected {2 * N} samples, got {samples.shape}")
    tab_x = basis.fam_x.eval_table(rule.nodes, N - 1)
    tab_y = basis.fam_y.eval_table(rule.nodes, N - 1)
    top = np.hstack([tab_x.T, (rule.y * tab_y).T])
    bot = np.hstack([tab_x.T, (-rule.y * tab_y).T])
    A = np.vstack([top, bot])
    cond = np.linalg.cond(A)
    coef = np.linalg.solve(A, samples)
    out = CurveExpansion(basis, coef[:N], coef[N:])
    out.conditioning = cond
    if cond > 1e12:
        warnings.warn(f"angle interpolation system condition {cond:.2e}",
                      RuntimeWarning, stacklevel=2)
    return out


def discrete_inner(basis: CurveBasis, n: int, f, g,
                   which: str = "gauss_bracket") -> float:
    """Discrete curve inner product over the mirrored Gauss nodes."""
    rule = curve_quadrature(basis, n)
    t, lam, y = rule.nodes, rule.weights, rule.y
    if which == "gauss_angle":
        vals = f(t, y) * g(t, y) + f(t, -y) * g(t, -y)
    elif which == "gauss_bracket":
        fe, fo = 0.5 * (f(t, y) + f(t, -y)), 0.5 * (f(t, y) - f(t, -y)) / y
        ge, go = 0.5 * (g(t, y) + g(t, -y)), 0.5 * (g(t, y) - g(t, -y)) / y
        vals = fe * ge + fo * go
    else:
        raise ParameterDomainError(f"unknown discrete product {which!r}")
    return float(lam @ vals)
