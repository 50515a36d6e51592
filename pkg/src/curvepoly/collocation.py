"""Spectral collocation for linear ODEs on the curve.

The unknown u = sum a_k p_k(w) + y sum b_k q_k splits into even and odd
parts that never mix under d/dx.  The even block differentiates term by
term.  For the odd block, d^L/dx^L [y q(x)] = y sum_r (P_{L,r}(x)/phi^L)
q^(r)(x) with polynomials P generated by the recursion
P_{L+1,r} = (1/2 - L) phi' P_{L,r} + phi P_{L,r}' + phi P_{L,r-1},
P_{0,0} = 1, which follows from y' = phi'/(2y) on the curve.

The ODE sum_L c_L(x, y) u^(L) = g is imposed at the 2N mirrored Gauss
nodes; Dirichlet rows replace the collocation rows at the largest-|x|
nodes (+y first).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .basis import CurveBasis, CurveExpansion
from .exceptions import DomainError, ParameterDomainError, ShapeError, SolveError
from .interp import curve_quadrature

__all__ = ["CollocationProblem", "CollocationSolution", "differentiate",
           "solve", "ode_coefficients_example2"]


def _odd_factor_polys(phi_c: np.ndarray, order: int) -> list[list[np.ndarray]]:
    """P[L][r] with d^L[y q] = y sum_r (P[L][r]/phi^L) q^(r); ascending coeffs."""
    phi = np.trim_zeros(np.asarray(phi_c, dtype=float), "b")
    dphi = P.polyder(phi)
    polys = [[np.array([1.0])]]
    for lam in range(order):
        prev = polys[lam]
        nxt = []
        for r in range(lam + 2):
            acc = np.zeros(1)
            if r <= lam:
                acc = P.polyadd(acc, (0.5 - lam) * P.polymul(dphi, prev[r]))
                acc = P.polyadd(acc, P.polymul(phi, P.polyder(prev[r])))
            if 1 <= r:
                acc = P.polyadd(acc, P.polymul(phi, prev[r - 1]))
            nxt.append(acc)
        polys.append(nxt)
    return polys


def _block_tables(basis: CurveBasis, t: np.ndarray, nmax: int, order: int):
    """Derivative value tables for the even and odd basis blocks.

    Returns (even, odd) where even[L][k, j] = p_k^(L)(t_j) and
    odd[L][k, j] is d^L[y q_k]/dx^L at t_j divided by the y of the point.
    """
    t = np.asarray(t, dtype=float)
    phi = basis.chart.phi(t)
    if np.any(phi <= 0):
        raise DomainError("derivative evaluation needs interior points")
    dx = basis.fam_x.deriv_tables(t, nmax, order)
    dy = basis.fam_y.deriv_tables(t, nmax, order)
    polys = _odd_factor_polys(basis.chart.phi_c, order)
    odd = []
    for lam in range(order + 1):
        acc = np.zeros_like(dy[0])
        for r in range(lam + 1):
            acc += (P.polyval(t, polys[lam][r]) / phi ** lam) * dy[r]
        odd.append(acc)
    return dx, odd


def differentiate(expansion: CurveExpansion, order: int = 1):
    """Evaluator for the order-th x-derivative of the expansion on the curve."""
    if order < 0:
        raise ParameterDomainError("derivative order must be >= 0")
    basis = expansion.basis
    a, b = expansion.a, expansion.b

    def ev(t, y):
        t1 = np.atleast_1d(np.asarray(t, dtype=float))
        y1 = np.atleast_1d(np.asarray(y, dtype=float))
        nmax = max(a.size, b.size, 1) - 1
        even, odd = _block_tables(basis, t1, nmax, order)
        out = np.zeros(np.broadcast(t1, y1).shape)
        if a.size:
            out = out + a @ even[order][: a.size]
        if b.size:
            out = out + y1 * (b @ odd[order][: b.size])
        return out if np.ndim(t) or np.ndim(y) else float(out[0])

    return ev


@dataclass(eq=False)
class CollocationProblem:
    """Linear ODE sum_L coeffs[L](x, y) u^(L) = rhs with Dirichlet rows."""

    basis: CurveBasis
    order: int
    coeffs: list                       # callables, index = derivative order
    rhs: object                        # callable or constant
    bcs: list = field(default_factory=list)   # [((t, y), value), ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ShapeError("need one coefficient per derivative order 0..m")


@dataclass(eq=False)
class CollocationSolution:
    expansion: CurveExpansion
    condition: float
    residual: float

    def __call__(self, t, y):
        return self.expansion(t, y)


def _rhs_values(rhs, t, y):
    if callable(rhs):
        return np.asarray(rhs(t, y), dtype=float) * np.ones_like(t)
    return np.full(t.shape, float(rhs))


def solve(problem: CollocationProblem, n: int) -> CollocationSolution:
    """Solve the collocation system of curve-degree parameter n."""
    basis = problem.basis
    rule = curve_quadrature(basis, n)
    N = rule.N
    if len(problem.bcs) >= 2 * N:
        raise ShapeError("more boundary rows than unknowns")
    even, odd = _block_tables(basis, rule.nodes, N - 1, problem.order)
    tt, yy = rule.points()           # +y block then -y block
    A = np.zeros((2 * N, 2 * N))
    for lam, c in enumerate(problem.coeffs):
        cv = np.asarray(c(tt, yy), dtype=float) * np.ones_like(tt)
        ev = np.hstack([even[lam], even[lam]])       # same at both signs
        ov = np.hstack([odd[lam], odd[lam]]) * yy    # sign through y
        A[:, :N] += (cv * ev).T
        A[:, N:] += (cv * ov).T
    rhs = _rhs_values(problem.rhs, tt, yy)

    # replace rows at the largest-|x| nodes, +y before -y
    xt = np.abs(basis.chart.from_canonical(tt))
    sign_rank = np.concatenate([np.zeros(N), np.ones(N)])
    order_idx = np.lexsort((sign_rank, -xt))
    replace = order_idx[: len(problem.bcs)]
    for row, ((tb, yb), val) in zip(replace, problem.bcs):
        tb = float(tb)
        pa = basis.fam_x.eval_table(np.array([tb]), N - 1)[:, 0]
        pb = basis.fam_y.eval_table(np.array([tb]), N - 1)[:, 0]
        A[row, :N] = pa
        A[row, N:] = float(yb) * pb
        rhs[row] = float(val)

    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > 1e15:
        raise SolveError(f"collocation system condition {cond:.3e}", cond)
    coef = np.linalg.solve(A, rhs)
    keep = np.setdiff1d(np.arange(2 * N), replace)
    residual = float(np.max(np.abs(A[keep] @ coef - rhs[keep]))) if keep.size else 0.0
    expansion = CurveExpansion(basis, coef[:N], coef[N:])
    return CollocationSolution(expansion, cond, residual)


def ode_coefficients_example2(chart, c1: float = 10.0, c2: float = 5.0):
    """Coefficients of the equation solved by sin(c1 x + c2 x y).

    With theta = c1 x + c2 x y, the function satisfies
    theta' u'' - theta'' u' + theta'^3 u = 0.  Multiplying through by
    y*phi makes every coefficient polynomial on the curve; the returned
    evaluators are those multiplied-through coefficients and g = 0.
    """
    phi = np.trim_zeros(np.asarray(chart.phi_c, dtype=float), "b")
    d1 = P.polyder(phi)
    d2 = P.polyder(d1)

    def a2(t, y):
        t = np.asarray(t, dtype=float)
        ph = P.polyval(t, phi)
        dp = P.polyval(t, d1)
        return c1 * np.asarray(y) * ph + c2 * ph ** 2 + 0.5 * c2 * t * ph * dp

    def a1(t, y):
        t = np.asarray(t, dtype=float)
        ph = P.polyval(t, phi)
        dp = P.polyval(t, d1)
        d2v = P.polyval(t, d2)
        return (-c2 * ph * dp - 0.5 * c2 * t * ph * d2v
                + 0.25 * c2 * t * dp ** 2) * np.ones(np.shape(y))

    def a0(t, y):
        ph = P.polyval(np.asarray(t, dtype=float), phi)
        return a2(t, y) ** 3 / ph ** 3

    def g(t, y):
        return np.zeros(np.broadcast(np.asarray(t), np.asarray(y)).shape)

    return a2, a1, a0, g
