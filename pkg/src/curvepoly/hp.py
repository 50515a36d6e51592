"""Algebraic Hermite-Pade approximation by least squares.

An approximant is a function psi implicitly defined by
p_0(x) + p_1(x) psi + ... + p_m(x) psi^m = 0.  The polynomials are found
as the stacked right singular vector of the smallest singular value of a
design matrix whose column blocks are an orthonormal polynomial basis
multiplied by powers of the data.  Evaluation is Newton's method with a
companion-matrix fallback.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as C

from .exceptions import BranchLossError, ParameterDomainError, ShapeError

__all__ = ["HPApproximant", "hp_nodes", "hp_fit", "hp_eval", "hp_sweep"]


def hp_nodes(N: int) -> tuple[np.ndarray, np.ndarray]:
    """Chebyshev-Gauss nodes and weights on [-1, 1], ascending."""
    k = np.arange(N)
    x = np.cos((2 * k + 1) * np.pi / (2 * N))[::-1]
    w = np.full(N, np.pi / N)
    return x, w


def _cheb_block(x: np.ndarray, ncols: int) -> np.ndarray:
    """Columns T_k(x) scaled to be orthonormal under the node weights."""
    V = C.chebvander(x, ncols - 1)
    scale = np.full(ncols, np.sqrt(2.0 / np.pi))
    scale[0] = np.sqrt(1.0 / np.pi)
    return V * scale


@dataclass(eq=False)
class HPApproximant:
    """Coefficients of p_0..p_m in the orthonormal Chebyshev basis."""

    m: int
    d: int
    polys: np.ndarray            # shape (m+1, d+1)
    nodes: np.ndarray
    weights: np.ndarray
    residual: float
    degenerate: bool = False

    def poly_values(self, x) -> np.ndarray:
        """Values of p_0..p_m at x, shape (m+1,) + x.shape."""
        x = np.asarray(x, dtype=float)
        B = _cheb_block(np.atleast_1d(x).ravel(), self.d + 1)
        out = self.polys @ B.T
        return out.reshape((self.m + 1,) + x.shape)


def hp_fit(values, m: int, d: int, nodes=None, weights=None,
           monic_top: bool = False) -> HPApproximant:
    """Fit an order-(m, d) algebraic approximant to values on the nodes."""
    values = np.asarray(values, dtype=float)
    N = values.size
    if nodes is None:
        nodes, weights = hp_nodes(N)
    nodes = np.asarray(nodes, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if nodes.shape != (N,) or weights.shape != (N,):
        raise ShapeError("nodes/weights must match the number of samples")
    if m < 1 or d < 0:
        raise ParameterDomainError("need m >= 1 and d >= 0")
    if N < m * (d + 1) + d:
        raise ParameterDomainError(
            f"{N} samples cannot determine m={m}, d={d} (need >= {m*(d+1)+d})")
    B = _cheb_block(nodes, d + 1)
    sw = np.sqrt(weights)
    blocks = [(B * (values ** j)[:, None]) * sw[:, None] for j in range(m + 1)]
    if monic_top:
        # p_m fixed to the constant polynomial 1; least squares for the rest
        A = np.hstack(blocks[:m])
        rhs = -(values ** m) * sw
        sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
        polys = np.zeros((m + 1, d + 1))
        polys[:m] = sol.reshape(m, d + 1)
        polys[m, 0] = np.sqrt(np.pi)   # the constant 1 in the scaled basis
        resid = float(np.linalg.norm(A @ sol - rhs))
        return HPApproximant(m, d, polys, nodes, weights, resid)
    A = np.hstack(blocks)
    # full SVD: with N < number of columns the minimizer is a null vector
    _, s, Vt = np.linalg.svd(A, full_matrices=True)
    polys = Vt[-1].reshape(m + 1, d + 1)
    ncol = (m + 1) * (d + 1)
    sig = np.zeros(ncol)
    sig[: s.size] = s
    resid = float(sig[ncol - 1])
    degen = ncol > 1 and sig[ncol - 2] <= max(10.0 * resid, 1e-12 * sig[0])
    return HPApproximant(m, d, polys, nodes, weights, resid, degen)


def _newton(coeffs: np.ndarray, guess: float):
    """Root of sum_j coeffs[j] z^j from guess; None if it fails to settle."""
    z = float(guess)
    dc = coeffs[1:] * np.arange(1, coeffs.size)
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    for _ in range(50):
        p = np.polynomial.polynomial.polyval(z, coeffs)
        dp = np.polynomial.polynomial.polyval(z, dc)
        if dp == 0.0:
            return None
        step = p / dp
        z -= step
        if abs(p) <= 1e-13 * scale and abs(step) <= 1e-12 * (1 + abs(z)):
            return z
    if abs(np.polynomial.polynomial.polyval(z, coeffs)) <= 1e-13 * scale:
        return z
    return None


def hp_eval(approx: HPApproximant, x: float, guess: float) -> float:
    """One branch value psi(x), chosen by closeness to the guess."""
    pv = approx.poly_values(np.asarray(float(x)))
    coeffs = np.asarray(pv, dtype=float).ravel()   # p_0..p_m at x
    # trim a vanishing leading coefficient: lower-degree root set remains
    top = coeffs.size - 1
    scale = max(np.max(np.abs(coeffs)), 1e-300)
    while top > 1 and abs(coeffs[top]) < 1e-14 * scale:
        top -= 1
    coeffs = coeffs[: top + 1]
    if top == 1:
        return -coeffs[0] / coeffs[1]
    z = _newton(coeffs, guess)
    if z is not None:
        return z
    roots = np.roots(coeffs[::-1])
    real = roots[np.abs(roots.imag) <= 1e-8 * (1 + np.abs(roots.real))]
    if real.size == 0:
        raise BranchLossError(f"all branches complex at x={x}")
    return float(real.real[np.argmin(np.abs(real.real - guess))])


def hp_sweep(approx: HPApproximant, xs, guess0: float) -> np.ndarray:
    """Evaluate along xs with branch continuation from the previous point."""
    out = np.empty(len(xs))
    g = float(guess0)
    for i, x in enumerate(xs):
        g = hp_eval(approx, x, g)
        out[i] = g
    return out
