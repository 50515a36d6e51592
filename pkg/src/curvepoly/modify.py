"""Non-classical families for polynomially modified weights g*w.

Inner products of the orthonormal base polynomials under g*w are entries of
g(J), the base Jacobi matrix evaluated at the multiplier polynomial, so they
are exact up to rounding.  The modified family comes out of the Cholesky
factor R of g(J): its Jacobi matrix is the (symmetrized, truncated)
similarity R J R^{-1} and its connection coefficients to the orthonormal
base polynomials are the rows of R^{-T}.

Modified families are orthonormal: h_k = 1 with respect to the actual
(unnormalized) weight g*w.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import solve_triangular

from .exceptions import ParameterDomainError, PositivityError
from .families import GaussRule, OPFamily, gauss_rule

__all__ = ["ModifiedFamily", "moment_matrix", "modify"]


@dataclass(eq=False)
class ModifiedFamily(OPFamily):
    """Orthonormal family for g*w; usable anywhere an OPFamily is."""

    base: OPFamily = None
    multiplier: np.ndarray = None   # monomial coefficients of g, low to high
    connection: np.ndarray = None   # rows: p_k(gw) over orthonormal base polys


def _poly_of_jacobi(fam: OPFamily, g: np.ndarray, size: int) -> np.ndarray:
    """Leading (size x size) block of g(J), exact for a banded J."""
    deg = len(g) - 1
    big = size + deg
    d, e = fam.jacobi_matrix(big)
    J = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    G = np.full_like(J, 0.0)
    np.fill_diagonal(G, g[deg])
    for c in g[deg - 1 :: -1] if deg > 0 else []:
        G = G @ J
        np.fill_diagonal(G, G.diagonal() + c)
    return G[:size, :size]


def moment_matrix(base: OPFamily, g, n: int) -> np.ndarray:
    """Gram matrix of the orthonormal base polynomials 0..n under g*w."""
    g = np.asarray(g, dtype=float)
    deg = len(g) - 1
    if deg > 3:
        raise ParameterDomainError("multiplier degree must be <= 3")
    if n + deg > base.degree_cap:
        raise IndexError(f"n + deg g = {n + deg} exceeds cap {base.degree_cap}")
    G = _poly_of_jacobi(base, g, n + 1)
    try:
        np.linalg.cholesky(G)
    except np.linalg.LinAlgError:
        raise PositivityError("g(J) is not positive definite: multiplier is "
                              "not positive on the support")
    return G


def _check_positive(base: OPFamily, g: np.ndarray):
    """Sample g at high-order Gauss nodes and near the endpoints."""
    n_chk = min(80, base.degree_cap)
    nodes = gauss_rule(base, n_chk).nodes
    lo, hi = base.support
    probes = [nodes]
    eps = 1e-9
    probes.append(np.array([lo + eps * max(1.0, abs(lo))]))
    if np.isfinite(hi):
        probes.append(np.array([hi - eps * max(1.0, abs(hi))]))
    vals = P.polyval(np.concatenate(probes), g)
    if np.any(vals <= 0):
        raise PositivityError("multiplier is not strictly positive on the support")


def modify(base: OPFamily, g, degree_cap: int) -> ModifiedFamily:
    """Orthonormal family for the weight g*w by Cholesky of g(J)."""
    g = np.asarray(g, dtype=float)
    deg = len(g) - 1
    if deg > 3:
        raise ParameterDomainError("multiplier degree must be <= 3")
    _check_positive(base, g)
    # Over-provision so the truncated similarity is exact on the kept block.
    work = degree_cap + 2 + 2 * max(deg, 1)
    if work + deg > base.degree_cap:
        raise IndexError(
            f"base cap {base.degree_cap} too small; need >= {work + deg}")
    G = _poly_of_jacobi(base, g, work)
    try:
        R = np.linalg.cholesky(G).T
    except np.linalg.LinAlgError:
        raise PositivityError("g(J) is not positive definite on the work block")
    d, e = base.jacobi_matrix(work)
    J = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    # J_mod = R J R^{-1}; right-solve via triangular system.
    Jmod = R @ solve_triangular(R.T, J.T, lower=True).T
    m = degree_cap + 2
    alpha = Jmod.diagonal()[:m].copy()
    off = 0.5 * (np.diag(Jmod, 1) + np.diag(Jmod, -1))[: m - 1]
    beta = np.empty(m)
    beta[0] = G[0, 0] * base.mu0
    beta[1:] = off ** 2
    rinv_t = solve_triangular(R.T, np.eye(work), lower=True)
    conn = rinv_t[: degree_cap + 1, : degree_cap + 1]
    ones = np.ones(degree_cap + 1)
    fam = ModifiedFamily(
        kind="modified",
        params={"base": base.kind, **base.params},
        support=base.support,
        alpha=alpha,
        beta=beta,
        h=ones,
        scale=ones.copy(),
        degree_cap=degree_cap,
        base=base,
        multiplier=g.copy(),
        connection=conn,
    )
    return fam
