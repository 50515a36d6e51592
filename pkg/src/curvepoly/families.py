"""Classical univariate orthogonal families, Gauss rules and interpolation.

A family is stored through the diagonals of its symmetric Jacobi matrix
(``alpha``, ``beta`` with ``beta[0]`` the zeroth moment of the weight) plus
the classical norms ``h_k`` and a per-degree scale relating the orthonormal
recurrence polynomials to the classical normalization:

    p_k(classical) = scale[k] * q_k(orthonormal),   scale[k]**2 == h[k].

Normalizations follow the usual conventions: Legendre ``h_k = 2/(2k+1)``,
Chebyshev-T with weight 1/sqrt(1-x^2), Jacobi with weight
(1-x)^a (1+x)^b, Laguerre with weight x^a e^{-x} / Gamma(a+1) so that
``h_k = binom(k+a, k)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import betaln, gammaln

from . import kernels
from .exceptions import NumericalError, ParameterDomainError, ShapeError

__all__ = [
    "OPFamily",
    "GaussRule",
    "build_family",
    "eval_poly",
    "gauss_rule",
    "lagrange_interpolate",
    "christoffel_darboux_kernel",
    "legendre_derivative_coeffs",
    "scaled_family",
]


@dataclass(eq=False)
class OPFamily:
    """Univariate orthogonal family; immutable after construction."""

    kind: str
    params: dict
    support: tuple[float, float]
    alpha: np.ndarray  # len degree_cap + 2
    beta: np.ndarray   # len degree_cap + 2, beta[0] = zeroth moment
    h: np.ndarray      # len degree_cap + 1, classical squared norms
    scale: np.ndarray  # len degree_cap + 1, classical / orthonormal
    degree_cap: int
    sqb: np.ndarray = field(init=False)

    def __post_init__(self):
        for name in ("alpha", "beta", "h", "scale"):
            setattr(self, name, np.ascontiguousarray(getattr(self, name), dtype=float))
        self.sqb = np.sqrt(self.beta)
        if np.any(self.beta <= 0):
            raise ParameterDomainError("recurrence beta coefficients must be positive")
        if np.any(self.h <= 0):
            raise ParameterDomainError("norms h_k must be positive")

    @property
    def mu0(self) -> float:
        """Zeroth moment of the weight."""
        return float(self.beta[0])

    def jacobi_matrix(self, N: int) -> tuple[np.ndarray, np.ndarray]:
        """Diagonal and off-diagonal of the N x N truncated Jacobi matrix."""
        if N > self.degree_cap + 1:
            raise IndexError(f"N={N} exceeds degree cap {self.degree_cap}")
        return self.alpha[:N].copy(), self.sqb[1:N].copy()

    def eval_table(self, x, nmax: int) -> np.ndarray:
        """Classical values p_k(x), k = 0..nmax; shape (nmax+1, len(x))."""
        if nmax > self.degree_cap:
            raise IndexError(f"degree {nmax} exceeds cap {self.degree_cap}")
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        tab = kernels.vander(self.alpha, self.sqb, self.mu0, xa, nmax)
        return tab * self.scale[: nmax + 1, None]

    def deriv_tables(self, x, nmax: int, order: int) -> np.ndarray:
        """Classical derivative tables, shape (order+1, nmax+1, len(x))."""
        if nmax > self.degree_cap:
            raise IndexError(f"degree {nmax} exceeds cap {self.degree_cap}")
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        tabs = kernels.vander_derivs(self.alpha, self.sqb, self.mu0, xa, nmax, order)
        return tabs * self.scale[None, : nmax + 1, None]

    def eval_series(self, c, x) -> np.ndarray:
        """Clenshaw evaluation of sum_k c[k] p_k(x) in the classical basis."""
        c = np.asarray(c, dtype=float)
        if c.size - 1 > self.degree_cap:
            raise IndexError(f"degree {c.size - 1} exceeds cap {self.degree_cap}")
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        cn = np.ascontiguousarray(c * self.scale[: c.size])
        return kernels.clenshaw(self.alpha, self.sqb, self.mu0, cn, xa)


@dataclass(eq=False)
class GaussRule:
    """Gauss quadrature rule for an OPFamily weight."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, f) -> float:
        vals = f(self.nodes) if callable(f) else np.asarray(f, dtype=float)
        return float(self.weights @ vals)


def _legendre(cap):
    k = np.arange(cap + 2, dtype=float)
    alpha = np.zeros(cap + 2)
    beta = np.empty(cap + 2)
    beta[0] = 2.0
    beta[1:] = k[1:] ** 2 / (4.0 * k[1:] ** 2 - 1.0)
    h = 2.0 / (2.0 * np.arange(cap + 1) + 1.0)
    return alpha, beta, h, np.sqrt(h)


def _chebyshev_t(cap):
    alpha = np.zeros(cap + 2)
    beta = np.full(cap + 2, 0.25)
    beta[0] = math.pi
    if cap + 2 > 1:
        beta[1] = 0.5
    h = np.full(cap + 1, math.pi / 2.0)
    h[0] = math.pi
    return alpha, beta, h, np.sqrt(h)


def _jacobi(cap, a, b):
    if a <= -1 or b <= -1:
        raise ParameterDomainError(f"Jacobi requires alpha, beta > -1, got ({a}, {b})")
    n = cap + 2
    k = np.arange(n, dtype=float)
    alpha = np.empty(n)
    beta = np.empty(n)
    alpha[0] = (b - a) / (a + b + 2.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        s = 2.0 * k + a + b
        alpha[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2.0))
    beta[0] = math.exp((a + b + 1.0) * math.log(2.0) + betaln(a + 1.0, b + 1.0))
    if n > 1:
        beta[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) ** 2 * (3.0 + a + b))
    if n > 2:
        kk = k[2:]
        s = 2.0 * kk + a + b
        beta[2:] = (
            4.0 * kk * (kk + a) * (kk + b) * (kk + a + b)
            / (s * s * (s + 1.0) * (s - 1.0))
        )
    kk = np.arange(cap + 1, dtype=float)
    lh = (
        (a + b + 1.0) * math.log(2.0)
        + gammaln(kk + a + 1.0)
        + gammaln(kk + b + 1.0)
        - gammaln(kk + 1.0)
        - np.log(2.0 * kk + a + b + 1.0)
    )
    # Gamma(k + a + b + 1) at k = 0 may have a negative argument; use
    # Gamma(a + b + 2)/(a + b + 1) which is always well defined here.
    lh[0] = (a + b + 1.0) * math.log(2.0) + betaln(a + 1.0, b + 1.0)
    if cap >= 1:
        lh[1:] -= gammaln(kk[1:] + a + b + 1.0)
    h = np.exp(lh)
    return alpha, beta, h, np.sqrt(h)


def _laguerre(cap, a):
    if a <= -1:
        raise ParameterDomainError(f"Laguerre requires alpha > -1, got {a}")
    n = cap + 2
    k = np.arange(n, dtype=float)
    alpha = 2.0 * k + a + 1.0
    beta = k * (k + a)
    beta[0] = 1.0
    kk = np.arange(cap + 1, dtype=float)
    h = np.exp(gammaln(kk + a + 1.0) - gammaln(a + 1.0) - gammaln(kk + 1.0))
    sign = np.where(np.arange(cap + 1) % 2 == 0, 1.0, -1.0)
    return alpha, beta, h, sign * np.sqrt(h)


def build_family(kind: str, degree_cap: int, alpha: float | None = None,
                 beta: float | None = None) -> OPFamily:
    """Construct a classical family up to the requested degree cap."""
    if degree_cap < 0:
        raise ParameterDomainError("degree_cap must be >= 0")
    kind = kind.lower()
    if kind == "legendre":
        arrs, support, params = _legendre(degree_cap), (-1.0, 1.0), {}
    elif kind in ("chebyshev", "chebyshev_t"):
        kind = "chebyshev_t"
        arrs, support, params = _chebyshev_t(degree_cap), (-1.0, 1.0), {}
    elif kind == "jacobi":
        a = 0.0 if alpha is None else float(alpha)
        b = 0.0 if beta is None else float(beta)
        arrs, support, params = _jacobi(degree_cap, a, b), (-1.0, 1.0), {"alpha": a, "beta": b}
    elif kind == "laguerre":
        a = 0.0 if alpha is None else float(alpha)
        arrs, support, params = _laguerre(degree_cap, a), (0.0, math.inf), {"alpha": a}
    else:
        raise ParameterDomainError(f"unknown family kind {kind!r}")
    al, be, h, sc = arrs
    return OPFamily(kind, params, support, al, be, h, sc, degree_cap)


def scaled_family(fam: OPFamily, c: float) -> OPFamily:
    """Family for the weight c*w; recurrence is unchanged, norms scale by c."""
    if c <= 0:
        raise ParameterDomainError("scale factor must be positive")
    beta = fam.beta.copy()
    beta[0] *= c
    return OPFamily(fam.kind, dict(fam.params), fam.support, fam.alpha.copy(),
                    beta, fam.h * c, fam.scale * math.sqrt(c), fam.degree_cap)


def eval_poly(fam: OPFamily, k: int, x):
    """Value of the classical polynomial p_k at x (scalar in, scalar out)."""
    if not 0 <= k <= fam.degree_cap:
        raise IndexError(f"degree {k} out of range 0..{fam.degree_cap}")
    tab = fam.eval_table(x, k)
    return tab[k, 0] if np.isscalar(x) else tab[k]


def gauss_rule(fam: OPFamily, N: int) -> GaussRule:
    """N-point Gauss rule via the truncated Jacobi matrix (Golub--Welsch)."""
    if N < 1:
        raise ParameterDomainError("N must be >= 1")
    d, e = fam.jacobi_matrix(N)
    try:
        vals, vecs = eigh_tridiagonal(d, e)
    except Exception as exc:  # pragma: no cover - LAPACK failure is exotic
        raise NumericalError(f"tridiagonal eigensolver failed for N={N}: {exc}")
    order = np.argsort(vals)
    nodes = vals[order]
    weights = fam.mu0 * vecs[0, order] ** 2
    return GaussRule(nodes, weights, N)


def lagrange_interpolate(fam: OPFamily, N: int, values) -> np.ndarray:
    """Coefficients a_0..a_{N-1} of the interpolant at the N Gauss nodes."""
    values = np.asarray(values, dtype=float)
    if values.shape != (N,):
        raise ShapeError(f"expected {N} values, got shape {values.shape}")
    rule = gauss_rule(fam, N)
    tab = fam.eval_table(rule.nodes, N - 1)
    return (tab * rule.weights) @ values / fam.h[:N]


def christoffel_darboux_kernel(fam: OPFamily, N: int, x, y):
    """Reproducing kernel K_N(x, y) = sum_{k<N} p_k(x) p_k(y) / h_k."""
    if N > fam.degree_cap + 1:
        raise IndexError(f"N={N} exceeds degree cap {fam.degree_cap}")
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    ya = np.atleast_1d(np.asarray(y, dtype=float))
    tx = kernels.vander(fam.alpha, fam.sqb, fam.mu0, xa, N - 1)
    ty = kernels.vander(fam.alpha, fam.sqb, fam.mu0, ya, N - 1)
    out = np.einsum("ki,kj->ij", tx, ty)
    if np.isscalar(x) and np.isscalar(y):
        return float(out[0, 0])
    return out


def legendre_derivative_coeffs(c) -> np.ndarray:
    """Map Legendre coefficients of u to Jacobi(1,1) coefficients of u'.

    Uses the exact identity relating Legendre derivatives to Jacobi(1,1)
    polynomials one degree down.
    """
    c = np.asarray(c, dtype=float)
    if c.size <= 1:
        return np.zeros(1)
    j = np.arange(c.size - 1, dtype=float)
    return c[1:] * (j + 2.0) / 2.0
