"""Pure-NumPy recurrence kernels.

All kernels work with the symmetric (Jacobi-matrix) three-term recurrence of
the orthonormal polynomials

    sqb[k+1] q_{k+1}(x) = (x - alpha[k]) q_k(x) - sqb[k] q_{k-1}(x),

with q_0 = 1/sqrt(mu0) and sqb[k] = sqrt(beta_k).  Index 0 of ``sqb`` is
unused.
"""
import numpy as np

BACKEND = "python"


def vander(alpha, sqb, mu0, x, nmax):
    """Table of orthonormal polynomials q_k(x), shape (nmax+1, len(x))."""
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1, x.size))
    out[0] = 1.0 / np.sqrt(mu0)
    if nmax >= 1:
        out[1] = (x - alpha[0]) * out[0] / sqb[1]
    for k in range(1, nmax):
        out[k + 1] = ((x - alpha[k]) * out[k] - sqb[k] * out[k - 1]) / sqb[k + 1]
    return out


def vander_derivs(alpha, sqb, mu0, x, nmax, order):
    """Tables of derivatives q_k^(r)(x), shape (order+1, nmax+1, len(x))."""
    x = np.asarray(x, dtype=float)
    out = np.zeros((order + 1, nmax + 1, x.size))
    out[0, 0] = 1.0 / np.sqrt(mu0)
    if nmax >= 1:
        for r in range(order + 1):
            lower = r * out[r - 1, 0] if r >= 1 else 0.0
            out[r, 1] = ((x - alpha[0]) * out[r, 0] + lower) / sqb[1]
    for k in range(1, nmax):
        for r in range(order + 1):
            lower = r * out[r - 1, k] if r >= 1 else 0.0
            out[r, k + 1] = (
                (x - alpha[k]) * out[r, k] + lower - sqb[k] * out[r, k - 1]
            ) / sqb[k + 1]
    return out


def clenshaw(alpha, sqb, mu0, c, x):
    """Backward-stable evaluation of sum_k c[k] q_k(x)."""
    x = np.asarray(x, dtype=float)
    c = np.asarray(c, dtype=float)
    n = c.size - 1
    q0 = 1.0 / np.sqrt(mu0)
    if n == 0:
        return np.full(x.shape, c[0] * q0)
    if n == 1:
        return q0 * (c[0] + (x - alpha[0]) / sqb[1] * c[1])
    u1 = np.full(x.shape, c[n])
    u2 = np.zeros(x.shape)
    for k in range(n - 1, 0, -1):
        u = c[k] + (x - alpha[k]) / sqb[k + 1] * u1 - sqb[k + 1] / sqb[k + 2] * u2
        u2, u1 = u1, u
    return q0 * (c[0] + (x - alpha[0]) / sqb[1] * u1 - sqb[1] / sqb[2] * u2)
