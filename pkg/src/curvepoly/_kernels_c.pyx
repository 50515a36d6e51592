# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrence kernels; same contracts as _kernels_py."""
import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

BACKEND = "cython"


def vander(double[::1] alpha, double[::1] sqb, double mu0, x, Py_ssize_t nmax):
    xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] xv = xa
    cdef Py_ssize_t npts = xv.shape[0]
    out_arr = np.empty((nmax + 1, npts))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double q0 = 1.0 / sqrt(mu0)
    for i in range(npts):
        out[0, i] = q0
    if nmax >= 1:
        for i in range(npts):
            out[1, i] = (xv[i] - alpha[0]) * q0 / sqb[1]
    for k in range(1, nmax):
        for i in range(npts):
            out[k + 1, i] = ((xv[i] - alpha[k]) * out[k, i]
                             - sqb[k] * out[k - 1, i]) / sqb[k + 1]
    return out_arr


def vander_derivs(double[::1] alpha, double[::1] sqb, double mu0, x,
                  Py_ssize_t nmax, Py_ssize_t order):
    xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] xv = xa
    cdef Py_ssize_t npts = xv.shape[0]
    out_arr = np.zeros((order + 1, nmax + 1, npts))
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, k, r
    cdef double lower
    cdef double q0 = 1.0 / sqrt(mu0)
    for i in range(npts):
        out[0, 0, i] = q0
    if nmax >= 1:
        for r in range(order + 1):
            for i in range(npts):
                lower = r * out[r - 1, 0, i] if r >= 1 else 0.0
                out[r, 1, i] = ((xv[i] - alpha[0]) * out[r, 0, i] + lower) / sqb[1]
    for k in range(1, nmax):
        for r in range(order + 1):
            for i in range(npts):
                lower = r * out[r - 1, k, i] if r >= 1 else 0.0
                out[r, k + 1, i] = ((xv[i] - alpha[k]) * out[r, k, i] + lower
                                    - sqb[k] * out[r, k - 1, i]) / sqb[k + 1]
    return out_arr


def clenshaw(double[::1] alpha, double[::1] sqb, double mu0, double[::1] c, x):
    xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] xv = xa
    cdef Py_ssize_t npts = xv.shape[0]
    out_arr = np.empty(npts)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t n = c.shape[0] - 1
    cdef Py_ssize_t i, k
    cdef double q0 = 1.0 / sqrt(mu0)
    cdef double u, u1, u2, xi
    if n == 0:
        for i in range(npts):
            out[i] = c[0] * q0
        return out_arr
    if n == 1:
        for i in range(npts):
            out[i] = q0 * (c[0] + (xv[i] - alpha[0]) / sqb[1] * c[1])
        return out_arr
    for i in range(npts):
        xi = xv[i]
        u1 = c[n]
        u2 = 0.0
        for k in range(n - 1, 0, -1):
            u = c[k] + (xi - alpha[k]) / sqb[k + 1] * u1 - sqb[k + 1] / sqb[k + 2] * u2
            u2 = u1
            u1 = u
        out[i] = q0 * (c[0] + (xi - alpha[0]) / sqb[1] * u1 - sqb[1] / sqb[2] * u2)
    return out_arr
