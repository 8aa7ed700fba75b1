# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernels.

Hot loops of the time stepper: Dirichlet Laplacian stencils, Thomas
elimination for the 1D theta-step system, and Jacobi-preconditioned
conjugate gradients with a fused stencil matvec for 1D/2D systems.
Signatures match :mod:`nonlocalheat._kernels_py`.
"""

import numpy as np

from libc.math cimport sqrt


def laplacian_1d(double[::1] v, double h):
    cdef Py_ssize_t n = v.shape[0]
    cdef double inv = 1.0 / (h * h)
    out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double left, right
    for i in range(n):
        left = v[i - 1] if i > 0 else 0.0
        right = v[i + 1] if i < n - 1 else 0.0
        out[i] = (left - 2.0 * v[i] + right) * inv
    return out_arr


def laplacian_2d(double[::1] v, Py_ssize_t n0, Py_ssize_t n1, double h0, double h1):
    cdef double inv0 = 1.0 / (h0 * h0)
    cdef double inv1 = 1.0 / (h1 * h1)
    out_arr = np.empty(n0 * n1)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef double up, down, left, right
    for i in range(n0):
        for j in range(n1):
            k = i * n1 + j
            up = v[k - n1] if i > 0 else 0.0
            down = v[k + n1] if i < n0 - 1 else 0.0
            left = v[k - 1] if j > 0 else 0.0
            right = v[k + 1] if j < n1 - 1 else 0.0
            out[k] = (up - 2.0 * v[k] + down) * inv0 + (left - 2.0 * v[k] + right) * inv1
    return out_arr


def solve_theta_1d(double[::1] rhs, double[::1] c, double tau, double h):
    """Thomas elimination for (I + tau*(-lap + diag(c))) u = rhs."""
    cdef Py_ssize_t n = rhs.shape[0]
    cdef double r = tau / (h * h)
    cdef double off = -r
    cp_arr = np.empty(n)
    dp_arr = np.empty(n)
    u_arr = np.empty(n)
    cdef double[::1] cp = cp_arr
    cdef double[::1] dp = dp_arr
    cdef double[::1] u = u_arr
    cdef Py_ssize_t i
    cdef double diag, denom
    diag = 1.0 + tau * c[0] + 2.0 * r
    cp[0] = off / diag
    dp[0] = rhs[0] / diag
    for i in range(1, n):
        diag = 1.0 + tau * c[i] + 2.0 * r
        denom = diag - off * cp[i - 1]
        cp[i] = off / denom
        dp[i] = (rhs[i] - off * dp[i - 1]) / denom
    u[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        u[i] = dp[i] - cp[i] * u[i + 1]
    return u_arr


cdef void _matvec_1d(double[::1] v, double[::1] c, double tau, double inv,
                     double[::1] out) noexcept nogil:
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t i
    cdef double left, right
    for i in range(n):
        left = v[i - 1] if i > 0 else 0.0
        right = v[i + 1] if i < n - 1 else 0.0
        out[i] = v[i] + tau * (c[i] * v[i] - (left - 2.0 * v[i] + right) * inv)


cdef void _matvec_2d(double[::1] v, double[::1] c, double tau,
                     Py_ssize_t n0, Py_ssize_t n1, double inv0, double inv1,
                     double[::1] out) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef double up, down, left, right, lap
    for i in range(n0):
        for j in range(n1):
            k = i * n1 + j
            up = v[k - n1] if i > 0 else 0.0
            down = v[k + n1] if i < n0 - 1 else 0.0
            left = v[k - 1] if j > 0 else 0.0
            right = v[k + 1] if j < n1 - 1 else 0.0
            lap = (up - 2.0 * v[k] + down) * inv0 + (left - 2.0 * v[k] + right) * inv1
            out[k] = v[k] + tau * (c[k] * v[k] - lap)


def solve_theta_cg(double[::1] rhs, double[::1] c, double tau, shape, spacings,
                   double[::1] x0, double rtol, int maxiter):
    """Jacobi-preconditioned CG for the theta-step system; see NumPy twin."""
    cdef Py_ssize_t n = rhs.shape[0]
    cdef bint two_d = len(shape) == 2
    cdef Py_ssize_t n0 = 0, n1 = 0
    cdef double h0, h1 = 0.0, inv0, inv1 = 0.0
    if two_d:
        n0 = shape[0]
        n1 = shape[1]
        h0 = spacings[0]
        h1 = spacings[1]
        inv1 = 1.0 / (h1 * h1)
    else:
        h0 = spacings[0]
    inv0 = 1.0 / (h0 * h0)

    x_arr = np.array(x0, copy=True)
    r_arr = np.empty(n)
    z_arr = np.empty(n)
    p_arr = np.empty(n)
    ap_arr = np.empty(n)
    diag_arr = np.empty(n)
    cdef double[::1] x = x_arr
    cdef double[::1] r = r_arr
    cdef double[::1] z = z_arr
    cdef double[::1] p = p_arr
    cdef double[::1] ap = ap_arr
    cdef double[::1] diag = diag_arr

    cdef Py_ssize_t i
    cdef int it
    cdef double bnorm2 = 0.0, rnorm2, rz, rz_new, alpha, beta, pap, res, dshift

    for i in range(n):
        bnorm2 += rhs[i] * rhs[i]
    if bnorm2 == 0.0:
        return np.zeros(n), 0, 0.0
    dshift = 2.0 * inv0 + (2.0 * inv1 if two_d else 0.0)
    for i in range(n):
        diag[i] = 1.0 + tau * (c[i] + dshift)

    if two_d:
        _matvec_2d(x, c, tau, n0, n1, inv0, inv1, ap)
    else:
        _matvec_1d(x, c, tau, inv0, ap)
    rnorm2 = 0.0
    rz = 0.0
    for i in range(n):
        r[i] = rhs[i] - ap[i]
        rnorm2 += r[i] * r[i]
        z[i] = r[i] / diag[i]
        p[i] = z[i]
        rz += r[i] * z[i]
    res = sqrt(rnorm2 / bnorm2)
    if res <= rtol:
        return x_arr, 0, res

    for it in range(1, maxiter + 1):
        if two_d:
            _matvec_2d(p, c, tau, n0, n1, inv0, inv1, ap)
        else:
            _matvec_1d(p, c, tau, inv0, ap)
        pap = 0.0
        for i in range(n):
            pap += p[i] * ap[i]
        alpha = rz / pap
        rnorm2 = 0.0
        for i in range(n):
            x[i] += alpha * p[i]
            r[i] -= alpha * ap[i]
            rnorm2 += r[i] * r[i]
        res = sqrt(rnorm2 / bnorm2)
        if res <= rtol:
            return x_arr, it, res
        rz_new = 0.0
        for i in range(n):
            z[i] = r[i] / diag[i]
            rz_new += r[i] * z[i]
        beta = rz_new / rz
        for i in range(n):
            p[i] = z[i] + beta * p[i]
        rz = rz_new
    return x_arr, maxiter, res
