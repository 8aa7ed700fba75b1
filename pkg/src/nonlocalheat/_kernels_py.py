"""NumPy implementations of the hot solver kernels.

Same call signatures as the compiled module ``_kernels``; the backend is
picked once at import time by :mod:`nonlocalheat.kernels`.  These versions
are vectorized where NumPy allows it, but the tridiagonal elimination is an
inherently serial recurrence and runs as a Python loop here.
"""

import numpy as np


def laplacian_1d(v, h):
    """Second-order Dirichlet Laplacian of a 1D interior field."""
    out = -2.0 * v
    out[:-1] += v[1:]
    out[1:] += v[:-1]
    out /= h * h
    return out


def laplacian_2d(v, n0, n1, h0, h1):
    """Five-point Dirichlet Laplacian of a row-major flattened 2D field."""
    g = v.reshape(n0, n1)
    out = -2.0 * (1.0 / (h0 * h0) + 1.0 / (h1 * h1)) * g
    out[:-1, :] += g[1:, :] / (h0 * h0)
    out[1:, :] += g[:-1, :] / (h0 * h0)
    out[:, :-1] += g[:, 1:] / (h1 * h1)
    out[:, 1:] += g[:, :-1] / (h1 * h1)
    return out.reshape(-1)


def solve_theta_1d(rhs, c, tau, h):
    """Solve (I + tau*(-lap + diag(c))) u = rhs by Thomas elimination.

    The matrix is an SPD M-matrix for c >= 0, so the elimination is stable
    without pivoting.
    """
    n = rhs.shape[0]
    r = tau / (h * h)
    diag = 1.0 + tau * c + 2.0 * r
    off = -r
    cp = np.empty(n)
    dp = np.empty(n)
    cp[0] = off / diag[0]
    dp[0] = rhs[0] / diag[0]
    for i in range(1, n):
        denom = diag[i] - off * cp[i - 1]
        cp[i] = off / denom
        dp[i] = (rhs[i] - off * dp[i - 1]) / denom
    u = np.empty(n)
    u[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        u[i] = dp[i] - cp[i] * u[i + 1]
    return u


def solve_theta_cg(rhs, c, tau, shape, spacings, x0, rtol, maxiter):
    """Jacobi-preconditioned conjugate gradients for the theta-step system.

    Solves (I + tau*(-lap + diag(c))) u = rhs on a 1D or 2D interior grid.
    Returns ``(u, iterations, relative_residual)``; the caller decides
    whether a residual above ``rtol`` is an error.
    """
    if len(shape) == 1:
        h0 = spacings[0]

        def matvec(v):
            return v + tau * (c * v - laplacian_1d(v, h0))

        diag = 1.0 + tau * (c + 2.0 / (h0 * h0))
    else:
        n0, n1 = shape
        h0, h1 = spacings

        def matvec(v):
            return v + tau * (c * v - laplacian_2d(v, n0, n1, h0, h1))

        diag = 1.0 + tau * (c + 2.0 / (h0 * h0) + 2.0 / (h1 * h1))

    bnorm = float(np.linalg.norm(rhs))
    if bnorm == 0.0:
        return np.zeros_like(rhs), 0, 0.0
    x = x0.copy()
    r = rhs - matvec(x)
    z = r / diag
    p = z.copy()
    rz = float(r @ z)
    res = float(np.linalg.norm(r)) / bnorm
    if res <= rtol:
        return x, 0, res
    for it in range(1, maxiter + 1):
        ap = matvec(p)
        alpha = rz / float(p @ ap)
        x = x + alpha * p
        r = r - alpha * ap
        res = float(np.linalg.norm(r)) / bnorm
        if res <= rtol:
            return x, it, res
        z = r / diag
        rz_new = float(r @ z)
        p = z + (rz_new / rz) * p
        rz = rz_new
    return x, maxiter, res
