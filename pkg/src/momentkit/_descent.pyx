# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled projected-gradient kernel for the squared-moment objective.

Mirrors the control flow of ``_descent_py`` exactly; the inner loop is a
handful of small complex matvecs per iteration, which is where the search
spends its time, so removing interpreter overhead matters here and nowhere
else in the package.
"""

import numpy as np

from libc.math cimport sqrt

BACKEND = "compiled"

HIT_MAX_ITERS = 0
HIT_GRAD_TOL = 1
HIT_F_TOL = 2


cdef double _eval_mu(double complex[:, :, ::1] mats, double complex[::1] z,
                     double complex[:, ::1] w, double[::1] mu) noexcept:
    """Fill w = A_a z and mu_a = -1/2 Im <A_a z, z>; return f = |mu|^2."""
    cdef Py_ssize_t m = mats.shape[0], n = mats.shape[1]
    cdef Py_ssize_t a, i, j
    cdef double complex acc, pair
    cdef double f = 0.0, mva
    for a in range(m):
        pair = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc = acc + mats[a, i, j] * z[j]
            w[a, i] = acc
            pair = pair + acc * z[i].conjugate()
        mva = -0.5 * pair.imag
        mu[a] = mva
        f += mva * mva
    return f


cdef double _value_only(double complex[:, :, ::1] mats, double complex[::1] z) noexcept:
    cdef Py_ssize_t m = mats.shape[0], n = mats.shape[1]
    cdef Py_ssize_t a, i, j
    cdef double complex acc, pair
    cdef double f = 0.0, mva
    for a in range(m):
        pair = 0.0
        for i in range(n):
            acc = 0.0
            for j in range(n):
                acc = acc + mats[a, i, j] * z[j]
            pair = pair + acc * z[i].conjugate()
        mva = -0.5 * pair.imag
        f += mva * mva
    return f


cdef double _gradient(double complex[:, :, ::1] mats, double complex[::1] z,
                      double complex[:, ::1] w, double[::1] mu,
                      double complex[::1] grad) noexcept:
    """Sphere-tangent gradient into ``grad``; returns its squared norm."""
    cdef Py_ssize_t m = mats.shape[0], n = mats.shape[1]
    cdef Py_ssize_t a, i
    cdef double complex acc
    cdef double radial = 0.0, g2 = 0.0
    cdef double complex I = 1j
    for i in range(n):
        acc = 0.0
        for a in range(m):
            acc = acc + mu[a] * w[a, i]
        grad[i] = 2.0 * I * acc
    for i in range(n):
        radial += (z[i].conjugate() * grad[i]).real
    for i in range(n):
        grad[i] = grad[i] - radial * z[i]
        g2 += grad[i].real * grad[i].real + grad[i].imag * grad[i].imag
    return g2


def objective(mats, z):
    """Value, tangent gradient and moment components at unit z."""
    mats = np.ascontiguousarray(mats, dtype=np.complex128)
    zc = np.ascontiguousarray(z, dtype=np.complex128)
    cdef Py_ssize_t m = mats.shape[0], n = zc.shape[0]
    if m == 0:
        return 0.0, np.zeros_like(zc), np.zeros(0)
    w = np.empty((m, n), dtype=np.complex128)
    mu = np.empty(m, dtype=np.float64)
    grad = np.empty(n, dtype=np.complex128)
    cdef double f = _eval_mu(mats, zc, w, mu)
    _gradient(mats, zc, w, mu, grad)
    return f, grad, mu


def descend(mats, z0, int max_iters, double grad_tol, double f_tol,
            double armijo_c, double shrink):
    """Projected gradient descent; same contract as the python fallback."""
    mats = np.ascontiguousarray(mats, dtype=np.complex128)
    z_arr = np.array(z0, dtype=np.complex128)
    z_arr /= np.linalg.norm(z_arr)
    cdef Py_ssize_t m = mats.shape[0], n = z_arr.shape[0]
    if m == 0:
        return z_arr, 0.0, 0.0, 0, HIT_F_TOL

    w = np.empty((m, n), dtype=np.complex128)
    mu = np.empty(m, dtype=np.float64)
    grad_arr = np.empty(n, dtype=np.complex128)
    trial_arr = np.empty(n, dtype=np.complex128)

    cdef double complex[:, :, ::1] A = mats
    cdef double complex[::1] z = z_arr
    cdef double complex[:, ::1] W = w
    cdef double[::1] MU = mu
    cdef double complex[::1] grad = grad_arr
    cdef double complex[::1] trial = trial_arr

    cdef double f, g2, f_trial, step = 1.0, norm
    cdef int iters = 0, hit = HIT_MAX_ITERS
    cdef bint accepted
    cdef Py_ssize_t i

    f = _eval_mu(A, z, W, MU)
    g2 = _gradient(A, z, W, MU, grad)
    while iters < max_iters:
        if f <= f_tol:
            hit = HIT_F_TOL
            break
        if sqrt(g2) <= grad_tol:
            hit = HIT_GRAD_TOL
            break
        step = min(1.0, 2.0 * step)
        accepted = False
        while step > 1e-20:
            norm = 0.0
            for i in range(n):
                trial[i] = z[i] - step * grad[i]
                norm += trial[i].real * trial[i].real + trial[i].imag * trial[i].imag
            norm = sqrt(norm)
            for i in range(n):
                trial[i] = trial[i] / norm
            f_trial = _value_only(A, trial)
            if f_trial <= f - armijo_c * step * g2:
                for i in range(n):
                    z[i] = trial[i]
                accepted = True
                break
            step *= shrink
        if not accepted:
            hit = HIT_GRAD_TOL
            break
        iters += 1
        f = _eval_mu(A, z, W, MU)
        g2 = _gradient(A, z, W, MU, grad)
    if hit == HIT_MAX_ITERS and f <= f_tol:
        hit = HIT_F_TOL
    return z_arr, f, sqrt(g2), iters, hit
