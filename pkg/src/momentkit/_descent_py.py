"""Pure-numpy projected-gradient kernel (fallback for the compiled version).

Minimizes f(z) = sum_a (-1/2 Im <A_a z, z>)^2 over the unit sphere by
steepest descent with Armijo backtracking and renormalization retraction.
Same contract as the compiled kernel in ``_descent.pyx``; selected at import
time by ``momentkit._kernels``.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

# descent termination codes
HIT_MAX_ITERS = 0
HIT_GRAD_TOL = 1
HIT_F_TOL = 2


def objective(mats: np.ndarray, z: np.ndarray):
    """Value, sphere-tangent gradient and moment components at unit z.

    The ambient gradient of mu_a is i A_a z; the Riemannian gradient of f
    projects sum_a 2 mu_a i A_a z tangent to the sphere.
    """
    if mats.shape[0] == 0:
        return 0.0, np.zeros_like(z), np.zeros(0)
    w = mats @ z
    mu = -0.5 * np.imag(w @ np.conj(z))
    grad = 2j * (mu @ w)
    grad = grad - np.real(np.vdot(z, grad)) * z
    return float(mu @ mu), grad, mu


def _value(mats, z):
    if mats.shape[0] == 0:
        return 0.0
    w = mats @ z
    mu = -0.5 * np.imag(w @ np.conj(z))
    return float(mu @ mu)


def descend(mats: np.ndarray, z0: np.ndarray, max_iters: int, grad_tol: float,
            f_tol: float, armijo_c: float, shrink: float):
    """Run projected gradient descent from a start point (normalized first).

    Returns (z, f, grad_norm, iterations, hit) with hit one of the
    termination codes above.  Accepted steps never increase f.
    """
    z = np.asarray(z0, dtype=complex).copy()
    z /= np.linalg.norm(z)
    f, grad, _ = objective(mats, z)
    step = 1.0
    iters = 0
    hit = HIT_MAX_ITERS
    while iters < max_iters:
        if f <= f_tol:
            hit = HIT_F_TOL
            break
        gnorm2 = float(np.real(np.vdot(grad, grad)))
        if np.sqrt(gnorm2) <= grad_tol:
            hit = HIT_GRAD_TOL
            break
        step = min(1.0, 2.0 * step)
        accepted = False
        while step > 1e-20:
            trial = z - step * grad
            trial /= np.linalg.norm(trial)
            f_trial = _value(mats, trial)
            if f_trial <= f - armijo_c * step * gnorm2:
                z = trial
                accepted = True
                break
            step *= shrink
        if not accepted:
            hit = HIT_GRAD_TOL  # stalled line search: first-order stationary
            break
        iters += 1
        f, grad, _ = objective(mats, z)
    if hit == HIT_MAX_ITERS and f <= f_tol:
        hit = HIT_F_TOL
    gnorm = float(np.sqrt(np.real(np.vdot(grad, grad))))
    return z, f, gnorm, iters, hit
