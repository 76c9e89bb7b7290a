"""Shared dense linear algebra helpers.

Everything here follows one rank policy: a singular value counts as nonzero
when it is at least ``rank_rel * max(sigma_max, 1.0)``.  The floor at 1 keeps
the decision scale-robust for the small, O(1)-normalised matrices the toolkit
produces (module dimensions stay <= 128).
"""

from __future__ import annotations

import numpy as np

from .tolerances import DEFAULT, Tolerances


def numerical_rank(a: np.ndarray, tol: Tolerances = DEFAULT) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0:
        return 0
    return int(np.sum(s >= tol.rank_threshold(float(s[0]))))


def null_space(a: np.ndarray, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Orthonormal basis (rows) of the right null space of a real matrix."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        n = a.shape[1] if a.ndim == 2 else 0
        return np.eye(n)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    rank = int(np.sum(s >= tol.rank_threshold(float(s[0])))) if s.size else 0
    return vh[rank:].copy()


def row_space(a: np.ndarray, tol: Tolerances = DEFAULT) -> np.ndarray:
    """Orthonormal basis (rows) spanning the rows of a real matrix."""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0))
    _, s, vh = np.linalg.svd(a, full_matrices=False)
    rank = int(np.sum(s >= tol.rank_threshold(float(s[0])))) if s.size else 0
    return vh[:rank].copy()


def intersection_dim(a: np.ndarray, b: np.ndarray, tol: Tolerances = DEFAULT) -> int:
    """dim(span(a) ∩ span(b)) for row-spans of two real matrices."""
    ra = numerical_rank(a, tol)
    rb = numerical_rank(b, tol)
    if ra == 0 or rb == 0:
        return 0
    return ra + rb - numerical_rank(np.vstack([a, b]), tol)


def orthonormalize_rows(
    rows: np.ndarray, gram: np.ndarray | None = None, tol: Tolerances = DEFAULT
) -> np.ndarray:
    """Orthonormalize row vectors, optionally w.r.t. a positive form ``gram``.

    Returns rows c_j with c_j @ gram @ c_k = delta_jk (gram = identity when
    omitted).  Defective directions below the rank threshold are dropped.
    """
    rows = np.asarray(rows, dtype=float)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0)
    if gram is None:
        return row_space(rows, tol)
    m = rows @ gram @ rows.T
    w, u = np.linalg.eigh(m)
    scale = max(float(w[-1]), 1.0) if w.size else 1.0
    keep = w >= tol.rank_rel * scale
    if not np.any(keep):
        return np.zeros((0, rows.shape[1]))
    transform = u[:, keep] / np.sqrt(w[keep])
    return (transform.T @ rows).copy()


def exp_skew(x: np.ndarray) -> np.ndarray:
    """Matrix exponential of a skew-hermitian matrix via hermitian eigendecomposition."""
    h = 1j * np.asarray(x)  # hermitian
    w, u = np.linalg.eigh(h)
    return (u * np.exp(-1j * w)) @ u.conj().T


def as_real_vector(z: np.ndarray) -> np.ndarray:
    """View a complex vector as the concatenated (Re, Im) real vector."""
    z = np.asarray(z)
    return np.concatenate([z.real, z.imag])


def real_rank_of_complex_rows(
    vecs: np.ndarray, tol: Tolerances = DEFAULT
) -> int:
    """Real rank of a family of complex vectors (rows), viewed over R."""
    vecs = np.asarray(vecs)
    if vecs.size == 0:
        return 0
    stacked = np.hstack([vecs.real, vecs.imag])
    return numerical_rank(stacked, tol)
