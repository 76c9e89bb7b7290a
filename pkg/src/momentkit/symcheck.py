"""Moment maps, orbit geometry and Lagrangian verdicts.

Fixed conventions
-----------------
Hermitian product linear in the first slot, symplectic form
``omega(u, v) = -Im<u, v>``, moment component

    mu^X(z) = -1/2 Im<X z, z>                       (linear space)
    mu^X([z]) = -1/2 Im<X z, z> / ||z||^2           (projective space)

so a circle acting with weight w on one coordinate has moment -w/2 |z_j|^2,
and the weight -1 circle on CP^n attains 1/2 at [1, 0, ..., 0].

Projective geometry is computed on unit-norm representatives; the only
vertical direction is the phase i*z (skew-hermitian generators are already
sphere-tangent).  A product-with-line space is the module plus one complex
line, handled as a linear space of dimension dimV + 1; representations on it
carry the extra line slot explicitly.

Every function here is pure and reads only its arguments plus the tolerance
configuration captured at call time, so independent scenarios can be
evaluated concurrently without synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .liealg import MatrixRep
from .linalg import null_space, numerical_rank, orthonormalize_rows, row_space
from .tolerances import DEFAULT, Tolerances

LINEAR = "linear"
PROJECTIVE = "projective"
PRODUCT_WITH_LINE = "product-with-line"
_KINDS = (LINEAR, PROJECTIVE, PRODUCT_WITH_LINE)


class GeometryError(ValueError):
    """Invalid point/space/representation combination."""


@dataclass(frozen=True)
class PhaseSpace:
    """Symplectic ambient: C^n, P(V), or module-with-line."""

    kind: str
    dim_v: int  # complex dimension of the module (base module for the line kind)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise GeometryError(f"unknown space kind {self.kind!r}")
        if self.dim_v < 1:
            raise GeometryError("dim_v must be positive")

    @property
    def ambient_dim(self) -> int:
        """Complex dimension of the coordinate vector."""
        return self.dim_v + 1 if self.kind == PRODUCT_WITH_LINE else self.dim_v

    @property
    def real_dim(self) -> int:
        if self.kind == PROJECTIVE:
            return 2 * (self.dim_v - 1)
        return 2 * self.ambient_dim

    @property
    def half_dim(self) -> int:
        return self.real_dim // 2


def linear_space(dim_v: int) -> PhaseSpace:
    return PhaseSpace(LINEAR, dim_v)


def projective_space(dim_v: int) -> PhaseSpace:
    return PhaseSpace(PROJECTIVE, dim_v)


def product_with_line(dim_v: int) -> PhaseSpace:
    return PhaseSpace(PRODUCT_WITH_LINE, dim_v)


def prepare_point(space: PhaseSpace, coords) -> np.ndarray:
    """Validate coordinates for a space; projective points become unit-norm."""
    z = np.asarray(coords, dtype=complex).reshape(-1)
    if len(z) != space.ambient_dim:
        raise GeometryError(
            f"point has length {len(z)}, expected {space.ambient_dim} for {space.kind}")
    if space.kind == PROJECTIVE:
        norm = np.linalg.norm(z)
        if norm == 0:
            raise GeometryError("projective representative must be nonzero")
        return z / norm
    return z


def _check_rep(rep: MatrixRep, space: PhaseSpace):
    if rep.dim_v != space.ambient_dim:
        raise GeometryError(
            f"representation acts on C^{rep.dim_v}, space expects C^{space.ambient_dim}")


@dataclass(frozen=True)
class CoalgValue:
    """A moment value mu(x), split along g = z(g) + [g, g] (B-orthogonal)."""

    full: np.ndarray  # coordinates mu^{X_a}(x)
    central_part: np.ndarray
    ss_part: np.ndarray
    central_defect: float  # B-norm of the semisimple component


@dataclass(frozen=True)
class OrbitReport:
    """Verdict for one (representation, point) pair."""

    orbit_dim: int
    half_dim: int
    isotropy_dim: int
    isotropy_basis: np.ndarray
    mu: CoalgValue
    omega_residual: float
    is_lagrangian: bool
    moduli_dim: int | None = None
    isolated_thm1: bool | None = None
    ss_transitive: bool | None = None
    isolation_agrees: bool | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def moment_map(rep: MatrixRep, space: PhaseSpace, point,
               tol: Tolerances = DEFAULT, scale: float = 1.0) -> CoalgValue:
    """Evaluate the moment map at a point, with its central/semisimple split."""
    _check_rep(rep, space)
    z = prepare_point(space, point)
    w = np.einsum("aij,j->ai", rep.mats, z)
    mu = -0.5 * scale * np.imag(w @ np.conj(z))
    central_coeffs = rep.center @ mu if len(rep.center) else np.zeros(0)
    ss_coeffs = rep.derived @ mu if len(rep.derived) else np.zeros(0)
    central = rep.gram @ (rep.center.T @ central_coeffs) if len(rep.center) else np.zeros_like(mu)
    ss = rep.gram @ (rep.derived.T @ ss_coeffs) if len(rep.derived) else np.zeros_like(mu)
    return CoalgValue(full=mu, central_part=central, ss_part=ss,
                      central_defect=float(np.linalg.norm(ss_coeffs)))


def generating_frame(rep: MatrixRep, space: PhaseSpace, point):
    """Tangent vectors rho(X_a) z of the orbit, plus the projective vertical i*z."""
    _check_rep(rep, space)
    z = prepare_point(space, point)
    frame = np.einsum("aij,j->ai", rep.mats, z)
    vertical = 1j * z if space.kind == PROJECTIVE else None
    return frame, vertical


def _real_rows(vecs: np.ndarray) -> np.ndarray:
    return np.hstack([vecs.real, vecs.imag])


def orbit_dimension(rep: MatrixRep, space: PhaseSpace, point,
                    tol: Tolerances = DEFAULT) -> int:
    frame, vertical = generating_frame(rep, space, point)
    return _orbit_dim_from_frame(frame, vertical, tol)


def _orbit_dim_from_frame(frame, vertical, tol: Tolerances) -> int:
    rows = _real_rows(frame)
    if vertical is None:
        return numerical_rank(rows, tol)
    stacked = np.vstack([rows, _real_rows(vertical[None, :])])
    return numerical_rank(stacked, tol) - 1


def isotropy_algebra(rep: MatrixRep, space: PhaseSpace, point,
                     tol: Tolerances = DEFAULT) -> np.ndarray:
    """Coefficient vectors of the isotropy subalgebra at the point.

    Projectively, solutions may move the point along the phase direction i*z.
    Rows are B-orthonormal when the gram matrix is definite.
    """
    frame, vertical = generating_frame(rep, space, point)
    columns = _real_rows(frame).T  # (2N, dim_g), real-linear map c -> sum c_a X_a z
    if vertical is not None:
        q = _real_rows(vertical[None, :]).ravel()
        q = q / np.linalg.norm(q)
        columns = columns - np.outer(q, q @ columns)
    basis = null_space(columns, tol)
    metric = rep.gram if rep.faithful else None
    return orthonormalize_rows(basis, metric, tol)


def omega_on_orbit(rep: MatrixRep, space: PhaseSpace, point,
                   tol: Tolerances = DEFAULT, scale: float = 1.0) -> float:
    """Max |omega(xi_a, xi_b)| over pairs of orbit generators at the point."""
    frame, _ = generating_frame(rep, space, point)
    pair = frame @ frame.conj().T
    if space.kind == PROJECTIVE:
        z = prepare_point(space, point)
        u = frame @ np.conj(z)
        pair = pair - np.outer(u, np.conj(u))
    if pair.size == 0:
        return 0.0
    return float(np.max(np.abs(np.imag(pair)))) * scale


def moduli_dimension(rep: MatrixRep, space: PhaseSpace, point,
                     tol: Tolerances = DEFAULT,
                     isotropy: np.ndarray | None = None) -> int:
    """Dimension of the local family of Lagrangian orbits through the point.

    Computes the isotropy algebra g_x, its B-orthogonal complement m, the
    centralizer s = {v in m : [v, g_x] = 0}, and returns dim(z(g) ∩ s).
    """
    if not rep.faithful:
        raise GeometryError("moduli dimension needs a faithful presentation "
                            "(gram matrix must be definite)")
    gx = isotropy if isotropy is not None else isotropy_algebra(rep, space, point, tol)
    g = rep.dim_g
    if len(gx) == 0:
        complement = np.eye(g)
    else:
        complement = null_space(gx @ rep.gram, tol)
    if len(complement) == 0 or len(rep.center) == 0:
        return 0
    if len(gx) == 0:
        s_rows = complement
    else:
        # [v, u_i]_k = sum_{b,a} v_b gx[i,a] struct[b,a,k]; constraint rows (i,k)
        cond = np.einsum("ia,bak->ikb", gx, rep.struct).reshape(-1, g)
        params = null_space(cond @ complement.T, tol)
        if len(params) == 0:
            return 0
        s_rows = params @ complement
    z_rows = rep.center
    stacked = np.vstack([z_rows, s_rows])
    return len(z_rows) + len(s_rows) - numerical_rank(stacked, tol)


def isolation_equivalence(rep: MatrixRep, space: PhaseSpace, point,
                          tol: Tolerances = DEFAULT):
    """The two isolation criteria: trivial moduli vs semisimple transitivity.

    Returns (isolated_by_moduli, ss_transitive, agrees).  Disagreement is
    reported, never reconciled: it signals a numerical or construction bug.
    """
    moduli = moduli_dimension(rep, space, point, tol)
    frame, vertical = generating_frame(rep, space, point)
    orbit_dim = _orbit_dim_from_frame(frame, vertical, tol)
    if len(rep.derived):
        ss_frame = rep.derived @ frame
        ss_dim = _orbit_dim_from_frame(ss_frame, vertical, tol)
    else:
        ss_dim = _orbit_dim_from_frame(np.zeros((0, frame.shape[1]), complex), vertical, tol)
    isolated = moduli == 0
    transitive = ss_dim == orbit_dim
    return isolated, transitive, isolated == transitive


def lagrangian_verdict(rep: MatrixRep, space: PhaseSpace, point,
                       tol: Tolerances = DEFAULT, exact: bool = True,
                       scale: float = 1.0,
                       with_isolation: bool = True) -> OrbitReport:
    """Full orbit verdict at a point.

    The Lagrangian flag is orbit_dim == half_dim together with a vanishing
    symplectic pairing on the orbit; the central defect of the moment value
    must agree with that verdict (kernel identity), and disagreement is
    recorded as an error-grade note.  ``exact`` selects the residual gate for
    paper-given points versus search-produced ones.
    """
    _check_rep(rep, space)
    z = prepare_point(space, point)
    gate = tol.lagrangian_exact if exact else tol.lagrangian_search
    gate = gate * max(scale, 1.0)

    frame, vertical = generating_frame(rep, space, z)
    orbit_dim = _orbit_dim_from_frame(frame, vertical, tol)
    gx = isotropy_algebra(rep, space, z, tol)
    mu = moment_map(rep, space, z, tol, scale)
    omega = omega_on_orbit(rep, space, z, tol, scale)

    notes = []
    half = space.half_dim
    dim_ok = orbit_dim == half
    omega_ok = omega <= gate
    central_ok = mu.central_defect <= gate
    is_lag = dim_ok and omega_ok
    if dim_ok and omega_ok != central_ok:
        notes.append(
            "criterion disagreement: omega residual "
            f"{omega:.3e} vs central defect {mu.central_defect:.3e} at gate {gate:.1e}")
    if orbit_dim == 0 and half > 0:
        notes.append("fixed point: orbit dimension 0")

    moduli = isolated = transitive = agrees = None
    if is_lag and with_isolation and rep.faithful:
        moduli = moduli_dimension(rep, space, z, tol, isotropy=gx)
        isolated = moduli == 0
        if len(rep.derived):
            ss_dim = _orbit_dim_from_frame(rep.derived @ frame, vertical, tol)
        else:
            ss_dim = 0
        transitive = ss_dim == orbit_dim
        agrees = isolated == transitive
        if not agrees:
            notes.append("isolation criteria disagree (Theorem-1 vs Theorem-2 test)")

    return OrbitReport(
        orbit_dim=orbit_dim,
        half_dim=half,
        isotropy_dim=rep.dim_g - orbit_dim,
        isotropy_basis=gx,
        mu=mu,
        omega_residual=omega,
        is_lagrangian=bool(is_lag),
        moduli_dim=moduli,
        isolated_thm1=isolated,
        ss_transitive=transitive,
        isolation_agrees=agrees,
        notes=tuple(notes),
    )
