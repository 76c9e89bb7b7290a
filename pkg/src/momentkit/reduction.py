"""Reduction and cut scenarios verified upstairs.

All reduced-space claims (weighted projective spaces, symplectic cuts /
blow-ups, circle reductions to projective space) are certified on the flat
module above them: an orbit of the torus-extended group is Lagrangian
upstairs exactly when the compact factor's orbit is Lagrangian downstairs,
with the dimension bookkeeping dim K[p] = dim (T.K)p - dim T.  No orbifold
atlas is ever constructed.

The cut of a projective base P(V) at a circle level is checked on V x C:
the verifier extends every generator by its line weight, appends the cone
circle (scalars on V) when the given factors do not already span it, and
runs the linear verdict on the module-with-line.  The line weight is -1 so
that the level set covers the region where the base circle moment stays
below the cut level, matching the fixed moment convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .liealg import MatrixRep, build_classical, combine, contains_in_span, make_rep
from .symcheck import (
    LINEAR,
    OrbitReport,
    PhaseSpace,
    isotropy_algebra,
    lagrangian_verdict,
    linear_space,
    prepare_point,
    product_with_line,
    projective_space,
)
from .tolerances import DEFAULT, Tolerances


class LiftError(ValueError):
    """Violated hypothesis of a reduction/cut scenario."""


class ExceptionalDivisorError(LiftError):
    """Cut points with vanishing line coordinate are not supported."""


@dataclass(frozen=True)
class CircleData:
    """A circle factor: one integer weight per module coordinate, and a level."""

    weights: tuple[int, ...]
    level: float
    line_weight: int = -1  # used only by cut scenarios

    def __post_init__(self):
        if not self.weights or not any(self.weights):
            raise LiftError("circle weights must be nonzero somewhere")

    def rep(self) -> MatrixRep:
        return build_classical("u1", 1, weights=list(self.weights))

    def moment(self, z: np.ndarray) -> float:
        w = np.asarray(self.weights, dtype=float)
        return float(-0.5 * w @ (np.abs(np.asarray(z)) ** 2))


@dataclass(frozen=True)
class LiftReport:
    upstairs: OrbitReport
    level_residual: float
    circle_isotropy_finite: bool
    downstairs_claim: str | None
    base_report: OrbitReport | None = None  # compact factor on the base space
    k_isotropy_dim_at_base: int | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def claimed(self) -> bool:
        return self.downstairs_claim is not None


def _circle_isotropy_finite(product: MatrixRep, z: np.ndarray,
                            tol: Tolerances) -> bool:
    """The circle generator (index 0 of the product) must move the point."""
    vec = product.mats[0] @ z
    return float(np.linalg.norm(vec)) > tol.rank_rel * max(1.0, float(np.linalg.norm(z)))


def _maybe_claim(upstairs: OrbitReport, level_res: float, finite: bool,
                 claim: str, tol: Tolerances):
    if upstairs.is_lagrangian and level_res <= tol.level and finite:
        return claim
    return None


def reduction_lift(k_rep: MatrixRep, circle: CircleData, point,
                   claim: str | None = None, tol: Tolerances = DEFAULT,
                   exact: bool = True) -> LiftReport:
    """Certify a reduced-space Lagrangian claim on the module upstairs.

    Hypotheses are verified, never assumed: the circle must centralize the
    compact factor, the point must sit on the stated level, and the circle
    generator must act with finite stabilizer there.  The downstairs claim is
    emitted only when the torus-extended orbit upstairs is Lagrangian.
    """
    if len(circle.weights) != k_rep.dim_v:
        raise LiftError("circle weight list does not match the module dimension")
    try:
        product = combine([circle.rep(), k_rep], ["t", "k"], tol)
    except Exception as exc:
        raise LiftError(f"circle does not centralize the compact factor: {exc}") from exc
    space = linear_space(k_rep.dim_v)
    z = prepare_point(space, point)
    level_res = abs(circle.moment(z) - circle.level)
    if level_res > tol.level:
        raise LiftError(f"point misses the level set by {level_res:.3e}")
    if not _circle_isotropy_finite(product, z, tol):
        raise LiftError("circle generator lies in the isotropy algebra at the point")
    upstairs = lagrangian_verdict(product, space, z, tol, exact=exact)
    claim = claim or "K[p] Lagrangian in the circle reduction at the stated level"
    notes = []
    if upstairs.is_lagrangian:
        # reduced half-dimension bookkeeping: dim K[p] = dim (T.K)p - 1
        notes.append(f"reduced-space orbit dimension {upstairs.orbit_dim - 1}")
    return LiftReport(
        upstairs=upstairs,
        level_residual=level_res,
        circle_isotropy_finite=True,
        downstairs_claim=_maybe_claim(upstairs, level_res, True, claim, tol),
        k_isotropy_dim_at_base=len(isotropy_algebra(k_rep, space, z, tol)),
        notes=tuple(notes),
    )


def weighted_projective_scenario(k_rep: MatrixRep, k: int, s: int, point,
                                 split: tuple[int, int],
                                 name: str | None = None,
                                 tol: Tolerances = DEFAULT) -> LiftReport:
    """Lagrangian-orbit check on a two-weight projective quotient P(V)_[k,s].

    The circle acts with weight -k on the first summand and -s on the second;
    the point is normalized onto the level 1/2 by p / sqrt(k|v|^2 + s|w|^2).
    """
    if k == s:
        raise LiftError("equal weights give a plain projective space; "
                        "use the projective verdict directly")
    if k < 1 or s < 1:
        raise LiftError("weights must be positive integers")
    d1, d2 = split
    if d1 + d2 != k_rep.dim_v:
        raise LiftError("summand split does not match the module dimension")
    z = np.asarray(point, dtype=complex).reshape(-1)
    if len(z) != k_rep.dim_v:
        raise LiftError("point length does not match the module dimension")
    v, w = z[:d1], z[d1:]
    denom = k * float(np.linalg.norm(v)) ** 2 + s * float(np.linalg.norm(w)) ** 2
    if denom <= 0:
        raise LiftError("point vanishes")
    zbar = z / np.sqrt(denom)
    circle = CircleData(weights=tuple([-k] * d1 + [-s] * d2), level=0.5)
    target = name or f"P(V)_[{k},{s}]"
    return reduction_lift(k_rep, circle, zbar,
                          claim=f"K[p] Lagrangian in {target}", tol=tol)


def _extend_with_line(mats: np.ndarray, line_weight: int) -> np.ndarray:
    g, n, _ = mats.shape
    out = np.zeros((g, n + 1, n + 1), dtype=complex)
    out[:, :n, :n] = mats
    out[:, n, n] = 1j * line_weight
    return out


def cut_lift(k_rep: MatrixRep, circle: CircleData, point,
             z_line: complex | None = None, base_projective: bool = True,
             claim: str | None = None, tol: Tolerances = DEFAULT,
             exact: bool = True) -> LiftReport:
    """Certify a symplectic-cut (blow-up) claim on the module-with-line.

    ``point`` is the base point (a projective representative when the base is
    P(V)); the line coordinate is derived from the cut level unless given.
    ``z_line = 0`` would land on the exceptional divisor and is rejected.
    The cone circle is appended automatically for projective bases whenever
    the stated factors do not already span it.
    """
    n = k_rep.dim_v
    if len(circle.weights) != n:
        raise LiftError("circle weight list does not match the module dimension")
    base_space = projective_space(n) if base_projective else linear_space(n)
    m = prepare_point(base_space, point)

    psi = circle.moment(m)
    line_coeff = -0.5 * circle.line_weight
    if line_coeff <= 0:
        raise LiftError("line weight must make the line moment increase (weight < 0)")
    if z_line is None:
        if circle.level <= psi + tol.level:
            raise LiftError(
                f"cut level {circle.level} must exceed the base circle moment {psi:.6f}")
        z_line = complex(np.sqrt((circle.level - psi) / line_coeff))
    if z_line == 0:
        raise ExceptionalDivisorError(
            "point lies on the exceptional divisor (z = 0); orbit analysis there "
            "is out of scope")
    zfull = np.concatenate([m, [complex(z_line)]])
    level_res = abs(psi + line_coeff * abs(z_line) ** 2 - circle.level)
    if level_res > tol.level:
        raise LiftError(f"(point, z) misses the cut level by {level_res:.3e}")

    circle_ext = make_rep(_extend_with_line(circle.rep().mats, circle.line_weight),
                          ["t"], tol)
    k_ext = make_rep(_extend_with_line(k_rep.mats, 0), k_rep.labels, tol)
    factors = [circle_ext, k_ext]
    prefixes = ["cut", "k"]
    notes = []
    if base_projective:
        cone = np.zeros((1, n + 1, n + 1), dtype=complex)
        cone[0, :n, :n] = 1j * np.eye(n)
        stated = np.concatenate([circle_ext.mats, k_ext.mats])
        if not contains_in_span(stated, cone[0], tol):
            factors.insert(1, make_rep(cone, ["h"], tol))
            prefixes.insert(1, "cone")
            notes.append("cone circle appended (scalars on V, trivial on the line)")
        else:
            notes.append("cone circle already spanned by the stated factors")
    product = combine(factors, prefixes, tol)

    space = product_with_line(n)
    if not _circle_isotropy_finite(product, zfull, tol):
        raise LiftError("cut circle lies in the isotropy algebra at the point")
    upstairs = lagrangian_verdict(product, space, zfull, tol, exact=exact)

    base_report = None
    if base_projective:
        base_report = lagrangian_verdict(k_rep, base_space, m, tol, exact=exact)
    k_iso = len(isotropy_algebra(k_ext, linear_space(n + 1), zfull, tol))
    claim = claim or "K[m, z] Lagrangian in the symplectic cut at the stated level"
    return LiftReport(
        upstairs=upstairs,
        level_residual=level_res,
        circle_isotropy_finite=True,
        downstairs_claim=_maybe_claim(upstairs, level_res, True, claim, tol),
        base_report=base_report,
        k_isotropy_dim_at_base=k_iso,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class SliceFinding:
    """Outcome of a fixed-point slice check for an ambient homogeneous space."""

    ambient: str
    supported: bool
    conclusion: str
    report: OrbitReport | None
    notes: tuple[str, ...] = field(default_factory=tuple)


def slice_lift_report(slice_rep: MatrixRep, space: PhaseSpace, point,
                      ambient: str, group_name: str = "G",
                      tol: Tolerances = DEFAULT, exact: bool = True,
                      notes=()) -> SliceFinding:
    """One-directional lift of a slice-representation Lagrangian orbit.

    A Lagrangian orbit of the isotropy representation at a fixed point forces
    one for the ambient action; the ambient manifold itself is never built.
    A negative slice check yields no conclusion.
    """
    report = lagrangian_verdict(slice_rep, space, point, tol, exact=exact)
    if report.is_lagrangian:
        conclusion = (f"{group_name} admits a Lagrangian orbit on {ambient} "
                      "(supported via slice proposition)")
        return SliceFinding(ambient, True, conclusion, report, tuple(notes))
    conclusion = (f"no conclusion for {ambient}: the slice orbit is not "
                  "Lagrangian and the slice criterion is one-directional")
    return SliceFinding(ambient, False, conclusion, report, tuple(notes))
