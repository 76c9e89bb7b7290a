"""Numerical search for Lagrangian orbits.

A Lagrangian orbit of a compact group on a Kaehler space sits on a central
level of the moment map, so it suffices to minimize the squared semisimple
moment component

    f(z) = sum_a mu^{Y_a}(z)^2,     {Y_a} a B-orthonormal basis of [g, g],

over the unit sphere: f is phase-invariant, its zero set is the candidate
central level, and any central component of the moment value comes for free.
Multi-start projected gradient descent (Armijo backtracking, renormalization
retraction) locates zeros; every candidate is re-certified by the exact
orbit verdict at the relaxed search tolerance before it is reported.

Starts are seeded with a counter-based generator keyed by (rng_seed, start
index), so runs are reproducible and independent starts could execute
concurrently; results merge deterministically in start order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.random import Generator, Philox

from . import _kernels
from .liealg import MatrixRep
from .symcheck import LINEAR, PROJECTIVE, OrbitReport, PhaseSpace, lagrangian_verdict
from .tolerances import DEFAULT, Tolerances

FOUND = "found"
CONVERGED_NON_LAGRANGIAN = "converged-non-lagrangian"
EXHAUSTED = "exhausted"

# Polish budget between convergence and certification.  At the search floor
# f ~ 1e-14 the spurious frame directions sit at ~sqrt(f) ~ 1e-7, right at the
# rank threshold; driving f to the machine floor (linear rate, ~0.7 per step)
# makes the orbit-dimension read-off unambiguous.
_POLISH_ITERS = 150
_POLISH_F_TOL = 1e-28


@dataclass(frozen=True)
class SearchParams:
    starts: int = 32
    max_iters: int = 10000
    armijo_c: float = 1e-4
    shrink: float = 0.5
    grad_tol: float = 1e-10
    f_tol: float = 1e-14
    rng_seed: int = 1

    def __post_init__(self):
        if not 0 < self.shrink < 1:
            raise ValueError("shrink must lie in (0, 1)")
        if not 0 < self.armijo_c < 1:
            raise ValueError("armijo_c must lie in (0, 1)")
        if self.starts < 1 or self.max_iters < 1:
            raise ValueError("starts and max_iters must be positive")


@dataclass(frozen=True)
class StartTrace:
    start: int
    iterations: int
    f_final: float
    grad_norm: float
    outcome: str  # "certified" | "rejected" | "positive-minimum" | "max-iters"


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    point: np.ndarray | None
    f_final: float
    report: OrbitReport | None
    trace: tuple[StartTrace, ...] = field(default_factory=tuple)
    backend: str = _kernels.BACKEND
    notes: tuple[str, ...] = field(default_factory=tuple)


def kirwan_objective(rep: MatrixRep, z: np.ndarray):
    """(f, sphere-tangent gradient) of the squared semisimple moment at unit z."""
    mats = np.ascontiguousarray(rep.derived_mats())
    f, grad, _ = _kernels.objective(mats, np.asarray(z, dtype=complex))
    return f, grad


def _start_point(seed: int, start: int, dim: int) -> np.ndarray:
    rng = Generator(Philox(key=(int(seed) << 32) + start))
    raw = rng.standard_normal(2 * dim)
    z = raw[:dim] + 1j * raw[dim:]
    return z / np.linalg.norm(z)


def search_lagrangian(rep: MatrixRep, space: PhaseSpace,
                      params: SearchParams = SearchParams(),
                      tol: Tolerances = DEFAULT) -> SearchOutcome:
    """Multi-start minimization of the Kirwan function, with certification.

    The search domain is the unit sphere of the module (projective spaces
    modulo phase, which the objective ignores; linear spaces on the norm-one
    slice, where the quadratic moment components scale harmlessly).  Status
    ``found`` means the first converged point whose orbit verdict certifies
    Lagrangian at the relaxed tolerance; ``converged-non-lagrangian`` means
    the objective reached its floor somewhere but certification failed;
    ``exhausted`` otherwise.  All failure modes are statuses, not errors.
    """
    if space.kind not in (PROJECTIVE, LINEAR):
        raise ValueError("search runs on projective spaces or linear norm-one slices")
    if rep.dim_v != space.ambient_dim:
        raise ValueError("representation/space dimension mismatch")
    mats = np.ascontiguousarray(rep.derived_mats())
    gate = max(params.f_tol, tol.lagrangian_search ** 2)

    traces: list[StartTrace] = []
    rejected: tuple[np.ndarray, float, OrbitReport] | None = None
    best_f = np.inf
    best_z = None
    for start in range(params.starts):
        z0 = _start_point(params.rng_seed, start, rep.dim_v)
        z, f, gnorm, iters, hit = _kernels.descend(
            mats, z0, params.max_iters, params.grad_tol, params.f_tol,
            params.armijo_c, params.shrink)
        if f < best_f:
            best_f, best_z = f, z
        if f <= gate:
            # polish before certification to shave optimizer noise
            z, f, gnorm, extra, _ = _kernels.descend(
                mats, z, _POLISH_ITERS, 0.0, _POLISH_F_TOL,
                params.armijo_c, params.shrink)
            report = lagrangian_verdict(rep, space, z, tol, exact=False)
            if report.is_lagrangian:
                traces.append(StartTrace(start, iters + extra, f, gnorm, "certified"))
                return SearchOutcome(FOUND, z, f, report, tuple(traces))
            traces.append(StartTrace(start, iters + extra, f, gnorm, "rejected"))
            if rejected is None:
                rejected = (z, f, report)
        elif hit == _kernels.HIT_MAX_ITERS:
            traces.append(StartTrace(start, iters, f, gnorm, "max-iters"))
        else:
            traces.append(StartTrace(start, iters, f, gnorm, "positive-minimum"))

    if rejected is not None:
        z, f, report = rejected
        return SearchOutcome(CONVERGED_NON_LAGRANGIAN, z, f, report, tuple(traces),
                             notes=("objective vanished but certification failed",))
    note = f"best objective over {params.starts} starts: {best_f:.3e}"
    return SearchOutcome(EXHAUSTED, best_z, best_f, None, tuple(traces), notes=(note,))


class UnsupportedRowError(ValueError):
    """Raised for registry rows whose representations the toolkit cannot build."""


def certify_table_row(row_id: str, params: SearchParams = SearchParams(),
                      tol: Tolerances = DEFAULT) -> SearchOutcome:
    """Certify one registry row of simple-group projective scenarios.

    Uses the row's explicit point when one is on record (bypassing the
    search), otherwise runs the multi-start search.  The outcome notes
    record the expected complex dimension of the projective space and
    whether the certified orbit dimension matches it exactly.
    """
    from . import registry  # deferred: registry builds on this module

    entry = registry.get(row_id)
    if entry.kind == "unsupported":
        raise UnsupportedRowError(
            f"row {row_id!r} is registered as unsupported: {entry.describe()}")
    if entry.kind not in ("table",):
        raise ValueError(f"row {row_id!r} is not a projective table row")
    rep = entry.build_rep()
    space = entry.build_space()
    expected = entry.expected.get("orbit_dim")
    if entry.point is not None:
        report = lagrangian_verdict(rep, space, entry.point, tol, exact=True)
        status = FOUND if report.is_lagrangian else CONVERGED_NON_LAGRANGIAN
        outcome = SearchOutcome(status, np.asarray(entry.point, dtype=complex),
                                report.mu.central_defect ** 2, report,
                                notes=("explicit point, search bypassed",))
    else:
        outcome = search_lagrangian(rep, space, entry.search_params or params, tol)
    if expected is not None and outcome.report is not None:
        match = outcome.report.orbit_dim == expected
        note = f"expected dim P(V) = {expected}: {'match' if match else 'MISMATCH'}"
        outcome = SearchOutcome(outcome.status, outcome.point, outcome.f_final,
                                outcome.report, outcome.trace, outcome.backend,
                                outcome.notes + (note,))
    return outcome
