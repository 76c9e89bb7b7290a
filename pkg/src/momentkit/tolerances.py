"""Numerical tolerance policy.

All rank decisions, residual gates and verdict thresholds in the toolkit read
from a single :class:`Tolerances` instance so that every report can echo the
exact configuration it was produced under.  The environment variable
``MOMENTKIT_TOL_OVERRIDE`` accepts a comma-separated list of ``name=value``
pairs (e.g. ``rank_rel=1e-7,lagrangian_search=1e-5``).  Overriding is
supported for diagnosis but discouraged: the shipped values are the ones the
verification claims are made under.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

_ENV_VAR = "MOMENTKIT_TOL_OVERRIDE"


@dataclass(frozen=True)
class Tolerances:
    # rank threshold: singular values >= rank_rel * max(sigma_max, 1.0)
    rank_rel: float = 1e-8
    # per-matrix skew-hermitian residual
    skew: float = 1e-12
    # bracket closure residual, relative to generator norms
    bracket: float = 1e-10
    # commutation requirement for circle factors in lifts
    commute: float = 1e-12
    # Lagrangian residual gates (omega pairing and central defect)
    lagrangian_exact: float = 1e-8
    lagrangian_search: float = 1e-6
    # level-set membership for reduction/cut scenarios
    level: float = 1e-9

    def rank_threshold(self, sigma_max: float) -> float:
        return self.rank_rel * max(sigma_max, 1.0)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def from_env(base: Tolerances | None = None) -> Tolerances:
    """Return the active tolerance set, applying any environment override."""
    tol = base or Tolerances()
    raw = os.environ.get(_ENV_VAR, "").strip()
    if not raw:
        return tol
    updates = {}
    valid = {f.name for f in dataclasses.fields(Tolerances)}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in valid:
            raise ValueError(f"unknown tolerance {name!r} in {_ENV_VAR}")
        updates[name] = float(value)
    return dataclasses.replace(tol, **updates)


DEFAULT = Tolerances()
