"""Run reports: expected-vs-actual bookkeeping and text/machine emission.

The machine format is a JSON document with a versioned schema (``"schema": 1``)
that round-trips through :func:`parse_machine` without loss.  It is
deterministic given identical inputs: keys are sorted and volatile fields
(wall time) appear only in the text rendering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .kirwan import SearchOutcome
from .reduction import LiftReport, SliceFinding
from .symcheck import OrbitReport
from .tolerances import Tolerances

SCHEMA_VERSION = 1

OK = "ok"
REFUTED = "refuted"
ERROR = "error"
UNSUPPORTED_STATUS = "unsupported"


@dataclass(frozen=True)
class RunReport:
    name: str
    kind: str
    status: str  # ok | refuted | error | unsupported
    payload: dict | None
    diffs: tuple[dict, ...] = field(default_factory=tuple)
    error: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)
    wall_time_s: float = 0.0  # text rendering only; excluded from machine format


# ---------------------------------------------------------------------------
# payload serialization
# ---------------------------------------------------------------------------

def _complex_vector(z) -> list:
    return [[float(c.real), float(c.imag)] for c in np.asarray(z).ravel()]


def orbit_dict(r: OrbitReport) -> dict:
    return {
        "type": "orbit",
        "orbit_dim": r.orbit_dim,
        "half_dim": r.half_dim,
        "isotropy_dim": r.isotropy_dim,
        "omega_residual": float(r.omega_residual),
        "central_defect": float(r.mu.central_defect),
        "moment": [float(x) for x in r.mu.full],
        "lagrangian": bool(r.is_lagrangian),
        "moduli_dim": r.moduli_dim,
        "isolated": r.isolated_thm1,
        "ss_transitive": r.ss_transitive,
        "isolation_agrees": r.isolation_agrees,
        "notes": list(r.notes),
    }


def lift_dict(r: LiftReport) -> dict:
    return {
        "type": "lift",
        "upstairs": orbit_dict(r.upstairs),
        "level_residual": float(r.level_residual),
        "circle_isotropy_finite": bool(r.circle_isotropy_finite),
        "claim": r.downstairs_claim,
        "base": orbit_dict(r.base_report) if r.base_report else None,
        "k_isotropy_dim_at_base": r.k_isotropy_dim_at_base,
        "notes": list(r.notes),
    }


def search_dict(r: SearchOutcome) -> dict:
    return {
        "type": "search",
        "status": r.status,
        "f_final": float(r.f_final),
        "point": _complex_vector(r.point) if r.point is not None else None,
        "report": orbit_dict(r.report) if r.report else None,
        "trace": [
            {"start": t.start, "iterations": t.iterations,
             "f_final": float(t.f_final), "grad_norm": float(t.grad_norm),
             "outcome": t.outcome}
            for t in r.trace
        ],
        "backend": r.backend,
        "notes": list(r.notes),
    }


def slice_dict(r: SliceFinding) -> dict:
    return {
        "type": "slice",
        "ambient": r.ambient,
        "supported": bool(r.supported),
        "conclusion": r.conclusion,
        "report": orbit_dict(r.report) if r.report else None,
        "notes": list(r.notes),
    }


def payload_dict(payload) -> dict | None:
    if payload is None:
        return None
    if isinstance(payload, OrbitReport):
        return orbit_dict(payload)
    if isinstance(payload, LiftReport):
        return lift_dict(payload)
    if isinstance(payload, SearchOutcome):
        return search_dict(payload)
    if isinstance(payload, SliceFinding):
        return slice_dict(payload)
    raise TypeError(f"unknown payload type {type(payload)!r}")


# ---------------------------------------------------------------------------
# expected-vs-actual comparison
# ---------------------------------------------------------------------------

def _actual_value(key: str, payload: dict | None):
    """Extract the comparable quantity named by an expected-annotation key."""
    if payload is None:
        if key == "status":
            return UNSUPPORTED_STATUS
        return None
    ptype = payload["type"]
    report = None
    if ptype == "orbit":
        report = payload
    elif ptype == "search":
        report = payload.get("report")
    elif ptype == "slice":
        report = payload.get("report")
    if key == "status":
        return payload.get("status", ptype)
    if key == "supported":
        return payload.get("supported")
    if key in ("upstairs_orbit_dim", "upstairs_lagrangian", "claimed",
               "base_orbit_dim", "base_lagrangian") and ptype == "lift":
        upstairs = payload["upstairs"]
        base = payload.get("base")
        return {
            "upstairs_orbit_dim": upstairs["orbit_dim"],
            "upstairs_lagrangian": upstairs["lagrangian"],
            "claimed": payload["claim"] is not None,
            "base_orbit_dim": base["orbit_dim"] if base else None,
            "base_lagrangian": base["lagrangian"] if base else None,
        }[key]
    if report is None:
        if key == "lagrangian":
            return False  # e.g. an exhausted search certifies nothing
        return None
    mapping = {
        "lagrangian": report.get("lagrangian"),
        "orbit_dim": report.get("orbit_dim"),
        "isotropy_dim": report.get("isotropy_dim"),
        "moduli_dim": report.get("moduli_dim"),
        "isolated": report.get("isolated"),
        "ss_transitive": report.get("ss_transitive"),
        "dim_p": report.get("half_dim"),
    }
    return mapping.get(key, None)


def compare_expected(expected: dict, payload: dict | None) -> tuple[dict, ...]:
    diffs = []
    for key in sorted(expected):
        if key == "citation":
            continue
        want = expected[key]
        got = _actual_value(key, payload)
        diffs.append({"field": key, "expected": want, "actual": got,
                      "ok": bool(got == want)})
    return tuple(diffs)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def _document(reports, tol: Tolerances) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "toolkit_version": __version__,
        "tolerances": tol.as_dict(),
        "reports": [
            {
                "name": r.name,
                "kind": r.kind,
                "status": r.status,
                "payload": r.payload,
                "diffs": list(r.diffs),
                "error": r.error,
                "notes": list(r.notes),
            }
            for r in reports
        ],
    }


def emit_report(reports, fmt: str, tol: Tolerances) -> bytes:
    """Render reports as a fixed-width text table or the machine JSON document."""
    if fmt == "machine" or fmt == "json":
        doc = _document(reports, tol)
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    lines = []
    header = (f"{'scenario':34s} {'kind':11s} {'dims':>9s} {'residual':>9s} "
              f"{'moduli':>6s} {'time':>7s}  result")
    lines.append(header)
    lines.append("-" * len(header))
    for r in reports:
        dims = resid = moduli = "-"
        rep = None
        payload = r.payload
        if payload:
            if payload["type"] == "orbit":
                rep = payload
            elif payload["type"] == "lift":
                rep = payload["upstairs"]
            elif payload["type"] in ("search", "slice"):
                rep = payload.get("report")
        if rep:
            dims = f"{rep['orbit_dim']}/{rep['half_dim']}"
            resid = f"{max(rep['omega_residual'], rep['central_defect']):.1e}"
            moduli = "-" if rep["moduli_dim"] is None else str(rep["moduli_dim"])
        result = {OK: "OK", REFUTED: "REFUTED", ERROR: "ERROR",
                  UNSUPPORTED_STATUS: "UNSUPPORTED"}[r.status]
        lines.append(f"{r.name:34s} {r.kind:11s} {dims:>9s} {resid:>9s} "
                     f"{moduli:>6s} {r.wall_time_s:6.2f}s  {result}")
        if r.status == REFUTED:
            for d in r.diffs:
                if not d["ok"]:
                    lines.append(f"    diff: {d['field']}: expected {d['expected']!r}, "
                                 f"actual {d['actual']!r}")
        if r.status == ERROR:
            lines.append(f"    error: {r.error}")
    lines.append("-" * len(header))
    counts = {s: sum(1 for r in reports if r.status == s)
              for s in (OK, REFUTED, ERROR, UNSUPPORTED_STATUS)}
    lines.append(f"total {len(reports)}: {counts[OK]} ok, {counts[REFUTED]} refuted, "
                 f"{counts[ERROR]} errors, {counts[UNSUPPORTED_STATUS]} unsupported")
    lines.append("tolerances: " + json.dumps(tol.as_dict(), sort_keys=True))
    lines.append(f"toolkit version {__version__}")
    return ("\n".join(lines) + "\n").encode()


def parse_machine(data: bytes | str) -> tuple[list[RunReport], Tolerances]:
    """Parse a machine-format document back into run reports (lossless)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    doc = json.loads(data)
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
    tol = Tolerances(**doc["tolerances"])
    reports = [
        RunReport(
            name=item["name"], kind=item["kind"], status=item["status"],
            payload=item["payload"], diffs=tuple(item["diffs"]),
            error=item["error"], notes=tuple(item["notes"]))
        for item in doc["reports"]
    ]
    return reports, tol


def exit_code(reports) -> int:
    """0 when everything matches, 1 on any refutation, 2 on any error."""
    if any(r.status == ERROR for r in reports):
        return 2
    if any(r.status == REFUTED for r in reports):
        return 1
    return 0
