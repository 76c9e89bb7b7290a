"""Execute registry entries and scenarios into run reports.

Per-scenario failures are isolated into their report (status ``error``);
a batch never aborts.  Scenario execution is order-stable by registry order,
so fixed seeds give byte-identical machine reports run to run.
"""

from __future__ import annotations

import time

from . import registry, reports
from .kirwan import SearchParams, certify_table_row, search_lagrangian
from .registry import RegistryEntry
from .scenario import Scenario
from .symcheck import lagrangian_verdict
from .tolerances import DEFAULT, Tolerances


def run_entry(entry: RegistryEntry, tol: Tolerances = DEFAULT,
              params: SearchParams | None = None) -> reports.RunReport:
    """Execute one registry entry through its pipeline."""
    start = time.perf_counter()
    payload = None
    error = None
    status = reports.OK
    try:
        if entry.kind == registry.UNSUPPORTED:
            status = reports.UNSUPPORTED_STATUS
        elif entry.kind == registry.VERDICT:
            payload = lagrangian_verdict(entry.build_rep(), entry.build_space(),
                                         entry.point, tol, exact=True)
        elif entry.kind == registry.TABLE:
            payload = certify_table_row(entry.name,
                                        params or entry.search_params or SearchParams(),
                                        tol)
        elif entry.kind == registry.SEARCH:
            payload = search_lagrangian(entry.build_rep(), entry.build_space(),
                                        params or entry.search_params or SearchParams(),
                                        tol)
        elif entry.kind in (registry.WEIGHTED, registry.CUT, registry.REDUCTION,
                            registry.SLICE):
            payload = entry.runner(tol)
        else:
            raise ValueError(f"unknown entry kind {entry.kind!r}")
    except Exception as exc:  # isolate per-scenario failures
        error = f"{type(exc).__name__}: {exc}"
        status = reports.ERROR

    payload_doc = reports.payload_dict(payload) if payload is not None else None
    if entry.kind == registry.UNSUPPORTED and payload_doc is None:
        payload_doc = None
    diffs = reports.compare_expected(entry.expected, payload_doc) \
        if status != reports.ERROR else ()
    if status == reports.OK and any(not d["ok"] for d in diffs):
        status = reports.REFUTED
    return reports.RunReport(
        name=entry.name, kind=entry.kind, status=status, payload=payload_doc,
        diffs=diffs, error=error, notes=entry.notes,
        wall_time_s=time.perf_counter() - start)


def run_registry(pattern: str | None = None, tol: Tolerances = DEFAULT,
                 include_slow: bool = True,
                 params: SearchParams | None = None) -> list[reports.RunReport]:
    """Run every registry entry matching the name pattern, in registry order."""
    out = []
    for entry in registry.all_entries():
        if pattern is not None and entry.name not in registry.names(pattern):
            continue
        if entry.slow and not include_slow:
            continue
        out.append(run_entry(entry, tol, params))
    return out


def run_scenario(scn: Scenario, tol: Tolerances = DEFAULT,
                 params: SearchParams | None = None,
                 force_search: bool = False) -> reports.RunReport:
    """Execute a parsed scenario file: verdict when a point is given, else search."""
    start = time.perf_counter()
    payload = None
    error = None
    status = reports.OK
    kind = "verdict"
    try:
        rep = scn.build_rep(tol)
        space = scn.build_space(tol)
        if scn.point is not None and not force_search:
            payload = lagrangian_verdict(rep, space, scn.point, tol, exact=True)
        else:
            kind = "search"
            payload = search_lagrangian(rep, space,
                                        params or scn.search or SearchParams(), tol)
    except Exception as exc:
        error = f"{type(exc).__name__}: {exc}"
        status = reports.ERROR

    payload_doc = reports.payload_dict(payload) if payload is not None else None
    diffs = reports.compare_expected(scn.expected, payload_doc) \
        if status != reports.ERROR else ()
    if status == reports.OK and any(not d["ok"] for d in diffs):
        status = reports.REFUTED
    return reports.RunReport(
        name=scn.name, kind=kind, status=status, payload=payload_doc,
        diffs=diffs, error=error, wall_time_s=time.perf_counter() - start)
