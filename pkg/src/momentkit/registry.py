"""Built-in registry of verification scenarios.

Every row of the simple-group projective table maps to exactly one entry
(constructible rows) or one explicit ``unsupported`` entry (the 27- and
56-dimensional exceptional modules).  Parameterized rows are instantiated at
desk scale: the smallest two or three legal parameters, keeping module
dimensions at or below 64.  The weighted projective, blow-up/cut, circle
reduction and fixed-point slice scenarios cover the remaining constructions,
plus the two worked examples (the torus-extended SU(2) action on C^4 and the
blown-up CP^4 action).

Expected annotations record exact integers (orbit and isotropy dimensions,
moduli dimensions, flags); the executor compares every annotation and a run
report never passes silently.  Entries are lazy: representations are built
and cached on first use.
"""

from __future__ import annotations

import fnmatch
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import liealg, reduction, symcheck
from .kirwan import SearchParams, search_lagrangian
from .symcheck import lagrangian_verdict, linear_space, projective_space
from .tolerances import DEFAULT, Tolerances

VERDICT = "verdict"
TABLE = "table"
SEARCH = "search"
WEIGHTED = "weighted"
CUT = "cut"
REDUCTION = "reduction"
SLICE = "slice"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    kind: str
    group: str
    rep_desc: str
    citation: str
    expected: dict = field(default_factory=dict)
    table_row: str | None = None  # projective-table row this entry certifies
    rep_builder: Callable[[], liealg.MatrixRep] | None = None
    space_kind: str = symcheck.PROJECTIVE
    point: np.ndarray | None = None
    search_params: SearchParams | None = None
    runner: Callable[[Tolerances], object] | None = None
    slow: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def build_rep(self) -> liealg.MatrixRep:
        if self.rep_builder is None:
            raise ValueError(f"entry {self.name!r} has no representation to build")
        return self.rep_builder()

    def build_space(self) -> symcheck.PhaseSpace:
        dim = self.build_rep().dim_v
        if self.space_kind == symcheck.PRODUCT_WITH_LINE:
            dim -= 1
        return symcheck.PhaseSpace(self.space_kind, dim)

    def describe(self) -> str:
        return f"{self.group} with {self.rep_desc}"


# ---------------------------------------------------------------------------
# cached constructors and explicit points
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def classical(family: str, n: int) -> liealg.MatrixRep:
    return liealg.build_classical(family, n)


@lru_cache(maxsize=None)
def circle(weights: tuple) -> liealg.MatrixRep:
    return liealg.build_classical("u1", 1, weights=list(weights))


@lru_cache(maxsize=None)
def spin(m: int, chirality: str) -> liealg.MatrixRep:
    return liealg.build_spin(m, chirality)


@lru_cache(maxsize=None)
def octonion_derivations() -> liealg.MatrixRep:
    return liealg.build_g2()


@lru_cache(maxsize=None)
def rep_with_dual(family: str, n: int) -> liealg.MatrixRep:
    base = classical(family, n)
    return liealg.direct_sum(base, liealg.dual_rep(base))


@lru_cache(maxsize=None)
def doubled(family: str, n: int) -> liealg.MatrixRep:
    base = classical(family, n)
    return liealg.direct_sum(base, base)


@lru_cache(maxsize=None)
def copies(family: str, n: int, count: int) -> liealg.MatrixRep:
    base = classical(family, n)
    return liealg.direct_sum(*([base] * count))


@lru_cache(maxsize=None)
def ext(family: str, n: int, k: int) -> liealg.MatrixRep:
    return liealg.exterior_power(classical(family, n), k)


@lru_cache(maxsize=None)
def sym(family: str, n: int, k: int) -> liealg.MatrixRep:
    return liealg.symmetric_power(classical(family, n), k)


@lru_cache(maxsize=None)
def ext_primitive(family: str, n: int, k: int) -> liealg.MatrixRep:
    return liealg.primitive_exterior_power(classical(family, n), k)


@lru_cache(maxsize=None)
def ext2_plus_defining(n: int) -> liealg.MatrixRep:
    base = classical("su", n)
    return liealg.direct_sum(liealg.exterior_power(base, 2), base)


@lru_cache(maxsize=None)
def spin_doubled(m: int, chirality: str) -> liealg.MatrixRep:
    base = spin(m, chirality)
    return liealg.direct_sum(base, base)


def unit(dim: int, idx: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[idx] = 1.0
    return v


def pair_point(d1: int, i: int, d2: int, j: int) -> np.ndarray:
    """(e_{i+1}, e_{j+1}) in the direct sum C^d1 + C^d2."""
    return np.concatenate([unit(d1, i), unit(d2, j)])


def bivector(n: int, entries) -> np.ndarray:
    """Coefficients on lex-ordered wedge pairs from (j, k, value), 0-based j < k."""
    pairs = list(itertools.combinations(range(n), 2))
    v = np.zeros(len(pairs), dtype=complex)
    for j, k, val in entries:
        v[pairs.index((j, k))] = val
    return v


def standard_symplectic_bivector(n_half: int) -> np.ndarray:
    """sum_a e_{2a-1} ^ e_{2a} on C^{2 n_half} (interleaved pairing)."""
    return bivector(2 * n_half, [(2 * a, 2 * a + 1, 1.0) for a in range(n_half)])


def su_odd_point(n: int) -> np.ndarray:
    """The bivector-plus-vector point (J_n, e_1) for su(2n+1) on ext^2 + defining.

    J_n is the antisymmetric matrix [[0, -I], [I, 0]] on coordinates 2..2n+1.
    """
    amb = 2 * n + 1
    biv = bivector(amb, [(1 + a, 1 + n + a, -1.0) for a in range(n)])
    return np.concatenate([biv, unit(amb, 0)])


def spinor_pair_point() -> np.ndarray:
    """(1 + e_1234, e_15 + e_2345) in the doubled even half-spin module of so(10)."""
    v1 = np.zeros(16, dtype=complex)
    v2 = np.zeros(16, dtype=complex)
    v1[liealg.spin_monomial_index(10, "even", ())] = 1.0
    v1[liealg.spin_monomial_index(10, "even", (1, 2, 3, 4))] = 1.0
    v2[liealg.spin_monomial_index(10, "even", (1, 5))] = 1.0
    v2[liealg.spin_monomial_index(10, "even", (2, 3, 4, 5))] = 1.0
    return np.concatenate([v1, v2])


def identity_quadric_point(n: int) -> np.ndarray:
    """sum_j e_j . e_j in the symmetric square of C^n (orthonormalized basis)."""
    multis = list(itertools.combinations_with_replacement(range(n), 2))
    v = np.zeros(len(multis), dtype=complex)
    for j in range(n):
        v[multis.index((j, j))] = 1.0
    return v


# the worked example group: T^1 x U(2) on C^5 = C z0 + C^2 + C^2
@lru_cache(maxsize=None)
def blown_cp4_group() -> liealg.MatrixRep:
    su2 = classical("su", 2)
    factors = [
        circle((1, -4, -4, -4, -4)),
        circle((0, 1, 1, 1, 1)),
        liealg.direct_sum(su2, su2, trivial_dims=[(0, 1)]),
    ]
    return liealg.combine(factors, ["z1", "z2", "su2"])


@lru_cache(maxsize=None)
def torus_on_cp2() -> liealg.MatrixRep:
    return liealg.combine([circle((0, -1, 0)), circle((0, 0, -1))], ["t1", "t2"])


@lru_cache(maxsize=None)
def slice_group(key: str) -> liealg.MatrixRep:
    """Product groups of the fixed-point slice scenarios."""
    if key.startswith("so2-so"):
        n = int(key.split("so2-so")[1])
        return liealg.combine([circle(tuple([1] * n)), classical("so", n)], ["t", "so"])
    if key == "u1-cp1":
        return circle((1,))
    if key == "u1-su3":
        return liealg.combine([circle((1, 1, 1)), classical("su", 3)], ["t", "su"])
    if key == "sp2-center":
        return liealg.combine([circle(tuple([1] * 8)), doubled("sp", 2)], ["t", "sp"])
    if key == "u4-ext2":
        return liealg.combine([circle(tuple([2] * 6)), ext("su", 4, 2)], ["t", "su"])
    if key == "u5-ext2-def":
        return liealg.combine(
            [circle(tuple([2] * 10 + [1] * 5)), ext2_plus_defining(5)], ["t", "su"])
    if key.startswith("u") and key.endswith("-sym2"):
        n = int(key[1:-5])
        d = n * (n + 1) // 2
        return liealg.combine([circle(tuple([2] * d)), sym("su", n, 2)], ["t", "su"])
    if key == "spin9-t1":
        return liealg.combine([circle(tuple([1] * 16)), spin(9, "full")], ["t", "spin"])
    raise KeyError(key)


# ---------------------------------------------------------------------------
# entry construction
# ---------------------------------------------------------------------------

_PAPER_TABLE = "projective table"
_SECTION_WP = "weighted projective constructions"
_SECTION_CUT = "blow-up constructions"
_SECTION_SLICE = "fixed-point slice table"


def _table_entry(name, group, rep_desc, builder, dim_p, table_row, point=None,
                 extra_expected=None, search_params=None, slow=False, notes=()):
    expected = {"status": "found", "orbit_dim": dim_p, "lagrangian": True}
    if extra_expected:
        expected.update(extra_expected)
    return RegistryEntry(
        name=name, kind=TABLE, group=group, rep_desc=rep_desc,
        citation=_PAPER_TABLE, expected=expected, table_row=table_row,
        rep_builder=builder, space_kind=symcheck.PROJECTIVE, point=point,
        search_params=search_params, slow=slow, notes=tuple(notes))


def _weighted_entry(name, group, rep_desc, builder, split, point, k, s,
                    upstairs_dim, notes=()):
    def runner(tol: Tolerances):
        return reduction.weighted_projective_scenario(
            builder(), k, s, point, split,
            name=f"P(V)_[{k},{s}] for {group} with {rep_desc}", tol=tol)

    return RegistryEntry(
        name=name, kind=WEIGHTED, group=f"T^1 x {group}", rep_desc=rep_desc,
        citation=_SECTION_WP,
        expected={"upstairs_orbit_dim": upstairs_dim, "upstairs_lagrangian": True,
                  "claimed": True},
        runner=runner, notes=tuple(notes))


def _cut_entry(name, group, rep_desc, builder, weights, point, claim,
               expected, level=0.45, notes=()):
    def runner(tol: Tolerances):
        circ = reduction.CircleData(weights=tuple(weights), level=level)
        return reduction.cut_lift(builder(), circ, point, claim=claim, tol=tol)

    return RegistryEntry(
        name=name, kind=CUT, group=group, rep_desc=rep_desc,
        citation=_SECTION_CUT, expected=expected, runner=runner, notes=tuple(notes))


def _reduction_entry(name, group, rep_desc, builder, weights, level, point,
                     claim, expected, notes=()):
    def runner(tol: Tolerances):
        circ = reduction.CircleData(weights=tuple(weights), level=level)
        return reduction.reduction_lift(builder(), circ, point, claim=claim, tol=tol)

    return RegistryEntry(
        name=name, kind=REDUCTION, group=f"T^1 x {group}", rep_desc=rep_desc,
        citation="circle reduction to projective space", expected=expected,
        runner=runner, notes=tuple(notes))


def _slice_entry(name, group, slice_desc, ambient, group_key, point=None,
                 supported=True, search_params=None, item="", notes=()):
    def runner(tol: Tolerances):
        rep = slice_group(group_key)
        space = linear_space(rep.dim_v)
        pt = point
        extra = list(notes)
        if pt is None:
            outcome = search_lagrangian(rep, space, search_params or SearchParams(),
                                        tol)
            if outcome.status != "found":
                return reduction.SliceFinding(
                    ambient, False,
                    f"no conclusion for {ambient}: search found no Lagrangian "
                    "orbit of the slice representation", None, tuple(extra))
            pt = outcome.point
            extra.append("slice point located by search")
            return reduction.slice_lift_report(rep, space, pt, ambient, group,
                                               tol, exact=False, notes=extra)
        return reduction.slice_lift_report(rep, space, pt, ambient, group,
                                           tol, notes=extra)

    return RegistryEntry(
        name=name, kind=SLICE, group=group, rep_desc=slice_desc,
        citation=f"{_SECTION_SLICE}, item {item}",
        expected={"supported": supported}, runner=runner, notes=tuple(notes))


def _build_entries() -> list[RegistryEntry]:
    entries: list[RegistryEntry] = []
    add = entries.append

    # ----- worked example: T^1 x SU(2) on C^4 ------------------------------
    def qui_group():
        su2 = classical("su", 2)
        return liealg.combine([circle((-1, -1, 0, 0)), liealg.direct_sum(su2, su2)],
                              ["t", "su2"])

    add(RegistryEntry(
        name="example-qui", kind=VERDICT, group="T^1 x SU(2)",
        rep_desc="twisted diagonal on C^2 + C^2",
        citation="worked example: a curve of Lagrangian orbits",
        expected={"lagrangian": True, "orbit_dim": 4, "moduli_dim": 1,
                  "isolated": False, "ss_transitive": False},
        rep_builder=qui_group, space_kind=symcheck.LINEAR,
        point=np.array([1, 1, 1, -1], dtype=complex)))

    # ----- projective table rows -------------------------------------------
    for n in (3, 4, 5):
        add(_table_entry(f"su{n}-2lambda1", f"SU({n})", "2Lambda_1 (sym^2)",
                         (lambda n=n: sym("su", n, 2)), n * (n + 1) // 2 - 1,
                         table_row="su-2lambda1"))
    for n in (3, 4, 5):
        add(_table_entry(
            f"su{n}-lambda1-dual", f"SU({n})", "Lambda_1 + Lambda_1^*",
            (lambda n=n: rep_with_dual("su", n)), 2 * n - 1,
            table_row="su-lambda1-dual",
            point=pair_point(n, 0, n, 0),
            extra_expected={"isotropy_dim": n * n - 2 * n},
            notes=("isotropy dimension n^2 - 2n from the stabilizer su(n-1) of "
                   "(e_1, e_1^*); coincides with the cited so(n) label only at n = 3",)))
    for n in (2, 3):
        add(_table_entry(f"su{n}-nlambda1", f"SU({n})", f"{n} x Lambda_1",
                         (lambda n=n: copies("su", n, n)), n * n - 1,
                         table_row="su-nlambda1",
                         notes=("no explicit point on record; search only",)))
    for m in (6, 8):
        add(_table_entry(f"su{m}-lambda2", f"SU({m})", "Lambda_2",
                         (lambda m=m: ext("su", m, 2)), m * (m - 1) // 2 - 1,
                         table_row="su-even-lambda2",
                         notes=("legal for even ranks >= 6",)))
    for n in (2, 3):
        m = 2 * n + 1
        add(_table_entry(
            f"su{m}-lambda2-lambda1", f"SU({m})", "Lambda_2 + Lambda_1",
            (lambda m=m: ext2_plus_defining(m)), 2 * n * n + 3 * n,
            table_row="su-odd-lambda2-lambda1",
            point=su_odd_point(n),
            extra_expected={"isotropy_dim": n * (2 * n + 1)},
            notes=("module dimension (2n+1)(n+1) forces dim P(V) = 2n^2 + 3n; "
                   "the cited value 2n^2 + 3n + 1 is off by one (its isotropy "
                   "column sp(n) matches 2n^2 + 3n exactly)",)))
    add(_table_entry("su2-3lambda1", "SU(2)", "3Lambda_1 (sym^3)",
                     lambda: sym("su", 2, 3), 3, table_row="su2-3lambda1"))
    for m in (6, 7, 8):
        add(_table_entry(f"su{m}-lambda3", f"SU({m})", "Lambda_3",
                         (lambda m=m: ext("su", m, 3)),
                         {6: 19, 7: 34, 8: 55}[m], table_row=f"su{m}-lambda3"))
    for n in (2, 3):
        add(_table_entry(
            f"sp{n}-lambda1-lambda1", f"Sp({n})", "Lambda_1 + Lambda_1",
            (lambda n=n: doubled("sp", n)), 4 * n - 1,
            table_row="sp-lambda1-lambda1",
            point=pair_point(2 * n, 0, 2 * n, 1),
            extra_expected={"isotropy_dim": (n - 1) * (2 * n - 1)}))
    add(_table_entry("sp3-lambda3", "Sp(3)", "Lambda_3 (primitive)",
                     lambda: ext_primitive("sp", 3, 3), 13, table_row="sp3-lambda3"))
    for n in (3, 4, 5, 6):
        add(_table_entry(f"so{n}-lambda1", f"SO({n})", "Lambda_1",
                         (lambda n=n: classical("so", n)), n - 1,
                         table_row="so-lambda1",
                         point=unit(n, 0),
                         extra_expected={"isotropy_dim": (n - 1) * (n - 2) // 2,
                                         "isolated": True, "ss_transitive": True}))
    add(_table_entry("spin7-spin", "Spin(7)", "spin representation",
                     lambda: spin(7, "full"), 7, table_row="spin7-spin"))
    add(_table_entry("spin9-spin", "Spin(9)", "spin representation",
                     lambda: spin(9, "full"), 15, table_row="spin9-spin"))
    add(_table_entry("spin10-even-even", "Spin(10)", "Lambda_e + Lambda_e",
                     lambda: spin_doubled(10, "even"), 31,
                     table_row="spin10-even-even", point=spinor_pair_point()))
    add(_table_entry("spin11-spin", "Spin(11)", "spin representation",
                     lambda: spin(11, "full"), 31, table_row="spin11-spin",
                     search_params=SearchParams(starts=8, rng_seed=1), slow=True,
                     notes=("certification-only row with an explicit search budget",)))
    add(_table_entry("spin12-even", "Spin(12)", "Lambda_e",
                     lambda: spin(12, "even"), 31, table_row="spin12-even",
                     search_params=SearchParams(starts=8, rng_seed=1), slow=True,
                     notes=("certification-only row with an explicit search budget",)))
    add(_table_entry("spin14-even", "Spin(14)", "Lambda_e",
                     lambda: spin(14, "even"), 63, table_row="spin14-even",
                     search_params=SearchParams(starts=4, rng_seed=1), slow=True,
                     notes=("certification-only row with an explicit search budget",)))
    add(_table_entry("g2-7dim", "G2", "7-dimensional representation",
                     octonion_derivations, 6, table_row="g2-7dim"))
    for label, dim in (("e6-lambda1", 26), ("e7-lambda1", 55)):
        group = label[:2].upper()
        add(RegistryEntry(
            name=label, kind=UNSUPPORTED, group=group, rep_desc="Lambda_1",
            citation=_PAPER_TABLE, table_row=label,
            expected={"status": "unsupported"},
            notes=(f"{dim + 1}-dimensional exceptional module not constructed "
                   "by design",)))

    # ----- negative control -------------------------------------------------
    add(RegistryEntry(
        name="negative-su2-cp1", kind=SEARCH, group="SU(2)", rep_desc="Lambda_1",
        citation="negative control: transitive action on CP^1",
        expected={"status": "exhausted", "lagrangian": False},
        rep_builder=lambda: classical("su", 2), space_kind=symcheck.PROJECTIVE,
        search_params=SearchParams(starts=64, rng_seed=1),
        notes=("the squared semisimple moment is constant 1/8 on CP^1",)))

    # ----- worked example: K-orbit on CP^4 and its blow-up ------------------
    add(RegistryEntry(
        name="exlag-cp4-orbit", kind=VERDICT, group="T^1 x U(2)",
        rep_desc="[t z0, A t^-4 z, A t^-4 w] on CP^4",
        citation="worked example: blow-up of CP^4",
        expected={"lagrangian": True, "orbit_dim": 4},
        rep_builder=blown_cp4_group, space_kind=symcheck.PROJECTIVE,
        point=np.array([1, 1, 1, 1, -1], dtype=complex)))
    add(_cut_entry(
        "exlag-cp4-blowup", "T^1 x U(2)", "[t z0, A t^-4 z, A t^-4 w]",
        blown_cp4_group, (-1, 0, 0, 0, 0),
        np.array([1, 1, 1, 1, -1], dtype=complex),
        "K[p] Lagrangian in CP^4 blown up at [1,0,0,0,0]",
        {"upstairs_orbit_dim": 6, "upstairs_lagrangian": True, "claimed": True,
         "base_orbit_dim": 4, "base_lagrangian": True}))
    add(_cut_entry(
        "cut-torus-cp2", "T^2", "coordinate torus on CP^2",
        torus_on_cp2, (-1, 0, 0), np.ones(3, dtype=complex),
        "T^2 orbit Lagrangian in CP^2 blown up at [1,0,0]",
        {"upstairs_orbit_dim": 4, "upstairs_lagrangian": True, "claimed": True}))

    # ----- blow-up rows ------------------------------------------------------
    for n in (2, 3):
        add(_cut_entry(
            f"blowup-su{n}-lambda1-dual", f"SU({n})", "Lambda_1 + Lambda_1^*",
            (lambda n=n: rep_with_dual("su", n)),
            tuple([-1] * n + [0] * n), pair_point(n, 0, n, 0),
            f"SU({n}) orbit Lagrangian in P(C^{n} + C^{n}*) blown up along the "
            "first-summand locus",
            {"upstairs_orbit_dim": 2 * n + 1, "upstairs_lagrangian": True,
             "claimed": True, "base_orbit_dim": 2 * n - 1, "base_lagrangian": True},
            notes=("pairs the explicit projective point with the derived line "
                   "coordinate; the source states the blow-up center only",)))
    add(_cut_entry(
        "blowup-su5-lambda2-lambda1", "SU(5)", "Lambda_2 + Lambda_1",
        lambda: ext2_plus_defining(5), tuple([0] * 10 + [-1] * 5), su_odd_point(2),
        "SU(5) orbit Lagrangian in P(ext^2 C^5 + C^5) blown up along the "
        "second-summand locus",
        {"upstairs_orbit_dim": 16, "upstairs_lagrangian": True, "claimed": True,
         "base_orbit_dim": 14, "base_lagrangian": True},
        notes=("pairs the explicit projective point with the derived line "
               "coordinate; the source states the blow-up center only",)))
    add(_cut_entry(
        "blowup-sp2-lambda1-lambda1", "Sp(2)", "Lambda_1 + Lambda_1",
        lambda: doubled("sp", 2), tuple([-1] * 4 + [0] * 4),
        pair_point(4, 0, 4, 1),
        "Sp(2) orbit Lagrangian in P(C^4 + C^4) blown up along the "
        "first-summand locus",
        {"upstairs_orbit_dim": 9, "upstairs_lagrangian": True, "claimed": True,
         "base_orbit_dim": 7, "base_lagrangian": True},
        notes=("pairs the explicit projective point with the derived line "
               "coordinate; the source states the blow-up center only",)))
    add(_cut_entry(
        "blowup-spin10", "Spin(10)", "Lambda_e + Lambda_e",
        lambda: spin_doubled(10, "even"), tuple([-1] * 16 + [0] * 16),
        spinor_pair_point(),
        "Spin(10) orbit Lagrangian in P(C^16 + C^16) blown up along the "
        "first-summand locus",
        {"upstairs_orbit_dim": 33, "upstairs_lagrangian": True, "claimed": True,
         "base_orbit_dim": 31, "base_lagrangian": True},
        notes=("pairs the explicit projective point with the derived line "
               "coordinate; the source states the blow-up center only",)))

    # ----- circle reductions (projective space as a reduced space) ----------
    add(_reduction_entry(
        "hopf-so4-lambda1", "SO(4)", "Lambda_1 on C^4",
        lambda: classical("so", 4), (-1, -1, -1, -1), 0.5, unit(4, 0),
        "SO(4)[e_1] Lagrangian in CP^3",
        {"upstairs_orbit_dim": 4, "upstairs_lagrangian": True, "claimed": True}))
    add(_reduction_entry(
        "hopf-su3-lambda1-dual", "SU(3)", "Lambda_1 + Lambda_1^* on C^6",
        lambda: rep_with_dual("su", 3), tuple([-1] * 6), 0.5,
        pair_point(3, 0, 3, 0) / np.sqrt(2),
        "SU(3)[(e_1, e_1^*)] Lagrangian in CP^5",
        {"upstairs_orbit_dim": 6, "upstairs_lagrangian": True, "claimed": True}))

    # ----- weighted projective scenarios ------------------------------------
    for n in (2, 3):
        for (k, s) in ((1, 2), (2, 3)):
            add(_weighted_entry(
                f"wp-su{n}-lambda1-dual-k{k}s{s}", f"SU({n})",
                "Lambda_1 + Lambda_1^*", (lambda n=n: rep_with_dual("su", n)),
                (n, n), pair_point(n, 0, n, 0), k, s, 2 * n))
    for n in (2, 3):
        m = 2 * n + 1
        d1 = m * (m - 1) // 2
        for (k, s) in ((1, 2), (2, 3)):
            add(_weighted_entry(
                f"wp-su{m}-lambda2-lambda1-k{k}s{s}", f"SU({m})",
                "Lambda_2 + Lambda_1", (lambda m=m: ext2_plus_defining(m)),
                (d1, m), su_odd_point(n), k, s, 2 * n * n + 3 * n + 1,
                notes=("upstairs dimension (2n+1)(n+1) = 2n^2 + 3n + 1 is the "
                       "half-dimension of the module; the source prints "
                       "2n^2 + 3n + 2",)))
    for n in (2, 3):
        for (k, s) in ((1, 2), (2, 3)):
            add(_weighted_entry(
                f"wp-sp{n}-lambda1-lambda1-k{k}s{s}", f"Sp({n})",
                "Lambda_1 + Lambda_1", (lambda n=n: doubled("sp", n)),
                (2 * n, 2 * n), pair_point(2 * n, 0, 2 * n, 1), k, s, 4 * n))
    add(_weighted_entry(
        "spin10-weighted", "Spin(10)", "Lambda_e + Lambda_e",
        lambda: spin_doubled(10, "even"), (16, 16), spinor_pair_point(), 1, 2, 32))
    add(_weighted_entry(
        "spin10-weighted-k2s3", "Spin(10)", "Lambda_e + Lambda_e",
        lambda: spin_doubled(10, "even"), (16, 16), spinor_pair_point(), 2, 3, 32))

    # ----- fixed-point slice scenarios (items 2..9) --------------------------
    for n in (3, 4):
        add(_slice_entry(
            f"slice-so2-so{n}", f"SO(2) x SO({n})", f"C^{n} with Lambda_1 and phase",
            f"SO({n + 2})/(SO(2) x SO({n}))", f"so2-so{n}",
            point=unit(n, 0), item="2"))
    add(_slice_entry(
        "slice-u1-u1-cp1", "S(U(1) x U(1))", "C with a phase weight",
        "CP^1", "u1-cp1", point=np.array([1.0], dtype=complex), item="3",
        notes=("instantiated at n = 1, the only parameter where the slice "
               "criterion applies; see the anomaly entry for n >= 2",)))
    add(_slice_entry(
        "slice-u1-su3-cp3-anomaly", "S(U(1) x U(3))", "C^3 with Lambda_1 and phase",
        "CP^3", "u1-su3", point=unit(3, 0), supported=False, item="3",
        notes=("the source claims a Lagrangian orbit, but the slice orbits are "
               "(2n-1)-spheres in C^n, never half-dimensional for n >= 2; "
               "recorded as a documented anomaly, not a toolkit failure",)))
    add(_slice_entry(
        "slice-sp2-center", "Z x Sp(2)", "C^4 + C^4 diagonal with central phase",
        "SU(6)/S(U(2) x U(4))", "sp2-center",
        point=pair_point(4, 0, 4, 1) / np.sqrt(2), item="4",
        notes=("central weights scaled to the integer circle with the same "
               "orbits",)))
    add(_slice_entry(
        "slice-u4-ext2", "U(4)", "ext^2 C^4",
        "SU(8)/U(4)", "u4-ext2",
        point=standard_symplectic_bivector(2) / np.sqrt(2), item="5"))
    add(_slice_entry(
        "slice-u5-ext2-def", "U(5)", "ext^2 C^5 + C^5 with weights (2, 1)",
        "SU(12)/U(6)", "u5-ext2-def",
        point=su_odd_point(2) / np.sqrt(3), item="6"))
    for n in (2, 3):
        add(_slice_entry(
            f"slice-u{n}-sym2", f"U({n})", f"sym^2 C^{n}",
            f"Sp({n})/U({n})", f"u{n}-sym2",
            point=identity_quadric_point(n) / np.sqrt(n), item="7"))
    add(RegistryEntry(
        name="slice-e6-t1", kind=UNSUPPORTED, group="T^1 x E6",
        rep_desc="C^27 with Lambda_1 of E6",
        citation=f"{_SECTION_SLICE}, item 8",
        expected={"status": "unsupported"},
        notes=("27-dimensional exceptional module not constructed by design",)))
    add(_slice_entry(
        "slice-spin9-t1", "T^1 x Spin(9)", "C^16 spin representation",
        "E6/(T^1 x Spin(10))", "spin9-t1", point=None,
        search_params=SearchParams(starts=8, rng_seed=1), item="9"))

    return entries


_ENTRIES: list[RegistryEntry] | None = None


def all_entries() -> list[RegistryEntry]:
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _build_entries()
    return list(_ENTRIES)


def get(name: str) -> RegistryEntry:
    for entry in all_entries():
        if entry.name == name:
            return entry
    raise KeyError(f"no registry entry named {name!r}")


def names(pattern: str | None = None) -> list[str]:
    out = []
    for entry in all_entries():
        if pattern is None or fnmatch.fnmatch(entry.name, pattern) \
                or fnmatch.fnmatch(entry.name, pattern + "*"):
            out.append(entry.name)
    return out


def table_rows() -> dict[str, list[str]]:
    """Map final-table row ids to the registry entries instantiating them."""
    rows: dict[str, list[str]] = {}
    for entry in all_entries():
        if entry.table_row:
            rows.setdefault(entry.table_row, []).append(entry.name)
    return rows


# the complete projective table, one row id per printed row
EXPECTED_TABLE_ROWS = (
    "su-2lambda1", "su-lambda1-dual", "su-nlambda1", "su-even-lambda2",
    "su-odd-lambda2-lambda1", "su2-3lambda1", "su6-lambda3", "su7-lambda3",
    "su8-lambda3", "sp-lambda1-lambda1", "sp3-lambda3", "so-lambda1",
    "spin7-spin", "spin9-spin", "spin10-even-even", "spin11-spin",
    "spin12-even", "spin14-even", "e6-lambda1", "e7-lambda1", "g2-7dim",
)
