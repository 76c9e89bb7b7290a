"""Declarative scenario files and the representation-expression grammar.

A scenario file is line-oriented key = value under section headers::

    # T^1 x SU(2) on C^2 + C^2
    [scenario]
    name = example-qui
    space = linear              # linear | projective | product-with-line

    [factor]
    family = u1                 # su | so | sp | u1 | spin | g2
    weights = -1 -1 0 0         # u1 only: one integer per coordinate

    [factor]
    family = su
    n = 2
    rep = defining + defining

    [point]
    coords = 1 1 1 -1           # complex literals: 2, -1.5, 1+2i, -i, 3j

    [expected]
    lagrangian = true
    orbit_dim = 4
    moduli_dim = 1

    [search]                    # optional; point absent means search
    starts = 32
    seed = 1

Representation expressions combine per-family leaves with ``+`` (direct
sum), ``*`` (tensor), ``dual(e)``, ``ext(e, k)``, ``sym(e, k)``,
``primext(e, k)`` (primitive part of an exterior power w.r.t. the invariant
symplectic form) and ``trivial(k)`` summands.  Leaves: ``defining`` for
su/so/sp, ``spin``/``even``/``odd`` for spin factors, ``seven`` for the
exceptional 14-dimensional algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from . import liealg
from .kirwan import SearchParams
from .symcheck import LINEAR, PRODUCT_WITH_LINE, PROJECTIVE, PhaseSpace
from .tolerances import DEFAULT, Tolerances

_FAMILIES = ("su", "so", "sp", "u1", "spin", "g2")
_EXPECTED_KEYS = {
    "lagrangian": bool,
    "orbit_dim": int,
    "isotropy_dim": int,
    "moduli_dim": int,
    "dim_p": int,
    "isolated": bool,
    "ss_transitive": bool,
    "status": str,
    "citation": str,
}


class ScenarioParseError(ValueError):
    """Carries a list of (line, column, message) triples."""

    def __init__(self, errors):
        self.errors = list(errors)
        summary = "; ".join(f"line {ln}, col {col}: {msg}" for ln, col, msg in self.errors)
        super().__init__(f"scenario parse failed: {summary}")


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    if t[-1] in "ij":
        body = t[:-1]
        split = None
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "eE":
                split = pos
                break
        if split is None:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            imag = 1.0
        elif im_part == "-":
            imag = -1.0
        else:
            imag = float(im_part)
        real = float(re_part) if re_part else 0.0
        return complex(real, imag)
    return complex(float(t), 0.0)


# ---------------------------------------------------------------------------
# representation expressions
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<sym>[+*(),]))")


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"bad character at column {pos + 1} in {text!r}")
                break
            pos = m.end()
            if m.lastgroup:
                self.tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None:
            raise ValueError(f"unexpected end of expression {self.text!r}")
        if kind and tok[0] != kind or value and tok[1] != value:
            raise ValueError(f"unexpected token {tok[1]!r} at column {tok[2] + 1}")
        self.i += 1
        return tok

    def parse(self):
        node = self.parse_sum()
        if self.peek()[0] is not None:
            tok = self.peek()
            raise ValueError(f"trailing token {tok[1]!r} at column {tok[2] + 1}")
        return node

    def parse_sum(self):
        terms = [self.parse_product()]
        while self.peek()[:2] == ("sym", "+"):
            self.take()
            terms.append(self.parse_product())
        return ("sum", terms) if len(terms) > 1 else terms[0]

    def parse_product(self):
        factors = [self.parse_atom()]
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            factors.append(self.parse_atom())
        return ("tensor", factors) if len(factors) > 1 else factors[0]

    def parse_atom(self):
        kind, value, col = self.peek()
        if kind == "sym" and value == "(":
            self.take()
            node = self.parse_sum()
            self.take("sym", ")")
            return node
        if kind != "ident":
            raise ValueError(f"expected a representation term at column {col + 1}")
        self.take()
        if value in ("dual", "ext", "sym", "primext", "trivial"):
            self.take("sym", "(")
            if value == "trivial":
                k = int(self.take("int")[1])
                self.take("sym", ")")
                return ("trivial", k)
            if value == "dual":
                inner = self.parse_sum()
                self.take("sym", ")")
                return ("dual", inner)
            inner = self.parse_sum()
            self.take("sym", ",")
            k = int(self.take("int")[1])
            self.take("sym", ")")
            return (value, inner, k)
        return ("leaf", value)


def parse_rep_expr(text: str):
    """Parse a representation expression into its syntax tree."""
    return _ExprParser(text).parse()


def eval_rep_expr(node, family: str, n: int | None,
                  tol: Tolerances = DEFAULT) -> liealg.MatrixRep:
    """Evaluate an expression tree for one group factor."""

    def ev(nd):
        kind = nd[0]
        if kind == "leaf":
            name = nd[1]
            if name == "defining" and family in ("su", "so", "sp"):
                return liealg.build_classical(family, n, tol=tol)
            if family == "spin" and name in ("spin", "even", "odd"):
                return liealg.build_spin(n, "full" if name == "spin" else name, tol)
            if family == "g2" and name == "seven":
                return liealg.build_g2(tol)
            raise ValueError(f"leaf {name!r} not valid for family {family!r}")
        if kind == "trivial":
            raise ValueError("trivial(k) is only meaningful as a direct summand")
        if kind == "dual":
            return liealg.dual_rep(ev(nd[1]), tol)
        if kind == "sum":
            reps, trivial_dims = [], []
            for pos, child in enumerate(nd[1]):
                if child[0] == "trivial":
                    trivial_dims.append((pos, child[1]))
                else:
                    reps.append(ev(child))
            if not reps:
                raise ValueError("a direct sum needs at least one nontrivial summand")
            return liealg.direct_sum(*reps, tol=tol, trivial_dims=trivial_dims)
        if kind == "tensor":
            reps = [ev(child) for child in nd[1]]
            out = reps[0]
            for r in reps[1:]:
                out = liealg.tensor_rep(out, r, tol)
            return out
        if kind == "ext":
            return liealg.exterior_power(ev(nd[1]), nd[2], tol)
        if kind == "sym":
            return liealg.symmetric_power(ev(nd[1]), nd[2], tol)
        if kind == "primext":
            return liealg.primitive_exterior_power(ev(nd[1]), nd[2], tol)
        raise ValueError(f"unknown expression node {kind!r}")

    return ev(node)


# ---------------------------------------------------------------------------
# scenario files
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorSpec:
    family: str
    n: int | None = None
    weights: tuple[int, ...] | None = None
    rep: str | None = None  # expression source; default "defining"

    def build(self, tol: Tolerances = DEFAULT) -> liealg.MatrixRep:
        if self.family == "u1":
            return liealg.build_classical("u1", 1, weights=list(self.weights), tol=tol)
        default = {"spin": "spin", "g2": "seven"}.get(self.family, "defining")
        tree = parse_rep_expr(self.rep or default)
        return eval_rep_expr(tree, self.family, self.n, tol)


@dataclass(frozen=True)
class Scenario:
    """Declarative unit of CLI work: group factors, module, point, expectations."""

    name: str
    space_kind: str
    factors: tuple[FactorSpec, ...]
    point: np.ndarray | None = None
    expected: dict = field(default_factory=dict)
    search: SearchParams | None = None

    def build_rep(self, tol: Tolerances = DEFAULT) -> liealg.MatrixRep:
        reps = [f.build(tol) for f in self.factors]
        if len(reps) == 1:
            return reps[0]
        return liealg.combine(reps, [f"f{i + 1}" for i in range(len(reps))], tol)

    def build_space(self, tol: Tolerances = DEFAULT) -> PhaseSpace:
        dim = self.build_rep(tol).dim_v
        if self.space_kind == PRODUCT_WITH_LINE:
            dim -= 1
        return PhaseSpace(self.space_kind, dim)


def _parse_sections(text: str):
    """Split the file into (section_name, line, [(line, key, value), ...])."""
    sections = []
    errors = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                errors.append((lineno, len(line), "unterminated section header"))
                continue
            current = (stripped[1:-1].strip().lower(), lineno, [])
            sections.append(current)
            continue
        if "=" not in stripped:
            errors.append((lineno, 1, f"expected key = value, got {stripped!r}"))
            continue
        if current is None:
            errors.append((lineno, 1, "key/value before any section header"))
            continue
        key, _, value = stripped.partition("=")
        current[2].append((lineno, key.strip().lower(), value.strip()))
    return sections, errors


def parse_scenario(data: bytes | str, tol: Tolerances = DEFAULT) -> Scenario:
    """Parse and fully validate a scenario file.

    Raises :class:`ScenarioParseError` with positioned messages on syntax
    errors, unknown families, malformed complex literals, or a point of the
    wrong length (the message names the expected module dimension).
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    sections, errors = _parse_sections(data)
    if not sections and not errors:
        raise ScenarioParseError([(1, 1, "empty scenario file")])

    name = None
    space_kind = None
    factors: list[FactorSpec] = []
    point = None
    point_line = 1
    expected: dict = {}
    search_kv: dict = {}

    for sec_name, sec_line, items in sections:
        if sec_name == "scenario":
            for ln, key, value in items:
                if key == "name":
                    name = value
                elif key == "space":
                    if value not in (LINEAR, PROJECTIVE, PRODUCT_WITH_LINE):
                        errors.append((ln, 1, f"unknown space kind {value!r}"))
                    else:
                        space_kind = value
                else:
                    errors.append((ln, 1, f"unknown scenario key {key!r}"))
        elif sec_name == "factor":
            kv = {}
            for ln, key, value in items:
                kv[key] = (ln, value)
            family = kv.get("family", (sec_line, ""))[1]
            if family not in _FAMILIES:
                errors.append((kv.get("family", (sec_line, ""))[0], 1,
                               f"unknown family {family!r}"))
                continue
            n = None
            weights = None
            rep = kv.get("rep", (0, None))[1]
            if "n" in kv:
                try:
                    n = int(kv["n"][1])
                except ValueError:
                    errors.append((kv["n"][0], 1, f"bad integer {kv['n'][1]!r}"))
            if "weights" in kv:
                ln, value = kv["weights"]
                try:
                    weights = tuple(int(w) for w in value.split())
                except ValueError:
                    errors.append((ln, 1, f"bad weight list {value!r}"))
            if family == "u1" and not weights:
                errors.append((sec_line, 1, "u1 factor requires weights"))
                continue
            factors.append(FactorSpec(family, n, weights, rep))
        elif sec_name == "point":
            for ln, key, value in items:
                if key != "coords":
                    errors.append((ln, 1, f"unknown point key {key!r}"))
                    continue
                point_line = ln
                coords = []
                for col, token in _tokens_with_columns(value):
                    try:
                        coords.append(parse_complex(token))
                    except ValueError:
                        errors.append((ln, col, f"malformed complex literal {token!r}"))
                point = np.asarray(coords, dtype=complex)
        elif sec_name == "expected":
            for ln, key, value in items:
                if key not in _EXPECTED_KEYS:
                    errors.append((ln, 1, f"unknown expected key {key!r}"))
                    continue
                caster = _EXPECTED_KEYS[key]
                try:
                    if caster is bool:
                        if value.lower() not in ("true", "false"):
                            raise ValueError
                        expected[key] = value.lower() == "true"
                    else:
                        expected[key] = caster(value)
                except ValueError:
                    errors.append((ln, 1, f"bad {key} value {value!r}"))
        elif sec_name == "search":
            mapping = {"starts": "starts", "seed": "rng_seed", "max_iters": "max_iters",
                       "grad_tol": "grad_tol", "f_tol": "f_tol"}
            for ln, key, value in items:
                if key not in mapping:
                    errors.append((ln, 1, f"unknown search key {key!r}"))
                    continue
                try:
                    search_kv[mapping[key]] = (
                        float(value) if key in ("grad_tol", "f_tol") else int(value))
                except ValueError:
                    errors.append((ln, 1, f"bad search value {value!r}"))
        else:
            errors.append((sec_line, 1, f"unknown section [{sec_name}]"))

    if name is None:
        errors.append((1, 1, "missing scenario name"))
    if space_kind is None:
        errors.append((1, 1, "missing space kind"))
    if not factors:
        errors.append((1, 1, "no group factors given"))

    scenario = None
    if not errors:
        scenario = Scenario(name=name, space_kind=space_kind, factors=tuple(factors),
                            point=point, expected=expected,
                            search=SearchParams(**search_kv) if search_kv else None)
        try:
            rep = scenario.build_rep(tol)
        except Exception as exc:
            errors.append((1, 1, f"factor construction failed: {exc}"))
        else:
            expect_len = rep.dim_v
            if point is not None and len(point) != expect_len:
                errors.append((point_line, 1,
                               f"point has {len(point)} coordinates, module dimension "
                               f"is {expect_len}"))
    if errors:
        raise ScenarioParseError(sorted(errors))
    return scenario


def _tokens_with_columns(value: str):
    col = 0
    for token in value.split():
        col = value.index(token, col)
        yield col + 1, token
        col += len(token)
