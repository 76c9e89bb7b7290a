"""Matrix representations of compact Lie algebras.

A :class:`MatrixRep` presents a compact Lie algebra by an ordered family of
skew-hermitian matrices acting on C^dimV, together with derived data that the
rest of the toolkit consumes:

* structure constants  [X_a, X_b] = sum_k c[a,b,k] X_k,
* the invariant inner product  B(X, Y) = -Re tr(rho(X) rho(Y)),
* B-orthonormal coefficient bases for the center z(g) and the derived
  subalgebra [g, g]  (the reductive split g = z(g) + [g, g]).

Constructors cover the classical families su(n) / so(n) / sp(n), circle
factors with integer coordinate weights, spin representations of so(m) for
m = 7..14 built from a Clifford action on the exterior algebra of a maximal
isotropic subspace, and the 7-dimensional representation of the compact
exceptional algebra obtained as the derivation algebra of the octonions.
Induced constructions (dual, direct sum, tensor, exterior/symmetric powers)
operate on any representation.

Conventions fixed here and relied on elsewhere:

* su(n) basis: i(E_jj - E_{j+1,j+1}), then per pair j<k the real unit
  E_jk - E_kj and the imaginary unit i(E_jk + E_kj);
* so(n) basis: E_jk - E_kj (complexified);
* sp(n) sits in u(2n) with the *interleaved* quaternionic structure: the
  coordinate pairs (2j-1, 2j) span the j-th quaternionic line, so e_1, e_2
  form a quaternionic pair;
* exterior/symmetric power bases are ordered lexicographically by index
  tuples; symmetric monomials are orthonormalized;
* spin modules use subset monomials of the isotropic Fock space, ordered
  lexicographically, with generators (1/2) gamma_a gamma_b.

All values are immutable after construction and all operations are pure, so
concurrent use from multiple threads needs no synchronization.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .linalg import (
    intersection_dim,
    null_space,
    numerical_rank,
    orthonormalize_rows,
    row_space,
)
from .tolerances import DEFAULT, Tolerances

CLASSICAL_FAMILIES = ("su", "so", "sp", "u1")


class RepresentationError(ValueError):
    """Raised when a construction does not yield a valid compact representation."""


@dataclass(frozen=True)
class MatrixRep:
    """A compact Lie algebra given by skew-hermitian basis matrices on C^dimV."""

    mats: np.ndarray  # (dim_g, dim_v, dim_v) complex128
    labels: tuple[str, ...]
    struct: np.ndarray  # (dim_g, dim_g, dim_g) real
    gram: np.ndarray  # (dim_g, dim_g) real symmetric PSD
    center: np.ndarray  # (dim_z, dim_g) B-orthonormal coefficient rows
    derived: np.ndarray  # (dim_ss, dim_g) B-orthonormal coefficient rows
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def dim_g(self) -> int:
        return self.mats.shape[0]

    @property
    def dim_v(self) -> int:
        return self.mats.shape[1]

    @property
    def faithful(self) -> bool:
        return not any("non-faithful" in n for n in self.notes)

    def matrix_of(self, coeffs: np.ndarray) -> np.ndarray:
        """Matrix of the algebra element with the given basis coefficients."""
        return np.einsum("a,aij->ij", np.asarray(coeffs, dtype=float), self.mats)

    def derived_mats(self) -> np.ndarray:
        """Matrices of the B-orthonormal derived-subalgebra basis."""
        return np.einsum("sa,aij->sij", self.derived, self.mats)

    def with_labels(self, labels) -> "MatrixRep":
        return replace(self, labels=tuple(labels))


def _center_derived(struct, gram, tol: Tolerances):
    g = struct.shape[0]
    if g == 0:
        empty = np.zeros((0, 0))
        return empty, empty
    faithful = numerical_rank(gram, tol) == g
    metric = gram if faithful else None
    # center: coefficient vectors c with sum_b c_b [X_b, X_a] = 0 for all a
    commute_map = struct.transpose(1, 2, 0).reshape(g * g, g)
    center = null_space(commute_map, tol)
    # derived: span of all bracket coefficient vectors
    derived = row_space(struct.reshape(g * g, g), tol)
    center = orthonormalize_rows(center, metric, tol)
    derived = orthonormalize_rows(derived, metric, tol)
    return center, derived


def _structure_constants(mats, gram, tol: Tolerances):
    g, n, _ = mats.shape
    if g == 0:
        return np.zeros((0, 0, 0)), 0.0
    gram_inv = np.linalg.pinv(gram)
    norms = np.array([np.linalg.norm(m) for m in mats])
    flat = mats.reshape(g, n * n)
    flat_t = np.ascontiguousarray(np.swapaxes(mats, 1, 2).reshape(g, n * n))
    struct = np.empty((g, g, g))
    worst = 0.0
    for a in range(g):
        brackets = (mats[a] @ mats - mats @ mats[a]).reshape(g, n * n)
        # r[b, k] = -Re tr(X_k @ brackets[b]) = -Re <brackets[b], X_k^T>
        r = -np.real(brackets @ flat_t.T)
        coeffs = r @ gram_inv.T
        res = np.linalg.norm(brackets - coeffs @ flat, axis=1)
        scale = np.maximum(1.0, norms[a] * norms)
        worst = max(worst, float(np.max(res / scale)))
        struct[a] = coeffs
    return struct, worst


def make_rep(mats, labels, tol: Tolerances = DEFAULT, notes=()) -> MatrixRep:
    """Validate basis matrices and derive the representation data.

    Checks skew-hermitianity and bracket closure, computes structure
    constants, the invariant gram matrix, and the center/derived split.
    A rank-deficient gram matrix (non-faithful presentation) is flagged in
    the notes and the split falls back to euclidean orthonormalization.
    """
    mats = np.ascontiguousarray(np.asarray(mats, dtype=complex))
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise RepresentationError("expected a (dim_g, dim_v, dim_v) matrix family")
    labels = tuple(labels)
    if len(labels) != mats.shape[0]:
        raise RepresentationError("one label per basis matrix required")
    notes = list(notes)

    skew = mats + np.conj(np.swapaxes(mats, 1, 2))
    worst_skew = float(np.max(np.linalg.norm(skew.reshape(len(mats), -1), axis=1))) if len(mats) else 0.0
    if worst_skew > tol.skew:
        raise RepresentationError(f"basis matrix not skew-hermitian (residual {worst_skew:.2e})")

    gram = -np.real(np.einsum("aij,bji->ab", mats, mats))
    gram = 0.5 * (gram + gram.T)
    struct, closure = _structure_constants(mats, gram, tol)
    if closure > tol.bracket:
        raise RepresentationError(f"bracket closure failed (residual {closure:.2e})")
    # enforce exact antisymmetry in the leading index pair
    struct = 0.5 * (struct - struct.transpose(1, 0, 2))

    g = mats.shape[0]
    if g and numerical_rank(gram, tol) < g:
        notes.append("non-faithful presentation: gram matrix is singular; "
                     "center/derived computed in the image algebra")
    center, derived = _center_derived(struct, gram, tol)
    if g and len(center) + len(derived) != g and "non-faithful" not in " ".join(notes):
        raise RepresentationError(
            f"reductive split failed: dim z = {len(center)}, dim [g,g] = {len(derived)}, dim g = {g}")
    if intersection_dim(center, derived, tol) != 0:
        raise RepresentationError("center and derived subalgebra overlap")
    return MatrixRep(mats=mats, labels=labels, struct=struct, gram=gram,
                     center=center, derived=derived, notes=tuple(notes))


def center_and_derived(rep: MatrixRep, tol: Tolerances = DEFAULT):
    """Recompute (center basis, derived basis) as B-orthonormal coefficient rows."""
    return _center_derived(rep.struct, rep.gram, tol)


# ---------------------------------------------------------------------------
# classical families
# ---------------------------------------------------------------------------

def _unit(n, j, k, val=1.0):
    m = np.zeros((n, n), dtype=complex)
    m[j, k] = val
    return m


def _su_basis(n):
    mats, labels = [], []
    for j in range(n - 1):
        d = np.zeros((n, n), dtype=complex)
        d[j, j] = 1j
        d[j + 1, j + 1] = -1j
        mats.append(d)
        labels.append(f"h{j + 1}")
    for j in range(n):
        for k in range(j + 1, n):
            mats.append(_unit(n, j, k) - _unit(n, k, j))
            labels.append(f"a{j + 1}{k + 1}")
            mats.append(1j * (_unit(n, j, k) + _unit(n, k, j)))
            labels.append(f"s{j + 1}{k + 1}")
    return mats, labels


def _so_basis(n):
    mats, labels = [], []
    for j in range(n):
        for k in range(j + 1, n):
            mats.append(_unit(n, j, k) - _unit(n, k, j))
            labels.append(f"r{j + 1}{k + 1}")
    return mats, labels


def _sp_basis(n):
    """Compact sp(n) in u(2n), interleaved quaternionic coordinate pairs."""
    # split convention first: X = [[A, B], [-conj(B), conj(A)]],
    # A skew-hermitian, B complex symmetric
    a_units, a_labels = [], []
    for j in range(n):
        a_units.append(1j * _unit(n, j, j))
        a_labels.append(f"u{j + 1}")
    for j in range(n):
        for k in range(j + 1, n):
            a_units.append(_unit(n, j, k) - _unit(n, k, j))
            a_labels.append(f"a{j + 1}{k + 1}")
            a_units.append(1j * (_unit(n, j, k) + _unit(n, k, j)))
            a_labels.append(f"s{j + 1}{k + 1}")
    b_units, b_labels = [], []
    for j in range(n):
        for k in range(j, n):
            sym = _unit(n, j, k) + _unit(n, k, j) if j != k else _unit(n, j, j)
            b_units.append(sym)
            b_labels.append(f"b{j + 1}{k + 1}")
            b_units.append(1j * sym)
            b_labels.append(f"c{j + 1}{k + 1}")

    mats, labels = [], []
    for a, lab in zip(a_units, a_labels):
        x = np.zeros((2 * n, 2 * n), dtype=complex)
        x[:n, :n] = a
        x[n:, n:] = np.conj(a)
        mats.append(x)
        labels.append(lab)
    for b, lab in zip(b_units, b_labels):
        x = np.zeros((2 * n, 2 * n), dtype=complex)
        x[:n, n:] = b
        x[n:, :n] = -np.conj(b)
        mats.append(x)
        labels.append(lab)

    # interleave: split coordinate j -> 2j, n + j -> 2j + 1
    perm = np.zeros((2 * n, 2 * n))
    for j in range(n):
        perm[2 * j, j] = 1.0
        perm[2 * j + 1, n + j] = 1.0
    mats = [perm @ x @ perm.T for x in mats]
    return mats, labels


def build_classical(family: str, n: int, weights=None,
                    tol: Tolerances = DEFAULT) -> MatrixRep:
    """Defining representation of su(n)/so(n)/sp(n), or a weighted circle.

    For ``u1`` the single generator is i*diag(weights) acting on C^len(weights).
    """
    if family not in CLASSICAL_FAMILIES:
        raise RepresentationError(f"unsupported family {family!r}")
    if family == "u1":
        if not weights:
            raise RepresentationError("u1 factor requires a nonempty weight list")
        w = np.asarray(weights, dtype=float)
        if np.all(w == 0):
            raise RepresentationError("u1 weights must not all vanish")
        return make_rep([1j * np.diag(w).astype(complex)], ["t"], tol)
    if weights is not None:
        raise RepresentationError("weights only apply to u1 factors")
    if n < 1 or (family == "so" and n < 2):
        raise RepresentationError(f"{family}({n}) is too small")
    if family == "su":
        mats, labels = _su_basis(n)
    elif family == "so":
        mats, labels = _so_basis(n)
    else:
        mats, labels = _sp_basis(n)
    return make_rep(mats, labels, tol)


# ---------------------------------------------------------------------------
# spin representations
# ---------------------------------------------------------------------------

def _subset_sign(subset, j):
    """Sign of moving e_j across the leading elements of a sorted subset."""
    return -1.0 if sum(1 for s in subset if s < j) % 2 else 1.0


def build_spin(m: int, chirality: str = "full", tol: Tolerances = DEFAULT) -> MatrixRep:
    """Spin representation of so(m) via Clifford action on a Fock space.

    C^m splits into isotropic W + W* with dim W = floor(m/2); hermitian gamma
    matrices act on the exterior algebra of W by creation/annihilation, and
    the generators are (1/2) gamma_a gamma_b for a < b.  ``chirality`` picks
    the full module (dimension 2^floor(m/2)) or, for even m, one of the
    half-spin summands (dimension 2^(m/2 - 1)).
    """
    if not 7 <= m <= 14:
        raise RepresentationError(f"spin module size {m} outside the supported range 7..14")
    if chirality not in ("full", "even", "odd"):
        raise RepresentationError(f"unknown chirality {chirality!r}")
    if chirality != "full" and m % 2:
        raise RepresentationError("half-spin modules exist only for even m")

    k = m // 2
    subsets = sorted(itertools.chain.from_iterable(
        itertools.combinations(range(k), r) for r in range(k + 1)))
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)

    create = [np.zeros((dim, dim), dtype=complex) for _ in range(k)]
    annihilate = [np.zeros((dim, dim), dtype=complex) for _ in range(k)]
    for s in subsets:
        col = index[s]
        for j in range(k):
            if j not in s:
                t = tuple(sorted(s + (j,)))
                create[j][index[t], col] = _subset_sign(s, j)
            else:
                t = tuple(x for x in s if x != j)
                annihilate[j][index[t], col] = _subset_sign(s, j)

    gammas = []
    for j in range(k):
        gammas.append(annihilate[j] + create[j])
        gammas.append(1j * (annihilate[j] - create[j]))
    if m % 2:
        prod = np.eye(dim, dtype=complex)
        for g in gammas:
            prod = prod @ g
        # scale so the last gamma is hermitian with square one
        sq = prod @ prod
        z = 1.0 if np.allclose(sq, np.eye(dim)) else 1j
        last = z * prod
        if not np.allclose(last, last.conj().T) or not np.allclose(last @ last, np.eye(dim)):
            raise RepresentationError("odd gamma construction failed")
        gammas.append(last)

    mats, labels = [], []
    for a in range(m):
        for b in range(a + 1, m):
            mats.append(0.5 * gammas[a] @ gammas[b])
            labels.append(f"e{a + 1}{b + 1}")

    if chirality != "full":
        want = 0 if chirality == "even" else 1
        keep = [index[s] for s in subsets if len(s) % 2 == want]
        mats = [x[np.ix_(keep, keep)] for x in mats]
    return make_rep(mats, labels, tol)


def spin_monomial_index(m: int, chirality: str, subset) -> int:
    """Coordinate index of a wedge monomial e_{i1...ir} in the spin module.

    ``subset`` uses 1-based isotropic-space indices, matching the usual
    notation for explicit spinors such as 1 + e_1234.
    """
    k = m // 2
    subset = tuple(sorted(int(i) - 1 for i in subset))
    if any(i < 0 or i >= k for i in subset):
        raise ValueError(f"monomial indices must lie in 1..{k}")
    subsets = sorted(itertools.chain.from_iterable(
        itertools.combinations(range(k), r) for r in range(k + 1)))
    if chirality == "full":
        pool = subsets
    else:
        want = 0 if chirality == "even" else 1
        pool = [s for s in subsets if len(s) % 2 == want]
    try:
        return pool.index(subset)
    except ValueError:
        raise ValueError(f"monomial {subset} not in the {chirality} module") from None


# ---------------------------------------------------------------------------
# derivations of the octonions
# ---------------------------------------------------------------------------

_FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def octonion_structure() -> np.ndarray:
    """Totally antisymmetric f with o_i o_j = -delta_ij + sum_k f[i,j,k] o_k (0-based)."""
    f = np.zeros((7, 7, 7))
    for a, b, c in _FANO_TRIPLES:
        for (i, j, k) in ((a, b, c), (b, c, a), (c, a, b)):
            f[i - 1, j - 1, k - 1] = 1.0
            f[j - 1, i - 1, k - 1] = -1.0
    return f


def build_g2(tol: Tolerances = DEFAULT) -> MatrixRep:
    """Derivation algebra of the octonions acting on the imaginary part C^7.

    Solves the derivation identity D(xy) = D(x)y + x D(y) as a linear system
    on 7x7 real matrices; the null space has dimension 14 and complexifies to
    skew-hermitian matrices on C^7.
    """
    f = octonion_structure()
    rows = []
    for i in range(7):
        for j in range(7):
            for m in range(7):
                # sum_k f[i,j,k] D[m,k] - sum_a D[a,i] f[a,j,m] - sum_b D[b,j] f[i,b,m] = 0
                coeff = np.zeros((7, 7))
                coeff[m, :] += f[i, j, :]
                coeff[:, i] -= f[:, j, m]
                coeff[:, j] -= f[i, :, m]
                rows.append(coeff.ravel())
            scalar = np.zeros((7, 7))
            scalar[j, i] += 1.0
            scalar[i, j] += 1.0
            rows.append(scalar.ravel())
    basis = null_space(np.asarray(rows), tol)
    if len(basis) != 14:
        raise RepresentationError(f"octonion derivation solver returned dim {len(basis)}")
    mats = [vec.reshape(7, 7).astype(complex) for vec in basis]
    labels = [f"d{i + 1}" for i in range(14)]
    return make_rep(mats, labels, tol)


# ---------------------------------------------------------------------------
# induced constructions
# ---------------------------------------------------------------------------

def _same_algebra(*reps: MatrixRep):
    dims = {r.dim_g for r in reps}
    if len(dims) != 1:
        raise RepresentationError("operands present different algebras")


def dual_rep(rep: MatrixRep, tol: Tolerances = DEFAULT) -> MatrixRep:
    mats = -np.swapaxes(rep.mats, 1, 2)
    return make_rep(mats, rep.labels, tol, notes=rep.notes)


def direct_sum(*reps: MatrixRep, tol: Tolerances = DEFAULT,
               trivial_dims=None) -> MatrixRep:
    """Block-diagonal sum of representations of the same algebra.

    ``trivial_dims`` optionally maps block positions to trivial summand
    dimensions: entry (position, d) inserts a d-dimensional zero block.
    """
    _same_algebra(*reps)
    blocks: list[tuple[str, int]] = [("rep", r.dim_v) for r in reps]
    for pos, d in sorted(trivial_dims or []):
        blocks.insert(pos, ("trivial", d))
    total = sum(d for _, d in blocks)
    g = reps[0].dim_g
    mats = np.zeros((g, total, total), dtype=complex)
    offset, rep_i = 0, 0
    for kind, d in blocks:
        if kind == "rep":
            mats[:, offset:offset + d, offset:offset + d] = reps[rep_i].mats
            rep_i += 1
        offset += d
    return make_rep(mats, reps[0].labels, tol)


def tensor_rep(left: MatrixRep, right: MatrixRep, tol: Tolerances = DEFAULT) -> MatrixRep:
    _same_algebra(left, right)
    n1, n2 = left.dim_v, right.dim_v
    mats = [np.kron(a, np.eye(n2)) + np.kron(np.eye(n1), b)
            for a, b in zip(left.mats, right.mats)]
    return make_rep(mats, left.labels, tol)


def _sorted_with_sign(values):
    values = list(values)
    sign = 1.0
    for i in range(1, len(values)):
        j = i
        while j > 0 and values[j - 1] > values[j]:
            values[j - 1], values[j] = values[j], values[j - 1]
            sign = -sign
            j -= 1
    return tuple(values), sign


def exterior_power(rep: MatrixRep, k: int, tol: Tolerances = DEFAULT) -> MatrixRep:
    """Induced action on wedge monomials e_{i1} ^ ... ^ e_{ik}, lex ordered."""
    n = rep.dim_v
    if not 1 <= k <= n:
        raise RepresentationError(f"exterior power degree {k} invalid for dimension {n}")
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    d = len(subsets)
    mats = np.zeros((rep.dim_g, d, d), dtype=complex)
    for a, x in enumerate(rep.mats):
        out = mats[a]
        for col, s in enumerate(subsets):
            for pos, j in enumerate(s):
                others = s[:pos] + s[pos + 1:]
                for m in range(n):
                    val = x[m, j]
                    if val == 0 or m in others:
                        continue
                    target, sign = _sorted_with_sign(s[:pos] + (m,) + s[pos + 1:])
                    out[index[target], col] += sign * val
    return make_rep(mats, rep.labels, tol)


def symmetric_power(rep: MatrixRep, k: int, tol: Tolerances = DEFAULT) -> MatrixRep:
    """Induced action on orthonormalized symmetric monomials, lex ordered."""
    n = rep.dim_v
    if not 1 <= k:
        raise RepresentationError(f"symmetric power degree {k} invalid")
    multis = list(itertools.combinations_with_replacement(range(n), k))
    index = {s: i for i, s in enumerate(multis)}

    def weight(s):
        w = 1.0
        for _, grp in itertools.groupby(s):
            w *= math.factorial(len(list(grp)))
        return w

    wts = np.array([weight(s) for s in multis])
    d = len(multis)
    mats = np.zeros((rep.dim_g, d, d), dtype=complex)
    for a, x in enumerate(rep.mats):
        out = mats[a]
        for col, s in enumerate(multis):
            for pos, j in enumerate(s):
                rest = s[:pos] + s[pos + 1:]
                for m in range(n):
                    val = x[m, j]
                    if val == 0:
                        continue
                    target = tuple(sorted(rest + (m,)))
                    row = index[target]
                    out[row, col] += val * math.sqrt(wts[row] / wts[col])
    return make_rep(mats, rep.labels, tol)


def invariant_antisymmetric_form(rep: MatrixRep, tol: Tolerances = DEFAULT) -> np.ndarray:
    """The invariant antisymmetric bilinear form of the module, if unique.

    Solves X^T J + J X = 0 with J antisymmetric over all generators; raises
    unless the solution space is one complex dimension and nondegenerate.
    """
    n = rep.dim_v
    rows = []
    for x in rep.mats:
        op = np.kron(x.T, np.eye(n)) + np.kron(np.eye(n), x.T)  # J -> X^T J + J X, vectorized
        rows.append(np.hstack([op.real, -op.imag]))
        rows.append(np.hstack([op.imag, op.real]))
    # antisymmetry constraints
    sym = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            sym[i * n + j, i * n + j] += 1.0
            sym[i * n + j, j * n + i] += 1.0
    rows.append(np.hstack([sym, np.zeros_like(sym)]))
    rows.append(np.hstack([np.zeros_like(sym), sym]))
    sol = null_space(np.vstack(rows), tol)
    if len(sol) != 2:  # one complex dimension = two real dimensions (J and iJ)
        raise RepresentationError(
            f"invariant antisymmetric form not unique (solution dim {len(sol)})")
    j_mat = (sol[0][: n * n] + 1j * sol[0][n * n:]).reshape(n, n)
    if numerical_rank(j_mat, tol) < n:
        raise RepresentationError("invariant antisymmetric form is degenerate")
    return j_mat / np.linalg.norm(j_mat)


def primitive_exterior_power(rep: MatrixRep, k: int, tol: Tolerances = DEFAULT) -> MatrixRep:
    """Kernel of contraction with the invariant symplectic form inside Lambda^k.

    This realizes the fundamental k-th representation of a symplectic factor,
    e.g. the 14-dimensional module of sp(3) inside the 20-dimensional third
    exterior power.
    """
    if k < 2:
        raise RepresentationError("primitive part needs degree >= 2")
    j_form = invariant_antisymmetric_form(rep, tol)
    big = exterior_power(rep, k, tol)
    n = rep.dim_v
    subsets_k = list(itertools.combinations(range(n), k))
    subsets_out = list(itertools.combinations(range(n), k - 2))
    out_index = {s: i for i, s in enumerate(subsets_out)}
    contraction = np.zeros((len(subsets_out), len(subsets_k)), dtype=complex)
    for col, s in enumerate(subsets_k):
        for p in range(k):
            for q in range(p + 1, k):
                rest = tuple(v for t, v in enumerate(s) if t not in (p, q))
                sign = (-1.0) ** (p + q - 1)
                contraction[out_index[rest], col] += sign * j_form[s[p], s[q]]
    # complex null space via SVD
    _, svals, vh = np.linalg.svd(contraction)
    thresh = tol.rank_threshold(float(svals[0])) if svals.size else 0.0
    rank = int(np.sum(svals >= thresh))
    proj = vh[rank:].conj()  # rows: orthonormal basis of the kernel
    mats = np.einsum("pi,aij,qj->apq", proj.conj(), big.mats, proj)
    # the kernel must be invariant; reject silently-lossy restrictions
    embedded = np.einsum("aij,qj->aiq", big.mats, proj)
    onto_kernel = proj.T @ np.conj(proj)
    residual = embedded - np.einsum("ik,akq->aiq", onto_kernel, embedded)
    if float(np.max(np.abs(residual))) > 1e-9:
        raise RepresentationError("contraction kernel is not invariant")
    return make_rep(mats, rep.labels, tol)


def combine(reps, prefixes=None, tol: Tolerances = DEFAULT) -> MatrixRep:
    """Concatenate commuting group factors acting on a common module.

    All factors must act on the same C^dimV, commute pairwise, and stay
    linearly independent as matrices (the product presentation is faithful).
    """
    reps = list(reps)
    dims = {r.dim_v for r in reps}
    if len(dims) != 1:
        raise RepresentationError(f"factor modules disagree: {sorted(dims)}")
    prefixes = list(prefixes) if prefixes else [f"f{i + 1}" for i in range(len(reps))]
    for i, left in enumerate(reps):
        for right in reps[i + 1:]:
            for x in left.mats:
                comm = x @ right.mats - right.mats @ x
                worst = float(np.max(np.abs(comm))) if comm.size else 0.0
                if worst > tol.commute:
                    raise RepresentationError(
                        f"factors do not commute (residual {worst:.2e})")
    mats = np.concatenate([r.mats for r in reps], axis=0)
    labels = [f"{p}:{lab}" for p, r in zip(prefixes, reps) for lab in r.labels]
    flat = np.hstack([mats.reshape(len(mats), -1).real, mats.reshape(len(mats), -1).imag])
    if numerical_rank(flat, tol) < len(mats):
        raise RepresentationError("factor generators are linearly dependent; "
                                  "drop the redundant factor")
    return make_rep(mats, labels, tol)


def contains_in_span(rep_mats: np.ndarray, candidate: np.ndarray,
                     tol: Tolerances = DEFAULT) -> bool:
    """Whether a matrix lies in the real span of a generator family."""
    flat = rep_mats.reshape(len(rep_mats), -1)
    stacked = np.hstack([flat.real, flat.imag])
    cand = np.concatenate([candidate.ravel().real, candidate.ravel().imag])
    base_rank = numerical_rank(stacked, tol)
    return numerical_rank(np.vstack([stacked, cand]), tol) == base_rank
