"""Exterior-algebra bases and the sparse Q-operators built from a vector A.

Grade-k space: the span of wedges e_{i1} ^ ... ^ e_{ik} over strictly
increasing tuples from {1..n}, listed lexicographically; grade 0 is the
scalars.  The starred map sends a grade-k vector w to conj(A) ^ w; the
Q-operator of grade k is its adjoint, a map from grade k+1 down to grade k
whose matrix entries are exactly 0 or +-a_i (conjugation cancels when the
adjoint is taken).

Sign convention: inserting e_i into a wedge costs (-1)^t where t is the
number of existing indices below i.  This pins the n = 2 grade-1 matrix to
the column (-a_2, a_1)^T, which is frozen in a golden test; identities (the
range-kernel inclusion and the rank-one completion below) hold for any
consistent convention, so one is fixed once and for all.

The same combinatorics is reused with rational-function entries for the
pointwise operators Q_{F(z)} that the solvers apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import DimensionMismatchError
from .ring import GRat, G_ZERO, RFunc, VecFn


@dataclass(frozen=True)
class WedgeBasis:
    """Lexicographic basis of the grade-k wedge space over {1..n}."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 0 or self.k > self.n:
            raise DimensionMismatchError(f"no grade-{self.k} basis in dimension {self.n}")

    @property
    def tuples(self):
        return _basis_tuples(self.n, self.k)

    @property
    def dim(self) -> int:
        return comb(self.n, self.k)

    def index(self, tup) -> int:
        return _basis_index(self.n, self.k)[tup]


@lru_cache(maxsize=None)
def _basis_tuples(n: int, k: int):
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _basis_index(n: int, k: int):
    return {t: i for i, t in enumerate(_basis_tuples(n, k))}


@lru_cache(maxsize=None)
def _q_coords(n: int, k: int):
    """Sparse coordinates of the grade-k operator (grade k+1 -> grade k).

    Yields (row, col, sign, i): the matrix entry at (row, col) is sign * a_i.
    Independent of A, so it is shared between scalar and function entries.
    """
    rows = _basis_index(n, k)
    out = []
    for col, tau in enumerate(_basis_tuples(n, k + 1)):
        for pos, i in enumerate(tau):
            pi = tau[:pos] + tau[pos + 1:]
            out.append((rows[pi], col, -1 if pos & 1 else 1, i))
    return tuple(out)


@dataclass(frozen=True)
class QOperator:
    """Sparse matrix of a grade-k Q-operator over the wedge bases."""

    grade: int
    n: int
    entries: dict          # (row, col) -> GRat, zeros omitted
    source_vector: tuple   # the A that generated it

    @property
    def shape(self):
        return comb(self.n, self.grade), comb(self.n, self.grade + 1)

    def apply(self, vec):
        rows, cols = self.shape
        if len(vec) != cols:
            raise DimensionMismatchError(f"expected length {cols}, got {len(vec)}")
        out = [G_ZERO] * rows
        for (r, c), a in self.entries.items():
            out[r] = out[r] + a * vec[c]
        return tuple(out)

    def to_dense(self):
        rows, cols = self.shape
        m = [[G_ZERO] * cols for _ in range(rows)]
        for (r, c), a in self.entries.items():
            m[r][c] = a
        return m


def _as_grat_vector(A):
    return tuple(GRat.parse(a) if not isinstance(a, GRat) else a for a in A)


def q_matrix(A, k: int) -> QOperator:
    """Matrix of the grade-k Q-operator of the scalar vector A."""
    A = _as_grat_vector(A)
    n = len(A)
    if not 0 <= k <= n - 1:
        raise DimensionMismatchError(f"grade {k} out of range for dimension {n}")
    entries = {}
    for r, c, sign, i in _q_coords(n, k):
        a = A[i - 1]
        if not a.is_zero():
            entries[(r, c)] = a if sign > 0 else -a
    return QOperator(k, n, entries, A)


def q_star_apply(A, w, k: int):
    """Apply the starred grade-k map: w (grade k) -> conj(A) ^ w (grade k+1)."""
    A = _as_grat_vector(A)
    n = len(A)
    if len(w) != comb(n, k):
        raise DimensionMismatchError(
            f"grade-{k} vector must have length {comb(n, k)}, got {len(w)}")
    w = tuple(GRat.parse(x) if not isinstance(x, GRat) else x for x in w)
    out = [G_ZERO] * comb(n, k + 1)
    for r, c, sign, i in _q_coords(n, k):
        term = A[i - 1].conjugate() * w[r]
        out[c] = out[c] + (term if sign > 0 else -term)
    return tuple(out)


def check_range_kernel(A, k: int) -> bool:
    """Exact check that the grade-k operator annihilates the range of the
    grade-(k+1) operator (their matrix product vanishes)."""
    A = _as_grat_vector(A)
    n = len(A)
    if k + 1 > n - 1:
        raise DimensionMismatchError(f"need grade {k}+1 <= {n - 1}")
    qk = q_matrix(A, k)
    qk1 = q_matrix(A, k + 1)
    prod = {}
    by_row = {}
    for (r, c), a in qk1.entries.items():
        by_row.setdefault(r, []).append((c, a))
    for (r, m), a in qk.entries.items():
        for c, b in by_row.get(m, ()):
            key = (r, c)
            prod[key] = prod.get(key, G_ZERO) + a * b
    return all(v.is_zero() for v in prod.values())


def check_rank_one_identity(A, Bv) -> bool:
    """Exact check of the rank-one completion identity

        (A B^T) I  ==  B^T A + Q_A Q_B^T

    on n x n matrices, with Q the grade-1 operators and no conjugations."""
    A = _as_grat_vector(A)
    Bv = _as_grat_vector(Bv)
    if len(A) != len(Bv):
        raise DimensionMismatchError("vectors must have equal length")
    n = len(A)
    s = G_ZERO
    for a, b in zip(A, Bv):
        s = s + a * b
    prod = {}
    if n >= 2:   # in dimension 1 the grade-1 operators are empty matrices
        qa = q_matrix(A, 1)
        qb = q_matrix(Bv, 1)
        qb_by_col = {}
        for (r, c), v in qb.entries.items():
            qb_by_col.setdefault(c, []).append((r, v))
        for (r, m), a in qa.entries.items():
            for c, b in qb_by_col.get(m, ()):   # (Q_B^T)[m, c] = Q_B[c, m]
                key = (r, c)
                prod[key] = prod.get(key, G_ZERO) + a * b
    for r in range(n):
        for c in range(n):
            lhs = s if r == c else G_ZERO
            rhs = Bv[r] * A[c] + prod.get((r, c), G_ZERO)
            if lhs != rhs:
                return False
    return True


def entry_discipline_ok(op: QOperator) -> bool:
    """Structural check: every stored entry is exactly +-a_i for some source
    component."""
    allowed = set()
    for a in op.source_vector:
        allowed.add(a)
        allowed.add(-a)
    return all(v in allowed for v in op.entries.values())


# -- pointwise operators with function entries ---------------------------------


def q_apply_vecfn(F: VecFn, X) -> VecFn:
    """Apply the grade-1 operator of F(z), pointwise in z, to a grade-2
    coefficient tuple X of rational functions; returns the n-vector
    Q_{F(z)} X(z)^T with exact entries."""
    n = F.n
    X = [x if isinstance(x, RFunc) else RFunc._coerce(x) for x in X]
    if any(x is None for x in X):
        raise TypeError("X entries must be RFunc or scalars")
    if len(X) != comb(n, 2):
        raise DimensionMismatchError(
            f"grade-2 tuple must have length {comb(n, 2)}, got {len(X)}")
    out = [RFunc.zero()] * n
    for r, c, sign, i in _q_coords(n, 1):
        term = F[i - 1] * X[c]
        out[r] = out[r] + (term if sign > 0 else -term)
    return VecFn(out)


def q_transpose_apply_constant(G: VecFn, cvec):
    """Apply Q_{G(z)}^T (transpose, no conjugation) to a constant n-vector:
    returns the grade-2 tuple of rational functions sum_i sign * g_src * c_i."""
    n = G.n
    cvec = _as_grat_vector(cvec)
    if len(cvec) != n:
        raise DimensionMismatchError("constant vector length must match G")
    out = [RFunc.zero()] * comb(n, 2)
    for r, c, sign, i in _q_coords(n, 1):
        term = G[i - 1] * RFunc.constant(cvec[r])
        out[c] = out[c] + (term if sign > 0 else -term)
    return tuple(out)
