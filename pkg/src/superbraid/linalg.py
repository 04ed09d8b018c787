"""Exact rational sparse linear algebra on parity-graded spaces.

Everything here is over the rationals, stored as :class:`fractions.Fraction`.
There is deliberately no floating-point mode: all downstream checks are
exact operator identities, so a single rounded entry would be useless.

Vectors are sparse dicts ``{index: Fraction}``; operators store their
entries column-major (``cols[j][i]``), which makes products and
matrix-vector application cheap for the very sparse operators produced by
tensor-factor embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

Vector = dict  # {index: Fraction}, zero entries absent


class LinalgError(ValueError):
    pass


class NotHomogeneousError(LinalgError):
    """Operator mixes parities and a homogeneous one was required."""


class NotInvariantError(LinalgError):
    """An operator does not preserve the given subspace."""


class SpectrumError(LinalgError):
    """Candidate eigenvalues do not exhaust the spectrum."""


@dataclass(frozen=True)
class GradedSpace:
    """Ordered basis with a Z2 parity per basis vector."""

    parities: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.parities):
            raise LinalgError("labels/parities length mismatch")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return str(self.labels[i])
        return str(i)


def tensor_space(u: GradedSpace, w: GradedSpace) -> GradedSpace:
    """Tensor product basis in row-major order (u index slow), parity additive."""
    parities = tuple(
        (pu + pw) % 2 for pu in u.parities for pw in w.parities
    )
    labels = None
    if u.labels is not None or w.labels is not None:
        labels = tuple(
            f"{u.label(i)}*{w.label(j)}" for i in range(u.dim) for j in range(w.dim)
        )
    return GradedSpace(parities, labels)


def vec_add(a: Vector, b: Vector, coeff: Fraction = Fraction(1)) -> Vector:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, Fraction(0)) + coeff * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def vec_scale(a: Vector, c: Fraction) -> Vector:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


class LinearOp:
    """Sparse exact operator on a graded space (endomorphism)."""

    __slots__ = ("space", "cols")

    def __init__(self, space: GradedSpace, cols: Optional[dict] = None):
        self.space = space
        self.cols = cols if cols is not None else {}

    @classmethod
    def zero(cls, space: GradedSpace) -> "LinearOp":
        return cls(space)

    @classmethod
    def identity(cls, space: GradedSpace, scale: Fraction = Fraction(1)) -> "LinearOp":
        if not scale:
            return cls(space)
        return cls(space, {j: {j: Fraction(scale)} for j in range(space.dim)})

    @classmethod
    def from_entries(cls, space: GradedSpace, entries: Iterable) -> "LinearOp":
        op = cls(space)
        for i, j, v in entries:
            op.add_entry(i, j, Fraction(v))
        return op

    def add_entry(self, i: int, j: int, v: Fraction) -> None:
        if not v:
            return
        col = self.cols.setdefault(j, {})
        nv = col.get(i, Fraction(0)) + v
        if nv:
            col[i] = nv
        else:
            del col[i]
            if not col:
                del self.cols[j]

    def entries(self) -> Iterator:
        for j in sorted(self.cols):
            col = self.cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def __add__(self, other: "LinearOp") -> "LinearOp":
        out = LinearOp(self.space, {j: dict(col) for j, col in self.cols.items()})
        for j, col in other.cols.items():
            for i, v in col.items():
                out.add_entry(i, j, v)
        return out

    def __sub__(self, other: "LinearOp") -> "LinearOp":
        return self + other.scaled(Fraction(-1))

    def scaled(self, c: Fraction) -> "LinearOp":
        c = Fraction(c)
        if not c:
            return LinearOp(self.space)
        return LinearOp(
            self.space,
            {j: {i: c * v for i, v in col.items()} for j, col in self.cols.items()},
        )

    def plus_scalar(self, c: Fraction) -> "LinearOp":
        """self + c * identity."""
        out = LinearOp(self.space, {j: dict(col) for j, col in self.cols.items()})
        c = Fraction(c)
        for j in range(self.space.dim):
            out.add_entry(j, j, c)
        return out

    def __matmul__(self, other: "LinearOp") -> "LinearOp":
        out = LinearOp(self.space)
        a_cols = self.cols
        for j, bcol in other.cols.items():
            acc: dict = {}
            for k, bv in bcol.items():
                acol = a_cols.get(k)
                if not acol:
                    continue
                for i, av in acol.items():
                    nv = acc.get(i, Fraction(0)) + av * bv
                    if nv:
                        acc[i] = nv
                    else:
                        del acc[i]
            if acc:
                out.cols[j] = acc
        return out

    def commutator(self, other: "LinearOp") -> "LinearOp":
        return (self @ other) - (other @ self)

    def apply(self, vec: Vector) -> Vector:
        out: dict = {}
        for j, vj in vec.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, a in col.items():
                nv = out.get(i, Fraction(0)) + a * vj
                if nv:
                    out[i] = nv
                else:
                    del out[i]
        return out

    def equals(self, other: "LinearOp") -> bool:
        return (self - other).is_zero()

    def max_entry_witness(self) -> Optional[tuple]:
        """Largest-magnitude entry as (row, col, value); None when zero."""
        best = None
        for i, j, v in self.entries():
            key = (abs(v), -j, -i)
            if best is None or key > best[0]:
                best = (key, (i, j, v))
        return None if best is None else best[1]

    def parity(self) -> Optional[int]:
        """Z2 parity when homogeneous; None for the zero operator."""
        par = self.space.parities
        found = None
        for j, col in self.cols.items():
            for i in col:
                this = (par[i] + par[j]) % 2
                if found is None:
                    found = this
                elif found != this:
                    raise NotHomogeneousError("operator mixes parities")
        return found


def koszul_tensor_op(a: LinearOp, b: LinearOp) -> LinearOp:
    """Graded tensor product of homogeneous operators.

    (a (x) b)(u (x) w) = (-1)^(|b| |u|) (a u) (x) (b w); the sign reads the
    parity of the column-side basis vector of the first factor.
    """
    sa = a.space
    sb = b.space
    par_b = b.parity()
    a.parity()  # raises if non-homogeneous
    if par_b is None:
        par_b = 0
    prod = tensor_space(sa, sb)
    out = LinearOp(prod)
    dim_b = sb.dim
    for ja, cola in a.cols.items():
        sign = -1 if (par_b and sa.parities[ja] % 2) else 1
        for jb, colb in b.cols.items():
            j = ja * dim_b + jb
            for ia, va in cola.items():
                for ib, vb in colb.items():
                    out.add_entry(ia * dim_b + ib, j, sign * va * vb)
    return out


class RowReducer:
    """Incremental exact Gaussian elimination with coordinate tracking.

    Maintains an echelon set of sparse rows together with the expression of
    each echelon row in terms of the rows fed to :meth:`add`.  Pivot choice
    inside an added row prefers unit entries, then small numerators and
    denominators, which keeps intermediate fractions tame.
    """

    def __init__(self):
        self.rows: list = []  # echelon rows (sparse dicts), pivot normalized to 1
        self.pivots: list = []  # pivot column per row
        self.trans: list = []  # row i of echelon = sum trans[i][k] * input row k
        self.n_added = 0

    def _reduce(self, vec: Vector, tr: Vector) -> tuple:
        v = dict(vec)
        t = dict(tr)
        for row, piv, rt in zip(self.rows, self.pivots, self.trans):
            coeff = v.get(piv)
            if coeff:
                for k, rv in row.items():
                    nv = v.get(k, Fraction(0)) - coeff * rv
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                for k, rv in rt.items():
                    nv = t.get(k, Fraction(0)) - coeff * rv
                    if nv:
                        t[k] = nv
                    else:
                        t.pop(k, None)
        return v, t

    @staticmethod
    def _pick_pivot(vec: Vector) -> int:
        def cost(item):
            k, v = item
            return (0 if abs(v) == 1 else 1, abs(v.denominator), abs(v.numerator), k)

        return min(vec.items(), key=cost)[0]

    def add(self, vec: Vector) -> bool:
        """Insert a vector; returns True when it enlarges the span."""
        idx = self.n_added
        self.n_added += 1
        v, t = self._reduce(vec, {idx: Fraction(1)})
        if not v:
            return False
        piv = self._pick_pivot(v)
        c = v[piv]
        v = {k: val / c for k, val in v.items()}
        t = {k: val / c for k, val in t.items()}
        self.rows.append(v)
        self.pivots.append(piv)
        self.trans.append(t)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residual(self, vec: Vector) -> Vector:
        v, _ = self._reduce(vec, {})
        return v

    def coordinates(self, vec: Vector) -> Optional[Vector]:
        """Express vec in terms of the added vectors; None if outside the span."""
        v = dict(vec)
        t: dict = {}
        for row, piv, rt in zip(self.rows, self.pivots, self.trans):
            coeff = v.get(piv)
            if coeff:
                for k, rv in row.items():
                    nv = v.get(k, Fraction(0)) - coeff * rv
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                for k, rv in rt.items():
                    nv = t.get(k, Fraction(0)) + coeff * rv
                    if nv:
                        t[k] = nv
                    else:
                        t.pop(k, None)
        if v:
            return None
        return t


class Subspace:
    """Subspace of a graded space, spanned by explicit exact vectors."""

    def __init__(self, space: GradedSpace, vectors: Sequence):
        self.space = space
        self.vectors = [dict(v) for v in vectors]
        self._solver = RowReducer()
        for v in self.vectors:
            if not self._solver.add(v):
                raise LinalgError("subspace basis vectors are linearly dependent")

    @classmethod
    def full(cls, space: GradedSpace) -> "Subspace":
        return cls(space, [{i: Fraction(1)} for i in range(space.dim)])

    @classmethod
    def zero(cls, space: GradedSpace) -> "Subspace":
        return cls(space, [])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coordinates(self, vec: Vector) -> Optional[Vector]:
        return self._solver.coordinates(vec)

    def contains(self, vec: Vector) -> bool:
        return self.coordinates(vec) is not None

    def from_coefficients(self, coeffs: Vector) -> Vector:
        out: dict = {}
        for k, c in coeffs.items():
            out = vec_add(out, self.vectors[k], c)
        return out


def nullspace_of_columns(columns: Sequence, ncols: int) -> list:
    """Coefficient vectors c with sum_k c_k * columns[k] = 0.

    Deterministic echelon computation; the returned basis is in reduced
    form with unit leading coefficients, ordered by leading index.
    """
    red = RowReducer()
    dependent: list = []
    for k in range(ncols):
        vec = columns[k]
        v, t = red._reduce(vec, {k: Fraction(1)})
        if not v:
            # the transform satisfies sum_j t[j] * columns[j] = residual = 0
            dependent.append(t)
        else:
            piv = red._pick_pivot(v)
            c = v[piv]
            red.rows.append({kk: vv / c for kk, vv in v.items()})
            red.pivots.append(piv)
            red.trans.append({kk: vv / c for kk, vv in t.items()})
            red.n_added += 1
    return dependent


def kernel_intersection(ops: Sequence, within: Subspace) -> Subspace:
    """Maximal subspace of ``within`` annihilated by every operator."""
    current = within
    for op in ops:
        if current.dim == 0:
            break
        images = [op.apply(v) for v in current.vectors]
        rels = nullspace_of_columns(images, current.dim)
        new_vectors = []
        for rel in rels:
            vec: dict = {}
            for k, c in rel.items():
                vec = vec_add(vec, current.vectors[k], c)
            if vec:
                new_vectors.append(vec)
        current = Subspace(within.space, new_vectors)
    return current


def restrict_op(op: LinearOp, sub: Subspace) -> list:
    """Matrix of op on the subspace basis, as dense Fraction rows.

    Raises :class:`NotInvariantError` when the image leaves the subspace.
    """
    k = sub.dim
    mat = [[Fraction(0)] * k for _ in range(k)]
    for j, v in enumerate(sub.vectors):
        coords = sub.coordinates(op.apply(v))
        if coords is None:
            raise NotInvariantError("operator does not preserve the subspace")
        for i, c in coords.items():
            mat[i][j] = c
    return mat


def _dense_mul(a: list, b: list) -> list:
    k = len(a)
    out = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        ai = a[i]
        for l in range(k):
            c = ai[l]
            if c:
                bl = b[l]
                row = out[i]
                for j in range(k):
                    if bl[j]:
                        row[j] += c * bl[j]
    return out


def commutant_dimension(ops: Sequence, within: Subspace) -> int:
    """Dimension of the algebra of matrices commuting with every restricted op.

    Dimension 1 over the rationals certifies absolute irreducibility: the
    commutant dimension of a matrix set is invariant under field extension.
    """
    k = within.dim
    if k == 0:
        return 0
    mats = [restrict_op(op, within) for op in ops]
    red = RowReducer()
    rank = 0
    for mat in mats:
        # unknowns X[i][j] indexed by i * k + j; equations (X A - A X)[r][c] = 0
        for r in range(k):
            for c in range(k):
                row: dict = {}
                for l in range(k):
                    if mat[l][c]:
                        row[r * k + l] = row.get(r * k + l, Fraction(0)) + mat[l][c]
                    if mat[r][l]:
                        row[l * k + c] = row.get(l * k + c, Fraction(0)) - mat[r][l]
                row = {key: v for key, v in row.items() if v}
                if row and red.add(row):
                    rank += 1
    return k * k - rank


def simultaneous_eigenspaces(ops: Sequence, within: Subspace, candidates: Sequence) -> list:
    """Joint eigenspace decomposition for pairwise commuting operators.

    ``candidates[k]`` lists the possible eigenvalues of ``ops[k]``; the
    spectrum is assumed combinatorially known so no root-finding happens.
    Raises :class:`SpectrumError` when the candidates fail to exhaust some
    operator's action, and :class:`LinalgError` when the operators do not
    commute on the subspace.
    """
    if len(ops) != len(candidates):
        raise LinalgError("need one candidate list per operator")
    mats = [restrict_op(op, within) for op in ops]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            ab = _dense_mul(mats[i], mats[j])
            ba = _dense_mul(mats[j], mats[i])
            if ab != ba:
                raise LinalgError(f"operators {i} and {j} do not commute on the subspace")
    pieces = [((), within)]
    for op, cands in zip(ops, candidates):
        new_pieces = []
        for vals, sub in pieces:
            found = 0
            for c in cands:
                eig = kernel_intersection([op.plus_scalar(-Fraction(c))], sub)
                if eig.dim:
                    new_pieces.append((vals + (Fraction(c),), eig))
                    found += eig.dim
            if found != sub.dim:
                raise SpectrumError(
                    f"candidates {list(cands)} only account for {found} of {sub.dim} dimensions"
                )
        pieces = new_pieces
    return pieces
