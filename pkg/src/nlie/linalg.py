"""Exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` entries.  Vectors are
plain tuples of fractions; :class:`Matrix` is an immutable dense grid; a
:class:`Subspace` is stored by its reduced row-echelon basis, which makes
equality of subspaces a syntactic comparison.

Internally, elimination runs on sparse rows (``dict`` from column to value),
which keeps the large but sparse coboundary matrices cheap to reduce.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    """Raised when operands have incompatible sizes."""


def parse_scalar(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (also accepts ints and Fractions)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational literal: {text!r}")
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_scalar(x: Fraction) -> str:
    return str(Fraction(x))


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """Linear combination ``sum(c_i * v_i)`` of length-``n`` vectors."""
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero(v: Sequence) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if cols is None:
            if not grid:
                raise DimensionError("cols must be given for a matrix with no rows")
            cols = len(grid[0])
        for row in grid:
            if len(row) != cols:
                raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        for c in columns:
            if len(c) != rows:
                raise DimensionError("column length mismatch")
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int) -> Matrix:
        """Inverse of :meth:`flatten` (row-major)."""
        if len(flat) != rows * cols:
            raise DimensionError("flat length mismatch")
        return cls([flat[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def flatten(self) -> Vector:
        return tuple(x for r in self.entries for x in r)

    @property
    def T(self) -> Matrix:
        return Matrix(([r[j] for r in self.entries] for j in range(self.cols)), self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} != {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix((add(a, b) for a, b in zip(self.entries, other.entries)), self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix((sub(a, b) for a, b in zip(self.entries, other.entries)), self.cols)

    def __neg__(self) -> Matrix:
        return Matrix((scale(-1, r) for r in self.entries), self.cols)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        return Matrix((scale(c, r) for r in self.entries), self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return Matrix(
            ([_dot(r, c) for c in ocols] for r in self.entries), other.cols
        )

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for matrix {self.shape}")
        return tuple(_dot(r, v) for r in self.entries)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        result = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                result = -result
            piv = a[c][c]
            result *= piv
            for r in range(c + 1, n):
                f = a[r][c] / piv
                if f:
                    for k in range(c, n):
                        a[r][k] -= f * a[c][k]
        return result

    def rank(self) -> int:
        return rank_of_rows(_sparse(r) for r in self.entries)


def _dot(u: Sequence, v: Sequence) -> Fraction:
    s = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# --- sparse elimination core -------------------------------------------------

def _sparse(v: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def _dense(row: dict, n: int) -> Vector:
    out = [Fraction(0)] * n
    for i, x in row.items():
        out[i] = x
    return tuple(out)


def _axpy(row: dict, c: Fraction, other: dict) -> None:
    """row -= c * other, in place, dropping cancelled entries."""
    for k, x in other.items():
        y = row.get(k, 0) - c * x
        if y:
            row[k] = y
        else:
            row.pop(k, None)


def _reduced_rows(rows: Iterable[dict]) -> dict:
    """Gauss-Jordan on sparse rows: returns {pivot column: normalized row}.

    The returned rows are fully reduced: each has a 1 at its pivot and zeros
    in every other pivot column.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        for col in [c for c in row if c in pivots]:
            c = row.get(col)
            if c:
                _axpy(row, c, pivots[col])
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {k: x * inv for k, x in row.items()}
        for other in pivots.values():
            c = other.get(lead)
            if c:
                _axpy(other, c, row)
        pivots[lead] = row
    return pivots


def rank_of_rows(rows: Iterable[dict]) -> int:
    """Rank of a matrix given as sparse rows (echelon form only, no back-substitution)."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            p = pivots.get(lead)
            if p is None:
                inv = 1 / row[lead]
                pivots[lead] = {k: x * inv for k, x in row.items()}
                break
            _axpy(row, row[lead], p)
    return len(pivots)


# --- public operations -------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of ``m`` and its pivot columns."""
    piv = _reduced_rows(_sparse(r) for r in m.entries)
    cols = sorted(piv)
    rows = [_dense(piv[c], m.cols) for c in cols]
    rows += [zero_vector(m.cols)] * (m.rows - len(rows))
    return Matrix(rows, m.cols), cols


def rank(m: Matrix) -> int:
    return m.rank()


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``K^ambient_dim`` in canonical (RREF) form.

    Build instances with :func:`span`, :func:`kernel_basis` or
    :func:`image`; the constructor does not re-reduce.
    """

    ambient_dim: int
    basis: tuple  # tuple[Vector, ...], rows of an RREF matrix
    pivots: tuple  # tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    def residual(self, v: Sequence) -> Vector:
        """``v`` minus its component along the basis, read at the pivots."""
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        out = list(vector(v))
        for p, row in zip(self.pivots, self.basis):
            c = out[p]
            if c:
                for k, x in enumerate(row):
                    if x:
                        out[k] -= c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.residual(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: Subspace) -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("different ambient spaces")
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: Subspace) -> bool:
        return self.is_subspace_of(other)

    def __add__(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("different ambient spaces")
        return span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("different ambient spaces")
        # x = sum a_i s_i = sum b_j t_j  <=>  (a, -b) in kernel of [S; T]^T
        k, stacked = self.dim, self.basis + tuple(scale(-1, t) for t in other.basis)
        if not stacked:
            return Subspace.zero(self.ambient_dim)
        ker = kernel_basis(Matrix.from_columns(stacked, self.ambient_dim))
        return span(
            [combine(c[:k], self.basis, self.ambient_dim) for c in ker.basis],
            self.ambient_dim,
        )


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by ``vectors``."""
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient {ambient_dim}")
        rows.append(_sparse(v))
    return _subspace_from_rows(rows, ambient_dim)


def _subspace_from_rows(rows: Iterable[dict], ambient_dim: int) -> Subspace:
    piv = _reduced_rows(rows)
    cols = tuple(sorted(piv))
    return Subspace(ambient_dim, tuple(_dense(piv[c], ambient_dim) for c in cols), cols)


def contains(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace of ``K^cols``."""
    return kernel_of_rows((_sparse(r) for r in m.entries), m.cols)


def kernel_of_rows(rows: Iterable[dict], ncols: int) -> Subspace:
    """Null space of a matrix given as sparse rows."""
    piv = _reduced_rows(rows)
    free = [c for c in range(ncols) if c not in piv]
    gens = []
    for f in free:
        v = {f: Fraction(1)}
        for p, row in piv.items():
            x = row.get(f)
            if x:
                v[p] = -x
        gens.append(v)
    return _subspace_from_rows(gens, ncols)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return span(m.columns(), m.rows)


def quotient_map(s: Subspace) -> tuple[list[int], Matrix]:
    """Canonical surjection ``K^N -> K^N / s``.

    The representatives are the non-pivot standard basis vectors of ``s``;
    the returned matrix sends a vector to its coordinates over them.
    """
    n = s.ambient_dim
    pivset = set(s.pivots)
    reps = [j for j in range(n) if j not in pivset]
    pos = {j: a for a, j in enumerate(reps)}
    cols = []
    for j in range(n):
        col = [Fraction(0)] * len(reps)
        if j in pos:
            col[pos[j]] = Fraction(1)
        else:
            row = s.basis[s.pivots.index(j)]
            for r, a in pos.items():
                col[a] = -row[r]
        cols.append(col)
    return reps, Matrix.from_columns(cols, len(reps))
