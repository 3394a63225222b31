"""Structure theory of finite-dimensional Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    is_zero,
    kernel_of_rows,
    quotient_map,
    span,
    vector,
    zero_vector,
)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Lie algebra of dimension ``dim`` with ``[e_a, e_b] = brackets[(a, b)]``.

    Only pairs ``a < b`` are normally stored; ``[e_b, e_a]`` is then the
    negative.  Other keys are accepted so that :func:`violations` can report
    them.
    """

    dim: int
    brackets: Mapping = field(default_factory=dict)

    def __post_init__(self):
        m = self.dim
        clean = {}
        for (a, b), v in dict(self.brackets).items():
            if not (0 <= a < m and 0 <= b < m):
                raise DimensionError(f"bracket index {(a, b)} out of range for dimension {m}")
            if len(v) != m:
                raise DimensionError(f"bracket value of length {len(v)} for dimension {m}")
            v = vector(v)
            if not is_zero(v):
                clean[(a, b)] = v
        object.__setattr__(self, "brackets", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.brackets == other.brackets


@dataclass(frozen=True)
class LieViolation:
    kind: str  # "antisymmetry" or "jacobi"
    indices: tuple
    residual: Vector


def bracket_basis(L: LieAlgebra, a: int, b: int) -> Vector:
    if a < b:
        return L.brackets.get((a, b)) or zero_vector(L.dim)
    if a > b:
        v = L.brackets.get((b, a))
        return tuple(-x for x in v) if v else zero_vector(L.dim)
    return zero_vector(L.dim)


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    m = L.dim
    if len(x) != m or len(y) != m:
        raise DimensionError(f"arguments must have length {m}")
    out = [Fraction(0)] * m
    for a, xa in enumerate(x):
        if not xa:
            continue
        for b, yb in enumerate(y):
            if not yb or a == b:
                continue
            v = bracket_basis(L, a, b)
            c = xa * yb
            for k, t in enumerate(v):
                if t:
                    out[k] += c * t
    return tuple(out)


def ad_matrix(L: LieAlgebra, x: Sequence) -> Matrix:
    m = L.dim
    cols = [bracket(L, x, [int(j == k) for k in range(m)]) for j in range(m)]
    return Matrix.from_columns(cols, m)


def basis_ad_matrix(L: LieAlgebra, a: int) -> Matrix:
    m = L.dim
    return Matrix.from_columns([bracket_basis(L, a, j) for j in range(m)], m)


def violations(L: LieAlgebra) -> list[LieViolation]:
    """Antisymmetry and Jacobi failures on basis pairs and triples."""
    m = L.dim
    out = []
    for (a, b), v in L.brackets.items():
        if a == b:
            out.append(LieViolation("antisymmetry", (a, a), v))
        elif a > b:
            other = L.brackets.get((b, a)) or zero_vector(m)
            residual = tuple(x + y for x, y in zip(v, other))
            if not is_zero(residual):
                out.append(LieViolation("antisymmetry", (a, b), residual))
    for a, b, c in combinations(range(m), 3):
        total = zero_vector(m)
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = bracket_basis(L, y, z)
            if not is_zero(inner):
                e = [0] * m
                e[x] = 1
                total = tuple(s + t for s, t in zip(total, bracket(L, e, inner)))
        if not is_zero(total):
            out.append(LieViolation("jacobi", (a, b, c), total))
    return out


def bracket_span(L: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """The subspace ``[s, t]`` spanned by brackets of basis vectors."""
    return span([bracket(L, x, y) for x in s.basis for y in t.basis], L.dim)


def center(L: LieAlgebra) -> Subspace:
    m = L.dim
    rows = []
    for j in range(m):
        vals = [bracket_basis(L, i, j) for i in range(m)]
        for k in range(m):
            row = {i: vals[i][k] for i in range(m) if vals[i][k]}
            if row:
                rows.append(row)
    return kernel_of_rows(rows, m)


def _series(L: LieAlgebra, step) -> list[Subspace]:
    cur = Subspace.full(L.dim)
    terms = [cur]
    while True:
        nxt = step(cur)
        if nxt == cur:
            return terms
        terms.append(nxt)
        cur = nxt


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """``L, [L, L], [[L, L], [L, L]], ...`` up to the first repeated term."""
    return _series(L, lambda s: bracket_span(L, s, s))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    full = Subspace.full(L.dim)
    return _series(L, lambda s: bracket_span(L, full, s))


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_abelian(L: LieAlgebra) -> bool:
    return not L.brackets


def killing_form(L: LieAlgebra) -> Matrix:
    m = L.dim
    ads = [basis_ad_matrix(L, a) for a in range(m)]
    return Matrix([[(ads[a] @ ads[b]).trace() for b in range(m)] for a in range(m)], m)


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return killing_form(L).det() != 0


def _check_ambient(L: LieAlgebra, s: Subspace):
    if s.ambient_dim != L.dim:
        raise DimensionError(f"subspace of K^{s.ambient_dim} in Lie algebra of dimension {L.dim}")


def is_ideal(L: LieAlgebra, s: Subspace) -> bool:
    _check_ambient(L, s)
    for x in s.basis:
        for j in range(L.dim):
            e = [0] * L.dim
            e[j] = 1
            if not s.contains(bracket(L, e, x)):
                return False
    return True


def is_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    _check_ambient(L, s)
    return all(s.contains(bracket(L, x, y)) for x, y in combinations(s.basis, 2))


def normalizer(L: LieAlgebra, s: Subspace) -> Subspace:
    """``{x : [x, s] in s}``."""
    _check_ambient(L, s)
    _, project = quotient_map(s)
    rows = []
    for t in s.basis:
        # x -> project([x, t]) = -(project . ad t) x
        M = project @ ad_matrix(L, t)
        for r in M.entries:
            row = {i: a for i, a in enumerate(r) if a}
            if row:
                rows.append(row)
    return kernel_of_rows(rows, L.dim)


def is_nilpotent_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    """Lower central series of ``s`` computed inside ``L``."""
    cur = s
    while cur.dim:
        nxt = bracket_span(L, s, cur)
        if nxt == cur:
            return False
        cur = nxt
    return True


def is_cartan(L: LieAlgebra, s: Subspace) -> bool:
    """Nilpotent and self-normalizing subalgebra."""
    return is_subalgebra(L, s) and is_nilpotent_subalgebra(L, s) and normalizer(L, s) == s
