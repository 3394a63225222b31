"""Finite-dimensional n-Lie (Filippov) algebras given by structure constants.

An algebra stores the value of ``{e_i1, ..., e_in}`` only for strictly
increasing index tuples.  Every other bracket of basis vectors is obtained by
sorting the indices and applying the permutation sign, and repeated indices
give zero, so skew-symmetry holds by construction.  The fundamental identity
is *not* checked on construction; call :func:`check_filippov`.

The identity is tested on basis vectors only.  Both sides are multilinear in
all ``2n - 1`` arguments, so agreement on basis tuples implies agreement
everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .combinatorics import alternating_terms, increasing_tuples, replace_at, sort_with_sign
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    combine,
    is_zero,
    kernel_of_rows,
    sub,
    unit_vector,
    vector,
    zero_vector,
)


class StructureError(ValueError):
    """Malformed structure constants (bad tuple, bad length, ...)."""


class UnknownAlgebraError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class NLieAlgebra:
    arity: int
    dim: int
    structure: Mapping = field(default_factory=dict)
    basis_names: tuple = ()
    name: str = ""

    def __post_init__(self):
        n, d = self.arity, self.dim
        if not isinstance(n, int) or n < 2:
            raise StructureError(f"arity must be an integer >= 2, got {n!r}")
        if not isinstance(d, int) or d < 0:
            raise StructureError(f"dimension must be a non-negative integer, got {d!r}")
        names = tuple(self.basis_names) or tuple(f"e{i}" for i in range(d))
        if len(names) != d:
            raise StructureError(f"{len(names)} basis names for dimension {d}")
        clean = {}
        for key, value in dict(self.structure).items():
            key = tuple(key)
            if len(key) != n:
                raise StructureError(f"bracket arguments {key} do not have length {n}")
            if any(not 0 <= i < d for i in key):
                raise StructureError(f"bracket arguments {key} out of range for dimension {d}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise StructureError(f"bracket arguments {key} are not strictly increasing")
            if len(value) != d:
                raise StructureError(f"bracket value for {key} has length {len(value)}")
            value = vector(value)
            if not is_zero(value):
                clean[key] = value
        object.__setattr__(self, "structure", dict(sorted(clean.items())))
        object.__setattr__(self, "basis_names", names)

    def __eq__(self, other):
        if not isinstance(other, NLieAlgebra):
            return NotImplemented
        return (self.arity, self.dim, self.structure) == (other.arity, other.dim, other.structure)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<NLieAlgebra{label} n={self.arity} d={self.dim} nonzero={len(self.structure)}>"

    def with_structure(self, structure: Mapping, name: str = "") -> NLieAlgebra:
        return NLieAlgebra(self.arity, self.dim, structure, self.basis_names, name)


@dataclass(frozen=True)
class FilippovViolation:
    x: tuple  # increasing (n-1)-tuple
    y: tuple  # increasing n-tuple
    residual: Vector  # lhs - rhs


def bracket_basis(g: NLieAlgebra, idx: Sequence[int]) -> Vector:
    """``{e_i1, ..., e_in}`` for arbitrary (not necessarily sorted) indices."""
    sign, key = sort_with_sign(idx)
    value = g.structure.get(key) if sign else None
    if value is None:
        return zero_vector(g.dim)
    return value if sign > 0 else tuple(-a for a in value)


def _check_args(g: NLieAlgebra, xs: Sequence[Sequence], count: int):
    if len(xs) != count:
        raise DimensionError(f"expected {count} arguments, got {len(xs)}")
    for x in xs:
        if len(x) != g.dim:
            raise DimensionError(f"argument of length {len(x)} for dimension {g.dim}")


def bracket(g: NLieAlgebra, *xs: Sequence) -> Vector:
    """Multilinear skew extension of the structure constants."""
    _check_args(g, xs, g.arity)
    terms = alternating_terms(xs)
    keys = [k for k in terms if k in g.structure]
    return combine([terms[k] for k in keys], [g.structure[k] for k in keys], g.dim)


def basis_ad(g: NLieAlgebra, idx: Sequence[int]) -> Matrix:
    """``ad(e_i1, ..., e_i(n-1))`` as a d x d matrix (columns = images)."""
    d = g.dim
    cols = [bracket_basis(g, tuple(idx) + (k,)) for k in range(d)]
    return Matrix.from_columns(cols, d)


def ad(g: NLieAlgebra, *xs: Sequence) -> Matrix:
    """The inner derivation ``y -> {x_1, ..., x_(n-1), y}``."""
    _check_args(g, xs, g.arity - 1)
    d = g.dim
    cols = [[Fraction(0)] * d for _ in range(d)]
    for key, c in alternating_terms(xs).items():
        for k in range(d):
            if k in key:
                continue
            v = bracket_basis(g, key + (k,))
            col = cols[k]
            for r, a in enumerate(v):
                if a:
                    col[r] += c * a
    return Matrix.from_columns(cols, d)


def check_filippov(g: NLieAlgebra) -> list[FilippovViolation]:
    """All basis tuples on which the fundamental identity fails."""
    n, d = g.arity, g.dim
    violations = []
    ads = {x: basis_ad(g, x) for x in increasing_tuples(d, n - 1)}
    for x, A in ads.items():
        for y in increasing_tuples(d, n):
            lhs = A.apply(bracket_basis(g, y))
            rhs = [Fraction(0)] * d
            for i, yi in enumerate(y):
                for k in range(d):
                    c = A[k, yi]
                    if not c:
                        continue
                    v = bracket_basis(g, replace_at(y, i, k))
                    for r, a in enumerate(v):
                        if a:
                            rhs[r] += c * a
            residual = sub(lhs, rhs)
            if not is_zero(residual):
                violations.append(FilippovViolation(x, y, residual))
    return violations


def is_derivation(g: NLieAlgebra, D: Matrix) -> bool:
    d = g.dim
    if D.shape != (d, d):
        raise DimensionError(f"endomorphism of shape {D.shape} for dimension {d}")
    for idx in increasing_tuples(d, g.arity):
        lhs = D.apply(bracket_basis(g, idx))
        rhs = [Fraction(0)] * d
        for j, i in enumerate(idx):
            for r in range(d):
                c = D[r, i]
                if c:
                    v = bracket_basis(g, replace_at(idx, j, r))
                    for k, a in enumerate(v):
                        if a:
                            rhs[k] += c * a
        if tuple(lhs) != tuple(rhs):
            return False
    return True


def derivations(g: NLieAlgebra) -> Subspace:
    """Der(G) inside the d*d-dimensional space of endomorphisms.

    Endomorphisms are flattened row-major: entry ``D[a, b]`` sits at
    ``a * d + b``.
    """
    d = g.dim
    rows = []
    for idx in increasing_tuples(d, g.arity):
        b = bracket_basis(g, idx)
        for k in range(d):
            row: dict = {}
            for r, a in enumerate(b):
                if a:
                    row[k * d + r] = row.get(k * d + r, 0) + a
            for j, i in enumerate(idx):
                for r in range(d):
                    a = bracket_basis(g, replace_at(idx, j, r))[k]
                    if a:
                        row[r * d + i] = row.get(r * d + i, 0) - a
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return kernel_of_rows(rows, d * d)


def invariants(g: NLieAlgebra) -> Subspace:
    """``Inv(G) = {x : {x, y_1, ..., y_(n-1)} = 0 for all y}``."""
    d = g.dim
    rows = []
    for j in increasing_tuples(d, g.arity - 1):
        vals = [bracket_basis(g, (i,) + j) for i in range(d)]
        for k in range(d):
            row = {i: vals[i][k] for i in range(d) if vals[i][k]}
            if row:
                rows.append(row)
    return kernel_of_rows(rows, d)


def is_stable(g: NLieAlgebra, s: Subspace) -> bool:
    """True iff ``{x, y_1, ..., y_(n-1)}`` lies in ``s`` whenever ``x`` does."""
    if s.ambient_dim != g.dim:
        raise DimensionError(f"subspace of K^{s.ambient_dim} in algebra of dimension {g.dim}")
    for j in increasing_tuples(g.dim, g.arity - 1):
        A = basis_ad(g, j)
        for x in s.basis:
            if not s.contains(A.apply(x)):
                return False
    return True


def is_nlie_morphism(g: NLieAlgebra, h: NLieAlgebra, phi: Matrix) -> bool:
    """Check ``phi {x_1..x_n} = {phi x_1, ..., phi x_n}`` on basis tuples."""
    if g.arity != h.arity:
        raise DimensionError(f"arity {g.arity} != {h.arity}")
    if phi.shape != (h.dim, g.dim):
        raise DimensionError(f"map of shape {phi.shape}, expected {(h.dim, g.dim)}")
    images = phi.columns()
    for idx in increasing_tuples(g.dim, g.arity):
        lhs = phi.apply(bracket_basis(g, idx))
        rhs = bracket(h, *(images[i] for i in idx))
        if lhs != rhs:
            return False
    return True


# --- built-in algebras --------------------------------------------------------

def _validated(g: NLieAlgebra) -> NLieAlgebra:
    bad = check_filippov(g)
    if bad:
        raise RuntimeError(f"built-in algebra {g.name} fails the fundamental identity: {bad[0]}")
    return g


def abelian(n: int, d: int) -> NLieAlgebra:
    return _validated(NLieAlgebra(n, d, {}, name=f"abelian:{n},{d}"))


def sl2() -> NLieAlgebra:
    """Basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    e, f, h = (unit_vector(3, i) for i in range(3))
    structure = {
        (0, 1): h,
        (0, 2): tuple(-2 * a for a in e),
        (1, 2): tuple(2 * a for a in f),
    }
    return _validated(NLieAlgebra(2, 3, structure, ("e", "f", "h"), "sl2"))


def heisenberg3() -> NLieAlgebra:
    """Basis (x, y, z): [x,y] = z."""
    return _validated(NLieAlgebra(2, 3, {(0, 1): unit_vector(3, 2)}, ("x", "y", "z"), "heisenberg3"))


def simple_nlie(n: int) -> NLieAlgebra:
    """The (n+1)-dimensional simple n-Lie algebra.

    With basis e_1..e_(n+1) (one-based), omitting e_i from the bracket gives
    ``(-1)^(n+1-i) e_i``.
    """
    d = n + 1
    structure = {}
    for i in range(1, d + 1):
        key = tuple(j - 1 for j in range(1, d + 1) if j != i)
        structure[key] = tuple((-1) ** (n + 1 - i) * a for a in unit_vector(d, i - 1))
    names = tuple(f"e{i}" for i in range(1, d + 1))
    return _validated(NLieAlgebra(n, d, structure, names, f"simple:{n}"))


_PARAM_RE = re.compile(r"^(abelian|simple|simple_nlie)\s*[:(]\s*([\d,\s]+?)\s*\)?$")


def builtin(name: str) -> NLieAlgebra:
    """Look up a built-in algebra by name.

    Accepted: ``sl2``, ``heisenberg3``, ``abelian:n,d``, ``simple:n`` (also
    ``abelian(n,d)`` and ``simple_nlie(n)``).
    """
    key = name.strip()
    if key == "sl2":
        return sl2()
    if key == "heisenberg3":
        return heisenberg3()
    m = _PARAM_RE.match(key)
    if m:
        try:
            args = [int(a) for a in m.group(2).split(",")]
        except ValueError:
            raise UnknownAlgebraError(f"bad parameters in {name!r}") from None
        kind = m.group(1)
        if kind == "abelian" and len(args) == 2 and args[0] >= 2 and args[1] >= 0:
            return abelian(*args)
        if kind.startswith("simple") and len(args) == 1 and args[0] >= 2:
            return simple_nlie(args[0])
        raise UnknownAlgebraError(f"bad parameters in {name!r}")
    raise UnknownAlgebraError(f"unknown built-in algebra {name!r}")
