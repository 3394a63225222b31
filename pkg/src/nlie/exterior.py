"""The exterior power of degree n-1 and derivations acting on it.

The canonical basis of the degree-k exterior power of ``K^d`` is the list of
strictly increasing k-subsets of ``range(d)`` in lexicographic order;
coordinates everywhere in the package refer to this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import NLieAlgebra, basis_ad
from .combinatorics import alternating_terms, increasing_tuples, replace_at, sort_with_sign, tuple_index
from .linalg import DimensionError, Matrix, Vector


@dataclass(frozen=True)
class ExtBasis:
    d: int
    k: int

    @property
    def subsets(self) -> tuple:
        return increasing_tuples(self.d, self.k)

    @property
    def dim(self) -> int:
        return comb(self.d, self.k) if self.k >= 0 else 0

    def index(self, subset: Sequence[int]) -> int:
        return tuple_index(self.d, self.k)[tuple(subset)]

    def label(self, i: int) -> str:
        return "^".join(f"e{j}" for j in self.subsets[i])


def ext_dim(d: int, k: int) -> int:
    return comb(d, k) if k >= 0 else 0


def wedge(*xs: Sequence, d: int | None = None) -> Vector:
    """Coordinates of ``x_1 ^ ... ^ x_k`` over the canonical basis."""
    if d is None:
        if not xs:
            raise DimensionError("ambient dimension needed for the empty wedge")
        d = len(xs[0])
    for x in xs:
        if len(x) != d:
            raise DimensionError(f"argument of length {len(x)} in dimension {d}")
    k = len(xs)
    out = [Fraction(0)] * ext_dim(d, k)
    index = tuple_index(d, k)
    for key, c in alternating_terms(xs).items():
        out[index[key]] = c
    return tuple(out)


def extend_derivation(f: Matrix, k: int) -> Matrix:
    """Matrix of the degree-zero derivation D_f on the degree-k exterior power.

    ``D_f(w_1 ^ ... ^ w_k) = sum_i w_1 ^ ... ^ f(w_i) ^ ... ^ w_k``.
    """
    if f.rows != f.cols:
        raise DimensionError(f"endomorphism must be square, got {f.shape}")
    d = f.rows
    subsets = increasing_tuples(d, k)
    index = tuple_index(d, k)
    N = len(subsets)
    cols = []
    for s in subsets:
        col = [Fraction(0)] * N
        for pos, i in enumerate(s):
            for r in range(d):
                c = f[r, i]
                if not c:
                    continue
                sign, key = sort_with_sign(replace_at(s, pos, r))
                if sign:
                    col[index[key]] += sign * c
        cols.append(col)
    return Matrix.from_columns(cols, N)


def ad_ext(g: NLieAlgebra) -> Matrix:
    """The linear map from the exterior power to End(G), as a d^2 x C(d, n-1) matrix.

    Column ``S`` is ``ad(e_S)`` flattened row-major.
    """
    d = g.dim
    cols = [basis_ad(g, s).flatten() for s in increasing_tuples(d, g.arity - 1)]
    return Matrix.from_columns(cols, d * d)


def ad_of(g: NLieAlgebra, s: Sequence) -> Matrix:
    """``ad_G(s)`` for an exterior vector ``s``, as a d x d matrix."""
    N = ext_dim(g.dim, g.arity - 1)
    if len(s) != N:
        raise DimensionError(f"exterior vector of length {len(s)}, expected {N}")
    d = g.dim
    out = [[Fraction(0)] * d for _ in range(d)]
    for c, key in zip(s, increasing_tuples(d, g.arity - 1)):
        if c:
            A = basis_ad(g, key)
            for i in range(d):
                for j in range(d):
                    if A[i, j]:
                        out[i][j] += c * A[i, j]
    return Matrix(out, d)


def act(g: NLieAlgebra, s1: Sequence, s2: Sequence) -> Vector:
    """``D_{ad_G(s1)}(s2)``: the derivation induced by ``ad_G(s1)`` applied to ``s2``."""
    return extend_derivation(ad_of(g, s1), g.arity - 1).apply(s2)
