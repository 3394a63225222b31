"""Cochain complex of L^n(G) with values in G, and its cohomology.

A p-cochain is a skew-symmetric p-linear map ``L^n(G)^p -> G``; it is stored
by its values on increasing p-tuples of quotient basis indices.  Coordinate
``t * d + k`` holds the k-th component of the value on the t-th increasing
tuple (lexicographic order), so a degree-0 cochain is just an element of G.

The coboundary is the Chevalley-Eilenberg operator for the representation
``ad~`` of L^n(G) on G, with 0-based positions::

    (df)(a_0..a_p) = sum_i (-1)^i ad~(a_i) f(.., a_i omitted, ..)
                   + sum_{i<j} (-1)^(i+j) f([a_i, a_j], .., a_i, a_j omitted, ..)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

from . import lie
from .combinatorics import increasing_tuples, tuple_index
from .linalg import DimensionError, Matrix, Subspace, kernel_of_rows, rank_of_rows, vector
from .quotient import QuotientLie


@dataclass(frozen=True)
class Cochain:
    degree: int
    lie_dim: int
    target_dim: int
    coords: tuple

    def __post_init__(self):
        expected = cochain_dim(self.lie_dim, self.target_dim, self.degree)
        if len(self.coords) != expected:
            raise DimensionError(f"{len(self.coords)} coordinates, expected {expected}")
        object.__setattr__(self, "coords", vector(self.coords))

    def value(self, idx: Sequence[int]) -> tuple:
        """Value on an increasing tuple of quotient basis indices."""
        t = tuple_index(self.lie_dim, self.degree)[tuple(idx)]
        d = self.target_dim
        return self.coords[t * d:(t + 1) * d]


class DegreeSummary(NamedTuple):
    degree: int
    cochain_dim: int
    rank: int  # rank of the coboundary leaving this degree
    kernel_dim: int
    h_dim: int


def cochain_dim(m: int, d: int, p: int) -> int:
    return comb(m, p) * d if p >= 0 else 0


def _differential_rows(q: QuotientLie, p: int) -> list[dict]:
    """Sparse rows of the coboundary from degree p to p+1."""
    m, d = q.lie_dim, q.source.dim
    src_index = tuple_index(m, p)
    ads = [q.ad_matrix(a).entries for a in range(m)]
    L = q.lie
    brackets = {
        (a, b): [(l, x) for l, x in enumerate(lie.bracket_basis(L, a, b)) if x]
        for a, b in combinations(range(m), 2)
    }
    rows = []
    for U in increasing_tuples(m, p + 1):
        block = [dict() for _ in range(d)]
        for i, a in enumerate(U):
            t = src_index[U[:i] + U[i + 1:]]
            sign = -1 if i % 2 else 1
            A = ads[a]
            for r in range(d):
                row = block[r]
                for k, x in enumerate(A[r]):
                    if x:
                        col = t * d + k
                        row[col] = row.get(col, 0) + sign * x
        for i, j in combinations(range(p + 1), 2):
            terms = brackets[(U[i], U[j])]
            if not terms:
                continue
            rest = U[:i] + U[i + 1:j] + U[j + 1:]
            sign = -1 if (i + j) % 2 else 1
            for l, x in terms:
                if l in rest:
                    continue
                # move l from the front into sorted position
                pos = sum(1 for r in rest if r < l)
                t = src_index[rest[:pos] + (l,) + rest[pos:]]
                c = sign * (-1 if pos % 2 else 1) * x
                for r in range(d):
                    col = t * d + r
                    row = block[r]
                    row[col] = row.get(col, 0) + c
        for row in block:
            rows.append({k: v for k, v in row.items() if v})
    return rows


def differential_matrix(q: QuotientLie, p: int) -> Matrix:
    """Dense matrix of the coboundary from degree p to degree p+1."""
    m, d = q.lie_dim, q.source.dim
    ncols = cochain_dim(m, d, p)
    dense = []
    for row in _differential_rows(q, p):
        r = [Fraction(0)] * ncols
        for k, v in row.items():
            r[k] = v
        dense.append(r)
    return Matrix(dense, ncols)


def differential(q: QuotientLie, f: Cochain) -> Cochain:
    m, d = q.lie_dim, q.source.dim
    if (f.lie_dim, f.target_dim) != (m, d):
        raise DimensionError("cochain does not match the quotient Lie algebra")
    coords = []
    for row in _differential_rows(q, f.degree):
        s = Fraction(0)
        for k, v in row.items():
            x = f.coords[k]
            if x:
                s += v * x
        coords.append(s)
    return Cochain(f.degree + 1, m, d, tuple(coords))


def _compose_is_zero(outer: list[dict], inner: list[dict]) -> bool:
    for row in outer:
        acc: dict = {}
        for k, v in row.items():
            for j, w in inner[k].items():
                acc[j] = acc.get(j, 0) + v * w
        if any(acc.values()):
            return False
    return True


def d_squared_zero(q: QuotientLie, p_max: int) -> bool:
    """Check that d o d vanishes on cochains of every degree up to ``p_max``."""
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    prev = _differential_rows(q, 0)
    for p in range(p_max + 1):
        nxt = _differential_rows(q, p + 1)
        if not _compose_is_zero(nxt, prev):
            return False
        prev = nxt
    return True


def cocycles(q: QuotientLie, p: int) -> Subspace:
    """Kernel of the coboundary leaving degree p."""
    return kernel_of_rows(_differential_rows(q, p), cochain_dim(q.lie_dim, q.source.dim, p))


def cohomology_dims(q: QuotientLie, p_max: int) -> list[DegreeSummary]:
    """``dim H^p = dim ker d_p - rank d_(p-1)`` for ``p = 0..p_max``."""
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    m, d = q.lie_dim, q.source.dim
    out = []
    prev_rank = 0
    for p in range(p_max + 1):
        n = cochain_dim(m, d, p)
        r = rank_of_rows(_differential_rows(q, p))
        ker = n - r
        out.append(DegreeSummary(p, n, r, ker, ker - prev_rank))
        prev_rank = r
    return out
