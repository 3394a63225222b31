"""The Lie algebra L^n(G) attached to an n-Lie algebra G.

``L^n(G)`` is the exterior power of degree n-1 modulo the relation subspace
``V`` spanned by ``D_{ad(s1)}(s2) + D_{ad(s2)}(s1)``; the bracket of two
classes is the class of ``D_{ad(s1)}(s2)``.  Quotient basis vectors are lifted
to the representative exterior basis vectors chosen by
:func:`nlie.linalg.quotient_map`, and every structure constant is computed on
those lifts.

Because the generating expression is bilinear and symmetric in (s1, s2),
pairs of basis vectors ``i <= j`` already span ``V``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from . import lie
from .algebra import NLieAlgebra, basis_ad, is_nlie_morphism
from .combinatorics import increasing_tuples
from .exterior import ExtBasis, act, ad_ext, ext_dim, extend_derivation, wedge
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    Vector,
    commutator,
    is_zero,
    quotient_map,
    span,
)


class NotAMorphismError(ValueError):
    pass


class DescentError(AssertionError):
    """The induced map does not preserve the relation subspace."""


def basis_derivations(g: NLieAlgebra) -> list[Matrix]:
    """``D_{ad_G(e_S)}`` on the exterior power, for each basis wedge ``e_S``."""
    k = g.arity - 1
    return [extend_derivation(basis_ad(g, s), k) for s in increasing_tuples(g.dim, k)]


def compute_V(g: NLieAlgebra, derivs: list[Matrix] | None = None) -> Subspace:
    N = ext_dim(g.dim, g.arity - 1)
    Ds = basis_derivations(g) if derivs is None else derivs
    gens = []
    for i in range(N):
        for j in range(i, N):
            v = tuple(a + b for a, b in zip(Ds[i].column(j), Ds[j].column(i)))
            if not is_zero(v):
                gens.append(v)
    return span(gens, N)


@dataclass(frozen=True, eq=False)
class QuotientLie:
    source: NLieAlgebra
    ext_dim: int
    V: Subspace
    reps: tuple
    project: Matrix  # lie_dim x ext_dim
    lie_dim: int
    c: dict  # (a, b) with a < b -> quotient coordinates of [a, b]
    adrep: Matrix  # d^2 x lie_dim, column a = ad of the lift of a, flattened

    @cached_property
    def lie(self) -> lie.LieAlgebra:
        return lie.LieAlgebra(self.lie_dim, self.c)

    @property
    def ext_basis(self) -> ExtBasis:
        return ExtBasis(self.source.dim, self.source.arity - 1)

    def lift(self, coords) -> Vector:
        """Representative in the exterior power of a quotient vector."""
        if len(coords) != self.lie_dim:
            raise DimensionError(f"quotient vector of length {len(coords)}, expected {self.lie_dim}")
        out = [Fraction(0)] * self.ext_dim
        for a, x in zip(self.reps, coords):
            out[a] = Fraction(x)
        return tuple(out)

    def ad_matrix(self, a: int) -> Matrix:
        """The representation applied to quotient basis vector ``a``, as a d x d matrix."""
        d = self.source.dim
        return Matrix.from_flat(self.adrep.column(a), d, d)

    def rep_labels(self) -> list[str]:
        basis = self.ext_basis
        return [basis.label(r) for r in self.reps]


def build(g: NLieAlgebra) -> QuotientLie:
    Ds = basis_derivations(g)
    V = compute_V(g, Ds)
    reps, project = quotient_map(V)
    m = len(reps)
    c = {}
    for a, b in combinations(range(m), 2):
        v = project.apply(Ds[reps[a]].column(reps[b]))
        if not is_zero(v):
            c[(a, b)] = v
    A = ad_ext(g)
    d = g.dim
    adrep = Matrix.from_columns([A.column(r) for r in reps], d * d)
    return QuotientLie(g, ext_dim(d, g.arity - 1), V, tuple(reps), project, m, c, adrep)


def check_lie(q: QuotientLie) -> list[lie.LieViolation]:
    return lie.violations(lie.LieAlgebra(q.lie_dim, q.c))


def check_ad_well_defined(q: QuotientLie) -> bool:
    """ad_G vanishes on the relation subspace."""
    A = ad_ext(q.source)
    return all(is_zero(A.apply(v)) for v in q.V.basis)


def check_ad_morphism(q: QuotientLie) -> bool:
    """The representation intertwines the quotient bracket with the commutator."""
    m = q.lie_dim
    ads = [q.ad_matrix(a) for a in range(m)]
    for a, b in combinations(range(m), 2):
        lhs = commutator(ads[a], ads[b])
        rhs = Matrix.from_flat(q.adrep.apply(lie.bracket_basis(q.lie, a, b)), q.source.dim, q.source.dim)
        if lhs != rhs:
            return False
    return True


def bracket_classes(q: QuotientLie, x, y) -> Vector:
    """Bracket of two quotient vectors, computed on their lifts."""
    return q.project.apply(act(q.source, q.lift(x), q.lift(y)))


def push_subspace(q: QuotientLie, s: Subspace) -> Subspace:
    """Image of the exterior power of ``s`` under the canonical surjection."""
    d = q.source.dim
    if s.ambient_dim != d:
        raise DimensionError(f"subspace of K^{s.ambient_dim} in algebra of dimension {d}")
    k = q.source.arity - 1
    gens = [q.project.apply(wedge(*rows, d=d)) for rows in combinations(s.basis, k)]
    return span(gens, q.lie_dim)


def is_nlie_ideal(q: QuotientLie, s: Subspace) -> bool:
    return lie.is_ideal(q.lie, push_subspace(q, s))


def is_nlie_cartan(q: QuotientLie, s: Subspace) -> bool:
    return lie.is_cartan(q.lie, push_subspace(q, s))


def exterior_power_map(phi: Matrix, k: int) -> Matrix:
    """The induced map on degree-k exterior powers: ``e_S -> phi e_s1 ^ ... ^ phi e_sk``."""
    src, dst = phi.cols, phi.rows
    images = phi.columns()
    cols = [wedge(*(images[i] for i in s), d=dst) for s in increasing_tuples(src, k)]
    return Matrix.from_columns(cols, ext_dim(dst, k))


def induced_lie_morphism(q: QuotientLie, q2: QuotientLie, phi: Matrix) -> Matrix:
    """Descend an n-Lie morphism ``source(q) -> source(q2)`` to the quotients.

    Raises :class:`NotAMorphismError` if ``phi`` is not an n-Lie morphism and
    :class:`DescentError` if the induced map fails to preserve the relation
    subspace or the brackets.
    """
    g, h = q.source, q2.source
    if not is_nlie_morphism(g, h, phi):
        raise NotAMorphismError("map does not preserve the n-ary brackets")
    L = exterior_power_map(phi, g.arity - 1)
    for v in q.V.basis:
        if not q2.V.contains(L.apply(v)):
            raise DescentError(f"relation {v} is not mapped into the target relations")
    cols = [q2.project.apply(L.column(r)) for r in q.reps]
    M = Matrix.from_columns(cols, q2.lie_dim)
    for a, b in combinations(range(q.lie_dim), 2):
        lhs = M.apply(lie.bracket_basis(q.lie, a, b))
        rhs = lie.bracket(q2.lie, cols[a], cols[b])
        if lhs != rhs:
            raise DescentError(f"induced map does not preserve the bracket of {(a, b)}")
    return M
