"""Random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from nlie.algebra import (
    NLieAlgebra,
    abelian,
    basis_ad,
    bracket,
    check_filippov,
    heisenberg3,
    simple_nlie,
    sl2,
)
from nlie.combinatorics import increasing_tuples
from nlie.linalg import Matrix, span


def builtins() -> list[NLieAlgebra]:
    """The built-in algebras exercised by the suites (all have d <= 6, n <= 4)."""
    return [
        sl2(),
        heisenberg3(),
        abelian(2, 3),
        abelian(3, 4),
        abelian(4, 5),
        simple_nlie(2),
        simple_nlie(3),
        simple_nlie(4),
    ]


def rand_scalar(rng: random.Random, bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 2))


def rand_vector(rng: random.Random, n: int, density: float = 1.0) -> tuple:
    return tuple(rand_scalar(rng) if rng.random() < density else Fraction(0) for _ in range(n))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([rand_vector(rng, cols) for _ in range(rows)], cols)


def rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = rand_matrix(rng, n, n)
        if m.det():
            return m


def inverse(m: Matrix) -> Matrix:
    n = m.rows
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.entries)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return Matrix([r[n:] for r in a], n)


def change_basis(g: NLieAlgebra, P: Matrix) -> NLieAlgebra:
    """Isomorphic copy: new bracket of basis vectors = P^-1 {P e_i1, ..., P e_in}."""
    Pinv = inverse(P)
    cols = P.columns()
    structure = {idx: Pinv.apply(bracket(g, *(cols[i] for i in idx))) for idx in increasing_tuples(g.dim, g.arity)}
    return NLieAlgebra(g.arity, g.dim, structure, name=f"{g.name}~")


def direct_sum(g: NLieAlgebra, h: NLieAlgebra) -> NLieAlgebra:
    assert g.arity == h.arity
    d = g.dim + h.dim
    structure = {}
    for k, v in g.structure.items():
        structure[k] = tuple(v) + (0,) * h.dim
    for k, v in h.structure.items():
        structure[tuple(i + g.dim for i in k)] = (0,) * g.dim + tuple(v)
    return NLieAlgebra(g.arity, d, structure, name=f"{g.name}+{h.name}")


def twisted_simple(rng: random.Random, n: int) -> NLieAlgebra:
    """(n+1)-dimensional n-Lie algebra from a random symmetric matrix."""
    d = n + 1
    B = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            B[i][j] = B[j][i] = rng.randint(-2, 2)
    structure = {}
    for i in range(d):
        key = tuple(j for j in range(d) if j != i)
        structure[key] = tuple((-1) ** (n - i) * B[i][j] for j in range(d))
    return NLieAlgebra(n, d, structure, name="twisted")


def semidirect(rng: random.Random, k: int) -> NLieAlgebra:
    """Lie algebra K t + K^k with [t, v] = A v for a random k x k matrix A."""
    A = rand_matrix(rng, k, k)
    d = k + 1
    structure = {}
    for j in range(k):
        structure[(0, j + 1)] = (0,) + A.column(j)
    return NLieAlgebra(2, d, structure, name="semidirect")


def random_algebra(rng: random.Random) -> NLieAlgebra:
    """A random small n-Lie algebra that satisfies the fundamental identity."""
    kind = rng.randrange(5)
    if kind == 0:
        g = twisted_simple(rng, rng.choice([2, 3, 4]))
    elif kind == 1:
        g = semidirect(rng, rng.randint(1, 3))
    elif kind == 2:
        n = rng.choice([2, 3])
        g = direct_sum(simple_nlie(n), abelian(n, rng.randint(1, 2)))
    elif kind == 3:
        g = direct_sum(heisenberg3(), abelian(2, 1))
    else:
        g = rng.choice([sl2(), heisenberg3(), simple_nlie(3)])
    if rng.random() < 0.5:
        g = change_basis(g, rand_invertible(rng, g.dim))
    assert not check_filippov(g), g
    return g


def stable_closure(g: NLieAlgebra, vectors) -> object:
    """Smallest subspace containing ``vectors`` and closed under every ad(e_J)."""
    ads = [basis_ad(g, j) for j in increasing_tuples(g.dim, g.arity - 1)]
    s = span(vectors, g.dim)
    while True:
        t = span(list(s.basis) + [A.apply(x) for A in ads for x in s.basis], g.dim)
        if t == s:
            return s
        s = t
