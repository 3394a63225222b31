import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlie.algebra import (
    FilippovViolation,
    NLieAlgebra,
    StructureError,
    UnknownAlgebraError,
    abelian,
    ad,
    bracket,
    builtin,
    check_filippov,
    derivations,
    heisenberg3,
    invariants,
    is_derivation,
    is_nlie_morphism,
    is_stable,
    simple_nlie,
    sl2,
)
from nlie.combinatorics import increasing_tuples, sort_with_sign
from nlie.linalg import DimensionError, Matrix, Subspace, commutator, span, unit_vector

import oracles
from helpers import builtins, rand_matrix, rand_vector, random_algebra

F = Fraction


def e(d, i):
    return unit_vector(d, i)


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_with_sign((1, 0)) == (-1, (0, 1))
    assert sort_with_sign((1, 2, 1))[0] == 0


class TestConstruction:
    def test_rejects_unsorted(self):
        with pytest.raises(StructureError):
            NLieAlgebra(2, 3, {(1, 0): (0, 0, 1)})

    def test_rejects_out_of_range(self):
        with pytest.raises(StructureError):
            NLieAlgebra(2, 3, {(0, 3): (0, 0, 1)})

    def test_rejects_bad_value_length(self):
        with pytest.raises(StructureError):
            NLieAlgebra(2, 3, {(0, 1): (0, 1)})

    def test_rejects_small_arity(self):
        with pytest.raises(StructureError):
            NLieAlgebra(1, 3)

    def test_arity_above_dimension_is_abelian(self):
        g = NLieAlgebra(4, 2)
        assert not check_filippov(g)
        assert invariants(g).dim == 2

    def test_zero_dimensional(self):
        g = NLieAlgebra(3, 0)
        assert not check_filippov(g)
        assert derivations(g).dim == 0
        assert invariants(g).dim == 0


class TestBracket:
    def test_repeated_argument(self):
        g = sl2()
        x = (F(1), F(2), F(3))
        assert bracket(g, x, x) == (0, 0, 0)
        g3 = simple_nlie(3)
        assert bracket(g3, e(4, 0), e(4, 1), e(4, 0)) == (0,) * 4

    def test_sl2_table(self):
        g = sl2()
        assert bracket(g, e(3, 2), e(3, 0)) == (2, 0, 0)

    def test_sl2_expansion(self):
        # [e + h, f] = h - 2f
        g = sl2()
        assert bracket(g, (1, 0, 1), e(3, 1)) == (0, -2, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            bracket(sl2(), (1, 0), (0, 1, 0))
        with pytest.raises(DimensionError):
            bracket(sl2(), (1, 0, 0))

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_skew_symmetry(self, seed):
        rng = random.Random(seed)
        g = rng.choice(builtins())
        xs = [rand_vector(rng, g.dim) for _ in range(g.arity)]
        perm = list(range(g.arity))
        rng.shuffle(perm)
        sign, _ = sort_with_sign(perm)
        lhs = bracket(g, *(xs[i] for i in perm))
        assert lhs == tuple(sign * a for a in bracket(g, *xs))

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_multilinearity(self, seed):
        rng = random.Random(seed)
        g = rng.choice(builtins())
        xs = [rand_vector(rng, g.dim) for _ in range(g.arity)]
        y = rand_vector(rng, g.dim)
        c = F(rng.randint(-3, 3), rng.randint(1, 3))
        slot = rng.randrange(g.arity)
        mixed = list(xs)
        mixed[slot] = tuple(a + c * b for a, b in zip(xs[slot], y))
        other = list(xs)
        other[slot] = y
        expected = tuple(a + c * b for a, b in zip(bracket(g, *xs), bracket(g, *other)))
        assert bracket(g, *mixed) == expected


class TestFilippov:
    def test_abelian(self):
        assert check_filippov(abelian(3, 5)) == []

    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), simple_nlie(2), simple_nlie(3), simple_nlie(4), simple_nlie(5)])
    def test_builtins_pass(self, g):
        assert check_filippov(g) == []

    def test_sl2_brute_force_all_triples(self):
        # independent check through the sympy bracket on every basis triple
        table = {k: list(v) for k, v in sl2().structure.items()}
        br = oracles.table_bracket(table, 3, 2)
        E = [oracles.sympy.eye(3)[:, i] for i in range(3)]
        for x in range(3):
            for a, b in permutations(range(3), 2):
                lhs = br(E[x], br(E[a], E[b]))
                rhs = br(br(E[x], E[a]), E[b]) + br(E[a], br(E[x], E[b]))
                assert lhs == rhs

    def test_perturbed_sl2(self):
        g = sl2()
        bad = g.with_structure({**g.structure, (0, 1): e(3, 0)})
        found = check_filippov(bad)
        assert found
        # by hand: [h,[e,f]] - [[h,e],f] - [e,[h,f]] = [h,e] - [2e,f] - [e,-2f] = 2e
        assert FilippovViolation((2,), (0, 1), (2, 0, 0)) in found


class TestAd:
    def test_abelian(self):
        g = abelian(3, 4)
        assert ad(g, e(4, 0), e(4, 1)).is_zero()

    def test_sl2_h(self):
        assert ad(sl2(), e(3, 2)) == Matrix([[2, 0, 0], [0, -2, 0], [0, 0, 0]])

    def test_a4_e1_e2(self):
        A = ad(simple_nlie(3), e(4, 0), e(4, 1))
        assert A.apply(e(4, 2)) == e(4, 3)
        assert A.apply(e(4, 3)) == tuple(-a for a in e(4, 2))
        assert not any(A.apply(e(4, 0))) and not any(A.apply(e(4, 1)))


class TestDerivations:
    def test_zero_is_derivation(self):
        assert is_derivation(sl2(), Matrix.zeros(3, 3))

    def test_abelian_any(self):
        rng = random.Random(0)
        assert is_derivation(abelian(3, 4), rand_matrix(rng, 4, 4))
        assert derivations(abelian(3, 4)).dim == 16

    def test_sl2_ad_h(self):
        assert is_derivation(sl2(), ad(sl2(), e(3, 2)))

    def test_non_derivation(self):
        assert not is_derivation(sl2(), Matrix.identity(3))

    def test_sl2_dimension(self):
        assert oracles.derivation_dim({k: list(v) for k, v in sl2().structure.items()}, 3, 2) == 3
        assert derivations(sl2()).dim == 3

    def test_heisenberg_dimension(self):
        g = heisenberg3()
        assert oracles.derivation_dim({k: list(v) for k, v in g.structure.items()}, 3, 2) == 6
        D = derivations(g)
        assert D.dim == 6
        assert D.contains(ad(g, e(3, 0)).flatten())
        assert D.contains(ad(g, e(3, 1)).flatten())

    def test_a4_dimension(self):
        assert oracles.derivation_dim(oracles.a4_table(), 4, 3) == derivations(simple_nlie(3)).dim == 6

    @given(st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_inner_derivations(self, seed):
        rng = random.Random(seed)
        g = random_algebra(rng)
        xs = [rand_vector(rng, g.dim) for _ in range(g.arity - 1)]
        assert is_derivation(g, ad(g, *xs))

    @given(st.integers(0, 10**6))
    @settings(max_examples=15, deadline=None)
    def test_closed_under_commutator(self, seed):
        rng = random.Random(seed)
        g = rng.choice(builtins() + [random_algebra(rng)])
        D = derivations(g)
        d = g.dim

        def pick():
            coeffs = rand_vector(rng, D.dim)
            flat = [sum((c * b[k] for c, b in zip(coeffs, D.basis)), F(0)) for k in range(d * d)]
            return Matrix.from_flat(flat, d, d)

        D1, D2 = pick(), pick()
        assert is_derivation(g, D1)
        assert D.contains(commutator(D1, D2).flatten())


class TestInvariants:
    def test_abelian(self):
        assert invariants(abelian(3, 4)) == Subspace.full(4)

    def test_sl2(self):
        assert invariants(sl2()).dim == 0

    def test_heisenberg(self):
        assert invariants(heisenberg3()) == span([e(3, 2)], 3)

    @pytest.mark.parametrize("seed", range(8))
    def test_brute_force(self, seed):
        rng = random.Random(seed)
        g = random_algebra(rng)
        inv = invariants(g)
        table = {k: list(v) for k, v in g.structure.items()}
        assert inv.dim == oracles.invariants_dim(table, g.dim, g.arity)
        for x in inv.basis:
            for ys in increasing_tuples(g.dim, g.arity - 1):
                assert not any(bracket(g, x, *(e(g.dim, j) for j in ys)))


class TestStable:
    def test_trivial(self):
        for g in builtins():
            assert is_stable(g, Subspace.zero(g.dim))
            assert is_stable(g, Subspace.full(g.dim))

    def test_heisenberg_center(self):
        assert is_stable(heisenberg3(), span([e(3, 2)], 3))

    def test_not_stable(self):
        assert not is_stable(sl2(), span([e(3, 0)], 3))


class TestMorphisms:
    def test_identity(self):
        for g in builtins():
            assert is_nlie_morphism(g, g, Matrix.identity(g.dim))

    def test_zero(self):
        for g in builtins():
            assert is_nlie_morphism(g, g, Matrix.zeros(g.dim, g.dim))

    def test_sl2_rescaling(self):
        phi = Matrix([[2, 0, 0], [0, F(1, 2), 0], [0, 0, 1]])
        assert is_nlie_morphism(sl2(), sl2(), phi)

    def test_not_morphism(self):
        assert not is_nlie_morphism(sl2(), sl2(), Matrix.identity(3) * 2)

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            is_nlie_morphism(sl2(), simple_nlie(3), Matrix.zeros(4, 3))
        with pytest.raises(DimensionError):
            is_nlie_morphism(sl2(), sl2(), Matrix.zeros(2, 3))


class TestBuiltins:
    def test_names(self):
        assert builtin("sl2") == sl2()
        assert builtin("heisenberg3") == heisenberg3()
        assert builtin("abelian:3,5") == abelian(3, 5)
        assert builtin("abelian(3,5)") == abelian(3, 5)
        assert builtin("simple:3") == simple_nlie(3)
        assert builtin("simple_nlie(3)") == simple_nlie(3)

    @pytest.mark.parametrize("name", ["sl3", "abelian:3", "simple:1", "abelian:1,2", "simple:x"])
    def test_unknown(self, name):
        with pytest.raises(UnknownAlgebraError):
            builtin(name)

    def test_abelian_constants(self):
        g = abelian(3, 5)
        assert g.arity == 3 and g.dim == 5 and not g.structure

    def test_simple_sign_convention(self):
        g = simple_nlie(3)
        # omitting e_4 (one-based) gives (+1) e_4; omitting e_1 gives (-1) e_1
        assert g.structure[(0, 1, 2)] == e(4, 3)
        assert g.structure[(1, 2, 3)] == tuple(-a for a in e(4, 0))
