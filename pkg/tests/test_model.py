from __future__ import annotations

import itertools

import pytest

from fka import FiniteKleeneAlgebra, TwoSortedKat, UnaryExpansion, check_kleene
from fka.errors import PreconditionError


def test_a3_order_is_the_chain(a3):
    alg = a3.base
    assert alg.leq(2, 1)
    assert not alg.leq(1, 2)
    assert alg.leq(0, 2) and alg.leq(0, 1)
    for x in range(alg.n):
        assert alg.leq(alg.zero, x)


def test_leq_is_a_partial_order_with_bottom_zero(a3, a4, corpus):
    for alg in [a3.base, a4.base, *corpus]:
        n = alg.n
        for x in range(n):
            assert alg.leq(x, x)
        for x, y in itertools.product(range(n), repeat=2):
            if alg.leq(x, y) and alg.leq(y, x):
                assert x == y
        for x, y, z in itertools.product(range(n), repeat=3):
            if alg.leq(x, y) and alg.leq(y, z):
                assert alg.leq(x, z)


def test_star_constants_and_unfolding_bounds(a3, a4, corpus):
    for alg in [a3.base, a4.base, *corpus]:
        assert check_kleene(alg).all_hold
        assert alg.star[alg.zero] == alg.one
        assert alg.star[alg.one] == alg.one
        for x in range(alg.n):
            assert alg.leq(alg.one, alg.star[x])
            assert alg.leq(alg.mul[x][alg.star[x]], alg.star[x])


def test_join_folds_from_zero(a3):
    alg = a3.base
    assert alg.join([]) == alg.zero
    assert alg.join([2]) == 2
    assert alg.join([0, 2, 1]) == 1
    # commutativity makes the fold order irrelevant
    for perm in itertools.permutations(range(3)):
        assert alg.join(perm) == 1


def test_table_shape_validation():
    with pytest.raises(ValueError, match="expected 2 rows"):
        FiniteKleeneAlgebra("bad", 2, 0, 1, ((0, 1),), ((0, 0), (0, 1)), (1, 1))
    with pytest.raises(ValueError, match="out of range"):
        FiniteKleeneAlgebra("bad", 2, 0, 1, ((0, 5), (1, 1)), ((0, 0), (0, 1)), (1, 1))
    with pytest.raises(ValueError, match="zero and one"):
        FiniteKleeneAlgebra("bad", 2, 0, 0, ((0, 1), (1, 1)), ((0, 0), (0, 1)), (1, 1))


def test_trivial_algebra_is_admitted(trivial):
    assert trivial.zero == trivial.one == 0
    assert check_kleene(trivial).all_hold


def test_expansion_rejects_unknown_operator(a3):
    with pytest.raises(ValueError, match="unknown unary operator"):
        UnaryExpansion(a3.base, {"q": (0, 1, 2)})


def test_expansion_extended_overrides(a3):
    extended = a3.extended({"t": (0, 1, 1)})
    assert extended.has("t") and extended.has("d")
    again = extended.extended({"t": (0, 0, 0)})
    assert again.table("t") == (0, 0, 0)
    assert a3.has("t") is False  # original untouched


def test_two_sorted_model_validates_complement_map(a3):
    with pytest.raises(PreconditionError, match="leaves the test set"):
        TwoSortedKat(a3.base, frozenset({0, 1}), {0: 2, 1: 0})
    with pytest.raises(PreconditionError, match="exactly on the test set"):
        TwoSortedKat(a3.base, frozenset({0, 1}), {0: 1})
