from __future__ import annotations

import itertools

import pytest

from fka import (
    SearchSpec,
    UnaryExpansion,
    check_kleene,
    check_suite,
    enumerate_expansions,
    enumerate_small_kleene_algebras,
    expand_ka_to_kat1,
)
from fka.errors import BudgetError, MissingTableError


def naive_scan(base, suite, table_names):
    """Oracle for the pruned search: check every full table combination."""
    n = base.n
    passing = []
    for combo in itertools.product(itertools.product(range(n), repeat=n),
                                   repeat=len(table_names)):
        exp = UnaryExpansion(base, dict(zip(table_names, combo)))
        if check_suite(exp, suite).all_hold:
            passing.append(exp)
    return passing


def test_no_antidomain_exists_on_a3(a3):
    result = enumerate_expansions(SearchSpec(a3.base, "kad", ("a",)))
    assert result.passing == ()
    assert result.covered == result.space == 27
    assert result.exhaustive
    assert result.certificate == "27/27"
    assert naive_scan(a3.base, "kad", ("a",)) == []


def test_kat1_search_on_a3_agrees_with_the_naive_scan(a3):
    result = enumerate_expansions(SearchSpec(a3.base, "kat1", ("t", "t'")))
    assert result.covered == result.space == 729
    found = {(p.table("t"), p.table("t'")) for p in result.passing}
    oracle = {(p.table("t"), p.table("t'"))
              for p in naive_scan(a3.base, "kat1", ("t", "t'"))}
    assert found == oracle
    canonical = expand_ka_to_kat1(a3.base)
    assert (canonical.table("t"), canonical.table("t'")) in found
    for p in result.passing:
        assert check_suite(p, "kat1").all_hold


def test_one_point_algebra_has_exactly_the_trivial_expansion(trivial):
    result = enumerate_expansions(SearchSpec(trivial, "kat1", ("t", "t'")))
    assert len(result.passing) == 1
    assert result.passing[0].table("t") == (0,)
    assert result.certificate == "1/1"


def test_every_corpus_algebra_admits_a_kat1_expansion(corpus):
    for alg in corpus:
        result = enumerate_expansions(SearchSpec(alg, "kat1", ("t", "t'")))
        assert result.exhaustive
        assert result.passing, alg.name


def test_d_table_search_separates_predomain_from_domain(a3):
    predomain = enumerate_expansions(SearchSpec(a3.base, "predomain", ("d",)))
    domain = enumerate_expansions(SearchSpec(a3.base, "domain", ("d",)))
    bundled = a3.table("d")
    assert bundled in {p.table("d") for p in predomain.passing}
    assert bundled not in {p.table("d") for p in domain.passing}
    assert predomain.exhaustive and domain.exhaustive


def test_search_budget_is_checked_up_front(a3):
    with pytest.raises(BudgetError, match="exceeds budget"):
        enumerate_expansions(SearchSpec(a3.base, "kad", ("a",), budget=10))


def test_search_requires_the_tables_the_suite_reads(a3):
    with pytest.raises(MissingTableError, match="needs table"):
        enumerate_expansions(SearchSpec(a3.base, "kat1", ("t",)))
    # kad over an enumerated d is not the same as over a; d cannot stand in
    with pytest.raises(MissingTableError, match="needs table"):
        enumerate_expansions(SearchSpec(a3.base, "kad", ("d",)))


def test_searchspec_validation(a3):
    with pytest.raises(ValueError, match="cannot enumerate"):
        SearchSpec(a3.base, "kat1", ("arrow",))
    with pytest.raises(ValueError, match="duplicate"):
        SearchSpec(a3.base, "kat1", ("t", "t"))
    with pytest.raises(ValueError, match="non-enumerable suite"):
        SearchSpec(a3.base, "boolean-test-image", ("t",))


def test_corpus_counts_and_membership(a3, corpus):
    by_size = {}
    for alg in corpus:
        by_size.setdefault(alg.n, []).append(alg)
    assert [len(by_size.get(n, [])) for n in (1, 2, 3)] == [1, 1, 3]
    for alg in corpus:
        assert check_kleene(alg).all_hold
    base = a3.base
    assert any(
        alg.n == 3 and alg.add == base.add and alg.mul == base.mul and alg.star == base.star
        for alg in corpus
    )


def test_corpus_against_unpruned_oracle():
    # Independent route: filter the full table spaces for n = 3 instead of
    # constraining cells up front; both must yield the same canonical set.
    from fka.model import FiniteKleeneAlgebra
    from fka.search import _canonical_key

    n = 3
    adds = []
    for flat in itertools.product(range(n), repeat=n * n):
        add = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        if any(add[x][0] != x or add[0][x] != x for x in range(n)):
            continue
        if any(add[x][x] != x for x in range(n)):
            continue
        if any(add[x][y] != add[y][x] for x in range(n) for y in range(n)):
            continue
        if any(add[add[x][y]][z] != add[x][add[y][z]]
               for x in range(n) for y in range(n) for z in range(n)):
            continue
        adds.append(add)

    keys = set()
    for add in adds:
        for flat in itertools.product(range(n), repeat=n * n):
            mul = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
            if any(mul[x][1] != x or mul[1][x] != x for x in range(n)):
                continue
            if any(mul[x][0] != 0 or mul[0][x] != 0 for x in range(n)):
                continue
            for star in itertools.product(range(n), repeat=n):
                candidate = FiniteKleeneAlgebra("oracle", n, 0, 1, add, mul, star)
                if check_kleene(candidate).all_hold:
                    keys.add(_canonical_key(n, add, mul, star))

    corpus_keys = {
        _canonical_key(3, alg.add, alg.mul, alg.star)
        for alg in enumerate_small_kleene_algebras(3)
        if alg.n == 3
    }
    assert keys == corpus_keys
    assert len(keys) == 3


def test_corpus_size_bounds():
    with pytest.raises(ValueError):
        enumerate_small_kleene_algebras(4)
    assert len(enumerate_small_kleene_algebras(1)) == 1
