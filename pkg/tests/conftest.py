from __future__ import annotations

import pytest

from fka import (
    FiniteKleeneAlgebra,
    UnaryExpansion,
    enumerate_small_kleene_algebras,
    generate_relational_model,
    load_fixture,
    parse_relation,
)


@pytest.fixture(scope="session")
def a3() -> UnaryExpansion:
    return load_fixture("a3.fka")


@pytest.fixture(scope="session")
def a4() -> UnaryExpansion:
    return load_fixture("a4.fka")


@pytest.fixture(scope="session")
def trivial() -> FiniteKleeneAlgebra:
    return FiniteKleeneAlgebra("one_point", 1, 0, 0, ((0,),), ((0,),), (0,))


@pytest.fixture(scope="session")
def corpus() -> tuple[FiniteKleeneAlgebra, ...]:
    return enumerate_small_kleene_algebras(3)


# Generator sets kept sparse so closures stay well under the cap.
RELATIONAL_FIXTURES = (
    (1, ()),
    (1, ("rel 1 {(0,0)}",)),
    (2, ()),
    (2, ("rel 2 {(0,1)}",)),
    (2, ("rel 2 {(0,1)}", "rel 2 {(1,0)}")),
    (3, ("rel 3 {(0,1),(1,2)}",)),
    (3, ("rel 3 {(0,1)}", "rel 3 {(1,2)}")),
)


@pytest.fixture(scope="session")
def relational_models() -> tuple[UnaryExpansion, ...]:
    return tuple(
        generate_relational_model(m, [parse_relation(g) for g in gens])
        for m, gens in RELATIONAL_FIXTURES
    )
