"""Expansion constructions: canonical test operators, residuals, derived
domain, and the negative-cone candidate set.

Each construction returns a fresh UnaryExpansion (or table) and never
mutates its input. Preconditions marked "assumes" are not re-checked
here; the ones marked "verifies" raise PreconditionError.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import MissingTableError, PreconditionError
from .model import AxiomReport, FiniteKleeneAlgebra, UnaryExpansion
from .theories import check_boolean_on_subset, check_two_sorted_kat


def expand_ka_to_kat1(algebra: FiniteKleeneAlgebra) -> UnaryExpansion:
    """Canonical test operators over any Kleene algebra (assumes the
    Kleene laws hold): t collapses everything nonzero to 1, and t' swaps
    the constants while fixing the rest."""
    t = tuple(algebra.zero if x == algebra.zero else algebra.one for x in range(algebra.n))
    tp = tuple(
        algebra.zero if x == algebra.one else algebra.one if x == algebra.zero else x
        for x in range(algebra.n)
    )
    return UnaryExpansion(algebra, {"t": t, "t'": tp})


def expand_kat_to_kat1(
    algebra: FiniteKleeneAlgebra,
    tests: Iterable[int],
    neg: Mapping[int, int],
) -> UnaryExpansion:
    """Test operators from a designated Boolean test subalgebra (verifies
    it is one): t fixes tests and sends everything else to 1, t' negates
    tests and fixes everything else. The image of t is exactly the test
    set."""
    members = frozenset(tests)
    report = check_two_sorted_kat(algebra, members, neg)
    if not report.all_hold:
        raise PreconditionError(
            f"test set is not a Boolean subalgebra (fails {', '.join(report.failures())})"
        )
    t = tuple(x if x in members else algebra.one for x in range(algebra.n))
    tp = tuple(neg[x] if x in members else x for x in range(algebra.n))
    return UnaryExpansion(algebra, {"t": t, "t'": tp})


def residual_table(algebra: FiniteKleeneAlgebra) -> tuple[tuple[int, ...], ...]:
    """Right residual of multiplication: x -> y is the join of every z
    with z x <= y. On a finite carrier the join always exists, so the
    residuation law x y <= z iff x <= y -> z holds whenever the input is a
    Kleene algebra (assumed)."""
    n = algebra.n
    return tuple(
        tuple(
            algebra.join(z for z in range(n) if algebra.leq(algebra.mul[z][x], y))
            for y in range(n)
        )
        for x in range(n)
    )


def expand_ka_to_residuated_kat1(algebra: FiniteKleeneAlgebra) -> UnaryExpansion:
    """Canonical t plus the residual table, with t' derived as
    t(t(x) -> 0) rather than taken as primitive (assumes the Kleene laws
    hold)."""
    arrow = residual_table(algebra)
    t = expand_ka_to_kat1(algebra).table("t")
    tp = tuple(t[arrow[t[x]][algebra.zero]] for x in range(algebra.n))
    return UnaryExpansion(algebra, {"t": t, "t'": tp}, arrow)


def d_from_a(exp: UnaryExpansion) -> UnaryExpansion:
    """Add the derived domain table d = a after a (pointwise double
    application); replaces any existing d table."""
    if not exp.has("a"):
        raise MissingTableError("missing table a")
    a = exp.table("a")
    return exp.extended({"d": tuple(a[a[x]] for x in range(exp.base.n))})


def negcone_boolean_candidates(
    algebra: FiniteKleeneAlgebra,
) -> tuple[frozenset[int], AxiomReport]:
    """Idempotent subidentities that have a complementary subidentity,
    plus the verdict on whether they form a Boolean subalgebra.

    The candidate set is syntactic; it serves as the comparison point for
    test images that are strictly smaller, and the verdict does not claim
    maximality."""
    n = algebra.n
    candidates = frozenset(
        x
        for x in range(n)
        if algebra.leq(x, algebra.one)
        and algebra.mul[x][x] == x
        and any(
            algebra.leq(y, algebra.one)
            and algebra.add[x][y] == algebra.one
            and algebra.mul[x][y] == algebra.zero
            and algebra.mul[y][x] == algebra.zero
            for y in range(n)
        )
    )
    report = check_boolean_on_subset(algebra, candidates, None, "negcone-boolean")
    return candidates, report
