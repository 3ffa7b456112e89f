"""Axiom suites and their exhaustive evaluation over operation tables.

A suite is a fixed list of named laws. Each law is checked by enumerating
every assignment of its variables over the carrier (or over a designated
subset, for the Boolean-subalgebra checks) in lexicographic order, and the
first failing assignment is recorded as the witness. Inequations u <= v
are evaluated as add(u, v) = v; quasi-equations hold at an assignment when
the hypothesis fails or the conclusion holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import MissingTableError, PreconditionError
from .model import (
    AxiomReport,
    AxiomResult,
    FiniteKleeneAlgebra,
    TwoSortedKat,
    UnaryExpansion,
)


class Undetermined(Exception):
    """A partial-table lookup hit an unset cell (used by expansion search)."""


class Ops:
    """Table accessor handed to axiom checks.

    Binary base tables are always total and indexed directly. Unary tables
    go through methods so that search can substitute partially filled
    tables: looking up an unset (None) cell raises Undetermined. A missing
    d table falls back to the derived form a(a(x)) when a is available.
    """

    __slots__ = ("n", "zero", "one", "add", "mul", "star", "arrow",
                 "_t", "_tp", "_a", "_d")

    def __init__(self, base: FiniteKleeneAlgebra,
                 tables: Mapping[str, Sequence] | None = None,
                 arrow=None):
        tables = tables or {}
        self.n = base.n
        self.zero = base.zero
        self.one = base.one
        self.add = base.add
        self.mul = base.mul
        self.star = base.star
        self.arrow = arrow
        self._t = tables.get("t")
        self._tp = tables.get("t'")
        self._a = tables.get("a")
        self._d = tables.get("d")

    def leq(self, u: int, v: int) -> bool:
        return self.add[u][v] == v

    def _lookup(self, table, name: str, x: int) -> int:
        if table is None:
            raise MissingTableError(f"missing table {name}")
        v = table[x]
        if v is None:
            raise Undetermined
        return v

    def t(self, x: int) -> int:
        return self._lookup(self._t, "t", x)

    def tp(self, x: int) -> int:
        return self._lookup(self._tp, "t'", x)

    def a(self, x: int) -> int:
        return self._lookup(self._a, "a", x)

    def d(self, x: int) -> int:
        if self._d is not None:
            return self._lookup(self._d, "d", x)
        return self.a(self.a(x))

    def res(self, x: int, y: int) -> int:
        if self.arrow is None:
            raise MissingTableError("missing table arrow")
        return self.arrow[x][y]


@dataclass(frozen=True)
class Axiom:
    id: str
    vars: tuple[str, ...]
    law: str
    check: Callable[..., bool]

    @property
    def arity(self) -> int:
        return len(self.vars)


def _ax(axiom_id: str, variables: str, law: str, check) -> Axiom:
    return Axiom(axiom_id, tuple(variables), law, check)


SEMIRING = (
    _ax("add-assoc", "xyz", "(x + y) + z = x + (y + z)",
        lambda o, x, y, z: o.add[o.add[x][y]][z] == o.add[x][o.add[y][z]]),
    _ax("add-comm", "xy", "x + y = y + x",
        lambda o, x, y: o.add[x][y] == o.add[y][x]),
    _ax("add-idem", "x", "x + x = x",
        lambda o, x: o.add[x][x] == x),
    _ax("add-zero", "x", "x + 0 = x",
        lambda o, x: o.add[x][o.zero] == x),
    _ax("mul-assoc", "xyz", "(x y) z = x (y z)",
        lambda o, x, y, z: o.mul[o.mul[x][y]][z] == o.mul[x][o.mul[y][z]]),
    _ax("mul-one-left", "x", "1 x = x",
        lambda o, x: o.mul[o.one][x] == x),
    _ax("mul-one-right", "x", "x 1 = x",
        lambda o, x: o.mul[x][o.one] == x),
    _ax("mul-zero-left", "x", "0 x = 0",
        lambda o, x: o.mul[o.zero][x] == o.zero),
    _ax("mul-zero-right", "x", "x 0 = 0",
        lambda o, x: o.mul[x][o.zero] == o.zero),
    _ax("dist-left", "xyz", "x (y + z) = x y + x z",
        lambda o, x, y, z: o.mul[x][o.add[y][z]] == o.add[o.mul[x][y]][o.mul[x][z]]),
    _ax("dist-right", "xyz", "(x + y) z = x z + y z",
        lambda o, x, y, z: o.mul[o.add[x][y]][z] == o.add[o.mul[x][z]][o.mul[y][z]]),
)

STAR = (
    _ax("star-unfold-left", "x", "1 + x x* <= x*",
        lambda o, x: o.leq(o.add[o.one][o.mul[x][o.star[x]]], o.star[x])),
    _ax("star-unfold-right", "x", "1 + x* x <= x*",
        lambda o, x: o.leq(o.add[o.one][o.mul[o.star[x]][x]], o.star[x])),
    _ax("star-induct-left", "xyz", "y + x z <= z  =>  x* y <= z",
        lambda o, x, y, z: not o.leq(o.add[y][o.mul[x][z]], z)
        or o.leq(o.mul[o.star[x]][y], z)),
    _ax("star-induct-right", "xyz", "y + z x <= z  =>  y x* <= z",
        lambda o, x, y, z: not o.leq(o.add[y][o.mul[z][x]], z)
        or o.leq(o.mul[y][o.star[x]], z)),
)

PREDOMAIN = (
    _ax("d-left-preserver", "x", "x <= d(x) x",
        lambda o, x: o.leq(x, o.mul[o.d(x)][x])),
    _ax("d-sublocality", "xy", "d(x y) <= d(x d(y))",
        lambda o, x, y: o.leq(o.d(o.mul[x][y]), o.d(o.mul[x][o.d(y)]))),
    _ax("d-subidentity", "x", "d(x) <= 1",
        lambda o, x: o.leq(o.d(x), o.one)),
    _ax("d-zero", "", "d(0) = 0",
        lambda o: o.d(o.zero) == o.zero),
    _ax("d-additive", "xy", "d(x + y) = d(x) + d(y)",
        lambda o, x, y: o.d(o.add[x][y]) == o.add[o.d(x)][o.d(y)]),
)

DOMAIN = PREDOMAIN + (
    _ax("d-locality", "xy", "d(x y) = d(x d(y))",
        lambda o, x, y: o.d(o.mul[x][y]) == o.d(o.mul[x][o.d(y)])),
)

KAD = (
    _ax("a-annihilation", "x", "a(x) x = 0",
        lambda o, x: o.mul[o.a(x)][x] == o.zero),
    _ax("a-locality", "xy", "a(x y) <= a(x a(a(y)))",
        lambda o, x, y: o.leq(o.a(o.mul[x][y]), o.a(o.mul[x][o.a(o.a(y))]))),
    _ax("a-complement", "x", "a(x) + a(a(x)) = 1",
        lambda o, x: o.add[o.a(x)][o.a(o.a(x))] == o.one),
)

KAT1 = (
    _ax("t-zero", "", "t(0) = 0",
        lambda o: o.t(o.zero) == o.zero),
    _ax("t-one", "", "t(1) = 1",
        lambda o: o.t(o.one) == o.one),
    _ax("t-add-closed", "xy", "t(t(x) + t(y)) = t(x) + t(y)",
        lambda o, x, y: o.t(o.add[o.t(x)][o.t(y)]) == o.add[o.t(x)][o.t(y)]),
    _ax("t-mul-closed", "xy", "t(t(x) t(y)) = t(x) t(y)",
        lambda o, x, y: o.t(o.mul[o.t(x)][o.t(y)]) == o.mul[o.t(x)][o.t(y)]),
    _ax("t-idem", "x", "t(x) t(x) = t(x)",
        lambda o, x: o.mul[o.t(x)][o.t(x)] == o.t(x)),
    _ax("t-subidentity", "x", "t(x) <= 1",
        lambda o, x: o.leq(o.t(x), o.one)),
    _ax("t-excluded-middle", "x", "1 <= t'(t(x)) + t(x)",
        lambda o, x: o.leq(o.one, o.add[o.tp(o.t(x))][o.t(x)])),
    _ax("t-no-contradiction", "x", "t'(t(x)) t(x) <= 0",
        lambda o, x: o.leq(o.mul[o.tp(o.t(x))][o.t(x)], o.zero)),
    _ax("t-complement-closed", "x", "t'(t(x)) = t(t'(t(x)))",
        lambda o, x: o.tp(o.t(x)) == o.t(o.tp(o.t(x)))),
)

SKAT_EXTRA = (
    _ax("t-additive", "xy", "t(x + y) = t(x) + t(y)",
        lambda o, x, y: o.t(o.add[x][y]) == o.add[o.t(x)][o.t(y)]),
    _ax("t-left-preserver", "x", "x <= t(x) x",
        lambda o, x: o.leq(x, o.mul[o.t(x)][x])),
    _ax("t-least-left-preserver", "xy", "t(t(x) y) <= t(x)",
        lambda o, x, y: o.leq(o.t(o.mul[o.t(x)][y]), o.t(x))),
    _ax("t-sublocality", "xy", "t(x y) <= t(x t(y))",
        lambda o, x, y: o.leq(o.t(o.mul[x][y]), o.t(o.mul[x][o.t(y)]))),
)

# The strong suite is, by definition, the full one-sorted suite plus the
# four strengthening laws; an expansion passing skat thus passes kat1.
SKAT = KAT1 + SKAT_EXTRA

#: Not part of any suite: locality for t separates relational instances
#: (where it holds) from expansions like the bundled three-element chain.
T_LOCALITY = _ax("t-locality", "xy", "t(x y) = t(x t(y))",
                 lambda o, x, y: o.t(o.mul[x][y]) == o.t(o.mul[x][o.t(y)]))

RESIDUATED_KA = (
    _ax("residuation", "xyz", "x y <= z  <=>  x <= y -> z",
        lambda o, x, y, z: o.leq(o.mul[x][y], z) == o.leq(x, o.res(y, z))),
)

# Residuated test suite: the first six one-sorted laws (those not
# mentioning t') plus the two residual complement laws.
RESIDUATED_KAT1 = KAT1[:6] + (
    _ax("r-excluded-middle", "x", "1 <= t(t(x) -> 0) + t(x)",
        lambda o, x: o.leq(o.one, o.add[o.t(o.res(o.t(x), o.zero))][o.t(x)])),
    _ax("r-no-contradiction", "x", "t(t(x) -> 0) t(x) <= 0",
        lambda o, x: o.leq(o.mul[o.t(o.res(o.t(x), o.zero))][o.t(x)], o.zero)),
)

SUITES: dict[str, tuple[Axiom, ...]] = {
    "semiring": SEMIRING,
    "star": STAR,
    "kleene": SEMIRING + STAR,
    "predomain": PREDOMAIN,
    "domain": DOMAIN,
    "kad": KAD,
    "kat1": KAT1,
    "skat": SKAT,
    "residuated-ka": RESIDUATED_KA,
    "residuated-kat1": RESIDUATED_KAT1,
}

#: Stable CLI-visible suite identifiers.
SUITE_IDS = tuple(SUITES) + ("boolean-test-image", "two-sorted-kat")

_SUITE_NEEDS = {
    "predomain": ("d",),
    "domain": ("d",),
    "kad": ("a",),
    "kat1": ("t", "t'"),
    "skat": ("t", "t'"),
    "residuated-ka": ("arrow",),
    "residuated-kat1": ("t", "arrow"),
}


def _as_expansion(target) -> UnaryExpansion:
    if isinstance(target, UnaryExpansion):
        return target
    if isinstance(target, FiniteKleeneAlgebra):
        return UnaryExpansion(target)
    raise TypeError(f"expected an algebra or expansion, got {type(target).__name__}")


def _require_tables(exp: UnaryExpansion, suite: str) -> None:
    for name in _SUITE_NEEDS.get(suite, ()):
        if name == "arrow":
            if exp.arrow is None:
                raise MissingTableError(f"missing table arrow for suite {suite}")
        elif name == "d":
            # d may be derived as a(a(x)) when only a is present
            if not (exp.has("d") or exp.has("a")):
                raise MissingTableError(f"missing table d for suite {suite}")
        elif not exp.has(name):
            raise MissingTableError(f"missing table {name} for suite {suite}")


def _run_axioms(ops: Ops, axioms: Iterable[Axiom], suite: str,
                domain: Sequence[int] | None = None) -> AxiomReport:
    dom = tuple(range(ops.n)) if domain is None else tuple(domain)
    results = []
    for ax in axioms:
        holds, witness = True, None
        for assignment in itertools.product(dom, repeat=ax.arity):
            if not ax.check(ops, *assignment):
                holds = False
                witness = dict(zip(ax.vars, assignment))
                break
        results.append(AxiomResult(ax.id, ax.law, holds, witness))
    return AxiomReport(suite, tuple(results))


def check_axioms(target, axioms: Iterable[Axiom], suite: str,
                 domain: Sequence[int] | None = None) -> AxiomReport:
    """Evaluate an explicit axiom list; the building block behind the
    named suites and handy for one-off laws such as T_LOCALITY."""
    exp = _as_expansion(target)
    return _run_axioms(Ops(exp.base, exp.tables, exp.arrow), axioms, suite, domain)


def check_suite(target, suite: str) -> AxiomReport:
    """Evaluate a named suite on an algebra or expansion."""
    exp = _as_expansion(target)
    if suite == "boolean-test-image":
        return check_boolean_test_image(exp)
    if suite == "two-sorted-kat":
        model = derive_two_sorted(exp)
        return check_two_sorted_kat(model.algebra, model.tests, model.neg)
    try:
        axioms = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}") from None
    _require_tables(exp, suite)
    return check_axioms(exp, axioms, suite)


def check_kleene(algebra: FiniteKleeneAlgebra | UnaryExpansion) -> AxiomReport:
    """All semiring laws plus the four star laws; the report holds
    throughout iff the tables form a Kleene algebra."""
    return check_suite(_as_expansion(algebra).base, "kleene")


def recheck(target, suite: str, axiom_id: str, witness: Mapping[str, int]) -> bool:
    """Re-evaluate one named axiom at a specific assignment; True iff the
    law holds there. Reproduces recorded witnesses."""
    exp = _as_expansion(target)
    for ax in SUITES[suite]:
        if ax.id == axiom_id:
            ops = Ops(exp.base, exp.tables, exp.arrow)
            return ax.check(ops, *(witness[v] for v in ax.vars))
    raise KeyError(f"suite {suite} has no axiom {axiom_id}")


def test_image(exp: UnaryExpansion, op: str) -> frozenset[int]:
    """The image set of the named unary table."""
    return frozenset(exp.table(op))


# ---------------------------------------------------------------------------
# Boolean-subalgebra checks over a designated subset
# ---------------------------------------------------------------------------

def _boolean_subset_axioms(subset: frozenset[int],
                           comp: Mapping[int, int] | None) -> tuple[Axiom, ...]:
    # Laws a semiring does not already force globally: closure, commutative
    # idempotent meet, absorption, the dual distributive law, 1 as top, and
    # complementation. Variables range over the subset only.
    axioms = [
        _ax("contains-zero", "", "0 in T", lambda o: o.zero in subset),
        _ax("contains-one", "", "1 in T", lambda o: o.one in subset),
        _ax("closed-add", "xy", "x + y in T",
            lambda o, x, y: o.add[x][y] in subset),
        _ax("closed-mul", "xy", "x y in T",
            lambda o, x, y: o.mul[x][y] in subset),
        _ax("mul-comm", "xy", "x y = y x",
            lambda o, x, y: o.mul[x][y] == o.mul[y][x]),
        _ax("mul-idem", "x", "x x = x",
            lambda o, x: o.mul[x][x] == x),
        _ax("absorb-add-mul", "xy", "x + x y = x",
            lambda o, x, y: o.add[x][o.mul[x][y]] == x),
        _ax("absorb-mul-add", "xy", "x (x + y) = x",
            lambda o, x, y: o.mul[x][o.add[x][y]] == x),
        _ax("dist-add-over-mul", "xyz", "x + y z = (x + y)(x + z)",
            lambda o, x, y, z: o.add[x][o.mul[y][z]]
            == o.mul[o.add[x][y]][o.add[x][z]]),
        _ax("one-top", "x", "x <= 1",
            lambda o, x: o.leq(x, o.one)),
    ]
    if comp is not None:
        axioms += [
            _ax("closed-comp", "x", "~x in T",
                lambda o, x: comp[x] in subset),
            _ax("comp-join", "x", "x + ~x = 1",
                lambda o, x: o.add[x][comp[x]] == o.one),
            _ax("comp-meet-left", "x", "~x x = 0",
                lambda o, x: o.mul[comp[x]][x] == o.zero),
            _ax("comp-meet-right", "x", "x ~x = 0",
                lambda o, x: o.mul[x][comp[x]] == o.zero),
        ]
    else:
        axioms.append(
            _ax("comp-exists", "x", "some y in T: x + y = 1 and x y = y x = 0",
                lambda o, x: any(
                    o.add[x][y] == o.one
                    and o.mul[x][y] == o.zero
                    and o.mul[y][x] == o.zero
                    for y in sorted(subset)
                ))
        )
    return tuple(axioms)


def check_boolean_on_subset(algebra: FiniteKleeneAlgebra, subset: Iterable[int],
                            comp: Mapping[int, int] | None = None,
                            suite: str = "boolean-subset") -> AxiomReport:
    """Does the subset form a Boolean subalgebra under the inherited + and .?

    With a complement map the complement laws are checked pointwise;
    without one, only the existence of a complement inside the subset.
    """
    members = frozenset(subset)
    axioms = _boolean_subset_axioms(members, comp)
    return check_axioms(algebra, axioms, suite, domain=sorted(members))


_COMPLEMENT_PARTNER = {"t": "t'", "d": "a"}


def check_boolean_test_image(exp: UnaryExpansion, op: str = "t",
                             comp: str | None = "auto") -> AxiomReport:
    """Boolean-subalgebra laws on the image of the named unary table.

    comp="auto" picks the matching complement table (t' for t, a for d)
    when the expansion carries it and otherwise falls back to the
    complement-existence law.
    """
    image = test_image(exp, op)
    if comp == "auto":
        partner = _COMPLEMENT_PARTNER.get(op)
        comp = partner if partner is not None and exp.has(partner) else None
    comp_map = None
    if comp is not None:
        ctab = exp.table(comp)
        comp_map = {x: ctab[x] for x in image}
    return check_boolean_on_subset(exp.base, image, comp_map, "boolean-test-image")


def check_two_sorted_kat(algebra: FiniteKleeneAlgebra, tests: Iterable[int],
                         neg: Mapping[int, int]) -> AxiomReport:
    """Verify that (tests, +, ., neg, 1, 0) is a Boolean subalgebra."""
    members = frozenset(tests)
    if not all(0 <= x < algebra.n for x in members):
        raise ValueError("test set contains indices outside the carrier")
    for x in sorted(members):
        if x not in neg:
            raise PreconditionError(f"complement map undefined on test {x}")
        if neg[x] not in members:
            raise PreconditionError(f"complement map leaves the test set at {x}")
    comp = {x: neg[x] for x in members}
    return check_boolean_on_subset(algebra, members, comp, "two-sorted-kat")


def derive_two_sorted(exp: UnaryExpansion) -> TwoSortedKat:
    """View an expansion with t and t' as a two-sorted structure: the test
    set is the image of t and the complement map is t' restricted to it."""
    t = exp.table("t")
    tp = exp.table("t'")
    tests = frozenset(t)
    for x in sorted(tests):
        if tp[x] not in tests:
            raise PreconditionError(f"t' leaves the image of t at {x}")
    return TwoSortedKat(exp.base, tests, {x: tp[x] for x in tests})
