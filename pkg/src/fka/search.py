"""Exhaustive search over unary expansions and small algebras.

Expansion search walks the table cells depth-first and prunes a branch as
soon as some axiom instance is fully determined and false; every candidate
in a pruned subtree is counted as covered, so a completed search certifies
the whole n^(n * #tables) space. An empty result with a full certificate
is a nonexistence proof for the given base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetError, MissingTableError
from .model import FiniteKleeneAlgebra, UnaryExpansion
from .theories import SUITES, Ops, Undetermined, check_kleene

_SEARCHABLE_TABLES = ("t", "t'", "a", "d")


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: which unary tables, against which suite, over
    which base algebra. The candidate space is n^(n * #tables) and must
    fit the budget up front."""

    base: FiniteKleeneAlgebra
    suite: str
    tables: tuple[str, ...]
    budget: int = 10_000_000

    def __post_init__(self):
        object.__setattr__(self, "tables", tuple(self.tables))
        if not self.tables:
            raise ValueError("at least one table to enumerate is required")
        if len(set(self.tables)) != len(self.tables):
            raise ValueError("duplicate table names")
        for name in self.tables:
            if name not in _SEARCHABLE_TABLES:
                raise ValueError(f"cannot enumerate table {name!r}")
        if self.suite not in SUITES:
            raise ValueError(f"unknown or non-enumerable suite {self.suite!r}")

    @property
    def space(self) -> int:
        return self.base.n ** (self.base.n * len(self.tables))


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    passing: tuple[UnaryExpansion, ...]
    covered: int

    @property
    def space(self) -> int:
        return self.spec.space

    @property
    def exhaustive(self) -> bool:
        return self.covered == self.space

    @property
    def certificate(self) -> str:
        return f"{self.covered}/{self.space}"


def enumerate_expansions(spec: SearchSpec) -> SearchResult:
    """Every table combination that satisfies the suite, plus the coverage
    certificate. An empty passing list with a full certificate shows no
    expansion of this base satisfies the suite."""
    if spec.space > spec.budget:
        raise BudgetError(f"candidate space {spec.space} exceeds budget {spec.budget}")
    axioms = SUITES[spec.suite]
    available = set(spec.tables)
    # The suite must be decidable from the enumerated tables alone.
    needed = {
        "predomain": {"d"}, "domain": {"d"}, "kad": {"a"},
        "kat1": {"t", "t'"}, "skat": {"t", "t'"},
    }.get(spec.suite, set())
    if "d" in needed and "d" not in available and "a" in available:
        needed = needed - {"d"}  # d is derived as a(a(x))
    missing = needed - available
    if missing:
        raise MissingTableError(
            f"suite {spec.suite} needs table(s) {', '.join(sorted(missing))} "
            "not being enumerated"
        )

    n = spec.base.n
    partial: dict[str, list] = {name: [None] * n for name in spec.tables}
    ops = Ops(spec.base, partial)
    cells = [(name, i) for name in spec.tables for i in range(n)]
    instances = [
        (ax, assignment)
        for ax in axioms
        for assignment in itertools.product(range(n), repeat=ax.arity)
    ]

    passing: list[UnaryExpansion] = []
    covered = 0

    def some_instance_fails() -> bool:
        for ax, assignment in instances:
            try:
                if not ax.check(ops, *assignment):
                    return True
            except Undetermined:
                continue
        return False

    def descend(depth: int) -> None:
        nonlocal covered
        if depth == len(cells):
            # every instance was fully determined and true at the last step
            passing.append(
                UnaryExpansion(spec.base, {name: tuple(partial[name]) for name in spec.tables})
            )
            covered += 1
            return
        name, i = cells[depth]
        for value in range(n):
            partial[name][i] = value
            if some_instance_fails():
                covered += n ** (len(cells) - depth - 1)
            else:
                descend(depth + 1)
        partial[name][i] = None

    descend(0)
    return SearchResult(spec, tuple(passing), covered)


# ---------------------------------------------------------------------------
# Small-algebra corpus
# ---------------------------------------------------------------------------

def _addition_candidates(n: int):
    # Unit 0, idempotent diagonal and symmetry are forced in any idempotent
    # commutative monoid; only the unordered pairs above 0 are free.
    free = [(x, y) for x in range(1, n) for y in range(x + 1, n)]
    for values in itertools.product(range(n), repeat=len(free)):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[x][x] = x
            table[x][0] = x
            table[0][x] = x
        for (x, y), v in zip(free, values):
            table[x][y] = v
            table[y][x] = v
        yield tuple(tuple(row) for row in table)


def _multiplication_candidates(n: int):
    # Unit 1 and annihilator 0 force every row and column through 0 and 1.
    free = [(x, y) for x in range(2, n) for y in range(2, n)]
    for values in itertools.product(range(n), repeat=len(free)):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[x][0] = 0
            table[0][x] = 0
            if n > 1:
                table[x][1] = x
                table[1][x] = x
        for (x, y), v in zip(free, values):
            table[x][y] = v
        yield tuple(tuple(row) for row in table)


def _canonical_key(n: int, add, mul, star):
    fixed = range(min(n, 2))
    best = None
    for perm in itertools.permutations(range(n)):
        if any(perm[i] != i for i in fixed):
            continue
        add2 = tuple(tuple(perm[add[x][y]] for y in _inverse(perm, n)) for x in _inverse(perm, n))
        mul2 = tuple(tuple(perm[mul[x][y]] for y in _inverse(perm, n)) for x in _inverse(perm, n))
        star2 = tuple(perm[star[x]] for x in _inverse(perm, n))
        key = (add2, mul2, star2)
        if best is None or key < best:
            best = key
    return best


def _inverse(perm, n: int) -> list[int]:
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def enumerate_small_kleene_algebras(max_n: int = 3) -> tuple[FiniteKleeneAlgebra, ...]:
    """All Kleene algebras with carrier size up to max_n (at most 3), with
    zero at index 0 and one at index 1, deduplicated up to isomorphisms
    fixing 0 and 1. Every emitted algebra passes check_kleene."""
    if not 1 <= max_n <= 3:
        raise ValueError("supported carrier sizes are 1..3")
    out: list[FiniteKleeneAlgebra] = []
    for n in range(1, max_n + 1):
        zero, one = 0, 1 if n > 1 else 0
        seen: dict = {}
        for add in _addition_candidates(n):
            for mul in _multiplication_candidates(n):
                for star in itertools.product(range(n), repeat=n):
                    candidate = FiniteKleeneAlgebra("candidate", n, zero, one, add, mul, star)
                    if not check_kleene(candidate).all_hold:
                        continue
                    seen.setdefault(_canonical_key(n, add, mul, star), (add, mul, star))
        for i, key in enumerate(sorted(seen)):
            add, mul, star = seen[key]
            out.append(FiniteKleeneAlgebra(f"ka{n}_{i}", n, zero, one, add, mul, star))
    return tuple(out)
