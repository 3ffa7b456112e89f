"""Finite Kleene algebras as explicit operation tables.

Carriers are the dense index sets {0, .., n-1}; all structure lives in the
tables. Construction validates shapes and index ranges only. Whether the
tables actually satisfy the Kleene algebra laws is a separate, explicit
question answered by theories.check_kleene.

Every value in this module is immutable after construction, so anything
built from them can be evaluated concurrently without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import MissingTableError, PreconditionError

#: Unary operator names admitted in expansions (the residual "arrow" is
#: binary and stored separately).
UNARY_NAMES = ("t", "t'", "a", "d")


def _check_row(row: Iterable[int], n: int, what: str) -> tuple[int, ...]:
    out = tuple(row)
    if len(out) != n:
        raise ValueError(f"{what}: expected {n} entries, got {len(out)}")
    for v in out:
        if not isinstance(v, int) or not 0 <= v < n:
            raise ValueError(f"{what}: entry {v!r} out of range for size {n}")
    return out


def _check_square(table, n: int, what: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(table)
    if len(rows) != n:
        raise ValueError(f"{what}: expected {n} rows, got {len(rows)}")
    return tuple(_check_row(row, n, f"{what} row {i}") for i, row in enumerate(rows))


@dataclass(frozen=True)
class FiniteKleeneAlgebra:
    """Operation tables for (+, ., *, 0, 1) over the carrier {0, .., n-1}."""

    name: str
    n: int
    zero: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    star: tuple[int, ...]

    def __post_init__(self):
        if not self.name or any(c.isspace() for c in self.name):
            raise ValueError(f"algebra name must be a single token, got {self.name!r}")
        if self.n < 1:
            raise ValueError("carrier size must be positive")
        object.__setattr__(self, "add", _check_square(self.add, self.n, "add"))
        object.__setattr__(self, "mul", _check_square(self.mul, self.n, "mul"))
        object.__setattr__(self, "star", _check_row(self.star, self.n, "star"))
        for label, i in (("zero", self.zero), ("one", self.one)):
            if not 0 <= i < self.n:
                raise ValueError(f"{label} index {i} out of range for size {self.n}")
        if self.n >= 2 and self.zero == self.one:
            raise ValueError("zero and one must differ when n >= 2")

    def leq(self, x: int, y: int) -> bool:
        """Natural semiring order: x <= y iff x + y = y."""
        return self.add[x][y] == y

    def join(self, elements: Iterable[int]) -> int:
        """Fold + over elements in the given order; the empty join is zero."""
        out = self.zero
        for e in elements:
            out = self.add[out][e]
        return out


@dataclass(frozen=True)
class UnaryExpansion:
    """A finite Kleene algebra plus up to four unary tables (t, t', a, d)
    and an optional binary residual table.

    An expansion with no extra tables is just a verbose algebra; parsers
    return this type uniformly so callers never juggle a union.
    """

    base: FiniteKleeneAlgebra
    tables: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    arrow: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        n = self.base.n
        normalized = {}
        for name in self.tables:
            if name not in UNARY_NAMES:
                raise ValueError(f"unknown unary operator {name!r}")
        for name in UNARY_NAMES:
            if name in self.tables:
                normalized[name] = _check_row(self.tables[name], n, f"unary {name}")
        object.__setattr__(self, "tables", MappingProxyType(normalized))
        if self.arrow is not None:
            object.__setattr__(self, "arrow", _check_square(self.arrow, n, "arrow"))

    def has(self, name: str) -> bool:
        return name in self.tables

    def table(self, name: str) -> tuple[int, ...]:
        try:
            return self.tables[name]
        except KeyError:
            raise MissingTableError(f"missing table {name}") from None

    def extended(
        self,
        tables: Mapping[str, Iterable[int]] | None = None,
        arrow: Iterable[Iterable[int]] | None = None,
    ) -> UnaryExpansion:
        """Copy with extra tables layered on; new tables win on collision."""
        merged = dict(self.tables)
        if tables:
            merged.update({k: tuple(v) for k, v in tables.items()})
        return UnaryExpansion(self.base, merged, self.arrow if arrow is None else arrow)


@dataclass(frozen=True)
class TwoSortedKat:
    """A finite algebra with a designated test subset and a complement map
    defined exactly on that subset."""

    algebra: FiniteKleeneAlgebra
    tests: frozenset[int]
    neg: Mapping[int, int]

    def __post_init__(self):
        tests = frozenset(self.tests)
        object.__setattr__(self, "tests", tests)
        n = self.algebra.n
        if not all(isinstance(x, int) and 0 <= x < n for x in tests):
            raise ValueError("test set contains indices outside the carrier")
        neg = dict(self.neg)
        if set(neg) != tests:
            raise PreconditionError("complement map must be defined exactly on the test set")
        if any(v not in tests for v in neg.values()):
            raise PreconditionError("complement map leaves the test set")
        object.__setattr__(self, "neg", MappingProxyType({x: neg[x] for x in sorted(tests)}))


@dataclass(frozen=True)
class AxiomResult:
    """Verdict for a single law. A witness assignment is recorded exactly
    when the law fails, and re-evaluating the law at that assignment must
    reproduce the failure."""

    axiom: str
    law: str
    holds: bool
    witness: Mapping[str, int] | None = None

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("witness recorded for a holding axiom")
        if not self.holds and self.witness is None:
            raise ValueError("failing axiom requires a witness assignment")
        if self.witness is not None:
            object.__setattr__(self, "witness", MappingProxyType(dict(self.witness)))


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts for one suite evaluated on one structure."""

    suite: str
    results: tuple[AxiomResult, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> tuple[str, ...]:
        return tuple(r.axiom for r in self.results if not r.holds)

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def render(self) -> str:
        held = sum(r.holds for r in self.results)
        verdict = "ok" if self.all_hold else "FAIL"
        lines = [f"suite {self.suite}: {verdict} ({held}/{len(self.results)} axioms hold)"]
        for r in self.results:
            mark = "ok  " if r.holds else "FAIL"
            line = f"  {mark}  {r.axiom:<24} {r.law}"
            if r.witness is not None:
                assign = " ".join(f"{k}={v}" for k, v in r.witness.items())
                line += f"   [{assign or 'no variables'}]"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "all_hold": self.all_hold,
            "results": [
                {
                    "axiom": r.axiom,
                    "law": r.law,
                    "holds": r.holds,
                    "witness": dict(r.witness) if r.witness is not None else None,
                }
                for r in self.results
            ],
        }
