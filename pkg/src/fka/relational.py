"""Concrete relational models: binary relations on a small base set,
closed into finite algebras with the domain-style test operators.

Relations are stored as bitmasks (bit i*m + j set iff the pair (i, j) is
in the relation), which keeps composition and closure generation cheap
for the supported base sizes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ClosureCapError, ParseError
from .model import FiniteKleeneAlgebra, UnaryExpansion

DEFAULT_CAP = 4096


@dataclass(frozen=True)
class Relation:
    m: int
    bits: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("base size must be positive")
        if not 0 <= self.bits < 1 << (self.m * self.m):
            raise ValueError("bit pattern does not fit the base size")

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        bits = 0
        for i, j in pairs:
            if not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"pair ({i}, {j}) outside base of size {m}")
            bits |= 1 << (i * m + j)
        return cls(m, bits)

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(self.m)
            for j in range(self.m)
            if self.bits >> (i * self.m + j) & 1
        )

    def row(self, i: int) -> int:
        """Successor set of i as an m-bit mask."""
        return (self.bits >> (i * self.m)) & ((1 << self.m) - 1)

    def __repr__(self):
        inner = ",".join(f"({i},{j})" for i, j in sorted(self.pairs()))
        return f"Relation({self.m}, {{{inner}}})"


def _same_base(r: Relation, q: Relation) -> None:
    if r.m != q.m:
        raise ValueError(f"base size mismatch: {r.m} vs {q.m}")


def rel_empty(m: int) -> Relation:
    return Relation(m, 0)


def rel_identity(m: int) -> Relation:
    bits = 0
    for i in range(m):
        bits |= 1 << (i * m + i)
    return Relation(m, bits)


def rel_full(m: int) -> Relation:
    return Relation(m, (1 << (m * m)) - 1)


def rel_union(r: Relation, q: Relation) -> Relation:
    _same_base(r, q)
    return Relation(r.m, r.bits | q.bits)


def rel_compose(r: Relation, q: Relation) -> Relation:
    _same_base(r, q)
    m = r.m
    bits = 0
    for i in range(m):
        successors = r.row(i)
        acc = 0
        for j in range(m):
            if successors >> j & 1:
                acc |= q.row(j)
        bits |= acc << (i * m)
    return Relation(m, bits)


def rel_star(r: Relation) -> Relation:
    """Reflexive transitive closure by squaring id | r to a fixpoint."""
    current = rel_union(rel_identity(r.m), r)
    while True:
        squared = rel_compose(current, current)
        if squared == current:
            return current
        current = squared


def rel_t(r: Relation) -> Relation:
    """Subidentity on the points with at least one successor."""
    bits = 0
    for i in range(r.m):
        if r.row(i):
            bits |= 1 << (i * r.m + i)
    return Relation(r.m, bits)


def rel_tprime(r: Relation) -> Relation:
    """Subidentity on the points with no successor; complements rel_t
    inside the identity."""
    return Relation(r.m, rel_identity(r.m).bits & ~rel_t(r).bits)


def parse_relation(text: str) -> Relation:
    """Parse the pair-list form, e.g. 'rel 2 {(0,1)}' or 'rel 3 {}'."""
    m = re.fullmatch(r"\s*rel\s+(\d+)\s*\{(.*)\}\s*", text)
    if m is None:
        raise ParseError("expected 'rel <m> {(i,j),..}'")
    size = int(m.group(1))
    body = m.group(2)
    pairs = [(int(i), int(j)) for i, j in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body)]
    if re.sub(r"[\s,]|\(\s*\d+\s*,\s*\d+\s*\)", "", body):
        raise ParseError(f"malformed pair list {body!r}")
    try:
        return Relation.from_pairs(size, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_relation(r: Relation) -> str:
    inner = ",".join(f"({i},{j})" for i, j in sorted(r.pairs()))
    return f"rel {r.m} {{{inner}}}"


def generate_relational_model(
    m: int,
    generators: Iterable[Relation] = (),
    cap: int = DEFAULT_CAP,
    name: str | None = None,
) -> UnaryExpansion:
    """Close the generators (plus the empty and identity relations) under
    union, composition, star, t and t', then tabulate the result.

    The carrier is ordered by bit pattern, so the table layout is a pure
    function of the generator set. Raises ClosureCapError when the closure
    exceeds cap relations.
    """
    if m < 1:
        raise ValueError("base size must be positive")
    generators = tuple(generators)
    for g in generators:
        if g.m != m:
            raise ValueError(f"generator base size {g.m} does not match m={m}")

    carrier = {rel_empty(m), rel_identity(m), *generators}
    frontier = set(carrier)
    while frontier:
        fresh = set()
        for r in frontier:
            fresh.update((rel_star(r), rel_t(r), rel_tprime(r)))
        for r in frontier:
            for q in carrier:
                fresh.update((rel_union(r, q), rel_compose(r, q), rel_compose(q, r)))
        fresh -= carrier
        if len(carrier) + len(fresh) > cap:
            raise ClosureCapError(
                f"closure exceeds cap {cap} (reached {len(carrier) + len(fresh)})"
            )
        carrier |= fresh
        frontier = fresh

    ordered = sorted(carrier, key=lambda r: r.bits)
    index = {r: i for i, r in enumerate(ordered)}
    n = len(ordered)
    add = tuple(tuple(index[rel_union(r, q)] for q in ordered) for r in ordered)
    mul = tuple(tuple(index[rel_compose(r, q)] for q in ordered) for r in ordered)
    star = tuple(index[rel_star(r)] for r in ordered)
    t_table = tuple(index[rel_t(r)] for r in ordered)
    tp_table = tuple(index[rel_tprime(r)] for r in ordered)

    base = FiniteKleeneAlgebra(
        name or f"rel{m}g{len(generators)}",
        n,
        index[rel_empty(m)],
        index[rel_identity(m)],
        add,
        mul,
        star,
    )
    return UnaryExpansion(base, {"t": t_table, "t'": tp_table})
