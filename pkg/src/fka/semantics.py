"""Term valuations in finite models and brute-force equation checking.

Assignments map variable names (b0, p1, x2, ..) to element indices.
Two-sorted terms are evaluated in a TwoSortedKat, where test variables
must take values in the test set; one-sorted terms are evaluated in a
UnaryExpansion. Assignment spaces are enumerated lexicographically by
variable name and then element index, so the first counterexample found
is deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import BudgetError, EvaluationError, PreconditionError
from .model import TwoSortedKat, UnaryExpansion
from .terms import (
    Equation,
    FromTest,
    KatTerm,
    Not,
    One,
    Plus,
    ProgVar,
    Star,
    T,
    TestAnd,
    TestOr,
    TestVar,
    Times,
    Tprime,
    Var,
    Zero,
    language,
    term_variables,
    translate,
)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Valuation:
    """A model together with an assignment of term variables to elements."""

    model: TwoSortedKat | UnaryExpansion
    assignment: Mapping[str, int]

    def __post_init__(self):
        object.__setattr__(self, "assignment", MappingProxyType(dict(self.assignment)))


@dataclass(frozen=True)
class EquationVerdict:
    holds: bool
    counter: Mapping[str, int] | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None

    def __post_init__(self):
        if self.counter is not None:
            object.__setattr__(self, "counter", MappingProxyType(dict(self.counter)))


@dataclass(frozen=True)
class TranslationVerdict:
    """Outcome of comparing a two-sorted term with its translation.

    direction 'forward' pairs each two-sorted valuation with the induced
    one-sorted valuation; 'backward' starts from arbitrary one-sorted
    valuations and projects them down through t.
    """

    holds: bool
    direction: str | None = None
    counter: Mapping[str, int] | None = None
    kat_value: int | None = None
    kat1_value: int | None = None

    def __post_init__(self):
        if self.counter is not None:
            object.__setattr__(self, "counter", MappingProxyType(dict(self.counter)))


def _var_key(name: str) -> tuple[str, int]:
    return (name[0], int(name[1:]))


def _lookup(env: Mapping[str, int], name: str) -> int:
    try:
        return env[name]
    except KeyError:
        raise EvaluationError(f"unassigned variable {name}") from None


def _eval_kat(term, model: TwoSortedKat, env: Mapping[str, int]) -> int:
    alg = model.algebra
    if isinstance(term, TestVar):
        value = _lookup(env, f"b{term.index}")
        if value not in model.tests:
            raise EvaluationError(
                f"test variable b{term.index} assigned {value}, outside the test set"
            )
        return value
    if isinstance(term, ProgVar):
        return _lookup(env, f"p{term.index}")
    if isinstance(term, Zero):
        return alg.zero
    if isinstance(term, One):
        return alg.one
    if isinstance(term, Not):
        value = _eval_kat(term.arg, model, env)
        if value not in model.tests:
            raise EvaluationError("negation applied outside the test set")
        return model.neg[value]
    if isinstance(term, (TestOr, Plus)):
        return alg.add[_eval_kat(term.left, model, env)][_eval_kat(term.right, model, env)]
    if isinstance(term, (TestAnd, Times)):
        return alg.mul[_eval_kat(term.left, model, env)][_eval_kat(term.right, model, env)]
    if isinstance(term, FromTest):
        return _eval_kat(term.test, model, env)
    if isinstance(term, Star):
        return alg.star[_eval_kat(term.arg, model, env)]
    raise EvaluationError(f"not a two-sorted term: {term!r}")


def _eval_kat1(term, exp: UnaryExpansion, env: Mapping[str, int]) -> int:
    alg = exp.base
    if isinstance(term, Var):
        return _lookup(env, f"x{term.index}")
    if isinstance(term, Zero):
        return alg.zero
    if isinstance(term, One):
        return alg.one
    if isinstance(term, Plus):
        return alg.add[_eval_kat1(term.left, exp, env)][_eval_kat1(term.right, exp, env)]
    if isinstance(term, Times):
        return alg.mul[_eval_kat1(term.left, exp, env)][_eval_kat1(term.right, exp, env)]
    if isinstance(term, Star):
        return alg.star[_eval_kat1(term.arg, exp, env)]
    if isinstance(term, T):
        return exp.table("t")[_eval_kat1(term.arg, exp, env)]
    if isinstance(term, Tprime):
        return exp.table("t'")[_eval_kat1(term.arg, exp, env)]
    raise EvaluationError(f"not a one-sorted term: {term!r}")


def evaluate(term, valuation: Valuation) -> int:
    """Structural fold of the term over the model's tables."""
    model = valuation.model
    if isinstance(model, TwoSortedKat):
        return _eval_kat(term, model, valuation.assignment)
    if isinstance(model, UnaryExpansion):
        return _eval_kat1(term, model, valuation.assignment)
    raise TypeError(f"not a model: {model!r}")


def _domains(model, names: list[str]) -> list[tuple[int, ...]]:
    out = []
    for name in names:
        kind = name[0]
        if kind == "x":
            if not isinstance(model, UnaryExpansion):
                raise EvaluationError("one-sorted terms need an expansion model")
            out.append(tuple(range(model.base.n)))
        elif kind == "p":
            if not isinstance(model, TwoSortedKat):
                raise EvaluationError("two-sorted terms need a test-subalgebra model")
            out.append(tuple(range(model.algebra.n)))
        else:
            if not isinstance(model, TwoSortedKat):
                raise EvaluationError("two-sorted terms need a test-subalgebra model")
            out.append(tuple(sorted(model.tests)))
    return out


def _check_budget(domains, budget: int) -> None:
    space = math.prod(len(d) for d in domains)
    if space > budget:
        raise BudgetError(f"assignment space {space} exceeds budget {budget}")


def equation_holds(model, equation: Equation, budget: int = DEFAULT_BUDGET) -> EquationVerdict:
    """Enumerate every assignment of the equation's variables; test
    variables range over the test set only. Returns the first (smallest)
    counter-valuation or a holding verdict."""
    names = sorted(term_variables(equation.lhs) | term_variables(equation.rhs), key=_var_key)
    domains = _domains(model, names)
    _check_budget(domains, budget)
    two_sorted = isinstance(model, TwoSortedKat)
    for combo in itertools.product(*domains):
        env = dict(zip(names, combo))
        if two_sorted:
            lhs = _eval_kat(equation.lhs, model, env)
            rhs = _eval_kat(equation.rhs, model, env)
        else:
            lhs = _eval_kat1(equation.lhs, model, env)
            rhs = _eval_kat1(equation.rhs, model, env)
        if lhs != rhs:
            return EquationVerdict(False, env, lhs, rhs)
    return EquationVerdict(True)


def check_translation_equivalence(model: TwoSortedKat, exp: UnaryExpansion,
                                  term: KatTerm,
                                  budget: int = DEFAULT_BUDGET) -> TranslationVerdict:
    """Compare a term's value with its translation's value under the
    paired valuations (p_n with x_{2n}, b_n with x_{2n+1}), in both
    directions. The expansion must expand the two-sorted model: same base
    algebra, test set equal to the image of t."""
    if exp.base != model.algebra:
        raise PreconditionError("expansion is not over the same base algebra")
    t_table = exp.table("t")
    if frozenset(t_table) != model.tests:
        raise PreconditionError("test set differs from the image of t")

    translated = translate(term)
    n = model.algebra.n

    names = sorted(term_variables(term), key=_var_key)
    domains = _domains(model, names)
    _check_budget(domains, budget)
    for combo in itertools.product(*domains):
        env = dict(zip(names, combo))
        paired = {}
        for name, value in env.items():
            index = int(name[1:])
            paired[f"x{2 * index}" if name[0] == "p" else f"x{2 * index + 1}"] = value
        kat_value = _eval_kat(term, model, env)
        kat1_value = _eval_kat1(translated, exp, paired)
        if kat_value != kat1_value:
            return TranslationVerdict(False, "forward", env, kat_value, kat1_value)

    xnames = sorted(term_variables(translated), key=_var_key)
    _check_budget([range(n)] * len(xnames), budget)
    for combo in itertools.product(range(n), repeat=len(xnames)):
        paired = dict(zip(xnames, combo))
        env = {}
        for name, value in paired.items():
            index = int(name[1:])
            if index % 2 == 0:
                env[f"p{index // 2}"] = value
            else:
                env[f"b{(index - 1) // 2}"] = t_table[value]
        kat_value = _eval_kat(term, model, env)
        kat1_value = _eval_kat1(translated, exp, paired)
        if kat_value != kat1_value:
            return TranslationVerdict(False, "backward", paired, kat_value, kat1_value)

    return TranslationVerdict(True)
