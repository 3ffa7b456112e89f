"""Term languages and the variable-doubling translation between them.

Two languages share the constant and shape nodes (Zero, One, Plus, Times,
Star):

* two-sorted terms: test variables b0, b1, .. and program variables
  p0, p1, ..; tests are built with ~, ; and + and embed into programs
  through the (syntactically silent) FromTest node;
* one-sorted terms: variables x0, x1, .. plus the unary operators t( )
  and t'( ).

Concrete syntax for both: constants 0 and 1, infix + and ; (composition),
postfix *, prefix ~ (two-sorted only), t(..) and t'(..) (one-sorted only).
Precedence, loosest first: +, ;, then * and ~ at the same level, so
~b0* reads as (~b0)*. Parentheses group.

The printers emit the canonical form the parsers produce: TestAnd/TestOr
whenever both operands are tests, FromTest never written. For such
canonical terms parse(print(term)) == term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError, SortError


# ---------------------------------------------------------------------------
# AST nodes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class TestVar:
    index: int


@dataclass(frozen=True)
class Not:
    arg: "TestTerm"


@dataclass(frozen=True)
class TestAnd:
    left: "TestTerm"
    right: "TestTerm"


@dataclass(frozen=True)
class TestOr:
    left: "TestTerm"
    right: "TestTerm"


@dataclass(frozen=True)
class ProgVar:
    index: int


@dataclass(frozen=True)
class FromTest:
    test: "TestTerm"


@dataclass(frozen=True)
class Plus:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Times:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Star:
    arg: "Term"


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class T:
    arg: "Kat1Term"


@dataclass(frozen=True)
class Tprime:
    arg: "Kat1Term"


TestTerm = Union[TestVar, Zero, One, Not, TestAnd, TestOr]
KatTerm = Union[TestTerm, ProgVar, FromTest, Plus, Times, Star]
Kat1Term = Union[Var, Zero, One, Plus, Times, Star, T, Tprime]
Term = Union[KatTerm, Kat1Term]

_TEST_NODES = (TestVar, Zero, One, Not, TestAnd, TestOr)
_KAT_ONLY = (TestVar, Not, TestAnd, TestOr, ProgVar, FromTest)
_KAT1_ONLY = (Var, T, Tprime)


def is_test(term) -> bool:
    return isinstance(term, _TEST_NODES)


def as_program(term):
    """Embed a test into the program sort; programs pass through."""
    return FromTest(term) if is_test(term) else term


def mk_plus(left, right):
    if is_test(left) and is_test(right):
        return TestOr(left, right)
    return Plus(as_program(left), as_program(right))


def mk_times(left, right):
    if is_test(left) and is_test(right):
        return TestAnd(left, right)
    return Times(as_program(left), as_program(right))


def mk_star(arg):
    return Star(as_program(arg))


def language(term) -> str:
    """'kat', 'kat1', or 'common' (constants and shapes only)."""
    kat = kat1 = False
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, _KAT_ONLY):
            kat = True
        elif isinstance(node, _KAT1_ONLY):
            kat1 = True
        if isinstance(node, (Plus, Times, TestAnd, TestOr)):
            stack += [node.left, node.right]
        elif isinstance(node, (Star, Not, T, Tprime)):
            stack.append(node.arg)
        elif isinstance(node, FromTest):
            stack.append(node.test)
    if kat and kat1:
        raise SortError("term mixes the two-sorted and one-sorted languages")
    return "kat" if kat else "kat1" if kat1 else "common"


def term_variables(term) -> frozenset[str]:
    """Variable names occurring in the term: b<i>, p<i>, x<i>."""
    out = set()
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, TestVar):
            out.add(f"b{node.index}")
        elif isinstance(node, ProgVar):
            out.add(f"p{node.index}")
        elif isinstance(node, Var):
            out.add(f"x{node.index}")
        elif isinstance(node, (Plus, Times, TestAnd, TestOr)):
            stack += [node.left, node.right]
        elif isinstance(node, (Star, Not, T, Tprime)):
            stack.append(node.arg)
        elif isinstance(node, FromTest):
            stack.append(node.test)
    return frozenset(out)


@dataclass(frozen=True)
class Equation:
    """An ordered pair of terms of the same language."""

    lhs: Term
    rhs: Term

    def __post_init__(self):
        kinds = {language(self.lhs), language(self.rhs)} - {"common"}
        if len(kinds) > 1:
            raise SortError("equation sides belong to different languages")


# ---------------------------------------------------------------------------
# Concrete syntax
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<tprime>t')"
    r"|(?P<t>t)"
    r"|(?P<var>[bpx]\d+)"
    r"|(?P<zero>0)"
    r"|(?P<one>1)"
    r"|(?P<plus>\+)"
    r"|(?P<semi>;)"
    r"|(?P<star>\*)"
    r"|(?P<tilde>~)"
    r"|(?P<lpar>\()"
    r"|(?P<rpar>\))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        tokens.append((m.lastgroup, m.group()))
        pos = m.end()
    tokens.append(("end", ""))
    return tokens


class _TermParser:
    def __init__(self, text: str, mode: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.mode = mode

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def next(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str):
        if self.peek() != kind:
            raise ParseError(f"expected {what}, got {self.tokens[self.pos][1]!r}")
        return self.next()

    def parse(self):
        term = self.sum()
        if self.peek() != "end":
            raise ParseError(f"unexpected trailing input {self.tokens[self.pos][1]!r}")
        return term

    def sum(self):
        term = self.prod()
        while self.peek() == "plus":
            self.next()
            rhs = self.prod()
            term = mk_plus(term, rhs) if self.mode == "kat" else Plus(term, rhs)
        return term

    def prod(self):
        term = self.starred()
        while self.peek() == "semi":
            self.next()
            rhs = self.starred()
            term = mk_times(term, rhs) if self.mode == "kat" else Times(term, rhs)
        return term

    def starred(self):
        term = self.neg()
        while self.peek() == "star":
            self.next()
            term = mk_star(term) if self.mode == "kat" else Star(term)
        return term

    def neg(self):
        if self.peek() == "tilde":
            if self.mode == "kat1":
                raise ParseError("~ is not part of the one-sorted syntax")
            self.next()
            arg = self.neg()
            if not is_test(arg):
                raise SortError("negation applies only to tests")
            return Not(arg)
        return self.atom()

    def atom(self):
        kind, text = self.next()
        if kind == "zero":
            return Zero()
        if kind == "one":
            return One()
        if kind == "var":
            prefix, index = text[0], int(text[1:])
            if self.mode == "kat":
                if prefix == "x":
                    raise ParseError(f"variable {text} is not part of the two-sorted syntax")
                return TestVar(index) if prefix == "b" else ProgVar(index)
            if prefix != "x":
                raise ParseError(f"variable {text} is not part of the one-sorted syntax")
            return Var(index)
        if kind in ("t", "tprime"):
            if self.mode == "kat":
                raise ParseError(f"{text} is not part of the two-sorted syntax")
            self.expect("lpar", f"'(' after {text}")
            inner = self.sum()
            self.expect("rpar", "')'")
            return T(inner) if kind == "t" else Tprime(inner)
        if kind == "lpar":
            inner = self.sum()
            self.expect("rpar", "')'")
            return inner
        raise ParseError(f"expected a term, got {text!r}" if text else "unexpected end of input")


def parse_kat_term(text: str) -> KatTerm:
    """Parse a two-sorted term; pure tests come back in the test sort."""
    return _TermParser(text, "kat").parse()


def parse_kat1_term(text: str) -> Kat1Term:
    return _TermParser(text, "kat1").parse()


def parse_equation(text: str) -> Equation:
    """Parse 'lhs = rhs'; the language is inferred from the tokens used."""
    if text.count("=") != 1:
        raise ParseError("expected exactly one '=' in the equation")
    lhs_text, rhs_text = text.split("=")
    two_sorted = bool(re.search(r"\b[bp]\d|~", text))
    parse = parse_kat_term if two_sorted else parse_kat1_term
    return Equation(parse(lhs_text), parse(rhs_text))


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

# Binding levels: + is 1, ; is 2, postfix * and prefix ~ are 3, atoms 4.
_LEVEL = {
    Plus: 1, TestOr: 1,
    Times: 2, TestAnd: 2,
    Star: 3, Not: 3,
}


def _level(term) -> int:
    if isinstance(term, FromTest):
        return _level(term.test)
    return _LEVEL.get(type(term), 4)


def _render(term, require: int) -> str:
    if isinstance(term, FromTest):
        return _render(term.test, require)
    text = _raw(term)
    if _level(term) < require:
        return f"({text})"
    return text


def _raw(term) -> str:
    if isinstance(term, Zero):
        return "0"
    if isinstance(term, One):
        return "1"
    if isinstance(term, TestVar):
        return f"b{term.index}"
    if isinstance(term, ProgVar):
        return f"p{term.index}"
    if isinstance(term, Var):
        return f"x{term.index}"
    if isinstance(term, (Plus, TestOr)):
        return f"{_render(term.left, 1)} + {_render(term.right, 2)}"
    if isinstance(term, (Times, TestAnd)):
        return f"{_render(term.left, 2)} ; {_render(term.right, 3)}"
    if isinstance(term, Star):
        return f"{_render(term.arg, 3)}*"
    if isinstance(term, Not):
        return f"~{_render(term.arg, 3)}"
    if isinstance(term, T):
        return f"t({_render(term.arg, 1)})"
    if isinstance(term, Tprime):
        return f"t'({_render(term.arg, 1)})"
    raise TypeError(f"not a term: {term!r}")


def print_term(term) -> str:
    return _render(term, 1)


# ---------------------------------------------------------------------------
# Translation into the one-sorted language
# ---------------------------------------------------------------------------

def translate(term: KatTerm) -> Kat1Term:
    """Map a two-sorted term into the one-sorted language.

    Program variable p_n becomes x_{2n}, test variable b_n becomes
    t(x_{2n+1}), the constants become t(0) and t(1), negation becomes t',
    and +, ; and * are carried across unchanged. Distinct inputs yield
    distinct outputs because program and test variables land on disjoint
    (even/odd) index ranges.
    """
    if isinstance(term, ProgVar):
        return Var(2 * term.index)
    if isinstance(term, TestVar):
        return T(Var(2 * term.index + 1))
    if isinstance(term, Zero):
        return T(Zero())
    if isinstance(term, One):
        return T(One())
    if isinstance(term, Not):
        return Tprime(translate(term.arg))
    if isinstance(term, FromTest):
        return translate(term.test)
    if isinstance(term, (Plus, TestOr)):
        return Plus(translate(term.left), translate(term.right))
    if isinstance(term, (Times, TestAnd)):
        return Times(translate(term.left), translate(term.right))
    if isinstance(term, Star):
        return Star(translate(term.arg))
    raise TypeError(f"not a two-sorted term: {term!r}")
