"""Line-oriented .fka text format for finite algebras and expansions.

Layout (UTF-8, '#' starts a comment, blank lines ignored)::

    algebra <name>
    size <n>
    zero <i>
    one <i>
    add            # n rows of n indices
    mul            # n rows
    star           # one row of n indices
    unary <op>     # optional; op in {t, t', a, d}; one row
    binary arrow   # optional; n rows

The `algebra` line must come first and `size` must precede every table
section. Parsing performs no axiom checking; it returns the structure
exactly as written.
"""

from __future__ import annotations

from importlib import resources

from .errors import ParseError
from .model import UNARY_NAMES, FiniteKleeneAlgebra, UnaryExpansion

_REQUIRED = ("size", "zero", "one", "add", "mul", "star")


def _entries(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            out.append((i, toks))
    return out


def _parse_index(tok: str, n: int, what: str, line: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"{what}: invalid index {tok!r}", line) from None
    if not 0 <= v < n:
        raise ParseError(f"{what}: index {v} out of range (size {n})", line)
    return v


class _Cursor:
    def __init__(self, entries):
        self.entries = entries
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.entries)

    def take(self, context: str) -> tuple[int, list[str]]:
        if self.done():
            raise ParseError(f"unexpected end of file in section '{context}'")
        entry = self.entries[self.pos]
        self.pos += 1
        return entry


def _read_row(cur: _Cursor, n: int, what: str) -> tuple[int, ...]:
    line, toks = cur.take(what)
    if len(toks) != n:
        raise ParseError(f"{what}: expected {n} entries, got {len(toks)}", line)
    return tuple(_parse_index(tok, n, what, line) for tok in toks)


def _read_square(cur: _Cursor, n: int, what: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_read_row(cur, n, f"{what} row {i}") for i in range(n))


def parse_algebra(text: str) -> UnaryExpansion:
    """Parse .fka text. The result always carries the base algebra; the
    unary table map is empty when the file declares no expansion data."""
    cur = _Cursor(_entries(text))
    line, toks = cur.take("algebra header")
    if toks[0] != "algebra" or len(toks) != 2:
        raise ParseError("expected 'algebra <name>' on the first line", line)
    name = toks[1]

    n = None
    scalars: dict[str, int] = {}
    squares: dict[str, tuple] = {}
    star = None
    unary: dict[str, tuple[int, ...]] = {}
    arrow = None

    def need_size(line, kw):
        if n is None:
            raise ParseError(f"'size' must be declared before '{kw}'", line)

    while not cur.done():
        line, toks = cur.take("section")
        kw = toks[0]
        if kw == "size":
            if n is not None:
                raise ParseError("duplicate section 'size'", line)
            if len(toks) != 2:
                raise ParseError("expected 'size <n>'", line)
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(f"invalid size {toks[1]!r}", line) from None
            if n < 1:
                raise ParseError(f"size must be positive, got {n}", line)
        elif kw in ("zero", "one"):
            if kw in scalars:
                raise ParseError(f"duplicate section '{kw}'", line)
            need_size(line, kw)
            if len(toks) != 2:
                raise ParseError(f"expected '{kw} <index>'", line)
            scalars[kw] = _parse_index(toks[1], n, kw, line)
        elif kw in ("add", "mul"):
            if kw in squares:
                raise ParseError(f"duplicate section '{kw}'", line)
            need_size(line, kw)
            squares[kw] = _read_square(cur, n, kw)
        elif kw == "star":
            if star is not None:
                raise ParseError("duplicate section 'star'", line)
            need_size(line, kw)
            star = _read_row(cur, n, "star")
        elif kw == "unary":
            need_size(line, kw)
            if len(toks) != 2 or toks[1] not in UNARY_NAMES:
                raise ParseError(
                    f"expected 'unary <op>' with op in {{{', '.join(UNARY_NAMES)}}}", line
                )
            op = toks[1]
            if op in unary:
                raise ParseError(f"duplicate section 'unary {op}'", line)
            unary[op] = _read_row(cur, n, f"unary {op}")
        elif kw == "binary":
            need_size(line, kw)
            if len(toks) != 2 or toks[1] != "arrow":
                raise ParseError("expected 'binary arrow'", line)
            if arrow is not None:
                raise ParseError("duplicate section 'binary arrow'", line)
            arrow = _read_square(cur, n, "arrow")
        else:
            raise ParseError(f"unknown section keyword {kw!r}", line)

    present = {"size": n is not None, "zero": "zero" in scalars, "one": "one" in scalars,
               "add": "add" in squares, "mul": "mul" in squares, "star": star is not None}
    for section in _REQUIRED:
        if not present[section]:
            raise ParseError(f"missing required section '{section}'")

    try:
        base = FiniteKleeneAlgebra(
            name, n, scalars["zero"], scalars["one"], squares["add"], squares["mul"], star
        )
        return UnaryExpansion(base, unary, arrow)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def print_algebra(target: UnaryExpansion | FiniteKleeneAlgebra) -> str:
    """Render to canonical .fka text; parse_algebra(print_algebra(x)) == x."""
    exp = target if isinstance(target, UnaryExpansion) else UnaryExpansion(target)
    alg = exp.base
    lines = [
        f"algebra {alg.name}",
        f"size {alg.n}",
        f"zero {alg.zero}",
        f"one {alg.one}",
        "add",
        *(" ".join(map(str, row)) for row in alg.add),
        "mul",
        *(" ".join(map(str, row)) for row in alg.mul),
        "star",
        " ".join(map(str, alg.star)),
    ]
    for name in UNARY_NAMES:
        if exp.has(name):
            lines.append(f"unary {name}")
            lines.append(" ".join(map(str, exp.tables[name])))
    if exp.arrow is not None:
        lines.append("binary arrow")
        lines.extend(" ".join(map(str, row)) for row in exp.arrow)
    return "\n".join(lines) + "\n"


def load_fixture(filename: str) -> UnaryExpansion:
    """Load one of the .fka files bundled with the package."""
    text = resources.files(__package__).joinpath("fixtures", filename).read_text("utf-8")
    return parse_algebra(text)
