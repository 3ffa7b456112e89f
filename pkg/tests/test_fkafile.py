from __future__ import annotations

import pytest

from fka import parse_algebra, print_algebra
from fka.errors import ParseError

A3_TEXT = """\
algebra a3
size 3
zero 0
one 1
add
0 1 2
1 1 1
2 1 2
mul
0 0 0
0 1 2
0 2 0
star
1 1 1
unary d
0 1 1
"""


def test_parse_a3_tables():
    exp = parse_algebra(A3_TEXT)
    alg = exp.base
    assert (alg.name, alg.n, alg.zero, alg.one) == ("a3", 3, 0, 1)
    assert alg.mul[2][2] == 0
    assert alg.star == (1, 1, 1)
    assert exp.table("d") == (0, 1, 1)


def test_comments_and_blank_lines_are_ignored():
    noisy = "# header\n\n" + A3_TEXT.replace("mul\n", "mul  # the product table\n\n")
    assert parse_algebra(noisy) == parse_algebra(A3_TEXT)


def test_roundtrip_fixture_files(a3, a4):
    for exp in (a3, a4):
        assert parse_algebra(print_algebra(exp)) == exp


def test_roundtrip_with_arrow_and_many_unaries(a3):
    exp = a3.extended(
        {"t": (0, 1, 1), "t'": (1, 0, 2), "a": (1, 0, 0)},
        arrow=((1, 1, 1), (0, 1, 2), (2, 1, 1)),
    )
    assert parse_algebra(print_algebra(exp)) == exp


def test_print_is_deterministic(a4):
    assert print_algebra(a4) == print_algebra(a4)


def test_one_point_algebra_parses():
    text = "algebra unit\nsize 1\nzero 0\none 0\nadd\n0\nmul\n0\nstar\n0\n"
    exp = parse_algebra(text)
    assert exp.base.n == 1 and exp.base.zero == exp.base.one == 0


def test_index_out_of_range_reports_line():
    bad = A3_TEXT.replace("0 2 0", "0 2 5")
    with pytest.raises(ParseError, match=r"line 12: .*index 5 out of range"):
        parse_algebra(bad)


def test_duplicate_section_rejected():
    bad = A3_TEXT + "star\n1 1 1\n"
    with pytest.raises(ParseError, match="duplicate section 'star'"):
        parse_algebra(bad)


def test_missing_section_rejected():
    truncated = A3_TEXT.split("star")[0]
    with pytest.raises(ParseError, match="missing required section 'star'"):
        parse_algebra(truncated)


def test_size_must_come_first():
    reordered = A3_TEXT.replace("size 3\nzero 0", "zero 0\nsize 3")
    with pytest.raises(ParseError, match="'size' must be declared before 'zero'"):
        parse_algebra(reordered)


def test_zero_equal_one_rejected_for_larger_carriers():
    bad = A3_TEXT.replace("one 1", "one 0")
    with pytest.raises(ParseError, match="zero and one must differ"):
        parse_algebra(bad)


def test_wrong_row_width_rejected():
    bad = A3_TEXT.replace("0 1 2\n1 1 1", "0 1\n1 1 1")
    with pytest.raises(ParseError, match="expected 3 entries"):
        parse_algebra(bad)


def test_unknown_keyword_rejected():
    with pytest.raises(ParseError, match="unknown section keyword"):
        parse_algebra(A3_TEXT + "binaryarrow\n")
