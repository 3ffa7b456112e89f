from __future__ import annotations

import json
from importlib import resources

import pytest

from fka import parse_algebra, print_algebra
from fka.cli import main


@pytest.fixture(scope="module")
def a3_path() -> str:
    return str(resources.files("fka") / "fixtures" / "a3.fka")


@pytest.fixture(scope="module")
def a4_path() -> str:
    return str(resources.files("fka") / "fixtures" / "a4.fka")


def test_check_domain_fails_with_witness(a3_path, capsys):
    assert main(["check", "--suite", "domain", a3_path]) == 1
    out = capsys.readouterr().out
    assert "d-locality" in out and "x=2 y=2" in out


def test_check_kleene_passes(a3_path, capsys):
    assert main(["check", "--suite", "kleene", a3_path]) == 0
    assert "15/15 axioms hold" in capsys.readouterr().out


def test_check_missing_table_is_an_error(a3_path, capsys):
    assert main(["check", "--suite", "kat1", a3_path]) == 2
    assert "missing table t" in capsys.readouterr().err


def test_check_json_report(a3_path, capsys):
    assert main(["check", "--suite", "predomain", "--json", a3_path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suite"] == "predomain"
    assert payload["all_hold"] is True
    assert len(payload["results"]) == 5


def test_translate_examples(capsys):
    assert main(["translate", "~b0"]) == 0
    assert capsys.readouterr().out.strip() == "t'(t(x1))"
    assert main(["translate", "1"]) == 0
    assert capsys.readouterr().out.strip() == "t(1)"
    assert main(["translate", "p0 ; b1*"]) == 0
    assert capsys.readouterr().out.strip() == "x0 ; t(x3)*"


def test_translate_sort_error(capsys):
    assert main(["translate", "~p0"]) == 2
    assert "negation applies only to tests" in capsys.readouterr().err


def test_holds_and_fails(a3_path, tmp_path, capsys):
    assert main(["holds", a3_path, "x0 + x0 = x0"]) == 0
    assert capsys.readouterr().out.strip() == "holds"

    with_t = tmp_path / "a3t.fka"
    exp = parse_algebra(resources.files("fka").joinpath("fixtures", "a3.fka").read_text())
    with_t.write_text(print_algebra(exp.extended({"t": exp.table("d")})))
    assert main(["holds", str(with_t), "t(x0 ; x1) = t(x0 ; t(x1))"]) == 1
    out = capsys.readouterr().out
    assert "fails: x0=2 x1=2 (lhs=0 rhs=1)" in out


def test_holds_two_sorted_equation_uses_derived_tests(tmp_path, capsys):
    exp = parse_algebra(resources.files("fka").joinpath("fixtures", "a3.fka").read_text())
    path = tmp_path / "a3tt.fka"
    path.write_text(print_algebra(exp.extended({"t": (0, 1, 1), "t'": (1, 0, 2)})))
    assert main(["holds", str(path), "b0 ; b0 = b0"]) == 0
    assert main(["holds", str(path), "b0 ; p0 = p0"]) == 1


def test_search_kad_reports_no_expansion(a3_path, capsys):
    assert main(["search", "--suite", "kad", "--tables", "a", a3_path]) == 1
    assert "NO EXPANSION EXISTS (exhaustive: 27 candidates)" in capsys.readouterr().out


def test_search_kat1_lists_expansions(a3_path, capsys):
    assert main(["search", "--suite", "kat1", "--tables", "t,t'", a3_path]) == 0
    out = capsys.readouterr().out
    assert "FOUND 6 EXPANSIONS (exhaustive: 729 candidates)" in out
    assert "t = 0 1 1 | t' = 1 0 2" in out


def test_expand_kat1_appends_tables(a3_path, capsys):
    assert main(["expand", "--to", "kat1", a3_path]) == 0
    exp = parse_algebra(capsys.readouterr().out)
    assert exp.table("t") == (0, 1, 1)
    assert exp.table("t'") == (1, 0, 2)
    assert exp.table("d") == (0, 1, 1)  # input table kept


def test_expand_residuated_writes_arrow(a3_path, tmp_path, capsys):
    out_path = tmp_path / "a3r.fka"
    assert main(["expand", "--to", "residuated", "-o", str(out_path), a3_path]) == 0
    exp = parse_algebra(out_path.read_text())
    assert exp.arrow is not None
    assert exp.arrow[2][0] == 2
    assert exp.table("t'") == (1, 0, 0)


def test_expand_rejects_non_kleene_input(tmp_path, capsys):
    bad = tmp_path / "bad.fka"
    exp = parse_algebra(resources.files("fka").joinpath("fixtures", "a3.fka").read_text())
    broken = print_algebra(exp.base).replace("star\n1 1 1", "star\n1 1 2")
    bad.write_text(broken)
    assert main(["expand", "--to", "kat1", str(bad)]) == 2
    assert "not a Kleene algebra" in capsys.readouterr().err


def test_appendix_verify(capsys):
    assert main(["appendix-verify"]) == 0
    out = capsys.readouterr().out
    assert "A3 domain: fails exactly d-locality at x=2 y=2 (0 != 1)" in out
    assert "A3 kad expansions over a: none (27/27)" in out
    assert "729/729" in out
    assert "A4 d-image: {0, 1, 3}" in out
    assert out.count("DIVERGES") == 2
    assert "battery: OK" in out


def test_appendix_verify_json(capsys):
    assert main(["appendix-verify", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert payload["a3"]["kad_certificate"] == "27/27"
    assert payload["a4"]["d_image_mul_closed"] is True
    assert payload["a4"]["d_idempotent"] is True


def test_missing_file_is_an_error(capsys):
    assert main(["check", "--suite", "kleene", "/nonexistent.fka"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_output_is_deterministic(a3_path, capsys):
    main(["check", "--suite", "domain", a3_path])
    first = capsys.readouterr().out
    main(["check", "--suite", "domain", a3_path])
    assert capsys.readouterr().out == first
