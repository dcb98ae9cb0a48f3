import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linklab.cli import main
from linklab.errors import ParseError
from linklab.groebner import Ideal
from linklab.ideal_ops import variables_ideal
from linklab.library import NAMES, corpus_text, determinantal_example, load
from linklab.polyring import RingDescriptor
from linklab.report import InvariantReport, invariant_report
from linklab.suites import (
    betti_oracle_suite,
    random_property_suite,
    verify_paper_suite,
)
from linklab.textformat import format_ideal, parse_ideal_file, parse_ideal_text, parse_polynomial

from conftest import polynomials

R4 = RingDescriptor(4)
GOLDEN = Path(__file__).parent / "golden"


# -- text format


def test_parse_binomial():
    f = parse_polynomial(R4, "x0*x3 - x1*x2")
    assert f == R4.var(0) * R4.var(3) - R4.var(1) * R4.var(2)
    assert parse_polynomial(R4, "2x0^2x1 - 3") == R4.parse("2*x0^2*x1 - 3")


@pytest.mark.parametrize("text, line, column", [
    ("ring n=4 char=32003\nx0 + x5\n", 2, 6),
    ("ring n=4 char=32003\n\nx0^ + x1\n", 3, 3),
    ("ring n=4 char=32003\nx0 $ x1\n", 2, 4),
])
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_ideal_text(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_ring_line_errors():
    with pytest.raises(ParseError):
        parse_ideal_text("x0 + x1\n")
    with pytest.raises(ParseError):
        parse_ideal_text("ring n=4 char=6\nx0\n")
    with pytest.raises(ParseError):
        parse_ideal_text("ring n=4 colour=red\nx0\n")


def test_empty_file(tmp_path):
    path = tmp_path / "empty.ideal"
    path.write_text("\n# nothing here\n")
    with pytest.raises(ParseError):
        parse_ideal_file(path)
    path.write_text("")
    with pytest.raises(ParseError):
        parse_ideal_file(path)


def test_printed_generator_file_is_not_the_quartic():
    printed = load("twisted_quartic_printed")
    assert len(printed.generators) == 3
    assert printed.generators[0] == R4.parse("x0*x3 - x1*x2")
    assert printed != load("twisted_quartic")


@given(gens=st.lists(polynomials(RingDescriptor(3, 7)), max_size=4))
def test_format_parse_round_trip(gens):
    I = Ideal(RingDescriptor(3, 7), [g for g in gens if g])
    J = parse_ideal_text(format_ideal(I, comment="round trip\nsecond line"))
    assert J.ring == I.ring and J.generators == I.generators


def test_corpus_files_are_stable():
    for name in NAMES:
        I = load(name)
        assert format_ideal(I).splitlines()[0] == "ring n=4 char=32003 order=grevlex"
        body = [l for l in corpus_text(name).splitlines() if l and not l.startswith("#")]
        assert [I.ring.parse(l) for l in body[1:]] == list(I.generators)


@pytest.mark.parametrize("name, characteristic", [("skew_lines", 32003), ("twisted_quartic", 2),
                                                  ("twisted_quartic", 0)])
def test_reports_match_golden_files(name, characteristic):
    golden = GOLDEN / f"{name}_char{characteristic}.json"
    assert invariant_report(load(name, characteristic)).to_json() + "\n" == golden.read_text()


def test_determinantal_example_shapes():
    a, b, c = determinantal_example()
    assert a.ring.num_vars == 12
    assert (len(a.generators), len(b.generators), len(c.generators)) == (4, 3, 2)
    assert a.contains_ideal(c) and b.contains_ideal(c)


# -- reports


def test_report_of_skew_lines(skew_lines):
    rep = invariant_report(skew_lines)
    assert (rep.dim, rep.height, rep.depth, rep.pd, rep.cd, rep.fgrade) == (2, 2, 1, 3, 3, 1)
    assert rep.squarefree and rep.unmixed and not rep.cohen_macaulay
    assert rep.check() == []


def test_report_of_quartic_over_f2():
    rep = invariant_report(load("twisted_quartic", 2))
    assert (rep.depth, rep.pd, rep.cd, rep.fgrade) == (1, 3, 2, 2)
    assert "Frobenius" in rep.provenance["cd"]


def test_report_over_q_leaves_cd_open_with_reason():
    rep = invariant_report(load("twisted_quartic", 0))
    assert rep.cd is None and rep.fgrade is None
    assert (rep.cd_lower, rep.cd_upper) == (2, 4)
    assert "characteristic 0" in rep.reasons["cd"]
    assert json.loads(rep.to_json())["cd"] is None


def test_report_cd_exact_over_q_when_bounds_meet():
    rep = invariant_report(load("quartic_link_ci", 0))
    assert rep.cd == 2 and rep.cohen_macaulay and rep.unmixed


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_report_of_maximal_ideal(n):
    rep = invariant_report(variables_ideal(RingDescriptor(n)))
    assert (rep.cd, rep.depth) == (n, 0)


def test_report_edge_cases():
    rep = invariant_report(Ideal(R4, ["x0 + 1"]))
    assert rep.depth is None and "inhomogeneous" in rep.reasons["depth"]
    unit = invariant_report(Ideal(R4, ["1"]))
    assert "unit ideal" in unit.reasons["cd"]
    assert unit.check() == []


def test_json_round_trip(skew_lines):
    rep = invariant_report(load("twisted_quartic", 2))
    text = rep.to_json()
    assert json.loads(text)["schema"] == 1
    assert InvariantReport.from_json(text) == rep
    with pytest.raises(ValueError):
        InvariantReport.from_json(text.replace('"schema": 1', '"schema": 2'))


def test_report_consistency_check_catches_errors(skew_lines):
    rep = invariant_report(skew_lines)
    rep.depth = 2
    assert any("depth" in p for p in rep.check())
    rep = invariant_report(skew_lines)
    rep.fgrade = None
    assert "fgrade is null without a reason" in rep.check()


# -- suites


def test_fixed_example_ledger_is_deterministic():
    first = verify_paper_suite()
    assert first.ok
    assert first.to_text() == verify_paper_suite().to_text()
    assert first.status_of("determinantal link in 12 variables") == "SKIPPED"


def test_property_suite_with_no_trials():
    rep = random_property_suite(trials=0, seed=1)
    assert rep.ok and rep.counts == {}


def test_property_suite_is_byte_identical_per_seed():
    a = random_property_suite(trials=4, seed=3, n=4)
    b = random_property_suite(trials=4, seed=3, n=4)
    assert a.to_text() == b.to_text()
    assert a.ok


def test_betti_oracle_small_run():
    rep = betti_oracle_suite(trials=20, seed=5, max_vars=5)
    assert rep.ok and rep.counts["checked"] == 20


def test_property_suite_variable_cap():
    with pytest.raises(ValueError):
        random_property_suite(trials=1, n=7)


# -- command line


def _corpus_file(tmp_path, name, characteristic=None):
    path = tmp_path / f"{name}.ideal"
    path.write_text(format_ideal(load(name, characteristic)))
    return str(path)


def test_cli_invariants(tmp_path, capsys):
    assert main(["invariants", _corpus_file(tmp_path, "skew_lines")]) == 0
    assert "cd: 3" in capsys.readouterr().out
    assert main(["invariants", _corpus_file(tmp_path, "twisted_quartic", 2), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["cd"] == 2 and data["schema"] == 1


def test_cli_link_and_find_link(tmp_path, capsys):
    a = _corpus_file(tmp_path, "skew_lines")
    c = _corpus_file(tmp_path, "quartic_link_ci")
    assert main(["link", a, "--ci", c]) == 0
    out = capsys.readouterr().out
    assert "# verified: True" in out
    linked = tmp_path / "b.ideal"
    linked.write_text(out)
    assert parse_ideal_file(linked) == load("twisted_quartic")
    assert main(["find-link", a, "--seed", "2"]) == 0
    assert main(["link", a, "--ci", a]) == 2  # c = a: degenerate link


def test_cli_chain(tmp_path, capsys):
    a = _corpus_file(tmp_path, "skew_lines")
    assert main(["chain", a, "--steps", "2", "--seed", "1"]) == 0
    assert "chain PASS" in capsys.readouterr().out


def test_cli_suites(capsys):
    assert main(["verify-paper"]) == 0
    assert "overall PASS" in capsys.readouterr().out
    assert main(["property-test", "--trials", "3", "--seed", "1", "--vars", "4",
                 "--char", "32003", "--betti-trials", "5"]) == 0
    first = capsys.readouterr().out
    main(["property-test", "--trials", "3", "--seed", "1", "--vars", "4", "--char", "32003",
          "--betti-trials", "5"])
    assert capsys.readouterr().out == first


def test_cli_errors(tmp_path, capsys, monkeypatch):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring n=4 char=32003\nx0 + x9\n")
    assert main(["invariants", str(bad)]) == 2
    assert "line 2, column 6" in capsys.readouterr().err
    monkeypatch.setenv("LINKLAB_PAIR_BUDGET", "2")
    assert main(["invariants", _corpus_file(tmp_path, "twisted_quartic")]) == 2
    assert "budget" in capsys.readouterr().err
