"""Tests for the line-oriented input formats."""
import pytest

from unsharp.exceptions import AxiomViolation, InputError, ParseError
from unsharp.formats.parsers import (
    is_ops_text,
    load_algebra,
    parse_algebra,
    parse_frame,
    parse_ops,
    parse_props,
    parse_raw_algebra,
    parse_set,
    read_text,
    split_sections,
)

CHAIN = """\
[elements]
0 h 1
[zero]
0
[one]
1
[plus]
0: 0 h 1
h: h 1 -
1: 1 - -
"""


def test_nonlattice_parses_with_supplement_section(data_dir):
    """Test that the shipped algebra parses and its supplements cross-check."""
    algebra = load_algebra(data_dir / "nonlattice.ea")
    assert algebra.elements == ("0", "a", "b", "c", "d", "c'", "b'", "a'", "1")
    assert algebra.supplement("d") == "d"
    raw = parse_raw_algebra(read_text(data_dir / "nonlattice.ea"))
    assert raw.supplement["d"] == "d"
    assert raw.plus["a"]["a"] is None


def test_split_sections_skips_comments_and_blank_lines():
    """Test that comments and blank lines are ignored."""
    sections = split_sections("# header\n\n[times] 1 2\n# note\n[rel]\n1 2\n")
    assert [s.name for s in sections] == ["times", "rel"]
    assert [tok for _, _, tok in sections[0].tokens()] == ["1", "2"]
    assert sections[1].body[0][0] == 6


def test_content_before_header_is_an_error():
    """Test that rows outside any section report their position."""
    with pytest.raises(ParseError) as exc_info:
        split_sections("\n  0 1\n")
    assert exc_info.value.line == 2
    assert exc_info.value.column == 3


def test_empty_plus_section_is_an_error():
    """Test that an empty [plus] section is reported at the section header."""
    text = "[elements]\n0 1\n[zero]\n0\n[one]\n1\n[plus]\n"
    with pytest.raises(ParseError) as exc_info:
        parse_raw_algebra(text)
    assert exc_info.value.line == 7
    assert "empty [plus]" in str(exc_info.value)


def test_short_row_is_an_error():
    """Test that a row with too few cells is rejected."""
    with pytest.raises(ParseError, match="has 2 cells, expected 3"):
        parse_raw_algebra(CHAIN.replace("h: h 1 -", "h: h 1"))


def test_unknown_cell_reports_column():
    """Test that an undeclared id in a cell carries line and column."""
    with pytest.raises(ParseError) as exc_info:
        parse_raw_algebra(CHAIN.replace("h: h 1 -", "h: h x -"))
    assert exc_info.value.line == 9
    assert exc_info.value.column == 6


def test_missing_row_is_an_error():
    """Test that every element needs a [plus] row."""
    with pytest.raises(ParseError, match="no row for '1'"):
        parse_raw_algebra(CHAIN.replace("1: 1 - -\n", ""))


def test_axiom_violation_is_delegated():
    """Test that parse_algebra validates the axioms."""
    with pytest.raises(AxiomViolation):
        parse_algebra(CHAIN.replace("h: h 1 -", "h: h - -"))


def test_supplement_mismatch_is_reported():
    """Test that a wrong declared supplement fails validation."""
    with pytest.raises(AxiomViolation) as exc_info:
        parse_algebra(CHAIN + "[supplement]\n0 1\nh 0\n1 0\n")
    assert exc_info.value.axiom == "supplement"


def test_parse_frame(data_dir):
    """Test that the example frame parses into <= on three points."""
    frame = parse_frame(read_text(data_dir / "leq3.tf"))
    assert frame.times == ("1", "2", "3")
    assert len(frame.rel) == 6


def test_frame_with_unknown_time_point():
    """Test that [rel] may only use declared time points."""
    with pytest.raises(ParseError, match="unknown time point '4'"):
        parse_frame("[times]\n1 2\n[rel]\n1 4\n")


def test_parse_props(nonlattice, leq3_frame, data_dir):
    """Test that propositions are read in time order."""
    props = parse_props(read_text(data_dir / "leq3.pf"), nonlattice, leq3_frame.times)
    assert props == {"p": ("a'", "c'", "a'"), "q": ("b'", "b'", "c'")}


def test_props_need_a_value_per_time_point(nonlattice):
    """Test that a proposition with a missing value is rejected."""
    with pytest.raises(ParseError, match="has 2 values, expected 3"):
        parse_props("[prop p] a b\n", nonlattice, ("1", "2", "3"))


def test_parse_set(nonlattice):
    """Test that sets are read into canonical order."""
    assert parse_set("{a',b'}", nonlattice, 1, 1) == ("b'", "a'")
    assert parse_set("d", nonlattice, 1, 1) == ("d",)
    with pytest.raises(ParseError):
        parse_set("{a,", nonlattice, 1, 1)


def test_parse_ops_with_rows_and_constants(nonlattice):
    """Test an operator table with explicit rows and constants."""
    text = (
        "[times]\n1 2\n"
        "[prop p] a b\n"
        "[op H p]\n1 -> 0\n2 -> {a,b}\n"
        "[constant H] 0\n[constant G] 0\n[constant P] 1\n[constant F] 1\n"
    )
    ops = parse_ops(text, nonlattice)
    assert ops.value("H", ("a", "b"), "2") == ("a", "b")
    assert ops.value("H", ("b", "b"), "2") == ("0",)
    assert is_ops_text(text)
    assert not is_ops_text("[times]\n1\n[rel]\n1 1\n")


def test_ops_without_constants_must_be_total(nonlattice):
    """Test that a partial operator table is an input error."""
    text = "[times]\n1\n[prop p] a\n[op H p]\n1 -> 0\n"
    with pytest.raises(InputError):
        parse_ops(text, nonlattice)


def test_ops_duplicate_row_is_an_error(nonlattice):
    """Test that a value may be given once."""
    text = "[times]\n1\n[prop p] a\n[op H p]\n1 -> 0\n1 -> a\n"
    with pytest.raises(ParseError, match="duplicate value"):
        parse_ops(text, nonlattice)


def test_op_row_on_header_line_is_kept(nonlattice):
    """Test that "[op X p] s -> v" gives the value written on the header line."""
    text = (
        "[times]\n1 2\n"
        "[prop p] a b\n"
        "[op H p] 1 -> a\n2 -> b\n"
        "[constant H] 0\n[constant G] 0\n[constant P] 1\n[constant F] 1\n"
    )
    ops = parse_ops(text, nonlattice)
    assert ops.value("H", ("a", "b"), "1") == ("a",)
    assert ops.value("H", ("a", "b"), "2") == ("b",)


def test_op_header_row_must_be_well_formed(nonlattice):
    """Test that a malformed row on the header line is reported there."""
    text = "[times]\n1\n[prop p] a\n[op H p] 1 a\n[constant H] 0\n"
    with pytest.raises(ParseError, match="an \\[op\\] row") as exc_info:
        parse_ops(text, nonlattice)
    assert exc_info.value.line == 4


def test_rel_pair_on_header_line_is_kept():
    """Test that a pair after [rel] belongs to the relation."""
    frame = parse_frame("[times]\n1 2\n[rel] 2 1\n1 2\n")
    assert set(frame.rel) == {("2", "1"), ("1", "2")}


def test_rel_pair_on_header_line_alone():
    """Test a relation given entirely on the header line."""
    frame = parse_frame("[times]\n1\n[rel] 1 1\n")
    assert list(frame.rel) == [("1", "1")]


def test_supplement_pair_on_header_line_is_cross_checked():
    """Test that a supplement pair on the header line is read and validated."""
    raw = parse_raw_algebra(CHAIN + "[supplement] 0 1\nh h\n1 0\n")
    assert raw.supplement == {"0": "1", "h": "h", "1": "0"}
    with pytest.raises(AxiomViolation) as exc_info:
        parse_algebra(CHAIN + "[supplement] h 0\n")
    assert exc_info.value.axiom == "supplement"
