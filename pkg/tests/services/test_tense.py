"""Tests for frame-induced tense operators and the transformation function."""
import random
from itertools import product

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from tests.conftest import DATA_DIR
from unsharp.config import Settings
from unsharp.exceptions import FamilyTooLargeError, InputError, NonSerialFrameError, UndefinedOperationError
from unsharp.formats.parsers import load_algebra, load_frame
from unsharp.models.frame import TimeFrame
from unsharp.services.tense import FrameOperators, TenseService, lift

NONLATTICE = load_algebra(DATA_DIR / "nonlattice.ea")
LEQ3 = TenseService(NONLATTICE, load_frame(DATA_DIR / "leq3.tf"))
element_sets = st.sets(st.sampled_from(NONLATTICE.elements), min_size=1, max_size=3).map(NONLATTICE.order.canonical)
set_props = st.tuples(element_sets, element_sets, element_sets)


def test_apply_on_example_propositions(leq3_tense, leq3_props):
    """Test G and H on p and q over ({1,2,3}, <=)."""
    p, q = leq3_props["p"], leq3_props["q"]
    assert leq3_tense.apply("G", p) == (("b",), ("b",), ("a'",))
    assert leq3_tense.apply("G", q) == (("a", "b"), ("a", "b"), ("c'",))
    assert leq3_tense.apply("H", p) == (("a'",), ("b",), ("b",))
    assert leq3_tense.apply("H", q) == (("b'",), ("b'",), ("a", "b"))


def test_existential_operators_take_min_upper(leq3_tense, leq3_props):
    """Test that F collects later values and P earlier ones through Min U."""
    p = leq3_props["p"]
    assert leq3_tense.apply("F", p) == (("1",), ("1",), ("a'",))
    assert leq3_tense.apply("P", p) == (("a'",), ("1",), ("1",))


def test_operator_relations_on_example(leq3_tense, leq3_props):
    """Test the eight relations between tense operators, ⊗ and ⇒ on p and q."""
    t = leq3_tense
    for X in ("G", "H"):
        for a, b in (("p", "q"), ("q", "p")):
            x, y = leq3_props[a], leq3_props[b]
            product_first = t.pointwise_connective("⊗", t.apply(X, x), t.apply(X, y))
            assert product_first == t.apply_to_set(X, t.pointwise_connective("⊗", x, y))
            implied = t.apply_to_set(X, t.pointwise_connective("⇒", x, y))
            assert t.sqsub(implied, t.pointwise_connective("⇒", t.apply(X, x), t.apply(X, y)))


def test_phi_enumerates_selections(leq3_tense):
    """Test that φ(x) contains every pointwise selection."""
    x = (("a", "b"), ("c",), ("0", "1"))
    assert leq3_tense.phi(x) == frozenset(
        {("a", "c", "0"), ("a", "c", "1"), ("b", "c", "0"), ("b", "c", "1")}
    )
    assert leq3_tense.phi(lift(("a", "b", "c"))) == frozenset({("a", "b", "c")})


def test_phi_respects_the_cap(nonlattice, leq3_frame):
    """Test that a family above the cap is refused."""
    tense = TenseService(nonlattice, leq3_frame, family_cap=8)
    with pytest.raises(FamilyTooLargeError):
        tense.phi((nonlattice.elements, ("a",), ("a",)))


def test_phi_rejects_wrong_length(leq3_tense):
    """Test that set propositions must cover every time point."""
    with pytest.raises(InputError):
        leq3_tense.phi((("a",),))


def test_composition(leq3_tense, leq3_props):
    """Test that (G*P)(p) is G applied to φ(P(p))."""
    p = leq3_props["p"]
    expected = leq3_tense.tense_apply("G", leq3_tense.phi(leq3_tense.apply("P", p)))
    assert leq3_tense.compose("G", "P", {p}) == expected


def test_empty_family_is_rejected(leq3_tense):
    """Test that tense operators need a nonempty family."""
    with pytest.raises(InputError):
        leq3_tense.tense_apply("G", [])


def test_non_serial_frame_is_rejected(nonlattice):
    """Test that operators on a frame with an endpoint are refused."""
    tense = TenseService(nonlattice, TimeFrame(["1", "2"], [("1", "2")]))
    with pytest.raises(NonSerialFrameError):
        tense.apply("G", ("a", "b"))
    with pytest.raises(NonSerialFrameError):
        FrameOperators(tense)


def test_value_at_works_where_points_are_related(nonlattice):
    """Test that a single time point with successors is evaluated on a non-serial frame."""
    tense = TenseService(nonlattice, TimeFrame(["1", "2"], [("1", "2")]))
    assert tense.value_at("G", [("a", "b")], "1") == ("b",)
    with pytest.raises(NonSerialFrameError):
        tense.value_at("G", [("a", "b")], "2")


def test_partial_connective_reports_time_point(leq3_tense):
    """Test that an undefined ⊙ names the time point where it fails."""
    with pytest.raises(UndefinedOperationError) as exc_info:
        leq3_tense.pointwise_connective("⊙", ("1", "a", "1"), ("1", "a", "1"))
    assert exc_info.value.time_point == "2"


def test_unknown_connective(leq3_tense):
    """Test that only the five connectives are accepted."""
    with pytest.raises(InputError):
        leq3_tense.pointwise_connective("∨", ("a",) * 3, ("a",) * 3)


def test_dynamic_axioms_hold_exhaustively(leq3_tense):
    """Test that the dynamic axioms and the bounds hold over all 729 propositions."""
    report = leq3_tense.check_dynamic_axioms(Settings())
    by_check = {r.check: r for r in report.results}
    assert [r.status for r in report.results] == ["pass"] * 5
    assert not by_check["dynamic.round-trip"].sampled
    assert by_check["dynamic.round-trip"].cases == 729


def test_bounds_skipped_on_irreflexive_frame(nonlattice, data_dir):
    """Test that the reflexive-only bounds are skipped on a swap frame."""
    tense = TenseService(nonlattice, load_frame(data_dir / "swap2.tf"))
    report = tense.check_dynamic_axioms(Settings())
    statuses = {r.check: r.status for r in report.results}
    assert statuses["dynamic.bounds"] == "skip"
    assert all(statuses[name] == "pass" for name in ("dynamic.top", "dynamic.monotone", "dynamic.additive", "dynamic.round-trip"))


def test_compatibility_never_fails(leq3_tense, leq3_props):
    """Test that the compatibility checks pass or skip on the example data."""
    report = leq3_tense.check_compatibility(list(leq3_props.values()), Settings(sample_size=100, pair_sample_size=8))
    assert len(report.results) == 64
    assert report.passed


def test_compatibility_pins_counts_where_hypotheses_hold(data_dir):
    """Test the compatibility report on a one-point Boolean frame.

    With H = G the ⇒ hypothesis holds exactly when X is H or G, and every
    ⊗ hypothesis holds, so both conclusions are checked on all pairs.
    """
    tense = TenseService(load_algebra(data_dir / "boolean4.ea"), TimeFrame(("1",), [("1", "1")]))
    report = tense.check_compatibility([("x",), ("y",)], Settings())
    statuses = {r.check: r.status for r in report.results}
    assert report.counts() == {"pass": 48, "fail": 0, "skip": 16}
    assert statuses["compat.double[H,P,G]"] == "pass"
    assert statuses["compat.double[P,H,H]"] == "skip"
    assert statuses["compat.otimes[G,F,P]"] == "pass"
    assert not any(r.sampled for r in report.results)


def test_compatibility_pairs_cover_every_proposition(leq3_tense, leq3_props):
    """Test that every proposition is paired with the given ones on both sides."""
    props = list(leq3_props.values())
    pairs, sampled = leq3_tense._checked_pairs(props, Settings(pair_sample_size=8), random.Random(0))
    every = set(product(NONLATTICE.elements, repeat=3))
    assert sampled
    assert len(pairs) >= 2 * 729 * 2 - 4
    for p in props:
        assert {a for a, b in pairs if b == p} == every
        assert {b for a, b in pairs if a == p} == every


def test_wrong_length_proposition_is_an_input_error(leq3_tense):
    """Test that propositions must have one value per time point."""
    with pytest.raises(InputError, match="Expected values at 3 time points, got 2"):
        leq3_tense.tense_apply("G", [("a", "b")])
    with pytest.raises(InputError):
        leq3_tense.value_at("H", [("a", "b", "c", "d")], "1")


@hypothesis_settings(max_examples=50, deadline=None)
@given(set_props)
def test_direct_formula_matches_enumeration(x):
    """Test that operators on φ(x) can be computed from the pointwise unions."""
    family = LEQ3.phi(x)
    for which in ("P", "F", "H", "G"):
        assert LEQ3.tense_apply(which, family) == LEQ3.apply_to_set(which, x)


@hypothesis_settings(max_examples=50, deadline=None)
@given(set_props, set_props)
def test_phi_is_injective(x, y):
    """Test that distinct set propositions have distinct families."""
    assert (LEQ3.phi(x) == LEQ3.phi(y)) == (x == y)
