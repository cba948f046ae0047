"""Tests for the finite poset model."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tests.conftest import DATA_DIR, golden
from unsharp.exceptions import AxiomViolation, InputError, UnknownElementError
from unsharp.formats.parsers import load_algebra
from unsharp.formats.render import cover_lines
from unsharp.models.poset import Poset

ORDER = load_algebra(DATA_DIR / "nonlattice.ea").order
subsets = st.sets(st.sampled_from(ORDER.elements), min_size=1).map(ORDER.canonical)


def test_poset_finds_bounds():
    """Test that the least and greatest elements are detected."""
    assert ORDER.bottom == "0"
    assert ORDER.top == "1"


def test_canonical_orders_and_deduplicates():
    """Test that canonical sorts by declaration order and drops duplicates."""
    assert ORDER.canonical(["1", "a'", "a", "a'"]) == ("a", "a'", "1")


def test_min_upper_and_max_lower_of_incomparable_pair():
    """Test that Min U and Max L of a non-lattice pair have two members."""
    assert ORDER.min_upper(("a", "b")) == ("c'", "b'")
    assert ORDER.max_lower(("c'", "b'")) == ("a", "b")


def test_bounds_of_empty_set_are_everything():
    """Test that U and L of the empty set are the whole carrier."""
    assert ORDER.upper_bounds(()) == ORDER.elements
    assert ORDER.lower_bounds(()) == ORDER.elements


def test_max_of_empty_set_raises():
    """Test that Max and Min are not taken of the empty set."""
    with pytest.raises(InputError):
        ORDER.max_of(())
    with pytest.raises(InputError):
        ORDER.min_of(())


def test_set_comparisons():
    """Test the three set comparisons on small examples."""
    assert ORDER.leq1(("a", "b"), ("c'",))
    assert not ORDER.leq1(("a", "d"), ("c'",))
    assert ORDER.leq2(("0",), ("a", "b"))
    assert not ORDER.leq2(("a",), ("a", "b"))
    assert ORDER.sqsub(("a",), ("b", "c'"))
    assert not ORDER.sqsub(("a",), ("b",))
    assert ORDER.set_leq(("a", "b"), ("c'", "1"))
    assert not ORDER.set_leq(("a", "b"), ("c'", "b"))


def test_equivalences():
    """Test that ≈1 and ≈2 identify sets with the same maximal and minimal parts."""
    assert ORDER.approx1(("a", "b", "c'"), ("c'",))
    assert not ORDER.approx1(("a", "b"), ("c'",))
    assert ORDER.approx2(("0", "a"), ("0",))


def test_nonlattice_is_not_a_lattice():
    """Test that the nine-element order is not a lattice."""
    assert not ORDER.is_lattice()


def test_chain_is_a_lattice():
    """Test that a chain is a lattice."""
    assert Poset(["0", "h", "1"], [("0", "h"), ("h", "1"), ("0", "1")]).is_lattice()


def test_covers_match_golden_file():
    """Test that the cover relation renders as the committed golden file."""
    assert cover_lines(ORDER) == golden("nonlattice_covers.txt")


def test_render_sets():
    """Test that singletons render bare and larger sets in braces."""
    assert ORDER.render(("a",)) == "a"
    assert ORDER.render(("c'", "b'")) == "{c',b'}"


def test_poset_rejects_cycle():
    """Test that a non-antisymmetric relation is rejected."""
    with pytest.raises(AxiomViolation) as exc_info:
        Poset(["x", "y"], [("x", "y"), ("y", "x")])
    assert exc_info.value.axiom == "order"


def test_poset_rejects_intransitive_relation():
    """Test that a relation missing a transitive pair is rejected."""
    with pytest.raises(AxiomViolation):
        Poset(["x", "y", "z"], [("x", "y"), ("y", "z")])


def test_poset_requires_bounds():
    """Test that an order without bottom and top is rejected."""
    with pytest.raises(AxiomViolation):
        Poset(["x", "y"], [])


def test_poset_rejects_unknown_ids():
    """Test that the relation may only mention declared elements."""
    with pytest.raises(UnknownElementError):
        Poset(["x"], [("x", "z")])


def test_poset_rejects_duplicate_ids():
    """Test that element ids must be unique."""
    with pytest.raises(InputError):
        Poset(["x", "x"], [])


@given(subsets)
def test_max_and_min_are_antichains(C):
    """Test that Max C and Min C are antichains inside C."""
    top, bottom = ORDER.max_of(C), ORDER.min_of(C)
    assert ORDER.is_antichain(top) and set(top) <= set(C)
    assert ORDER.is_antichain(bottom) and set(bottom) <= set(C)


@given(subsets, st.data())
def test_subsets_are_bounded_by_max_and_min(C, data):
    """Test that B ⊆ C implies B <=1 Max C and Min C <=2 B."""
    B = ORDER.canonical(data.draw(st.sets(st.sampled_from(C), min_size=1)))
    assert ORDER.leq1(B, ORDER.max_of(C))
    assert ORDER.leq2(ORDER.min_of(C), B)


@given(subsets, subsets)
def test_leq1_and_leq2_imply_sqsub(A, B):
    """Test that both orderings imply ⊑."""
    if ORDER.leq1(A, B) or ORDER.leq2(A, B):
        assert ORDER.sqsub(A, B)
