"""Tests for extensionally given tense operators."""
import pytest

from unsharp.exceptions import InputError
from unsharp.models.operators import TableOperators


def test_table_prefers_explicit_entries(nonlattice):
    """Test that listed values win over the constant."""
    p = ("a",)
    ops = TableOperators(nonlattice, ("1",), {("H", p, "1"): ("a",)}, {"H": ("0",)})
    assert ops.value("H", p, "1") == ("a",)
    assert ops.value("H", ("b",), "1") == ("0",)


def test_missing_value_raises(nonlattice):
    """Test that a value neither listed nor covered by a constant is an input error."""
    ops = TableOperators(nonlattice, ("1",), {}, {"H": ("0",)})
    with pytest.raises(InputError):
        ops.value("G", ("a",), "1")


def test_check_total(nonlattice):
    """Test that totality holds with constants for every operator and fails otherwise."""
    constants = {"P": ("1",), "F": ("1",), "H": ("0",), "G": ("0",)}
    TableOperators(nonlattice, ("1", "2"), {}, constants).check_total()
    with pytest.raises(InputError):
        TableOperators(nonlattice, ("1",), {}, {"P": ("1",)}).check_total()
