"""Extensionally given tense operators."""
from collections.abc import Mapping
from itertools import product
from typing import Literal

from unsharp.exceptions import InputError
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import Proposition
from unsharp.models.poset import ElementSet

TenseOperator = Literal["P", "F", "H", "G"]
OPERATORS: tuple[TenseOperator, ...] = ("P", "F", "H", "G")


class TableOperators:
    """
    Tense operators given by a table rather than induced by a frame.

    Values not listed explicitly fall back to a per-operator constant.

    Attributes:
        algebra: The effect algebra the values live in
        times: Time point ids; propositions are indexed by their positions
    """

    def __init__(
        self,
        algebra: EffectAlgebra,
        times: tuple[str, ...],
        entries: Mapping[tuple[TenseOperator, Proposition, str], ElementSet],
        constants: Mapping[TenseOperator, ElementSet] | None = None,
    ):
        """
        Initialize an operator table.

        Args:
            algebra: Validated effect algebra
            times: Time point ids
            entries: Explicit values keyed by (operator, proposition, time point)
            constants: Value of each operator wherever no entry is given
        """
        self.algebra = algebra
        self.times = tuple(times)
        self._entries = dict(entries)
        self._constants = dict(constants or {})

    def value(self, which: TenseOperator, p: Proposition, s: str) -> ElementSet:
        """
        Value of an operator on a proposition at one time point.

        Raises:
            InputError: If the table has no value there
        """
        found = self._entries.get((which, p, s))
        if found is not None:
            return found
        if which in self._constants:
            return self._constants[which]
        raise InputError(f"Operator table has no value for {which}({','.join(p)}) at {s}")

    def check_total(self) -> None:
        """
        Check that every operator has a value on every proposition and time point.

        Raises:
            InputError: If some value is missing
        """
        missing = [w for w in OPERATORS if w not in self._constants]
        if not missing:
            return
        for p in product(self.algebra.elements, repeat=len(self.times)):
            for which in missing:
                for s in self.times:
                    self.value(which, p, s)
