"""Protocol interfaces for tense operator sources."""
from typing import Protocol

from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import Proposition
from unsharp.models.operators import TenseOperator
from unsharp.models.poset import ElementSet


class ITenseOperators(Protocol):
    """
    Protocol for tense operators P, F, H, G on single propositions.

    Implemented by operators induced from a time frame and by operators
    given extensionally in a table.
    """

    algebra: EffectAlgebra
    times: tuple[str, ...]

    def value(self, which: TenseOperator, p: Proposition, s: str) -> ElementSet:
        """
        Value of an operator on a proposition at one time point.

        Args:
            which: One of P, F, H, G
            p: Proposition indexed by the position of each time point in times
            s: Time point id

        Returns:
            Nonempty element set
        """
        ...
