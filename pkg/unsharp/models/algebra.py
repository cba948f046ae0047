"""Effect algebra data model."""
from collections.abc import Iterable, Mapping
from itertools import product

from pydantic import BaseModel, Field

from unsharp.models.poset import ElementSet, Poset


class RawAlgebra(BaseModel):
    """
    An unvalidated effect algebra table as read from a file.

    Attributes:
        elements: Element ids in canonical (declaration) order
        zero: Id of the zero element
        one: Id of the unit element
        plus: Row-major partial sum table; None marks an undefined cell
        supplement: Optional supplement map to cross-check against the table
    """
    elements: list[str] = Field(..., description="Element ids in declaration order")
    zero: str = Field(..., description="Zero element id")
    one: str = Field(..., description="Unit element id")
    plus: dict[str, dict[str, str | None]] = Field(..., description="Partial sum table, None for undefined")
    supplement: dict[str, str] | None = Field(None, description="Declared supplements, if any")


class EffectAlgebra:
    """
    A validated finite effect algebra (E, +, ', 0, 1) with its induced order.

    Instances are built by services.axioms.verify_axioms and never mutated.
    Partial operations return None where they are undefined.
    """

    def __init__(
        self,
        elements: Iterable[str],
        zero: str,
        one: str,
        plus: Mapping[tuple[str, str], str],
        supplement: Mapping[str, str],
        order: Poset,
    ):
        self.elements: tuple[str, ...] = tuple(elements)
        self.zero = zero
        self.one = one
        self._plus = dict(plus)
        self._supplement = dict(supplement)
        self.order = order

    def __len__(self) -> int:
        return len(self.elements)

    def plus(self, a: str, b: str) -> str | None:
        """a + b, or None when a and b are not orthogonal."""
        return self._plus.get((a, b))

    def supplement(self, a: str) -> str:
        """The unique a' with a + a' = 1."""
        return self._supplement[a]

    def supplement_set(self, A: Iterable[str]) -> ElementSet:
        """Elementwise supplement of a set."""
        return self.order.canonical(self._supplement[a] for a in A)

    def induced_leq(self, a: str, b: str) -> bool:
        """True iff a + c = b for some c."""
        return self.order.leq(a, b)

    leq = induced_leq

    def orthogonal(self, a: str, b: str) -> bool:
        """a ⊥ b, i.e. a <= b'."""
        return self.order.leq(a, self._supplement[b])

    def odot(self, a: str, b: str) -> str | None:
        """a ⊙ b = (a' + b')', or None when a' + b' is undefined."""
        s = self._plus.get((self._supplement[a], self._supplement[b]))
        return None if s is None else self._supplement[s]

    def plus_set(self, A: Iterable[str], B: Iterable[str]) -> ElementSet | None:
        """A + B, defined only when every a + b is defined."""
        return self._lift(self.plus, A, B)

    def odot_set(self, A: Iterable[str], B: Iterable[str]) -> ElementSet | None:
        """A ⊙ B, defined only when every a ⊙ b is defined."""
        return self._lift(self.odot, A, B)

    def _lift(self, op, A: Iterable[str], B: Iterable[str]) -> ElementSet | None:
        results = []
        for a, b in product(tuple(A), tuple(B)):
            value = op(a, b)
            if value is None:
                return None
            results.append(value)
        return self.order.canonical(results)

    def is_lattice(self) -> bool:
        """True iff the induced order is a lattice."""
        return self.order.is_lattice()

    def table(self) -> dict[str, dict[str, str | None]]:
        """The + table in row-major form, as accepted by RawAlgebra."""
        return {a: {b: self._plus.get((a, b)) for b in self.elements} for a in self.elements}
