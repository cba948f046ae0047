"""Unsharp implications and the adjoint conjunction of an effect algebra."""
from collections.abc import Callable, Iterable
from itertools import product

from unsharp.exceptions import InvariantError
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.poset import ElementSet


class Connectives:
    """
    The implications →, ⇝, ⇒ and the conjunction ⊗ over one effect algebra.

    Set-valued results are nonempty ElementSets; ⇝ is partial and returns
    None where c is not below b. Values are memoized per instance, so one
    Connectives object should be reused for sweeps over an algebra.
    """

    def __init__(self, algebra: EffectAlgebra):
        """
        Initialize connectives.

        Args:
            algebra: Validated effect algebra
        """
        self.algebra = algebra
        self.order = algebra.order
        self._arrow: dict[tuple[str, str], ElementSet] = {}
        self._double: dict[tuple[str, str], ElementSet] = {}
        self._otimes: dict[tuple[str, str], ElementSet] = {}

    def max_lower(self, a: str, b: str) -> ElementSet:
        """Max L(a, b)."""
        return self.order.max_lower((a, b))

    def min_upper(self, a: str, b: str) -> ElementSet:
        """Min U(a, b)."""
        return self.order.min_upper((a, b))

    def imp_arrow(self, b: str, c: str) -> ElementSet:
        """
        b → c = Max{x | x ⊙ b is defined and x ⊙ b <= c}.

        Args:
            b: Antecedent
            c: Consequent

        Returns:
            Nonempty antichain
        """
        key = (b, c)
        if key not in self._arrow:
            ea = self.algebra
            candidates = []
            for x in ea.elements:
                xb = ea.odot(x, b)
                if xb is not None and ea.leq(xb, c):
                    candidates.append(x)
            if not candidates:
                raise InvariantError(f"{b} → {c} is empty")
            self._arrow[key] = self.order.max_of(candidates)
        return self._arrow[key]

    def imp_squig(self, b: str, c: str) -> str | None:
        """b ⇝ c = b' + c, defined iff c <= b."""
        if not self.algebra.leq(c, b):
            return None
        return self.algebra.plus(self.algebra.supplement(b), c)

    def imp_double(self, b: str, c: str) -> ElementSet:
        """
        b ⇒ c = b' + Max L(b, c).

        Raises:
            InvariantError: If some b' + m is undefined
        """
        key = (b, c)
        if key not in self._double:
            ea = self.algebra
            b_sup = ea.supplement(b)
            results = []
            for m in self.max_lower(b, c):
                value = ea.plus(b_sup, m)
                if value is None:
                    raise InvariantError(f"{b_sup} + {m} is undefined while computing {b} ⇒ {c}")
                results.append(value)
            self._double[key] = self.order.canonical(results)
        return self._double[key]

    def otimes(self, a: str, b: str) -> ElementSet:
        """
        a ⊗ b = Min U(a, b') ⊙ b.

        Raises:
            InvariantError: If some u ⊙ b is undefined
        """
        key = (a, b)
        if key not in self._otimes:
            ea = self.algebra
            results = []
            for u in self.min_upper(a, ea.supplement(b)):
                value = ea.odot(u, b)
                if value is None:
                    raise InvariantError(f"{u} ⊙ {b} is undefined while computing {a} ⊗ {b}")
                results.append(value)
            self._otimes[key] = self.order.canonical(results)
        return self._otimes[key]

    def otimes_set(self, A: Iterable[str], B: Iterable[str]) -> ElementSet:
        """A ⊗ B: the union of all a ⊗ b."""
        return self._union(self.otimes, A, B)

    def imp_double_set(self, A: Iterable[str], B: Iterable[str]) -> ElementSet:
        """A ⇒ B: the union of all a ⇒ b."""
        return self._union(self.imp_double, A, B)

    def imp_arrow_set(self, A: Iterable[str], B: Iterable[str]) -> ElementSet:
        """A → B: the union of all a → b."""
        return self._union(self.imp_arrow, A, B)

    def _union(self, op: Callable[[str, str], ElementSet], A: Iterable[str], B: Iterable[str]) -> ElementSet:
        members: set[str] = set()
        for a, b in product(tuple(A), tuple(B)):
            members.update(op(a, b))
        return self.order.canonical(members)

    def duality_check(self) -> tuple[bool, tuple[str, str] | None]:
        """
        Check a ⊗ b = (b ⇒ a')' and a ⇒ b = (b' ⊗ a)' on every pair.

        Returns:
            (True, None) when both identities hold, else (False, witness pair)
        """
        ea = self.algebra
        for a, b in product(ea.elements, ea.elements):
            if self.otimes(a, b) != ea.supplement_set(self.imp_double(b, ea.supplement(a))):
                return False, (a, b)
            if self.imp_double(a, b) != ea.supplement_set(self.otimes(ea.supplement(b), a)):
                return False, (a, b)
        return True, None
