"""Finite bounded posets and the set-level order machinery built on them."""
from collections.abc import Iterable, Sequence

import networkx as nx

from unsharp.exceptions import AxiomViolation, InputError, UnknownElementError

# A nonempty subset of a carrier, kept in canonical (declaration) order.
ElementSet = tuple[str, ...]


class Poset:
    """
    A finite bounded poset over string element ids.

    The order is stored as the set of all pairs (a, b) with a <= b and is
    validated on construction. Element sets returned by queries are tuples in
    the declaration order of the elements, so equal sets compare equal.

    Attributes:
        elements: Element ids in canonical order
        bottom: The least element
        top: The greatest element
    """

    def __init__(self, elements: Sequence[str], relation: Iterable[tuple[str, str]]):
        """
        Build and validate a poset.

        Args:
            elements: Element ids in canonical order
            relation: Pairs (a, b) meaning a <= b; reflexive pairs may be omitted

        Raises:
            InputError: If elements are empty or repeated
            UnknownElementError: If the relation mentions an undeclared id
            AxiomViolation: If the relation is not a bounded partial order
        """
        if not elements:
            raise InputError("A poset needs at least one element")
        if len(set(elements)) != len(elements):
            raise InputError("Element ids must be unique")

        self.elements: tuple[str, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}

        pairs = {(e, e) for e in self.elements}
        for a, b in relation:
            self.require(a, b)
            pairs.add((a, b))
        self._pairs = frozenset(pairs)

        self._up = {e: frozenset(y for y in self.elements if (e, y) in self._pairs) for e in self.elements}
        self._down = {e: frozenset(x for x in self.elements if (x, e) in self._pairs) for e in self.elements}

        self._validate()
        self.bottom = next(e for e in self.elements if len(self._up[e]) == len(self.elements))
        self.top = next(e for e in self.elements if len(self._down[e]) == len(self.elements))

    def _validate(self) -> None:
        """Check antisymmetry, transitivity and boundedness."""
        for a, b in self._pairs:
            if a != b and (b, a) in self._pairs:
                raise AxiomViolation("order", f"{a} <= {b} and {b} <= {a} but {a} != {b}", (a, b))
        for a, b in self._pairs:
            for c in self._up[b]:
                if (a, c) not in self._pairs:
                    raise AxiomViolation("order", f"{a} <= {b} <= {c} but not {a} <= {c}", (a, b, c))
        n = len(self.elements)
        if not any(len(self._up[e]) == n for e in self.elements):
            raise AxiomViolation("order", "the order has no bottom element")
        if not any(len(self._down[e]) == n for e in self.elements):
            raise AxiomViolation("order", "the order has no top element")

    def require(self, *ids: str) -> None:
        """
        Check that every id is an element.

        Raises:
            UnknownElementError: If some id is not declared
        """
        for x in ids:
            if x not in self._index:
                raise UnknownElementError(f"Unknown element: {x!r}")

    def index(self, x: str) -> int:
        """Position of x in the canonical order."""
        return self._index[x]

    def leq(self, a: str, b: str) -> bool:
        """True iff a <= b."""
        return (a, b) in self._pairs

    def canonical(self, items: Iterable[str]) -> ElementSet:
        """
        Deduplicate and sort element ids into canonical order.

        Raises:
            UnknownElementError: If some id is not declared
        """
        found = set(items)
        self.require(*found)
        return tuple(sorted(found, key=self._index.__getitem__))

    def upper_bounds(self, a: Iterable[str]) -> ElementSet:
        """
        All common upper bounds of a set.

        Args:
            a: Element ids (may be empty)

        Returns:
            { x | y <= x for all y in a }; every element when a is empty
        """
        members = set(a)
        self.require(*members)
        result = set(self.elements)
        for y in members:
            result &= self._up[y]
        return self.canonical(result)

    def lower_bounds(self, a: Iterable[str]) -> ElementSet:
        """
        All common lower bounds of a set.

        Args:
            a: Element ids (may be empty)

        Returns:
            { x | x <= y for all y in a }; every element when a is empty
        """
        members = set(a)
        self.require(*members)
        result = set(self.elements)
        for y in members:
            result &= self._down[y]
        return self.canonical(result)

    def max_of(self, a: Iterable[str]) -> ElementSet:
        """
        Maximal members of a nonempty set.

        Raises:
            InputError: If a is empty
        """
        members = self.canonical(a)
        if not members:
            raise InputError("Max of an empty set is not taken")
        return tuple(x for x in members if not any(y != x and (x, y) in self._pairs for y in members))

    def min_of(self, a: Iterable[str]) -> ElementSet:
        """
        Minimal members of a nonempty set.

        Raises:
            InputError: If a is empty
        """
        members = self.canonical(a)
        if not members:
            raise InputError("Min of an empty set is not taken")
        return tuple(x for x in members if not any(y != x and (y, x) in self._pairs for y in members))

    def max_lower(self, a: Iterable[str]) -> ElementSet:
        """Max L(a): maximal common lower bounds."""
        return self.max_of(self.lower_bounds(a))

    def min_upper(self, a: Iterable[str]) -> ElementSet:
        """Min U(a): minimal common upper bounds."""
        return self.min_of(self.upper_bounds(a))

    def leq1(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A <=_1 B: every a in A lies below some b in B."""
        B = tuple(B)
        return all(any((a, b) in self._pairs for b in B) for a in A)

    def leq2(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A <=_2 B: every b in B lies above some a in A."""
        A = tuple(A)
        return all(any((a, b) in self._pairs for a in A) for b in B)

    def sqsub(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A ⊑ B: some a in A lies below some b in B."""
        B = tuple(B)
        return any((a, b) in self._pairs for a in A for b in B)

    def approx1(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A ≈_1 B: A <=_1 B and B <=_1 A."""
        A, B = tuple(A), tuple(B)
        return self.leq1(A, B) and self.leq1(B, A)

    def approx2(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A ≈_2 B: A <=_2 B and B <=_2 A."""
        A, B = tuple(A), tuple(B)
        return self.leq2(A, B) and self.leq2(B, A)

    def set_leq(self, A: Iterable[str], B: Iterable[str]) -> bool:
        """A <= B in the all-pairs sense: a <= b for every a in A and b in B."""
        B = tuple(B)
        return all((a, b) in self._pairs for a in A for b in B)

    def is_antichain(self, A: Iterable[str]) -> bool:
        """True iff no two distinct members are comparable."""
        A = tuple(A)
        return not any(a != b and (a, b) in self._pairs for a in A for b in A)

    def is_lattice(self) -> bool:
        """True iff every pair has a least upper and a greatest lower bound."""
        return all(
            len(self.min_upper((a, b))) == 1 and len(self.max_lower((a, b))) == 1
            for i, a in enumerate(self.elements)
            for b in self.elements[i + 1:]
        )

    def covers(self) -> list[tuple[str, str]]:
        """
        Cover pairs (a, b): a < b with nothing strictly between.

        Returns:
            Pairs sorted by the canonical positions of a, then b
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from((a, b) for a, b in self._pairs if a != b)
        reduced = nx.transitive_reduction(graph)
        return sorted(reduced.edges, key=lambda edge: (self._index[edge[0]], self._index[edge[1]]))

    def render(self, A: Sequence[str]) -> str:
        """Render a set: a singleton as its bare element, otherwise {x,y,...}."""
        if len(A) == 1:
            return A[0]
        return "{" + ",".join(A) + "}"
