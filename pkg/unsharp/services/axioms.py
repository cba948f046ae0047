"""Effect algebra axiom verification."""
import logging
from collections.abc import Iterator
from itertools import product

from unsharp.exceptions import AxiomViolation, InputError, UnknownElementError
from unsharp.models.algebra import EffectAlgebra, RawAlgebra
from unsharp.models.poset import Poset

logger = logging.getLogger(__name__)


def _check_shape(raw: RawAlgebra) -> None:
    """Check that the table is square over the declared elements."""
    declared = set(raw.elements)
    if not raw.elements:
        raise InputError("An effect algebra needs at least one element")
    if len(declared) != len(raw.elements):
        raise InputError("Element ids must be unique")
    for x in (raw.zero, raw.one):
        if x not in declared:
            raise UnknownElementError(f"Unknown element: {x!r}")
    if set(raw.plus) != declared:
        raise InputError("The + table must have exactly one row per element")
    for a, row in raw.plus.items():
        if set(row) != declared:
            raise InputError(f"Row {a!r} of the + table must have exactly one cell per element")
        for value in row.values():
            if value is not None and value not in declared:
                raise UnknownElementError(f"Unknown element: {value!r}")
    if raw.supplement is not None:
        for a, b in raw.supplement.items():
            if a not in declared or b not in declared:
                raise UnknownElementError(f"Unknown element in supplement: {a!r} {b!r}")


def find_violation(raw: RawAlgebra) -> AxiomViolation | None:
    """
    Find the first violated effect-algebra axiom of a table.

    Conditions are checked in the order E1, E2, E3, E4, supplement
    cross-check, then the induced order.

    Args:
        raw: Parsed table

    Returns:
        The violation, or None when the table is an effect algebra

    Raises:
        InputError: If the table is not square or mentions undeclared ids
    """
    try:
        _build(raw)
    except AxiomViolation as violation:
        return violation
    return None


def verify_axioms(raw: RawAlgebra) -> EffectAlgebra:
    """
    Validate a table and build the effect algebra it describes.

    Args:
        raw: Parsed table

    Returns:
        Validated EffectAlgebra with derived supplement and induced order

    Raises:
        InputError: If the table is not square or mentions undeclared ids
        AxiomViolation: If an axiom fails; carries the axiom name and a witness
    """
    algebra = _build(raw)
    logger.debug(f"Validated effect algebra with {len(algebra)} elements")
    return algebra


def _build(raw: RawAlgebra) -> EffectAlgebra:
    _check_shape(raw)
    E = raw.elements
    plus = {(a, b): v for a, row in raw.plus.items() for b, v in row.items() if v is not None}

    for a, b in product(E, E):
        if plus.get((a, b)) != plus.get((b, a)):
            raise AxiomViolation("E1", f"{a} + {b} and {b} + {a} differ", (a, b))

    for a, b, c in product(E, E, E):
        ab = plus.get((a, b))
        if ab is None or (ab, c) not in plus:
            continue
        bc = plus.get((b, c))
        if bc is None or plus.get((a, bc)) != plus[(ab, c)]:
            raise AxiomViolation("E2", f"({a} + {b}) + {c} is defined but {a} + ({b} + {c}) does not equal it", (a, b, c))

    supplement = {}
    for a in E:
        partners = [b for b in E if plus.get((a, b)) == raw.one]
        if len(partners) != 1:
            raise AxiomViolation("E3", f"{a} has {len(partners)} elements summing with it to {raw.one}", (a, *partners))
        supplement[a] = partners[0]

    for a in E:
        if a != raw.zero and (a, raw.one) in plus:
            raise AxiomViolation("E4", f"{a} + {raw.one} is defined but {a} is not {raw.zero}", (a,))

    if raw.supplement is not None:
        for a, declared in raw.supplement.items():
            if supplement[a] != declared:
                raise AxiomViolation("supplement", f"declared {a}' = {declared} but the table gives {supplement[a]}", (a, declared))

    order = Poset(E, ((a, v) for (a, _), v in plus.items()))
    if order.bottom != raw.zero or order.top != raw.one:
        raise AxiomViolation("order", f"the induced order is not bounded by {raw.zero} and {raw.one}")
    return EffectAlgebra(E, raw.zero, raw.one, plus, supplement, order)


def single_cell_mutations(raw: RawAlgebra) -> Iterator[tuple[str, str, str | None, RawAlgebra]]:
    """
    Yield every table differing from raw in exactly one defined cell.

    Each defined cell is replaced in turn by every other element and by
    undefined.

    Yields:
        (row, column, new value, mutated table)
    """
    for a in raw.elements:
        for b in raw.elements:
            current = raw.plus[a][b]
            if current is None:
                continue
            for replacement in [*raw.elements, None]:
                if replacement == current:
                    continue
                table = {row: dict(cells) for row, cells in raw.plus.items()}
                table[a][b] = replacement
                yield a, b, replacement, raw.model_copy(update={"plus": table})
