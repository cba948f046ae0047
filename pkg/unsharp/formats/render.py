"""Deterministic text rendering of tables, relations and structures."""
from collections.abc import Callable, Sequence

from unsharp.exceptions import InputError
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import SetProposition, TimeFrame
from unsharp.models.poset import ElementSet, Poset
from unsharp.services.connectives import Connectives

# CLI name -> header symbol
OPERATIONS: dict[str, str] = {
    "plus": "+",
    "odot": "⊙",
    "imp-arrow": "→",
    "imp-squig": "⇝",
    "imp-double": "⇒",
    "otimes": "⊗",
}

Cell = str | ElementSet | None


def render_cell(order: Poset, value: Cell) -> str:
    """'-' for undefined, a bare id for elements and singletons, {x,y} otherwise."""
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    return order.render(value)


def _operation(conn: Connectives, name: str) -> Callable[[str, str], Cell]:
    ea = conn.algebra
    table: dict[str, Callable[[str, str], Cell]] = {
        "plus": ea.plus,
        "odot": ea.odot,
        "imp-arrow": conn.imp_arrow,
        "imp-squig": conn.imp_squig,
        "imp-double": conn.imp_double,
        "otimes": conn.otimes,
    }
    if name not in table:
        raise InputError(f"Unknown operation {name!r}; choose from {', '.join(OPERATIONS)}")
    return table[name]


def operation_table(conn: Connectives, name: str) -> str:
    """
    Render a binary operation as a tab-separated table.

    Rows are the left operand and columns the right operand, both in
    canonical element order; the corner cell is the operation symbol.

    Args:
        conn: Connectives over the algebra
        name: One of plus, odot, imp-arrow, imp-squig, imp-double, otimes

    Returns:
        Table text ending with a newline

    Raises:
        InputError: If name is not a known operation
    """
    op = _operation(conn, name)
    ea = conn.algebra
    lines = ["\t".join([OPERATIONS[name], *ea.elements])]
    for a in ea.elements:
        lines.append("\t".join([a, *(render_cell(ea.order, op(a, b)) for b in ea.elements)]))
    return "\n".join(lines) + "\n"


def cover_lines(order: Poset) -> str:
    """One "x < y" line per cover pair."""
    return "".join(f"{a} < {b}\n" for a, b in order.covers())


def evaluation_table(order: Poset, times: Sequence[str], rows: Sequence[tuple[str, SetProposition]]) -> str:
    """
    Render labelled set propositions with one column per time point.

    Returns:
        Tab-separated table whose header row is "t" followed by the time ids
    """
    lines = ["\t".join(["t", *times])]
    for label, values in rows:
        lines.append("\t".join([label, *(render_cell(order, v) for v in values)]))
    return "\n".join(lines) + "\n"


def relation_lines(pairs: Sequence[tuple[str, str]]) -> str:
    """One "s t" line per pair."""
    return "".join(f"{s} {t}\n" for s, t in pairs)


def serialize_frame(frame: TimeFrame) -> str:
    """Write a frame in the frame file format."""
    return "[times]\n" + " ".join(frame.times) + "\n[rel]\n" + relation_lines(frame.sorted_pairs())


def serialize_algebra(ea: EffectAlgebra) -> str:
    """Write an algebra in the algebra file format, supplements included."""
    rows = "".join(
        f"{a}: " + " ".join(render_cell(ea.order, ea.plus(a, b)) for b in ea.elements) + "\n"
        for a in ea.elements
    )
    supplements = "".join(f"{a} {ea.supplement(a)}\n" for a in ea.elements)
    return (
        "[elements]\n" + " ".join(ea.elements) + "\n"
        f"[zero]\n{ea.zero}\n[one]\n{ea.one}\n"
        "[plus]\n" + rows + "[supplement]\n" + supplements
    )
