"""Seeded random effect algebras (lattices and non-lattices) and propositions for law testing."""
import logging
import random
from itertools import product

from unsharp.exceptions import InputError
from unsharp.models.algebra import EffectAlgebra, RawAlgebra
from unsharp.models.frame import Proposition, SetProposition
from unsharp.services.axioms import find_violation, verify_axioms
from unsharp.services.connectives import Connectives

logger = logging.getLogger(__name__)

MAX_SIZE = 8

# A block is described by the lengths of its chain factors: (n,) is the
# Łukasiewicz chain with n + 1 elements, (n, m) the product of two chains.
Block = tuple[int, ...]
Point = tuple[int, int]

# Generators of submonoids of N^2 that are not free. Intervals [0, u] under
# the order they span need not be lattices.
CONES: tuple[tuple[Point, ...], ...] = (
    ((1, 0), (1, 1), (1, 2)),
    ((2, 0), (1, 1), (0, 2)),
    ((1, 0), (1, 1), (1, 3)),
    ((3, 0), (1, 1), (0, 3)),
)
UNIT_RANGE = range(1, 5)

_interval_candidates: dict[int, list[tuple[tuple[Point, ...], Point]]] = {}


def _block_elements(block: Block) -> list[tuple[int, ...]]:
    return list(product(*(range(n + 1) for n in block)))


def _block_size(block: Block) -> int:
    size = 1
    for n in block:
        size *= n + 1
    return size


def _blocks_up_to(limit: int) -> list[Block]:
    """All chain and chain-product blocks of at most limit elements."""
    blocks: list[Block] = [(n,) for n in range(1, limit)]
    blocks += [(n, m) for n in range(1, limit) for m in range(n, limit) if (n + 1) * (m + 1) <= limit]
    blocks += [(1, 1, 1)] if limit >= 8 else []
    return blocks


def horizontal_sum(blocks: list[Block]) -> RawAlgebra:
    """
    Glue products of Łukasiewicz chains together at their 0 and 1.

    Within a block, x + y is the coordinatewise sum when it stays within
    the chain lengths. Elements of different blocks are orthogonal only when
    one of them is 0 or their sum is 1 within a shared block.

    Args:
        blocks: Blocks to glue, each a tuple of chain lengths

    Returns:
        Unvalidated table with labels z, u and b<k>_<coords>
    """
    zero, one = "z", "u"
    labels: dict[tuple[int, tuple[int, ...]], str] = {}
    elements = [zero]
    for k, block in enumerate(blocks):
        for coords in _block_elements(block):
            if all(c == 0 for c in coords):
                labels[(k, coords)] = zero
            elif all(c == n for c, n in zip(coords, block)):
                labels[(k, coords)] = one
            else:
                label = f"b{k}_" + "".join(str(c) for c in coords)
                labels[(k, coords)] = label
                elements.append(label)
    elements.append(one)

    plus: dict[str, dict[str, str | None]] = {a: {b: None for b in elements} for a in elements}
    for a in elements:
        plus[zero][a] = a
        plus[a][zero] = a
    for k, block in enumerate(blocks):
        for x, y in product(_block_elements(block), repeat=2):
            s = tuple(i + j for i, j in zip(x, y))
            if all(c <= n for c, n in zip(s, block)):
                plus[labels[(k, x)]][labels[(k, y)]] = labels[(k, s)]
    return RawAlgebra(elements=elements, zero=zero, one=one, plus=plus)


def _monoid_box(generators: tuple[Point, ...], unit: Point) -> set[Point]:
    """Sums of generators lying in the box [0, unit] of N^2."""
    box = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = (x[0] + g[0], x[1] + g[1])
            if y[0] <= unit[0] and y[1] <= unit[1] and y not in box:
                box.add(y)
                frontier.append(y)
    return box


def interval_algebra(generators: tuple[Point, ...], unit: Point) -> RawAlgebra:
    """
    The interval [0, unit] of Z^2 ordered by the monoid the generators span.

    x + y is the vector sum, defined when it stays inside the interval.

    Args:
        generators: Monoid generators with nonnegative coordinates
        unit: Top element, a sum of generators

    Returns:
        Unvalidated table with labels z, u and v<a>_<b>

    Raises:
        InputError: If unit is not a sum of generators
    """
    box = _monoid_box(generators, unit)
    if unit not in box:
        raise InputError(f"{unit} is not in the monoid spanned by {generators}")
    points = sorted(x for x in box if (unit[0] - x[0], unit[1] - x[1]) in box)
    labels = {x: f"v{x[0]}_{x[1]}" for x in points}
    labels[(0, 0)], labels[unit] = "z", "u"
    inside = set(points)
    plus: dict[str, dict[str, str | None]] = {}
    for x in points:
        plus[labels[x]] = {}
        for y in points:
            s = (x[0] + y[0], x[1] + y[1])
            plus[labels[x]][labels[y]] = labels[s] if s in inside else None
    return RawAlgebra(elements=[labels[x] for x in points], zero="z", one="u", plus=plus)


def interval_candidates(max_size: int) -> list[tuple[tuple[Point, ...], Point]]:
    """
    Cones and units whose interval algebra has at most max_size elements, is
    not a lattice and has a set-valued ⇒ cell.
    """
    if max_size not in _interval_candidates:
        found = []
        for generators, unit in product(CONES, product(UNIT_RANGE, UNIT_RANGE)):
            if unit not in _monoid_box(generators, unit):
                continue
            raw = interval_algebra(generators, unit)
            if len(raw.elements) > max_size or find_violation(raw) is not None:
                continue
            algebra = verify_axioms(raw)
            conn = Connectives(algebra)
            if not algebra.is_lattice() and any(
                len(conn.imp_double(a, b)) > 1 for a, b in product(algebra.elements, repeat=2)
            ):
                found.append((generators, unit))
        logger.debug(f"Found {len(found)} non-lattice interval algebras of at most {max_size} elements")
        _interval_candidates[max_size] = found
    return _interval_candidates[max_size]


def relabel(raw: RawAlgebra, rng: random.Random) -> RawAlgebra:
    """Rename elements with shuffled labels e0, e1, ... and shuffle the declaration order."""
    order = list(raw.elements)
    rng.shuffle(order)
    names = {old: f"e{i}" for i, old in enumerate(order)}
    plus = {names[a]: {names[b]: (None if v is None else names[v]) for b, v in row.items()} for a, row in raw.plus.items()}
    return RawAlgebra(
        elements=[names[a] for a in order],
        zero=names[raw.zero],
        one=names[raw.one],
        plus=plus,
    )


def random_algebra(rng: random.Random, max_size: int = MAX_SIZE) -> EffectAlgebra:
    """
    Draw a random effect algebra with at most max_size elements.

    The algebra is a horizontal sum of one to three blocks, each a
    Łukasiewicz chain or a product of chains, with shuffled labels.

    Args:
        rng: Seeded random source
        max_size: Largest number of elements

    Returns:
        Validated effect algebra
    """
    blocks: list[Block] = []
    size = 2
    for _ in range(rng.randint(1, 3)):
        candidates = [b for b in _blocks_up_to(max_size) if size + _block_size(b) - 2 <= max_size]
        if not candidates:
            break
        block = rng.choice(candidates)
        blocks.append(block)
        size += _block_size(block) - 2
    if not blocks:
        blocks.append((1,))
    algebra = verify_axioms(relabel(horizontal_sum(blocks), rng))
    logger.debug(f"Generated effect algebra from blocks {blocks} with {len(algebra)} elements")
    return algebra


def random_interval_algebra(rng: random.Random, max_size: int = MAX_SIZE) -> EffectAlgebra | None:
    """
    Draw a non-lattice interval algebra with at most max_size elements.

    Returns:
        Validated effect algebra with shuffled labels, or None if no
        interval algebra is small enough
    """
    candidates = interval_candidates(max_size)
    if not candidates:
        return None
    generators, unit = rng.choice(candidates)
    algebra = verify_axioms(relabel(interval_algebra(generators, unit), rng))
    logger.debug(f"Generated interval algebra [0, {unit}] under {generators} with {len(algebra)} elements")
    return algebra


def random_algebras(count: int, seed: int, max_size: int = MAX_SIZE) -> list[EffectAlgebra]:
    """
    A reproducible list of random effect algebras.

    Every second algebra is a non-lattice interval algebra when one fits in
    max_size; the others are horizontal sums of chain products.
    """
    rng = random.Random(seed)
    algebras = []
    for i in range(count):
        algebra = random_interval_algebra(rng, max_size) if i % 2 else None
        if algebra is None:
            algebra = random_algebra(rng, max_size)
        algebras.append(algebra)
    return algebras


def random_proposition(rng: random.Random, algebra: EffectAlgebra, n: int) -> Proposition:
    """A uniformly random proposition over n time points."""
    return tuple(rng.choice(algebra.elements) for _ in range(n))


def random_subset(rng: random.Random, algebra: EffectAlgebra) -> tuple[str, ...]:
    """A random nonempty element set in canonical order."""
    members = rng.sample(algebra.elements, rng.randint(1, len(algebra)))
    return algebra.order.canonical(members)


def random_set_proposition(rng: random.Random, algebra: EffectAlgebra, n: int) -> SetProposition:
    """A random set proposition over n time points."""
    return tuple(random_subset(rng, algebra) for _ in range(n))
