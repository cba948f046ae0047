"""Time frames and the proposition types evaluated over them."""
from collections.abc import Iterable, Sequence

from unsharp.exceptions import InputError, UnknownElementError
from unsharp.models.poset import ElementSet

# Values indexed by the position of each time point in TimeFrame.times.
Proposition = tuple[str, ...]
SetProposition = tuple[ElementSet, ...]
PropositionFamily = frozenset[Proposition]


class TimeFrame:
    """
    A time frame (T, R): time points with a time-preference relation.

    A pair (s, t) in rel reads "s is before t".

    Attributes:
        times: Time point ids in declaration order
        rel: The relation R as a frozenset of (s, t) pairs
    """

    def __init__(self, times: Sequence[str], rel: Iterable[tuple[str, str]]):
        """
        Build a time frame.

        Args:
            times: Time point ids in declaration order
            rel: Pairs (s, t) with s R t

        Raises:
            InputError: If times are empty or repeated, or the relation is empty
            UnknownElementError: If the relation mentions an undeclared time point
        """
        if not times:
            raise InputError("A time frame needs at least one time point")
        if len(set(times)) != len(times):
            raise InputError("Time point ids must be unique")
        self.times: tuple[str, ...] = tuple(times)
        self._index = {t: i for i, t in enumerate(self.times)}

        pairs = frozenset(rel)
        if not pairs:
            raise InputError("The time-preference relation must not be empty")
        for s, t in pairs:
            self.require(s, t)
        self.rel = pairs

        self._before = {s: tuple(t for t in self.times if (t, s) in pairs) for s in self.times}
        self._after = {s: tuple(t for t in self.times if (s, t) in pairs) for s in self.times}

    def __len__(self) -> int:
        return len(self.times)

    def require(self, *ids: str) -> None:
        """
        Check that every id is a declared time point.

        Raises:
            UnknownElementError: If some id is not declared
        """
        for t in ids:
            if t not in self._index:
                raise UnknownElementError(f"Unknown time point: {t!r}")

    def index(self, t: str) -> int:
        """Position of t in the declaration order."""
        return self._index[t]

    def predecessors(self, s: str) -> tuple[str, ...]:
        """All t with t R s, in declaration order."""
        return self._before[s]

    def successors(self, s: str) -> tuple[str, ...]:
        """All t with s R t, in declaration order."""
        return self._after[s]

    @property
    def serial(self) -> bool:
        """True iff every point has a predecessor and a successor."""
        return all(self._before[s] and self._after[s] for s in self.times)

    @property
    def reflexive(self) -> bool:
        return all((t, t) in self.rel for t in self.times)

    def sorted_pairs(self) -> list[tuple[str, str]]:
        """The relation as a list sorted by declaration order."""
        return sorted(self.rel, key=lambda pair: (self._index[pair[0]], self._index[pair[1]]))


def before_id(t: str) -> str:
    """Id of the point (t,1) added in front of t by the frame extension."""
    return f"({t},1)"


def after_id(t: str) -> str:
    """Id of the point (t,2) added after t by the frame extension."""
    return f"({t},2)"


class ExtendedFrame(TimeFrame):
    """
    The extension of a time set T by a copy of T before it and a copy after it.

    Times are ordered (t,1) for every t, then T, then (t,2) for every t.

    Attributes:
        base_times: The original time set T
    """

    def __init__(self, base_times: Sequence[str], induced: Iterable[tuple[str, str]]):
        """
        Build the extended frame over T from an induced relation on T.

        Args:
            base_times: The time set T
            induced: The relation R* on T

        Raises:
            InputError: If an added point id collides with a declared one
        """
        base = tuple(base_times)
        added = [before_id(t) for t in base] + [after_id(t) for t in base]
        clash = set(added) & set(base)
        if clash:
            raise InputError(f"Extended time ids collide with declared time points: {sorted(clash)}")
        rel = {(before_id(t), t) for t in base} | set(induced) | {(t, after_id(t)) for t in base}
        super().__init__([before_id(t) for t in base] + list(base) + [after_id(t) for t in base], rel)
        self.base_times = base

    def restrict(self, x: SetProposition) -> SetProposition:
        """Restrict a set proposition over the extended times to T."""
        return tuple(x[self.index(t)] for t in self.base_times)
