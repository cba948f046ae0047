"""Tense operators induced by a time frame, the transformation function and their laws."""
import logging
import math
import random
from collections.abc import Iterable, Iterator
from itertools import product

from unsharp.config import Settings
from unsharp.exceptions import FamilyTooLargeError, InputError, NonSerialFrameError, UndefinedOperationError
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import Proposition, PropositionFamily, SetProposition, TimeFrame
from unsharp.models.operators import OPERATORS, TenseOperator
from unsharp.models.poset import ElementSet
from unsharp.models.report import CheckCounter, Report, skipped
from unsharp.services.connectives import Connectives
from unsharp.services.generators import random_proposition, random_set_proposition

logger = logging.getLogger(__name__)

PAST: frozenset[str] = frozenset({"P", "H"})
EXISTENTIAL: frozenset[str] = frozenset({"P", "F"})
CONNECTIVES = ("⊗", "⇒", "→", "⊙", "+")
LARGE_FAMILY = 10_000


def lift(p: Proposition) -> SetProposition:
    """View a proposition as a set proposition of singletons."""
    return tuple((v,) for v in p)


def render_prop(x: Proposition | SetProposition) -> str:
    """Compact text form of a proposition for witnesses."""
    return "(" + ", ".join(v if isinstance(v, str) else "{" + ",".join(v) + "}" for v in x) + ")"


class TenseService:
    """
    Tense operators P, F, H, G induced by a time frame over an effect algebra.

    P and H collect values at earlier points (t R s), F and G at later points
    (s R t); P and F take Min U of the collected values, H and G take Max L.
    Values on single propositions are memoized.
    """

    def __init__(
        self,
        algebra: EffectAlgebra,
        frame: TimeFrame,
        connectives: Connectives | None = None,
        family_cap: int = 1_000_000,
    ):
        """
        Initialize the tense service.

        Args:
            algebra: Validated effect algebra
            frame: Time frame inducing the operators
            connectives: Connectives over algebra (created when omitted)
            family_cap: Largest family phi may produce
        """
        self.algebra = algebra
        self.order = algebra.order
        self.frame = frame
        self.connectives = connectives or Connectives(algebra)
        self.family_cap = family_cap
        self._points = {
            (which, s): tuple(frame.index(t) for t in (frame.predecessors(s) if which in PAST else frame.successors(s)))
            for which in OPERATORS
            for s in frame.times
        }
        self._single: dict[tuple[str, Proposition], SetProposition] = {}
        self._on_set: dict[tuple[str, SetProposition], SetProposition] = {}
        self._bounds: dict[tuple[bool, frozenset[str]], ElementSet] = {}

    def require_serial(self) -> None:
        """
        Raises:
            NonSerialFrameError: If the frame is not serial
        """
        if not self.frame.serial:
            raise NonSerialFrameError("Tense operators need a serial time-preference relation")

    def _bound(self, which: TenseOperator, values: Iterable[str]) -> ElementSet:
        key = (which in EXISTENTIAL, frozenset(values))
        if key not in self._bounds:
            self._bounds[key] = self.order.min_upper(key[1]) if key[0] else self.order.max_lower(key[1])
        return self._bounds[key]

    def _members(self, family: Iterable[Proposition]) -> tuple[Proposition, ...]:
        members = tuple(family)
        for q in members:
            if len(q) != len(self.frame):
                raise InputError(f"Expected values at {len(self.frame)} time points, got {len(q)}")
        return members

    def value_at(self, which: TenseOperator, family: Iterable[Proposition], s: str) -> ElementSet:
        """
        Evaluate one operator on a family at a single time point.

        Only the time point s needs related points, so this also works on
        frames that are not serial.

        Raises:
            InputError: If a proposition has the wrong number of values
            NonSerialFrameError: If s has no related time points for this operator
        """
        return self._value_at(which, self._members(family), s)

    def _value_at(self, which: TenseOperator, members: tuple[Proposition, ...], s: str) -> ElementSet:
        points = self._points[(which, s)]
        values = {q[i] for q in members for i in points}
        if not values:
            raise NonSerialFrameError(f"{which} has no related time points at {s}")
        return self._bound(which, values)

    def tense_apply(self, which: TenseOperator, family: Iterable[Proposition]) -> SetProposition:
        """
        Apply P, F, H or G to a nonempty family of propositions.

        Args:
            which: One of P, F, H, G
            family: Propositions indexed by frame time order

        Returns:
            Set proposition over the frame's times

        Raises:
            NonSerialFrameError: If the frame is not serial
            InputError: If the family is empty or a proposition has the wrong number of values
        """
        self.require_serial()
        members = self._members(family)
        if not members:
            raise InputError("Tense operators are applied to nonempty families only")
        return tuple(self._value_at(which, members, s) for s in self.frame.times)

    def apply(self, which: TenseOperator, p: Proposition) -> SetProposition:
        """Operator applied to the single proposition p (memoized)."""
        key = (which, p)
        if key not in self._single:
            self._single[key] = self.tense_apply(which, (p,))
        return self._single[key]

    def apply_to_set(self, which: TenseOperator, x: SetProposition) -> SetProposition:
        """
        Operator applied to phi(x), computed from the pointwise unions.

        The family phi(x) is never enumerated: at s the collected values are
        the union of x(t) over the related points t.
        """
        key = (which, x)
        if key not in self._on_set:
            self.require_serial()
            self._on_set[key] = tuple(
                self._bound(which, {v for i in self._points[(which, s)] for v in x[i]})
                for s in self.frame.times
            )
        return self._on_set[key]

    def phi(self, x: SetProposition) -> PropositionFamily:
        """
        All propositions selecting a member of x(t) at every t.

        Raises:
            InputError: If x has the wrong length or an empty value
            FamilyTooLargeError: If the family would exceed the configured cap
        """
        if len(x) != len(self.frame):
            raise InputError(f"Expected values at {len(self.frame)} time points, got {len(x)}")
        if any(not values for values in x):
            raise InputError("Set propositions must be nonempty at every time point")
        size = math.prod(len(values) for values in x)
        if size > self.family_cap:
            raise FamilyTooLargeError(f"phi would produce {size} propositions (cap {self.family_cap})")
        if size > LARGE_FAMILY:
            logger.info(f"Enumerating a family of {size} propositions")
        return frozenset(product(*x))

    def compose(self, X: TenseOperator, Y: TenseOperator, family: Iterable[Proposition]) -> SetProposition:
        """(X*Y)(B) = X(phi(Y(B)))."""
        return self.tense_apply(X, self.phi(self.tense_apply(Y, family)))

    def supplement(self, x: Proposition | SetProposition) -> SetProposition:
        """Pointwise supplement."""
        return tuple(self.algebra.supplement_set(v) for v in self._as_sets(x))

    def _as_sets(self, x: Proposition | SetProposition) -> SetProposition:
        if len(x) != len(self.frame):
            raise InputError(f"Expected values at {len(self.frame)} time points, got {len(x)}")
        return tuple((v,) if isinstance(v, str) else v for v in x)

    def pointwise_connective(
        self,
        op: str,
        x: Proposition | SetProposition,
        y: Proposition | SetProposition,
    ) -> SetProposition:
        """
        Apply ⊗, ⇒, →, ⊙ or + at every time point.

        Set-valued arguments use the set lifts (flattened unions for ⊗, ⇒, →;
        all-pairs definedness for the partial ⊙ and +).

        Raises:
            InputError: If op is unknown
            UndefinedOperationError: If ⊙ or + is undefined at some time point
        """
        xs, ys = self._as_sets(x), self._as_sets(y)
        c, ea = self.connectives, self.algebra
        total = {"⊗": c.otimes_set, "⇒": c.imp_double_set, "→": c.imp_arrow_set}
        partial = {"⊙": ea.odot_set, "+": ea.plus_set}
        if op in total:
            return tuple(total[op](a, b) for a, b in zip(xs, ys))
        if op not in partial:
            raise InputError(f"Unknown connective: {op!r}")
        values = []
        for t, a, b in zip(self.frame.times, xs, ys):
            value = partial[op](a, b)
            if value is None:
                raise UndefinedOperationError(f"{op} is undefined", t)
            values.append(value)
        return tuple(values)

    def leq1(self, x: SetProposition, y: SetProposition) -> bool:
        """Pointwise <=_1."""
        return all(self.order.leq1(a, b) for a, b in zip(x, y))

    def sqsub(self, x: SetProposition, y: SetProposition) -> bool:
        """Pointwise ⊑."""
        return all(self.order.sqsub(a, b) for a, b in zip(x, y))

    def set_leq(self, x: SetProposition, y: SetProposition) -> bool:
        """Pointwise all-pairs <=."""
        return all(self.order.set_leq(a, b) for a, b in zip(x, y))

    def _space(self) -> int:
        return len(self.algebra) ** len(self.frame)

    def _pointwise_pairs(
        self,
        related: list[tuple[str, str]],
        settings: Settings,
        rng: random.Random,
    ) -> tuple[Iterator[tuple[Proposition, Proposition]], bool]:
        """Pairs (p, q) related at every time point, all of them or a sample."""
        n = len(self.frame)
        if self._space() <= settings.exhaustive_limit:
            pairs = (
                (tuple(a for a, _ in combo), tuple(b for _, b in combo))
                for combo in product(related, repeat=n)
            )
            return pairs, False
        logger.info(f"Sampling {settings.sample_size} proposition pairs with seed {settings.seed}")
        sample = []
        for _ in range(settings.sample_size):
            combo = [rng.choice(related) for _ in range(n)]
            sample.append((tuple(a for a, _ in combo), tuple(b for _, b in combo)))
        return iter(sample), True

    def _propositions(self, settings: Settings, rng: random.Random) -> tuple[list[Proposition], bool]:
        """All propositions, or a sample when there are too many."""
        n = len(self.frame)
        if self._space() <= settings.exhaustive_limit:
            return list(product(self.algebra.elements, repeat=n)), False
        logger.info(f"Sampling {settings.sample_size} propositions with seed {settings.seed}")
        return [random_proposition(rng, self.algebra, n) for _ in range(settings.sample_size)], True

    def check_dynamic_axioms(self, settings: Settings) -> Report:
        """
        Check that the induced H and G satisfy the dynamic effect algebra axioms.

        dynamic.top: H(1) = G(1) = 1. dynamic.monotone: p <= q implies H(p) <=_1 H(q) and G(p) <=_1 G(q).
        dynamic.additive: p + q defined implies H(p) + H(q) is defined and <=_1 H(p + q), same for G.
        dynamic.round-trip: p <=_1 (G*P)(p) and p <=_1 (H*F)(p).
        For reflexive frames the bounds H(p) <= p <= P(p) and G(p) <= p <= F(p)
        are checked as well.

        Args:
            settings: Exhaustive limit, sample size and seed

        Returns:
            Report with one result per axiom

        Raises:
            NonSerialFrameError: If the frame is not serial
        """
        self.require_serial()
        ea, order = self.algebra, self.order
        rng = random.Random(settings.seed)
        n = len(self.frame)
        report = Report(title="dynamic effect algebra")

        axiom1 = CheckCounter("dynamic.top")
        unit = (ea.one,) * n
        for which in ("H", "G"):
            axiom1.record(self.apply(which, unit) == lift(unit), lambda: f"{which}(1) = {render_prop(self.apply(which, unit))}")
        report.add(axiom1.result())

        comparable = [(a, b) for a in ea.elements for b in ea.elements if order.leq(a, b)]
        pairs, sampled = self._pointwise_pairs(comparable, settings, rng)
        axiom2 = CheckCounter("dynamic.monotone", sampled=sampled)
        for p, q in pairs:
            for which in ("H", "G"):
                axiom2.record(self.leq1(self.apply(which, p), self.apply(which, q)), lambda: f"{which} with p={render_prop(p)} q={render_prop(q)}")
        report.add(axiom2.result())

        orthogonal = [(a, b) for a in ea.elements for b in ea.elements if ea.plus(a, b) is not None]
        pairs, sampled = self._pointwise_pairs(orthogonal, settings, rng)
        axiom3 = CheckCounter("dynamic.additive", sampled=sampled)
        for p, q in pairs:
            total = tuple(ea.plus(a, b) for a, b in zip(p, q))
            for which in ("H", "G"):
                hp, hq = self.apply(which, p), self.apply(which, q)
                sums = [ea.plus_set(a, b) for a, b in zip(hp, hq)]
                ok = all(s is not None for s in sums) and self.leq1(tuple(sums), self.apply(which, total))
                axiom3.record(ok, lambda: f"{which} with p={render_prop(p)} q={render_prop(q)}")
        report.add(axiom3.result())

        props, sampled = self._propositions(settings, rng)
        axiom4 = CheckCounter("dynamic.round-trip", sampled=sampled)
        for p in props:
            gp = self.apply_to_set("G", self.apply("P", p))
            hf = self.apply_to_set("H", self.apply("F", p))
            axiom4.record(self.leq1(lift(p), gp) and self.leq1(lift(p), hf), lambda: f"p={render_prop(p)}")
        report.add(axiom4.result())

        if not self.frame.reflexive:
            report.add(skipped("dynamic.bounds", "the relation is not reflexive"))
        else:
            bounds = CheckCounter("dynamic.bounds", sampled=sampled)
            for p in props:
                ok = (
                    self.set_leq(self.apply("H", p), lift(p))
                    and self.set_leq(lift(p), self.apply("P", p))
                    and self.set_leq(self.apply("G", p), lift(p))
                    and self.set_leq(lift(p), self.apply("F", p))
                )
                bounds.record(ok, lambda: f"p={render_prop(p)}")
            report.add(bounds.result())

        logger.info(f"Dynamic axioms: {report.counts()}")
        return report

    def _checked_pairs(
        self,
        props: list[Proposition],
        settings: Settings,
        rng: random.Random,
    ) -> tuple[list[tuple[Proposition, Proposition]], bool]:
        """
        Proposition pairs on which the compatibility conclusions are checked.

        All of E^T x E^T when that fits the exhaustive limit. Otherwise, when
        E^T itself fits, every proposition is paired with each given
        proposition on both sides; a fixed-seed sample of pairs is added in
        both cases.
        """
        n = len(self.frame)
        if self._space() ** 2 <= settings.exhaustive_limit:
            every = list(product(self.algebra.elements, repeat=n))
            return list(product(every, every)), False
        pairs = list(product(props, props))
        if self._space() <= settings.exhaustive_limit:
            every = list(product(self.algebra.elements, repeat=n))
            logger.info(f"Pairing all {len(every)} propositions with {len(props)} given propositions")
            pairs.extend((p, q) for p in every for q in props)
            pairs.extend((q, p) for p in every for q in props)
        logger.info(f"Sampling {settings.pair_sample_size} proposition pairs with seed {settings.seed}")
        for _ in range(settings.pair_sample_size):
            pairs.append((random_proposition(rng, self.algebra, n), random_proposition(rng, self.algebra, n)))
        return list(dict.fromkeys(pairs)), True

    def _hypothesis_sample(
        self,
        settings: Settings,
        rng: random.Random,
    ) -> tuple[list[tuple[SetProposition, Proposition]], bool]:
        """(x, q) pairs of a set proposition and a proposition for the hypotheses."""
        n = len(self.frame)
        subsets = (2 ** len(self.algebra) - 1) ** n
        if subsets * self._space() <= settings.exhaustive_limit:
            elements = self.algebra.elements
            nonempty = [
                tuple(e for i, e in enumerate(elements) if mask >> i & 1)
                for mask in range(1, 2 ** len(elements))
            ]
            every_x = list(product(nonempty, repeat=n))
            every_q = list(product(self.algebra.elements, repeat=n))
            return list(product(every_x, every_q)), False
        sample = [
            (random_set_proposition(rng, self.algebra, n), random_proposition(rng, self.algebra, n))
            for _ in range(settings.sample_size)
        ]
        return sample, True

    def check_compatibility(self, props: list[Proposition], settings: Settings) -> Report:
        """
        Check the compatibility of the tense operators with ⊗ and ⇒.

        (i) For X, Y in {P, F, H, G} and Z in {H, G}: if
            X(phi(x)) ⊗ Y(q) <=_1 Z(phi(x ⊗ q)) for all x, q, then
            X(phi(p ⇒ q)) ⊑ Y(p) ⇒ Z(q) for all p, q.
        (ii) For X in {H, G} and Y, Z in {P, F, H, G}: if
            X(phi(p ⇒ x)) <=_1 Y(p) ⇒ Z(phi(x)) for all p, x, then
            X(p) ⊗ Y(q) ⊑ Z(phi(p ⊗ q)) for all p, q.

        The hypothesis is tested on a sample of (x, q) pairs plus, for every
        checked pair (p, q), the instance the conclusion depends on. A triple
        whose hypothesis fails is reported as skipped.

        Args:
            props: Propositions always included in the checked pairs
            settings: Limits, sample sizes and seed

        Returns:
            Report with one result per operator triple

        Raises:
            NonSerialFrameError: If the frame is not serial
        """
        self.require_serial()
        rng = random.Random(settings.seed)
        pairs, pairs_sampled = self._checked_pairs(props, settings, rng)
        sample, sample_sampled = self._hypothesis_sample(settings, rng)
        report = Report(title="compatibility with ⊗ and ⇒")
        double_instances = list(dict.fromkeys([(self.pointwise_connective("⇒", p, q), p) for p, q in pairs] + sample))
        otimes_instances = list(
            dict.fromkeys([(q, self.pointwise_connective("⊗", p, q)) for p, q in pairs] + [(q, x) for x, q in sample])
        )

        for X, Y, Z in product(OPERATORS, OPERATORS, ("H", "G")):
            def hypothesis(x: SetProposition, q: Proposition) -> bool:
                left = self.pointwise_connective("⊗", self.apply_to_set(X, x), self.apply(Y, q))
                return self.leq1(left, self.apply_to_set(Z, self.pointwise_connective("⊗", x, q)))

            check = f"compat.double[{X},{Y},{Z}]"
            failure = next(((x, q) for x, q in double_instances if not hypothesis(x, q)), None)
            if failure is not None:
                report.add(skipped(check, f"hypothesis fails at x={render_prop(failure[0])} q={render_prop(failure[1])}"))
                continue
            counter = CheckCounter(check, sampled=pairs_sampled or sample_sampled)
            for p, q in pairs:
                left = self.apply_to_set(X, self.pointwise_connective("⇒", p, q))
                right = self.pointwise_connective("⇒", self.apply(Y, p), self.apply(Z, q))
                counter.record(self.sqsub(left, right), lambda: f"p={render_prop(p)} q={render_prop(q)}")
            report.add(counter.result())

        for X, Y, Z in product(("H", "G"), OPERATORS, OPERATORS):
            def hypothesis(p: Proposition, x: SetProposition) -> bool:
                left = self.apply_to_set(X, self.pointwise_connective("⇒", p, x))
                return self.leq1(left, self.pointwise_connective("⇒", self.apply(Y, p), self.apply_to_set(Z, x)))

            check = f"compat.otimes[{X},{Y},{Z}]"
            failure = next(((p, x) for p, x in otimes_instances if not hypothesis(p, x)), None)
            if failure is not None:
                report.add(skipped(check, f"hypothesis fails at p={render_prop(failure[0])} x={render_prop(failure[1])}"))
                continue
            counter = CheckCounter(check, sampled=pairs_sampled or sample_sampled)
            for p, q in pairs:
                left = self.pointwise_connective("⊗", self.apply(X, p), self.apply(Y, q))
                right = self.apply_to_set(Z, self.pointwise_connective("⊗", p, q))
                counter.record(self.sqsub(left, right), lambda: f"p={render_prop(p)} q={render_prop(q)}")
            report.add(counter.result())

        logger.info(f"Compatibility checks: {report.counts()}")
        return report


class FrameOperators:
    """Tense operators induced by a frame, exposed through ITenseOperators."""

    def __init__(self, tense: TenseService):
        """
        Initialize frame-induced operators.

        Args:
            tense: Tense service over the inducing frame

        Raises:
            NonSerialFrameError: If the frame is not serial
        """
        tense.require_serial()
        self.tense = tense
        self.algebra = tense.algebra
        self.times = tense.frame.times

    def value(self, which: TenseOperator, p: Proposition, s: str) -> ElementSet:
        return self.tense.apply(which, p)[self.tense.frame.index(s)]
