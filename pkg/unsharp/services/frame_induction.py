"""Time-preference relations induced by given tense operators."""
import logging
import math
import random
from collections.abc import Iterator
from itertools import product

from unsharp.config import Settings
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import ExtendedFrame, Proposition, TimeFrame
from unsharp.models.operators import OPERATORS
from unsharp.models.report import CheckCounter, CheckResult, Report, skipped
from unsharp.services.connectives import Connectives
from unsharp.services.generators import random_proposition
from unsharp.services.protocols import ITenseOperators
from unsharp.services.tense import FrameOperators, TenseService, render_prop

logger = logging.getLogger(__name__)


class FrameInductionService:
    """
    Builds the relation R* induced by tense operators and checks how the
    operators it induces compare with the given ones.

    (s, t) belongs to R* iff for every proposition p:
    H(p)(t) <= p(s) <= P(p)(t) and G(p)(s) <= p(t) <= F(p)(s),
    where a set is below (above) an element when all its members are.
    """

    def __init__(self, ops: ITenseOperators, settings: Settings, connectives: Connectives | None = None):
        """
        Initialize the service.

        Args:
            ops: The given tense operators
            settings: Exhaustive limit, sample sizes, selection cap and seed
            connectives: Connectives over ops.algebra (created when omitted)
        """
        self.ops = ops
        self.algebra: EffectAlgebra = ops.algebra
        self.order = self.algebra.order
        self.times = tuple(ops.times)
        self.settings = settings
        self.connectives = connectives or Connectives(self.algebra)
        self._relation: frozenset[tuple[str, str]] | None = None

    def propositions(self) -> tuple[list[Proposition], bool]:
        """All propositions over the time set, or a seeded sample when there are too many."""
        n = len(self.times)
        if len(self.algebra) ** n <= self.settings.exhaustive_limit:
            return list(product(self.algebra.elements, repeat=n)), False
        logger.info(f"Sampling {self.settings.sample_size} propositions with seed {self.settings.seed}")
        rng = random.Random(self.settings.seed)
        return [random_proposition(rng, self.algebra, n) for _ in range(self.settings.sample_size)], True

    def _sandwiched(self, p: Proposition, s: str, t: str) -> bool:
        i, j = self.times.index(s), self.times.index(t)
        ps, pt = (p[i],), (p[j],)
        leq = self.order.set_leq
        return (
            leq(self.ops.value("H", p, t), ps)
            and leq(ps, self.ops.value("P", p, t))
            and leq(self.ops.value("G", p, s), pt)
            and leq(pt, self.ops.value("F", p, s))
        )

    def induce_relation(self) -> frozenset[tuple[str, str]]:
        """
        Compute R*.

        Returns:
            The pairs (s, t) satisfying the four inequalities for every proposition
        """
        if self._relation is None:
            props, sampled = self.propositions()
            if sampled:
                logger.warning("R* is computed on sampled propositions and may contain extra pairs")
            self._relation = frozenset(
                (s, t)
                for s, t in product(self.times, self.times)
                if all(self._sandwiched(p, s, t) for p in props)
            )
            logger.info(f"Induced relation has {len(self._relation)} pairs")
        return self._relation

    def sorted_relation(self) -> list[tuple[str, str]]:
        """R* sorted by time declaration order."""
        index = {t: i for i, t in enumerate(self.times)}
        return sorted(self.induce_relation(), key=lambda pair: (index[pair[0]], index[pair[1]]))

    def induced_service(self) -> TenseService | None:
        """Tense service over (T, R*), or None when R* is not serial."""
        relation = self.induce_relation()
        if not relation:
            return None
        frame = TimeFrame(self.times, relation)
        if not frame.serial:
            return None
        return TenseService(self.algebra, frame, self.connectives, self.settings.family_cap)

    def _relation_result(self, check: str) -> CheckResult:
        relation = self.induce_relation()
        serial = bool(relation) and TimeFrame(self.times, relation).serial
        reflexive = all((t, t) in relation for t in self.times)
        return CheckResult(
            check=check,
            status="pass",
            cases=len(relation),
            note=f"R* has {len(relation)} pairs; serial: {'yes' if serial else 'no'}; reflexive: {'yes' if reflexive else 'no'}",
        )

    def check_induced_bounds(self) -> Report:
        """
        Compare the operators induced by (T, R*) with the given ones.

        Checks P* <=_2 P, F* <=_2 F, H <=_1 H* and G <=_1 G* pointwise on every
        proposition. When R* is not serial the starred operators are not
        defined and the comparisons are skipped.

        Returns:
            Report with the relation summary and one result per operator
        """
        report = Report(title="operators induced by R*")
        report.add(self._relation_result("induced.relation"))
        star = self.induced_service()
        if star is None:
            for which in OPERATORS:
                report.add(skipped(f"induced.{which}", "R* is not serial"))
            return report

        props, sampled = self.propositions()
        counters = {which: CheckCounter(f"induced.{which}", sampled=sampled) for which in OPERATORS}
        for p in props:
            for which in OPERATORS:
                given = [self.ops.value(which, p, s) for s in self.times]
                induced = star.apply(which, p)
                if which in ("P", "F"):
                    ok = all(self.order.leq2(a, b) for a, b in zip(induced, given))
                else:
                    ok = all(self.order.leq1(b, a) for a, b in zip(induced, given))
                counters[which].record(ok, lambda: f"p={render_prop(p)}")
        for which in OPERATORS:
            report.add(counters[which].result())
        logger.info(f"Operators induced by R*: {report.counts()}")
        return report

    def check_frame_recovery(self, frame: TimeFrame) -> Report:
        """
        For operators induced by frame, check R ⊆ R*, that R* is reflexive, and
        P* ≈_2 P, F* ≈_2 F, H* ≈_1 H, G* ≈_1 G pointwise.

        Args:
            frame: The frame the given operators were induced by

        Returns:
            Report with one result per condition
        """
        report = Report(title="operators induced by a frame and by R*")
        relation = self.induce_relation()
        contained = CheckCounter("recovered.contains")
        for s, t in frame.sorted_pairs():
            contained.record((s, t) in relation, f"({s},{t}) is in R but not in R*")
        report.add(contained.result())

        reflexive = CheckCounter("recovered.reflexive")
        for t in self.times:
            reflexive.record((t, t) in relation, f"({t},{t}) is not in R*")
        report.add(reflexive.result())

        star = self.induced_service()
        if star is None:
            for which in OPERATORS:
                report.add(skipped(f"recovered.{which}", "R* is not serial"))
            return report

        props, sampled = self.propositions()
        counters = {which: CheckCounter(f"recovered.{which}", sampled=sampled) for which in OPERATORS}
        for p in props:
            for which in OPERATORS:
                given = [self.ops.value(which, p, s) for s in self.times]
                induced = star.apply(which, p)
                equivalent = self.order.approx2 if which in ("P", "F") else self.order.approx1
                ok = all(equivalent(a, b) for a, b in zip(induced, given))
                counters[which].record(ok, lambda: f"p={render_prop(p)}")
        for which in OPERATORS:
            report.add(counters[which].result())
        logger.info(f"Frame-induced operators against R*: {report.counts()}")
        return report

    def extend_frame(self) -> ExtendedFrame:
        """The frame over (T×{1}) ∪ T ∪ (T×{2}) with the points glued on by R*."""
        return ExtendedFrame(self.times, self.induce_relation())

    def selections(self, p: Proposition, early: str, late: str) -> Iterator[Proposition]:
        """
        All extensions of p to the extended time set.

        The value at (t,1) ranges over early(p)(t) and the value at (t,2) over
        late(p)(t); use P and F for p̄, H and G for p̂.

        Yields:
            Propositions indexed by the extended frame's time order
        """
        before = [self.ops.value(early, p, t) for t in self.times]
        after = [self.ops.value(late, p, t) for t in self.times]
        n = len(self.times)
        for choice in product(*before, *after):
            yield choice[:n] + p + choice[n:]

    def _selection_sample(self, p: Proposition, early: str, late: str, rng: random.Random) -> tuple[list[Proposition], bool]:
        before = [self.ops.value(early, p, t) for t in self.times]
        after = [self.ops.value(late, p, t) for t in self.times]
        count = math.prod(len(v) for v in before + after)
        if count <= self.settings.selection_cap:
            return list(self.selections(p, early, late)), False
        sample = []
        for _ in range(self.settings.selection_cap):
            sample.append(tuple(rng.choice(v) for v in before) + p + tuple(rng.choice(v) for v in after))
        return sample, True

    def check_extension(self) -> Report:
        """
        Check the restriction containments on the extended frame.

        For every proposition p and every admissible p̄ and p̂:
        P̄(p̄)|T ⊆ P(p), F̄(p̄)|T ⊆ F(p), H̄(p̂)|T ⊆ H(p) and Ḡ(p̂)|T ⊆ G(p).
        When every given value is a singleton the restrictions must be equal.

        Returns:
            Report with one result per operator plus the singleton case
        """
        report = Report(title="extended frame")
        extended = self.extend_frame()
        tense = TenseService(self.algebra, extended, self.connectives, self.settings.family_cap)
        rng = random.Random(self.settings.seed)
        props, sampled = self.propositions()

        counters = {which: CheckCounter(f"extension.{which}", sampled=sampled) for which in OPERATORS}
        equal = CheckCounter("extension.singleton", sampled=sampled)
        all_singletons = True
        for p in props:
            given = {which: [self.ops.value(which, p, t) for t in self.times] for which in OPERATORS}
            singleton = all(len(v) == 1 for values in given.values() for v in values)
            all_singletons = all_singletons and singleton
            for early, late, extension in (("P", "F", "bar"), ("H", "G", "hat")):
                extensions, capped = self._selection_sample(p, early, late, rng)
                if capped:
                    counters[early].sampled = counters[late].sampled = equal.sampled = True
                for q in extensions:
                    for which in (early, late):
                        restricted = [tense.value_at(which, (q,), t) for t in self.times]
                        inside = all(set(r) <= set(g) for r, g in zip(restricted, given[which]))
                        counters[which].record(inside, lambda: f"p={render_prop(p)} {extension}={render_prop(q)}")
                        if singleton:
                            equal.record(restricted == given[which], lambda: f"{which} with p={render_prop(p)} {extension}={render_prop(q)}")

        for which in OPERATORS:
            report.add(counters[which].result())
        if all_singletons:
            report.add(equal.result())
        else:
            report.add(skipped("extension.singleton", "some operator values are not singletons"))
        logger.info(f"Extended frame: {report.counts()}")
        return report


def frame_operators(algebra: EffectAlgebra, frame: TimeFrame, settings: Settings) -> FrameOperators:
    """Operators induced by a serial frame."""
    return FrameOperators(TenseService(algebra, frame, family_cap=settings.family_cap))
