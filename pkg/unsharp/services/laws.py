"""Executable law suites for posets, effect algebras, connectives and tense operators."""
import logging
import random
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from itertools import product

from unsharp.config import Settings
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.frame import Proposition, PropositionFamily, TimeFrame
from unsharp.models.operators import OPERATORS
from unsharp.models.poset import ElementSet, Poset
from unsharp.models.report import CheckCounter, CheckResult, Report
from unsharp.services.connectives import Connectives
from unsharp.services.frame_induction import FrameInductionService
from unsharp.services.generators import random_algebras, random_proposition, random_set_proposition, random_subset
from unsharp.services.tense import FrameOperators, TenseService, lift, render_prop

logger = logging.getLogger(__name__)


def _nonempty_subsets(order: Poset) -> list[ElementSet]:
    elements = order.elements
    return [tuple(e for i, e in enumerate(elements) if mask >> i & 1) for mask in range(1, 2 ** len(elements))]


def poset_suite(order: Poset, settings: Settings) -> Report:
    """
    Laws of Max, Min and the set comparisons on one finite poset.

    Covers antichain outputs of Max and Min, B ⊆ C implying B <=_1 Max C and
    Min C <=_2 B, reflexivity and transitivity of <=_1 and <=_2, and ⊑ being
    reflexive and implied by <=_1 and <=_2.
    """
    report = Report(title="poset")
    subsets = _nonempty_subsets(order)

    antichain = CheckCounter("poset.antichain")
    subset = CheckCounter("poset.subset-bounds")
    reflexive = CheckCounter("poset.reflexive")
    for C in subsets:
        top, bottom = order.max_of(C), order.min_of(C)
        antichain.record(order.is_antichain(top) and order.is_antichain(bottom), f"C={order.render(C)}")
        for B in [C, *((c,) for c in C)]:
            subset.record(order.leq1(B, top) and order.leq2(bottom, B), f"B={order.render(B)} C={order.render(C)}")
        reflexive.record(order.leq1(C, C) and order.leq2(C, C) and order.sqsub(C, C), f"A={order.render(C)}")
    report.add(antichain.result())
    report.add(subset.result())
    report.add(reflexive.result())

    rng = random.Random(settings.seed)
    exhaustive = len(subsets) ** 3 <= settings.exhaustive_limit
    triples = product(subsets, repeat=3) if exhaustive else (
        (rng.choice(subsets), rng.choice(subsets), rng.choice(subsets)) for _ in range(settings.sample_size)
    )
    transitive = CheckCounter("poset.transitive", sampled=not exhaustive)
    implied = CheckCounter("poset.sqsub-implied", sampled=not exhaustive)
    for A, B, C in triples:
        ok = (not (order.leq1(A, B) and order.leq1(B, C)) or order.leq1(A, C)) and (
            not (order.leq2(A, B) and order.leq2(B, C)) or order.leq2(A, C)
        )
        transitive.record(ok, f"A={order.render(A)} B={order.render(B)} C={order.render(C)}")
        implied.record(
            not (order.leq1(A, B) or order.leq2(A, B)) or order.sqsub(A, B),
            f"A={order.render(A)} B={order.render(B)}",
        )
    report.add(transitive.result())
    report.add(implied.result())
    return report


def algebra_suite(ea: EffectAlgebra) -> Report:
    """
    The elementary laws of an effect algebra, checked exhaustively.

    The induced order is bounded with ' an antitone involution; units, sums
    with supplements, bounds of + and ⊙, the difference and decomposition
    identities, monotonicity and cancellation; a + b is defined iff a <= b'.
    """
    report = Report(title="effect algebra")
    E, o = ea.elements, ea.order
    sup, plus, odot, leq = ea.supplement, ea.plus, ea.odot, ea.leq
    names = (
        "involution", "units", "supplement-sum", "bounds", "difference",
        "decomposition", "plus-monotone", "odot-monotone", "plus-cancel", "odot-cancel",
    )
    checks = {name: CheckCounter(f"algebra.{name}") for name in names}
    orthogonal = CheckCounter("algebra.orthogonality")

    checks["involution"].record(o.bottom == ea.zero and o.top == ea.one, "bounds of the induced order")
    for a in E:
        checks["involution"].record(sup(sup(a)) == a, f"a={a}")
        checks["units"].record(plus(a, ea.zero) == a and odot(a, ea.one) == a, f"a={a}")
        checks["supplement-sum"].record(plus(a, sup(a)) == ea.one and odot(a, sup(a)) == ea.zero, f"a={a}")

    for a, b in product(E, E):
        w = f"a={a} b={b}"
        if leq(a, b):
            checks["involution"].record(leq(sup(b), sup(a)), w)
        s, m = plus(a, b), odot(a, b)
        checks["bounds"].record(s is None or (leq(a, s) and leq(b, s)), w)
        checks["bounds"].record(m is None or (leq(m, a) and leq(m, b)), w)
        orthogonal.record((s is not None) == ea.orthogonal(a, b), w)
        if leq(a, b):
            ab = plus(a, sup(b))
            v_ok = ab is not None and odot(b, ab) == a and plus(sup(b), sup(ab)) is not None and sup(plus(sup(b), sup(ab))) == a
            checks["difference"].record(v_ok, w)
            sb = odot(sup(a), b)
            vi_ok = ab is not None and sb is not None and plus(a, sb) == b and plus(a, sup(ab)) == b
            checks["decomposition"].record(vi_ok, w)

    for a, b, c in product(E, E, E):
        w = f"a={a} b={b} c={c}"
        if leq(a, b):
            bc = plus(b, c)
            if bc is not None:
                ac = plus(a, c)
                checks["plus-monotone"].record(ac is not None and leq(ac, bc), w)
            ac = odot(a, c)
            if ac is not None:
                bc = odot(b, c)
                checks["odot-monotone"].record(bc is not None and leq(ac, bc), w)
        ab, ac = plus(a, b), plus(a, c)
        if ab is not None and ac is not None and ab == ac:
            checks["plus-cancel"].record(b == c, w)
        ab, ac = odot(a, b), odot(a, c)
        if ab is not None and ac is not None and ab == ac:
            checks["odot-cancel"].record(b == c, w)

    for counter in checks.values():
        report.add(counter.result())
    report.add(orthogonal.result())
    return report


def connective_suite(conn: Connectives, settings: Settings) -> Report:
    """
    Laws of →, ⇝, ⇒ and ⊗, exhaustive over elements.

    The set-level adjointness is checked on all triples of nonempty
    sets when there are few enough, otherwise on a seeded sample.
    """
    ea, o = conn.algebra, conn.order
    E = ea.elements
    zero, one, sup, leq = ea.zero, ea.one, ea.supplement, ea.leq
    arrow, squig, double, otimes = conn.imp_arrow, conn.imp_squig, conn.imp_double, conn.otimes
    names = [
        "arrow.nonempty", "arrow.units", "arrow.top", "arrow.monotone", "arrow.adjointness", "arrow.modus-ponens", "arrow.product-bound",
        "squig.lower-bound", "squig.units", "squig.top", "squig.monotone", "squig.agrees-with-arrow", "squig.adjointness",
        "double.nonempty", "double.units", "double.top", "double.monotone", "comparison.double-below-arrow", "comparison.all-agree",
        "otimes.bounded", "otimes.units", "otimes.zero", "otimes.monotone", "otimes.adjointness", "otimes.divisibility",
        "otimes.double-unit", "otimes.modus-ponens",
    ]
    c = {name: CheckCounter(name) for name in names}

    for a in E:
        w = f"a={a}"
        c["arrow.units"].record(arrow(a, zero) == (sup(a),) and arrow(one, a) == (a,), w)
        c["squig.units"].record(squig(a, zero) == sup(a) and squig(one, a) == a, w)
        c["double.units"].record(double(a, zero) == (sup(a),) and double(one, a) == (a,), w)
        c["otimes.units"].record(otimes(a, one) == (a,) and otimes(one, a) == (a,), w)

    for a, b in product(E, E):
        w = f"a={a} b={b}"
        ab = arrow(a, b)
        c["arrow.nonempty"].record(bool(ab) and o.leq1((sup(a),), ab), w)
        c["arrow.top"].record((ab == (one,)) == leq(a, b), w)
        c["arrow.modus-ponens"].record(all(ea.odot(x, a) is not None and leq(ea.odot(x, a), b) for x in ab), w)
        m = ea.odot(a, b)
        if m is not None:
            c["arrow.product-bound"].record(o.leq1((a,), arrow(b, m)), w)

        s = squig(a, b)
        if s is not None:
            c["squig.lower-bound"].record(leq(sup(a), s), w)
            c["squig.agrees-with-arrow"].record(ab == (s,), w)
            c["comparison.all-agree"].record(ab == (s,) and double(a, b) == (s,), w)
        c["squig.top"].record((s == one) == (a == b), w)

        ad = double(a, b)
        c["double.nonempty"].record(bool(ad) and all(leq(sup(a), x) for x in ad), w)
        c["double.top"].record((ad == (one,)) == leq(a, b), w)
        c["comparison.double-below-arrow"].record(o.leq1(ad, ab), w)

        ot = otimes(a, b)
        c["otimes.bounded"].record(bool(ot) and o.set_leq(ot, (b,)), w)
        c["otimes.zero"].record((ot == (zero,)) == ea.orthogonal(a, b), w)
        c["otimes.divisibility"].record(conn.otimes_set(ad, (a,)) == conn.max_lower(a, b), w)
        c["otimes.double-unit"].record(o.set_leq((a,), conn.imp_double_set((b,), ot)), w)
        c["otimes.modus-ponens"].record(o.set_leq(conn.otimes_set(ad, (a,)), (b,)), w)

    for a, b, x in product(E, E, E):
        w = f"a={a} b={b} c={x}"
        if leq(a, b):
            c["arrow.monotone"].record(o.leq1(arrow(x, a), arrow(x, b)), w)
            c["double.monotone"].record(o.leq1(double(x, a), double(x, b)), w)
            c["otimes.monotone"].record(o.leq2(otimes(a, x), otimes(b, x)), w)
            if squig(x, b) is not None:
                xa = squig(x, a)
                c["squig.monotone"].record(xa is not None and leq(xa, squig(x, b)), w)
        m = ea.odot(a, b)
        if m is not None:
            c["arrow.adjointness"].record(leq(m, x) == o.leq1((a,), arrow(b, x)), w)
            s = squig(b, x)
            if s is not None:
                c["squig.adjointness"].record(leq(m, x) == leq(a, s), w)
        c["otimes.adjointness"].record(o.sqsub(otimes(a, b), (x,)) == o.sqsub((a,), double(b, x)), w)

    report = Report(title="connectives")
    for name in names:
        report.add(c[name].result())

    ok, witness = conn.duality_check()
    report.add(CheckResult(check="otimes.duality", status="pass" if ok else "fail", cases=len(E) ** 2, witness=None if ok else f"a={witness[0]} b={witness[1]}"))

    subsets = _nonempty_subsets(o)
    exhaustive = len(subsets) ** 3 <= settings.exhaustive_limit
    rng = random.Random(settings.seed)
    triples = product(subsets, repeat=3) if exhaustive else (
        (random_subset(rng, ea), random_subset(rng, ea), random_subset(rng, ea)) for _ in range(settings.sample_size)
    )
    set_adjoint = CheckCounter("sets.adjointness", sampled=not exhaustive)
    for A, B, C in triples:
        set_adjoint.record(
            o.sqsub(conn.otimes_set(A, B), C) == o.sqsub(A, conn.imp_double_set(B, C)),
            f"A={o.render(A)} B={o.render(B)} C={o.render(C)}",
        )
    report.add(set_adjoint.result())
    return report


def _merge(title: str, reports: list[Report]) -> Report:
    """Combine reports with the same checks into one result per check."""
    merged: dict[str, CheckResult] = {}
    for k, report in enumerate(reports):
        for r in report.results:
            current = merged.get(r.check)
            if current is None:
                current = merged[r.check] = CheckResult(check=r.check, status="pass", note=r.note)
            current.cases += r.cases
            current.sampled = current.sampled or r.sampled
            if r.status == "fail" and current.status != "fail":
                current.status = "fail"
                current.witness = f"algebra #{k}: {r.witness}"
    return Report(title=title, results=list(merged.values()))


def random_algebra_suite(settings: Settings) -> Report:
    """The poset, algebra and connective suites over seeded random effect algebras."""
    algebras = random_algebras(settings.random_algebras, settings.seed)
    lattices = sum(ea.is_lattice() for ea in algebras)
    logger.info(f"Checking laws on {len(algebras)} random effect algebras, {lattices} of them lattices (seed {settings.seed})")
    reports = []
    for ea in algebras:
        report = poset_suite(ea.order, settings)
        report.extend(algebra_suite(ea))
        report.extend(connective_suite(Connectives(ea), settings))
        reports.append(report)
    return _merge(f"{len(algebras)} random effect algebras", reports)


def _random_family(rng: random.Random, ea: EffectAlgebra, n: int) -> PropositionFamily:
    return frozenset(random_proposition(rng, ea, n) for _ in range(rng.randint(1, 3)))


def _family_below(rng: random.Random, ea: EffectAlgebra, upper: PropositionFamily, n: int) -> PropositionFamily:
    """A random family every member of which lies below every member of upper."""
    bounds = [ea.order.lower_bounds({q[i] for q in upper}) for i in range(n)]
    return frozenset(tuple(rng.choice(b) for b in bounds) for _ in range(rng.randint(1, 3)))


def tense_suite(tense: TenseService, props: list[Proposition], settings: Settings) -> Report:
    """
    Laws of the transformation function and the frame-induced operators.

    Covers phi (injective, singletons, order), the direct formula for
    operators on phi(x), the duality H(A) = P(A')', monotonicity in the
    family, H(A) <= P(A), the dynamic effect algebra axioms and the
    compatibility with ⊗ and ⇒.
    """
    ea, o = tense.algebra, tense.order
    n = len(tense.frame)
    rng = random.Random(settings.seed)
    report = Report(title="tense operators")
    k = settings.pair_sample_size

    xs = [random_set_proposition(rng, ea, n) for _ in range(k)]
    injective = CheckCounter("phi.injective", sampled=True)
    ordered = CheckCounter("phi.order", sampled=True)
    for x, y in zip(xs, xs[1:] + xs[:1]):
        injective.record(x == y or tense.phi(x) != tense.phi(y), f"x={render_prop(x)} y={render_prop(y)}")
        families_leq = all(tense.set_leq(lift(r), lift(u)) for r in tense.phi(x) for u in tense.phi(y))
        ordered.record(tense.set_leq(x, y) == families_leq, f"x={render_prop(x)} y={render_prop(y)}")
    for p, q in zip(props, props[1:] + props[:1]):
        x, y = lift(p), tuple(o.upper_bounds(v) for v in lift(q))
        families_leq = all(tense.set_leq(lift(r), lift(u)) for r in tense.phi(x) for u in tense.phi(y))
        ordered.record(tense.set_leq(x, y) == families_leq, f"x={render_prop(x)} y={render_prop(y)}")

    singleton = CheckCounter("phi.singleton")
    for p in props:
        singleton.record(tense.phi(lift(p)) == frozenset({p}), f"p={render_prop(p)}")
    report.add(injective.result())
    report.add(singleton.result())
    report.add(ordered.result())

    direct = CheckCounter("tense.direct-formula", sampled=True)
    for x in xs:
        family = tense.phi(x)
        for which in OPERATORS:
            direct.record(tense.tense_apply(which, family) == tense.apply_to_set(which, x), f"{which} x={render_prop(x)}")
    report.add(direct.result())

    families = [frozenset({p}) for p in props] + [_random_family(rng, ea, n) for _ in range(settings.sample_size)]
    duality = CheckCounter("tense.duality", sampled=True)
    bounded = CheckCounter("tense.universal-below-existential", sampled=True)
    for A in families:
        dual = frozenset(tuple(ea.supplement(v) for v in q) for q in A)
        ok = all(
            tense.tense_apply(universal, A) == tense.supplement(tense.tense_apply(existential, dual))
            for universal, existential in (("H", "P"), ("G", "F"))
        )
        duality.record(ok, lambda: f"A={sorted(A)}")
        ok = tense.set_leq(tense.tense_apply("H", A), tense.tense_apply("P", A)) and tense.set_leq(
            tense.tense_apply("G", A), tense.tense_apply("F", A)
        )
        bounded.record(ok, lambda: f"A={sorted(A)}")
    report.add(duality.result())

    monotone = CheckCounter("tense.monotone", sampled=True)
    for _ in range(settings.sample_size):
        B = _random_family(rng, ea, n)
        A = _family_below(rng, ea, B, n)
        ok = all(
            all(o.leq2(a, b) for a, b in zip(tense.tense_apply(w, A), tense.tense_apply(w, B))) for w in ("P", "F")
        ) and all(tense.leq1(tense.tense_apply(w, A), tense.tense_apply(w, B)) for w in ("H", "G"))
        monotone.record(ok, lambda: f"A={sorted(A)} B={sorted(B)}")
    report.add(monotone.result())
    report.add(bounded.result())

    report.extend(tense.check_dynamic_axioms(settings))
    report.extend(tense.check_compatibility(props, settings))
    return report


def frame_suite(tense: TenseService, settings: Settings) -> Report:
    """Induced relation, starred operators and the extended frame for frame-induced operators."""
    service = FrameInductionService(FrameOperators(tense), settings, tense.connectives)
    report = Report(title="induced time-preference relation")
    report.extend(service.check_induced_bounds())
    report.extend(service.check_frame_recovery(tense.frame))
    report.extend(service.check_extension())
    return report


def run_laws(
    algebra: EffectAlgebra,
    settings: Settings,
    frame: TimeFrame | None = None,
    props: list[Proposition] | None = None,
) -> Report:
    """
    Run every law suite that applies to the inputs.

    Suites run on a thread pool of settings.jobs workers; results are merged
    in a fixed suite order, so the report does not depend on the pool size.

    Args:
        algebra: Validated effect algebra
        settings: Limits, sample sizes, seed and worker count
        frame: Serial time frame for the tense and frame suites (optional)
        props: Propositions always included in the tense checks

    Returns:
        Merged report

    Raises:
        NonSerialFrameError: If a frame is given but is not serial
    """
    conn = Connectives(algebra)
    suites: list[Callable[[], Report]] = [
        lambda: poset_suite(algebra.order, settings),
        lambda: algebra_suite(algebra),
        lambda: connective_suite(conn, settings),
        lambda: random_algebra_suite(settings),
    ]
    if frame is not None:
        tense = TenseService(algebra, frame, conn, settings.family_cap)
        tense.require_serial()
        chosen = list(props or [])
        suites.append(lambda: tense_suite(tense, chosen, settings))
        suites.append(lambda: frame_suite(tense, settings))

    logger.info(f"Running {len(suites)} law suites with {settings.jobs} worker(s)")
    with ThreadPoolExecutor(max_workers=settings.jobs) as pool:
        futures = [pool.submit(suite) for suite in suites]
        reports = [f.result() for f in futures]

    merged = Report(title="laws")
    for report in reports:
        merged.extend(report)
    logger.info(f"Law suites finished: {merged.counts()}")
    return merged
