"""Tests for the executable law suites."""
from unsharp.config import Settings
from unsharp.models.report import CheckResult, Report
from unsharp.services import laws
from unsharp.services.laws import (
    algebra_suite,
    connective_suite,
    poset_suite,
    random_algebra_suite,
    run_laws,
    tense_suite,
)


def test_poset_suite_passes_on_nonlattice(nonlattice, settings):
    """Test the poset laws on the nine-element order."""
    report = poset_suite(nonlattice.order, settings)
    assert report.passed
    assert [r.check for r in report.results] == [
        "poset.antichain", "poset.subset-bounds", "poset.reflexive", "poset.transitive", "poset.sqsub-implied",
    ]


def test_algebra_suite_passes_on_nonlattice(nonlattice):
    """Test every elementary effect algebra law exhaustively."""
    report = algebra_suite(nonlattice)
    assert report.passed
    assert len(report.results) == 11
    assert all(r.cases > 0 for r in report.results)


def test_connective_suite_passes_on_nonlattice(nonlattice_connectives, settings):
    """Test the implication and conjunction laws, with the set-level adjointness sampled."""
    report = connective_suite(nonlattice_connectives, settings)
    by_check = {r.check: r for r in report.results}
    assert report.passed, report.to_text()
    assert by_check["otimes.adjointness"].cases == 729
    assert by_check["otimes.divisibility"].cases == 81
    assert by_check["sets.adjointness"].sampled
    assert by_check["sets.adjointness"].cases == settings.sample_size


def test_connective_suite_on_a_chain_is_exhaustive(data_dir, settings):
    """Test that the set-level adjointness enumerates all set triples on a small algebra."""
    from unsharp.formats.parsers import load_algebra
    from unsharp.services.connectives import Connectives

    chain = load_algebra(data_dir / "chain3.ea")
    report = connective_suite(Connectives(chain), settings)
    set_adjoint = next(r for r in report.results if r.check == "sets.adjointness")
    assert report.passed
    assert not set_adjoint.sampled
    assert set_adjoint.cases == 7 ** 3


def test_random_algebra_suite_passes():
    """Test the algebra and connective laws on 100 seeded random algebras."""
    report = random_algebra_suite(Settings(sample_size=200))
    assert report.passed, report.to_text()
    assert report.title == "100 random effect algebras"


def test_merge_prefixes_witness_with_algebra_number():
    """Test that merged failures name the algebra they came from."""
    ok = Report(title="a", results=[CheckResult(check="x", status="pass", cases=2)])
    bad = Report(title="b", results=[CheckResult(check="x", status="fail", cases=3, witness="a=0")])
    merged = laws._merge("both", [ok, bad])
    assert merged.results[0].status == "fail"
    assert merged.results[0].cases == 5
    assert merged.results[0].witness == "algebra #1: a=0"


def test_tense_suite_passes_on_example(leq3_tense, leq3_props):
    """Test the transformation-function, dynamic and compatibility laws on the example data."""
    report = tense_suite(leq3_tense, list(leq3_props.values()), Settings(sample_size=100, pair_sample_size=8))
    checks = [r.check for r in report.results]
    assert report.passed, report.to_text()
    assert checks[:7] == ["phi.injective", "phi.singleton", "phi.order", "tense.direct-formula", "tense.duality", "tense.monotone", "tense.universal-below-existential"]
    assert {"dynamic.top", "dynamic.monotone", "dynamic.additive", "dynamic.round-trip", "dynamic.bounds"} <= set(checks)


def test_run_laws_without_frame(nonlattice, settings):
    """Test that only the algebra-level suites run without a frame."""
    report = run_laws(nonlattice, settings)
    checks = {r.check for r in report.results}
    assert report.passed
    assert "algebra.plus-monotone" in checks and "dynamic.top" not in checks


def test_run_laws_does_not_depend_on_jobs(nonlattice):
    """Test that the merged report is the same for one and several workers."""
    single = run_laws(nonlattice, Settings(random_algebras=2, sample_size=50, jobs=1))
    pooled = run_laws(nonlattice, Settings(random_algebras=2, sample_size=50, jobs=4))
    assert single.model_dump() == pooled.model_dump()


def test_run_laws_with_frame_passes(nonlattice, leq3_frame, leq3_props):
    """Test the full run on the example algebra, frame and propositions."""
    settings = Settings(random_algebras=2, sample_size=100, pair_sample_size=8)
    report = run_laws(nonlattice, settings, leq3_frame, list(leq3_props.values()))
    checks = {r.check for r in report.results}
    assert report.passed, report.to_text()
    assert {"induced.relation", "recovered.G", "extension.P", "compat.double[G,G,G]"} <= checks
