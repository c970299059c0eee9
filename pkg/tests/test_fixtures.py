"""Worked-example fixtures: every recorded fact must hold, with frozen keys."""
import pytest

from grl.fixtures import (FIXTURES, UnknownFixtureError, build_dinf_q4,
                          build_fixture, build_m2_z, build_s3_k,
                          build_triangular_n4, run_all_fixtures, run_fixture)

EXPECTED_FACTS = {
    "dinf-q4": [
        "f-idempotent", "f-central", "f-split-coords", "f-support",
        "f-support-group-infinite", "b-squared", "c-squared", "bc-zero",
        "condition-left-fails", "condition-right-fails", "support-not-closed",
        "principal-not-prime", "principal-not-prime-witnesses",
        "enumeration-complete", "enumeration-contains-f",
        "unitization-preserves", "embedding-preserves-support",
    ],
    "m2-z": [
        "f-idempotent", "f-not-central", "f-support", "f-support-group-cap2",
        "f-support-group-infinite", "identity-law",
    ],
    "poly-f3-n4": [
        "enumeration-complete", "all-idempotents-degree-zero",
        "identity-in-degree-zero", "condition-left-fails-at-truncation",
        "support-not-closed",
    ],
    "s3-k": [
        "f-idempotent", "f-central", "f-support-group", "support-group-order",
        "k-not-normal", "condition-left-holds", "strong-on-support",
        "enumeration-complete", "every-enumerated-finite-support",
    ],
    "triangular-n4": [
        "condition-left-fails", "condition-left-fails-in-window",
        "condition-right-holds-in-window", "support-not-closed",
        "nondegenerate-right-fails", "unital", "enumeration-unsupported-over-q",
    ],
}


def test_fixture_names_frozen():
    assert FIXTURES == tuple(sorted(EXPECTED_FACTS))


@pytest.mark.parametrize("name", sorted(EXPECTED_FACTS))
def test_fixture_passes_every_fact(name):
    report = run_fixture(name)
    assert [f.key for f in report.facts] == EXPECTED_FACTS[name]
    failing = [f for f in report.facts if not f.passed]
    assert not failing, [
        (f.key, f.expected, f.actual) for f in failing]
    assert report.passed


def test_run_all_fixtures_covers_everything():
    reports = run_all_fixtures()
    assert [r.name for r in reports] == list(FIXTURES)
    assert all(r.passed for r in reports)
    assert sum(len(r.facts) for r in reports) == sum(map(len, EXPECTED_FACTS.values()))


def test_unknown_fixture_raises():
    with pytest.raises(UnknownFixtureError):
        run_fixture("no-such-fixture")
    with pytest.raises(UnknownFixtureError):
        build_fixture("no-such-fixture")


def test_fact_serialization():
    report = run_fixture("m2-z")
    d = report.to_dict()
    assert d["name"] == "m2-z"
    assert all(set(f) >= {"key", "description", "passed", "expected", "actual"}
               for f in d["facts"])


# ---------------------------------------------------------------------------
# Spot checks directly on the built contexts (independent of the fact list).


def test_dinf_q4_context():
    ctx = build_dinf_q4()
    ring, f = ctx["graded"], ctx["f"]
    assert f * f == f
    assert f.is_central()
    b, c = ctx["b"], ctx["c"]
    assert (b * c) == ring.zero()
    assert tuple((b * b).support()) == (ring.group.identity(),)


def test_m2_z_context():
    ctx = build_m2_z()
    f = ctx["f"]
    assert f.is_idempotent() and not f.is_central()


def test_s3_k_context():
    ctx = build_s3_k()
    f = ctx["f"]
    K = ctx["K"]
    assert f.is_idempotent() and f.is_central()
    assert f.support() == frozenset(K)


def test_triangular_window_is_the_declared_filter():
    ctx = build_triangular_n4()
    window = ctx["window"]
    assert window((1,), (2,)) and not window((2,), (2,))
