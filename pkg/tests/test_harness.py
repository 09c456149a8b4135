import json

import pytest

from conftest import cached_suite
from rigidity import harness
from rigidity.harness import CLAIMS, GROUPS, NA, PASS, claim_coverage, default_corpus, enumerate_unary, report_json, resolve_suite, run_suite
from rigidity.structures import StructureError, validate


@pytest.fixture(scope="module")
def small_corpus():
    return default_corpus(3, n_random=6, n_union_pairs=15, max_product=6)


def test_enumerate_unary_small():
    out = enumerate_unary(2, 1)
    assert sorted(sorted(harness._atom_sizes(s)) for s in out) == [[1], [1, 1], [2]]
    assert len(enumerate_unary(1, 3)) == 1
    assert all(validate(s) == [] for s in enumerate_unary(5, 2))


def test_enumerate_unary_counts():
    # partitions of 1..4 into at most two parts
    assert len(enumerate_unary(4, 1)) == 8
    assert len(enumerate_unary(4, 0)) == 4


def test_enumerate_unary_caps():
    with pytest.raises(StructureError):
        enumerate_unary(11, 1)
    with pytest.raises(StructureError):
        enumerate_unary(3, 5)


def test_resolve_suite():
    assert resolve_suite("all") == set(CLAIMS)
    assert "PROP_DEGA_4" in resolve_suite("findings")
    assert "PROP_DEGA_4" not in resolve_suite("gating")
    assert resolve_suite("THM_COMP3_*") == {f"THM_COMP3_{c}" for c in "abcd"}
    assert resolve_suite("INEQ_1, unions") >= {"INEQ_1", "THM_DIS_1"}
    with pytest.raises(ValueError):
        resolve_suite("NOPE")


def test_corpus_is_deterministic():
    a, b = default_corpus(5), default_corpus(5)
    assert a.structures == b.structures and a.union_pairs == b.union_pairs
    assert a.profiles == b.profiles
    assert default_corpus(6).structures != a.structures


def test_corpus_contents():
    c = default_corpus(1)
    names = [d for d, _ in c.structures]
    assert sum(d.startswith("random") for d in names) == 50
    assert sum(d.startswith("eqrel") for d in names) == 29
    assert {"empty(5)", "cycle(6)", "vecspace(3,2)"} <= set(names)
    assert len(c.union_pairs) >= 100
    assert all(c.structures[i][1].n * c.structures[j][1].n <= 16 for i, j in c.composition_pairs)


def _find(reports, claim, instance):
    hits = [r for r in reports if r.claim_id == claim and r.instance == instance]
    assert len(hits) == 1, (claim, instance)
    return hits[0]


def test_documented_reports(small_corpus):
    reports = run_suite("THM_DIS_1,PROP_WREATH,THM_COMP3_b", small_corpus)
    r = _find(reports, "THM_DIS_1", "empty(2) + empty(2) [sem]")
    assert (r.expected, r.computed, r.verdict) == (2, 2, PASS)
    r = _find(reports, "PROP_WREATH", "empty(2)[empty(2)]")
    assert (r.expected, r.computed, r.verdict) == (8, 8, PASS)
    r = _find(reports, "THM_COMP3_b", "empty(2)[empty(2)] [sem]")
    assert (r.expected, r.computed, r.verdict) == (3, 3, PASS)


def test_verdict_semantics(small_corpus):
    for r in run_suite("all", small_corpus):
        if r.verdict == NA:
            assert r.expected is None
        else:
            assert (r.verdict == PASS) == (r.expected == r.computed)
        assert r.quote == CLAIMS[r.claim_id].quote


def test_report_is_sorted_and_byte_identical(small_corpus):
    a = run_suite("all", small_corpus)
    b = run_suite("all", default_corpus(3, n_random=6, n_union_pairs=15, max_product=6))
    assert [(r.claim_id, r.instance) for r in a] == sorted((r.claim_id, r.instance) for r in a)
    assert report_json(3, a) == report_json(3, b)


def test_report_schema(small_corpus):
    d = json.loads(report_json(3, run_suite("monadic", small_corpus)))
    assert set(d) == {"seed", "summary", "reports", "findings"}
    assert set(d["summary"]) == {"pass", "fail", "na"}
    assert set(d["reports"][0]) == {"claim", "quote", "instance", "expected", "computed", "verdict"}
    assert d["findings"]["reports"][0]["claim"] == "FINDING_N_PRIME"


def test_engine_errors_surface_as_failures(small_corpus):
    run = harness._Run({"INEQ_1"}, small_corpus)

    def boom():
        raise RuntimeError("kaput")

    run.check("INEQ_1", "x", boom)
    assert run.reports[0].verdict == "fail" and "kaput" in run.reports[0].computed


def test_claim_coverage_on_default_corpus():
    reports = [r for g in GROUPS for r in cached_suite(g)[0]]
    cov = claim_coverage(reports)
    # case ii of the composition theorem needs an infinite outer structure
    thin = {k for k, v in cov.items() if v < 3}
    assert thin == {"THM_COMP3_c"}
    assert all(r.verdict != "fail" for r in reports if r.gating)
