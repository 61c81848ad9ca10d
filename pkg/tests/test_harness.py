import json

import pytest

from kcolored import (
    Campaign,
    CorruptCheckpoint,
    InvalidCampaign,
    build_digraph,
    lemma_suite,
    search_conjecture,
    verify_theorem,
)
from kcolored import harness
from kcolored.kernel_solver import KernelResult
from kcolored.oracles import k_colored_kernel_brute


def oracle_certified(campaign):
    c = Campaign(**{**campaign.__dict__, "oracle_check": True})
    return verify_theorem(c)


def test_t1_example():
    report = oracle_certified(Campaign("T1_k_ge_4", 10, ((1, 1, 2),), m=(5,), seed=1))
    assert report.trials == report.hypothesis_satisfied == report.kernel_found == 10
    assert report.failures == [] and report.oracle_disagreements == 0


def test_t3_example():
    report = oracle_certified(Campaign("T3_k2", 10, ((1, 1, 1),), m=(3,), seed=2))
    assert report.hypothesis_satisfied == 10
    assert report.failures == [] and report.oracle_disagreements == 0


def test_t4_example():
    report = oracle_certified(Campaign("T4_bipartite_k2", 25, ((2, 2),), m=(2,), seed=3))
    assert report.hypothesis_satisfied == 25 and report.kernel_found == 25


def test_t2_counts_sources():
    report = verify_theorem(Campaign("T2_k3", 20, ((2, 1, 1), (2, 2, 1)), m=(2,),
                                     rejection_samples=200, rejection_m=(3,), seed=4))
    assert report.trials == 220
    assert report.sources["m=2"] == 20
    assert report.kernel_found == report.hypothesis_satisfied == sum(report.sources.values())


@pytest.mark.parametrize("kwargs", [
    dict(theorem_id="T9", trials=1, part_sizes=((1, 1, 1),)),
    dict(theorem_id="T3_k2", trials=1, part_sizes=((2, 2),)),
    dict(theorem_id="T4_bipartite_k2", trials=1, part_sizes=((1, 1, 1),)),
    dict(theorem_id="T1_k_ge_4", trials=1, part_sizes=((1, 1),), k=3),
    dict(theorem_id="T2_k3", trials=1, part_sizes=((1, 1, 1),), k=2),
])
def test_invalid_campaigns(kwargs):
    with pytest.raises(InvalidCampaign):
        Campaign(**kwargs)


def test_t1_runs_on_two_parts():
    assert verify_theorem(Campaign("T1_k_ge_4", 20, ((2, 2), (3, 2)), m=(5,))).verified


def test_report_invariants_and_determinism():
    c = Campaign("T4_bipartite_k3", 40, ((2, 2), (3, 2)), m=(3, 4), seed=9)
    a, b = verify_theorem(c), verify_theorem(c)
    assert a.to_json() == b.to_json()
    assert a.kernel_found <= a.hypothesis_satisfied <= a.trials


def test_workers_do_not_change_report():
    c = Campaign("T3_k2", 30, ((1, 1, 1), (2, 1, 1)), seed=5)
    assert verify_theorem(c, workers=2).to_json() == verify_theorem(c, workers=1).to_json()


def test_failures_are_escalated_to_the_oracle(monkeypatch):
    monkeypatch.setattr(harness, "find_k_colored_kernel", lambda D, k: KernelResult(None, True, 0))
    report = verify_theorem(Campaign("T1_k_ge_4", 3, ((1, 1, 1),), m=(4,)))
    assert len(report.failures) == 3 and not report.verified
    for failure in report.failures:
        D = build_digraph(failure["digraph"])
        assert failure["diagnostics"]["oracle_agrees"] is False
        assert failure["diagnostics"]["oracle_kernel"] == list(k_colored_kernel_brute(D, 4))


def test_search_examples():
    report, _ = search_conjecture((1, 1, 1), allow_symmetric=True, coarsenings=0)
    assert report.examined == 27 and report.counterexamples == [] and report.complete
    report, _ = search_conjecture((1, 1), allow_symmetric=False)
    assert report.examined == 2 and report.counterexamples == []


def test_search_resume_matches_full_run(tmp_path):
    full, _ = search_conjecture((2, 1, 1), True, coarsenings=2, seed=3)
    path = tmp_path / "cp.json"
    partial, cp = search_conjecture((2, 1, 1), True, coarsenings=2, seed=3, checkpoint=path,
                                    checkpoint_every=7, max_orientations=40)
    assert not partial.complete and cp.cursor == 40
    saved = json.loads(path.read_text())
    assert saved["cursor"] == 40
    resumed, _ = search_conjecture((2, 1, 1), True, coarsenings=2, seed=3, checkpoint=path,
                                   checkpoint_every=7)
    assert resumed.complete
    assert resumed.to_json() == full.to_json()


def test_search_reports_counterexamples(monkeypatch):
    monkeypatch.setattr(harness, "find_k_colored_kernel", lambda D, k: KernelResult(None, True, 0))
    report, _ = search_conjecture((1, 1), False)
    assert len(report.counterexamples) == 2
    # the stubbed solver is wrong here, and the oracle says so
    assert all(cx["oracle_agrees"] is False for cx in report.counterexamples)


def test_search_workers_and_dedup():
    a, _ = search_conjecture((2, 1, 1), True, coarsenings=1, workers=2, checkpoint_every=20)
    b, _ = search_conjecture((2, 1, 1), True, coarsenings=1, workers=1)
    assert a.to_json() == b.to_json()
    d, _ = search_conjecture((2, 1, 1), True, dedup=True)
    assert d.skipped_duplicates > 0 and d.examined + d.skipped_duplicates == 3 ** 5


def test_corrupt_checkpoint(tmp_path):
    path = tmp_path / "cp.json"
    path.write_text("{not json")
    with pytest.raises(CorruptCheckpoint):
        search_conjecture((1, 1, 1), True, checkpoint=path)
    search_conjecture((1, 1), True, checkpoint=path.with_name("other.json"))
    with pytest.raises(CorruptCheckpoint):
        search_conjecture((1, 1, 1), True, checkpoint=path.with_name("other.json"))


def test_lemma_suite_small():
    for variant in ("L1", "L3", "L4", "L5_k2"):
        report = lemma_suite(variant, 20, seed=1)
        assert report.gated == 20 and report.respected


@pytest.mark.parametrize("theorem_id,parts", [
    ("X_bipartite_tournament_k1", ((2, 2), (3, 2))),
    ("X_multipartite_tournament_k1", ((1, 1, 1), (2, 1, 1))),
])
def test_external_tournament_checks(theorem_id, parts):
    report = verify_theorem(Campaign(theorem_id, 40, parts, seed=6))
    assert report.external and report.verified
    assert report.hypothesis_satisfied == 40
