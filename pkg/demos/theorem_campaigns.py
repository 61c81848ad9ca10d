"""
Checking the existence theorems on random instances
===================================================

Each campaign samples colored semicomplete multipartite digraphs, keeps the
ones satisfying the theorem's coloring hypothesis, and asks the exact solver
for a k-colored kernel.  A failure would be escalated to a brute-force
oracle before being reported.
"""

from kcolored import Campaign, lemma_suite, verify_theorem

campaigns = [
    Campaign("T1_k_ge_4", 200, ((1, 1, 1), (2, 2, 1), (2, 2)), m=(4, 6), seed=1),
    Campaign("T2_k3", 100, ((2, 1, 1), (2, 2, 1)), m=(2,), rejection_samples=1000, rejection_m=(3,), seed=1),
    Campaign("T3_k2", 200, ((1, 1, 1), (2, 2, 2), (2, 2, 1, 1)), seed=1),
    Campaign("T4_bipartite_k2", 200, ((2, 2), (3, 3)), m=(2, 3), seed=1),
    Campaign("T4_bipartite_k3", 200, ((2, 2), (3, 3)), m=(3, 4), seed=1),
]
for campaign in campaigns:
    print(verify_theorem(campaign).summary())
    print()

# the distance bounds that the proofs rest on
for variant in ("L1", "L2_k2", "L3", "L4", "L5_k2"):
    report = lemma_suite(variant, 100, seed=1)
    print(f"{variant}: {report.gated} gated instances, {len(report.violations)} violations")
