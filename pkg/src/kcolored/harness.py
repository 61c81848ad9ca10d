"""Theorem campaigns, distance-lemma suites and the exhaustive conjecture search.

Every run is a pure function of its parameters: each trial or orientation
derives its own seed, and worker results are collected in input order, so
reports do not depend on the worker count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .chroma_paths import LEMMA_VARIANTS, check_distance_lemma
from .core_model import ColoredDigraph
from .generators import (
    BudgetExceeded,
    GenParams,
    coarsen_coloring,
    derive_seed,
    enumerate_smp,
    finest_short_cycle_coloring,
    invariant_hash,
    orientation_at,
    orientation_count,
    random_colored_smp,
    DEFAULT_ENUM_BUDGET,
)
from .kernel_solver import find_k_colored_kernel
from .oracles import k_colored_kernel_brute
from .pattern_census import hypothesis_report

ORACLE_MAX_N = 9


class InvalidCampaign(ValueError):
    pass


class CorruptCheckpoint(ValueError):
    pass


@dataclass(frozen=True)
class TheoremSpec:
    k: int
    bipartite: bool
    gate: Callable[[dict], bool] | None
    gate_flags: tuple[str, ...]
    source: str  # "random", "finest" or "tournament_finest"
    external: bool = False
    description: str = ""


def _t2_gate(h: dict) -> bool:
    return h["all_C4_at_most_2_colored"] and (
        h["all_C5_at_most_3_colored"] or h["all_C3joinC3_at_most_2_colored"])


THEOREMS: dict[str, TheoremSpec] = {
    "T1_k_ge_4": TheoremSpec(4, False, None, (), "random",
                             description="r >= 2, k >= 4: a k-colored kernel exists"),
    "T2_k3": TheoremSpec(3, False, _t2_gate,
                         ("all_C4_at_most_2_colored", "all_C5_at_most_3_colored",
                          "all_C3joinC3_at_most_2_colored"), "random",
                         description="r >= 3, k = 3, C4 <= 2 colors and (C5 <= 3 or C3joinC3 <= 2)"),
    "T3_k2": TheoremSpec(2, False, lambda h: h["all_C3_monochromatic"] and h["all_C4_monochromatic"],
                         ("all_C3_monochromatic", "all_C4_monochromatic"), "finest",
                         description="r >= 3, k = 2, every C3 and C4 monochromatic"),
    "T4_bipartite_k2": TheoremSpec(2, True, lambda h: h["all_C4joinC4_at_most_2_colored"],
                                   ("all_C4joinC4_at_most_2_colored",), "random",
                                   description="r = 2, k = 2, C4joinC4 <= 2 colors"),
    "T4_bipartite_k3": TheoremSpec(3, True, lambda h: h["all_C4joinC4_at_most_3_colored"],
                                   ("all_C4joinC4_at_most_3_colored",), "random",
                                   description="r = 2, k = 3, C4joinC4 <= 3 colors"),
    # cited results for multipartite tournaments, checked experimentally only
    "X_bipartite_tournament_k1": TheoremSpec(1, True, lambda h: h["all_C4_monochromatic"],
                                             ("all_C4_monochromatic",), "tournament_finest", True,
                                             "external result: bipartite tournament, every C4 monochromatic"),
    "X_multipartite_tournament_k1": TheoremSpec(1, False,
                                                lambda h: h["all_C3_monochromatic"] and h["all_C4_monochromatic"],
                                                ("all_C3_monochromatic", "all_C4_monochromatic"),
                                                "tournament_finest", True,
                                                "external result: r >= 3 tournament, every C3 and C4 monochromatic"),
}


@dataclass(frozen=True)
class Campaign:
    """Parameters of a theorem campaign.  Each trial draws part sizes, ``m``
    and ``p_symmetric`` uniformly from the given choices."""

    theorem_id: str
    trials: int
    part_sizes: tuple[tuple[int, ...], ...]
    m: tuple[int, ...] = (4,)
    p_symmetric: tuple[float, ...] = (0.0, 0.3)
    seed: int = 0
    k: int | None = None
    # extra rejection-sampled draws; only instances passing the gate with
    # more than k - 1 colors in use are kept
    rejection_samples: int = 0
    rejection_m: tuple[int, ...] = (3,)
    oracle_check: bool = False
    # chance that a finest-colored instance is replaced by a random coarsening
    coarsen_probability: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(tuple(p) for p in self.part_sizes))
        object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(self, "p_symmetric", tuple(self.p_symmetric))
        object.__setattr__(self, "rejection_m", tuple(self.rejection_m))
        if self.theorem_id not in THEOREMS:
            raise InvalidCampaign(f"unknown theorem id {self.theorem_id!r}")
        thm = THEOREMS[self.theorem_id]
        if self.trials < 0 or self.rejection_samples < 0:
            raise InvalidCampaign("trial counts must be non-negative")
        if not 0.0 <= self.coarsen_probability <= 1.0:
            raise InvalidCampaign("coarsen_probability must lie in [0, 1]")
        if not self.part_sizes or not self.m or not self.p_symmetric:
            raise InvalidCampaign("part_sizes, m and p_symmetric need at least one choice each")
        for sizes in self.part_sizes:
            r = len(sizes)
            if thm.bipartite and r != 2:
                raise InvalidCampaign(f"{self.theorem_id} needs two parts, got {sizes}")
            if not thm.bipartite and r < (2 if self.theorem_id == "T1_k_ge_4" else 3):
                raise InvalidCampaign(f"{self.theorem_id} cannot run on part sizes {sizes}")
        k = self.effective_k
        if self.theorem_id == "T1_k_ge_4" and k < 4:
            raise InvalidCampaign("T1_k_ge_4 needs k >= 4")
        if self.theorem_id != "T1_k_ge_4" and k != thm.k:
            raise InvalidCampaign(f"{self.theorem_id} is stated for k = {thm.k}")

    @property
    def effective_k(self) -> int:
        return THEOREMS[self.theorem_id].k if self.k is None else self.k

    def to_dict(self) -> dict:
        d = asdict(self)
        d["part_sizes"] = [list(p) for p in self.part_sizes]
        d["k"] = self.effective_k
        for key in ("m", "p_symmetric", "rejection_m"):
            d[key] = list(d[key])
        return d


@dataclass
class CampaignReport:
    theorem_id: str
    k: int
    trials: int = 0
    hypothesis_satisfied: int = 0
    kernel_found: int = 0
    failures: list = field(default_factory=list)
    sources: dict = field(default_factory=dict)
    oracle_disagreements: int = 0
    external: bool = False
    campaign: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.failures and self.oracle_disagreements == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verified"] = self.verified
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        rows = [
            ("theorem", self.theorem_id + (" (external check)" if self.external else "")),
            ("k", self.k),
            ("trials", self.trials),
            ("hypothesis satisfied", self.hypothesis_satisfied),
            ("kernel found", self.kernel_found),
            ("failures", len(self.failures)),
            ("oracle disagreements", self.oracle_disagreements),
            ("sources", ", ".join(f"{k}={v}" for k, v in sorted(self.sources.items())) or "-"),
            ("verdict", "verified" if self.verified else "FAILED"),
        ]
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows)


def _map_ordered(fn, items: Sequence, workers: int, chunksize: int = 16) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


def _draw_params(rng: np.random.Generator, part_choices, m_choices, psym_choices, seed: int) -> GenParams:
    sizes = part_choices[rng.integers(len(part_choices))]
    m = m_choices[rng.integers(len(m_choices))]
    psym = psym_choices[rng.integers(len(psym_choices))]
    return GenParams(part_sizes=sizes, p_symmetric=float(psym), m=int(m), seed=seed)


def _finest_instance(params: GenParams, rng: np.random.Generator, lengths=(3, 4),
                     coarsen_probability: float = 0.5) -> tuple[ColoredDigraph, str]:
    D = finest_short_cycle_coloring(random_colored_smp(params), lengths)
    classes = len(D.colors_used())
    if classes >= 2 and rng.random() < coarsen_probability:
        merges = int(rng.integers(1, classes))
        return coarsen_coloring(D, merges, derive_seed(params.seed, 7)), "coarsened"
    return D, "finest"


def _campaign_instance(campaign: Campaign, index: int, rejection: bool) -> tuple[ColoredDigraph, str]:
    thm = THEOREMS[campaign.theorem_id]
    phase = 1 if rejection else 0
    rng = np.random.default_rng(derive_seed(campaign.seed, phase, index))
    gen_seed = derive_seed(campaign.seed, phase, index, 1)
    m_choices = campaign.rejection_m if rejection else campaign.m
    params = _draw_params(rng, campaign.part_sizes, m_choices, campaign.p_symmetric, gen_seed)
    if thm.source == "finest":
        return _finest_instance(params, rng, coarsen_probability=campaign.coarsen_probability)
    if thm.source == "tournament_finest":
        params = GenParams(params.part_sizes, 0.0, params.orientation_bias, params.m, params.seed)
        lengths = (4,) if thm.bipartite else (3, 4)
        return _finest_instance(params, rng, lengths, campaign.coarsen_probability)
    return random_colored_smp(params), "rejection" if rejection else f"m={params.m}"


def _certify_failure(D: ColoredDigraph, k: int) -> dict:
    diag = {}
    if D.n <= ORACLE_MAX_N:
        oracle = k_colored_kernel_brute(D, k)
        diag["oracle_kernel"] = list(oracle) if oracle is not None else None
        diag["oracle_agrees"] = oracle is None
    else:
        diag["oracle_kernel"] = None
        diag["oracle_agrees"] = None
    return diag


def _run_trial(campaign: Campaign, job: tuple[int, bool]) -> dict:
    index, rejection = job
    thm = THEOREMS[campaign.theorem_id]
    k = campaign.effective_k
    D, source = _campaign_instance(campaign, index, rejection)
    outcome = {"source": source, "gated": True, "found": None, "failure": None, "oracle_mismatch": False}
    if thm.gate is not None:
        h = hypothesis_report(D, thm.gate_flags).to_dict()
        gated = thm.gate(h)
        if rejection:
            gated = gated and len(D.colors_used()) > k - 1
        outcome["gated"] = gated
        if not gated:
            return outcome
    result = find_k_colored_kernel(D, k)
    outcome["found"] = result.found
    if not result.found:
        outcome["failure"] = {"index": index, "phase": "rejection" if rejection else "main",
                              "digraph": D.to_dict(), "k": k,
                              "diagnostics": _certify_failure(D, k)}
    elif campaign.oracle_check and D.n <= ORACLE_MAX_N:
        oracle = k_colored_kernel_brute(D, k)
        outcome["oracle_mismatch"] = oracle is None or tuple(sorted(result.kernel)) != oracle
    return outcome


def verify_theorem(campaign: Campaign, workers: int = 1) -> CampaignReport:
    thm = THEOREMS[campaign.theorem_id]
    jobs = [(i, False) for i in range(campaign.trials)]
    jobs += [(i, True) for i in range(campaign.rejection_samples)]
    outcomes = _map_ordered(partial(_run_trial, campaign), jobs, workers)

    report = CampaignReport(theorem_id=campaign.theorem_id, k=campaign.effective_k,
                            external=thm.external, campaign=campaign.to_dict())
    for out in outcomes:
        report.trials += 1
        if not out["gated"]:
            continue
        report.hypothesis_satisfied += 1
        report.sources[out["source"]] = report.sources.get(out["source"], 0) + 1
        if out["found"]:
            report.kernel_found += 1
        else:
            report.failures.append(out["failure"])
        report.oracle_disagreements += int(out["oracle_mismatch"])
    return report


# -- distance lemma suites ---------------------------------------------------

LEMMA_SOURCES: dict[str, dict] = {
    "L1": dict(parts=((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)), m=(3, 4, 5, 6), gate=None),
    "L2_k2": dict(parts=((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)), m=(2, 3, 4), gate=None),
    "L2_k3": dict(parts=((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)), m=(2, 3, 4), gate=None),
    "L3": dict(parts=((2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1)), m=(2, 3), gate="all_C4_at_most_2_colored"),
    "L4": dict(parts=((2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)), m=(2,), gate="finest"),
    "L5_k2": dict(parts=((2, 2), (3, 2), (3, 3), (4, 3)), m=(2, 3), gate="all_C4joinC4_at_most_2_colored"),
    "L5_k3": dict(parts=((2, 2), (3, 2), (3, 3), (4, 3)), m=(3, 4), gate="all_C4joinC4_at_most_3_colored"),
}


@dataclass
class LemmaReport:
    variant: str
    gated: int = 0
    attempts: int = 0
    violations: list = field(default_factory=list)

    @property
    def respected(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["respected"] = self.respected
        return d


def _lemma_attempt(variant: str, seed: int, index: int) -> dict:
    src = LEMMA_SOURCES[variant]
    rng = np.random.default_rng(derive_seed(seed, index))
    params = _draw_params(rng, src["parts"], src["m"], (0.0, 0.3), derive_seed(seed, index, 1))
    if src["gate"] == "finest":
        D, _ = _finest_instance(params, rng)
        h = hypothesis_report(D, ("all_C3_monochromatic", "all_C4_monochromatic"))
        gated = h.all_C3_monochromatic and h.all_C4_monochromatic
    else:
        D = random_colored_smp(params)
        gated = src["gate"] is None or getattr(hypothesis_report(D, (src["gate"],)), src["gate"])
    if not gated:
        return {"gated": False}
    bad = check_distance_lemma(D, variant)
    return {"gated": True, "violation": {"digraph": D.to_dict(), "pairs": bad} if bad else None}


def lemma_suite(variant: str, instances: int, seed: int = 0, max_attempts: int | None = None,
                workers: int = 1) -> LemmaReport:
    """Draw instances until ``instances`` of them pass the variant's coloring gate."""
    if variant not in LEMMA_VARIANTS:
        raise InvalidCampaign(f"unknown lemma variant {variant!r}")
    max_attempts = 50 * instances if max_attempts is None else max_attempts
    report = LemmaReport(variant)
    batch = max(instances, 32)
    while report.gated < instances and report.attempts < max_attempts:
        start = report.attempts
        todo = list(range(start, min(start + batch, max_attempts)))
        for out in _map_ordered(partial(_lemma_attempt, variant, seed), todo, workers):
            report.attempts += 1
            if out["gated"]:
                report.gated += 1
                if out["violation"]:
                    report.violations.append(out["violation"])
                if report.gated == instances:
                    break
    return report


# -- conjecture search -------------------------------------------------------

SEARCH_NOTE = ("covers the finest short-cycle coloring of every orientation plus sampled "
               "coarsenings, not every valid coloring; no counterexample is evidence, not proof")


@dataclass
class SearchCheckpoint:
    part_sizes: tuple[int, ...]
    allow_symmetric: bool
    coarsenings: int
    seed: int
    dedup: bool = False
    cursor: int = 0
    examined: int = 0
    skipped_duplicates: int = 0
    counterexamples: list = field(default_factory=list)
    seen_hashes: list = field(default_factory=list)

    def to_json(self) -> str:
        d = asdict(self)
        d["part_sizes"] = list(self.part_sizes)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SearchCheckpoint":
        try:
            d = json.loads(text)
            d["part_sizes"] = tuple(d["part_sizes"])
            cp = cls(**d)
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise CorruptCheckpoint(f"unreadable checkpoint: {exc}") from exc
        if not isinstance(cp.cursor, int) or cp.cursor < 0 or cp.examined < 0:
            raise CorruptCheckpoint("checkpoint counters are invalid")
        return cp

    def save(self, path: str | os.PathLike) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(self.to_json(), encoding="utf-8")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "SearchCheckpoint":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass
class SearchReport:
    part_sizes: tuple[int, ...]
    allow_symmetric: bool
    coarsenings: int
    seed: int
    orientations_total: int
    orientations_done: int
    examined: int
    skipped_duplicates: int
    counterexamples: list
    complete: bool
    note: str = SEARCH_NOTE

    def to_dict(self) -> dict:
        d = asdict(self)
        d["part_sizes"] = list(self.part_sizes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        rows = [
            ("part sizes", ",".join(map(str, self.part_sizes))),
            ("symmetric arcs", self.allow_symmetric),
            ("orientations", f"{self.orientations_done}/{self.orientations_total}"),
            ("instances examined", self.examined),
            ("duplicates skipped", self.skipped_duplicates),
            ("counterexamples", len(self.counterexamples)),
            ("complete", self.complete),
        ]
        width = max(len(name) for name, _ in rows)
        lines = [f"{name.ljust(width)}  {value}" for name, value in rows]
        return "\n".join(lines + [f"note: {self.note}"])


def _orientation_instances(part_sizes, allow_symmetric, coarsenings, seed, index):
    base = finest_short_cycle_coloring(orientation_at(part_sizes, allow_symmetric, index), (3, 4))
    yield "finest", base
    classes = len(base.colors_used())
    if classes < 2:
        return
    for j in range(coarsenings):
        rng = np.random.default_rng(derive_seed(seed, index, j))
        merges = int(rng.integers(1, classes))
        yield f"coarsening-{j}", coarsen_coloring(base, merges, derive_seed(seed, index, j, 1))


def _search_chunk(part_sizes, allow_symmetric, coarsenings, seed, bounds) -> list[dict]:
    start, stop = bounds
    out = []
    for index in range(start, stop):
        for label, D in _orientation_instances(part_sizes, allow_symmetric, coarsenings, seed, index):
            h = hypothesis_report(D, ("all_C3_monochromatic", "all_C4_monochromatic"))
            if not (h.all_C3_monochromatic and h.all_C4_monochromatic):
                raise AssertionError(f"orientation {index} ({label}) breaks the monochromatic hypothesis")
            record = {"index": index, "label": label, "hash": invariant_hash(D), "counterexample": None}
            if not find_k_colored_kernel(D, 1).found:
                oracle = k_colored_kernel_brute(D, 1) if D.n <= ORACLE_MAX_N else None
                record["counterexample"] = {
                    "orientation": index,
                    "coloring": label,
                    "digraph": D.to_dict(),
                    "oracle_agrees": (oracle is None) if D.n <= ORACLE_MAX_N else None,
                }
            out.append(record)
    return out


def search_conjecture(part_sizes: Sequence[int], allow_symmetric: bool = True, coarsenings: int = 0,
                      checkpoint: str | os.PathLike | None = None, seed: int = 0, workers: int = 1,
                      checkpoint_every: int = 64, max_orientations: int | None = None,
                      dedup: bool = False, budget: int = DEFAULT_ENUM_BUDGET):
    """Test every orientation (finest coloring plus coarsenings) for a 1-colored kernel.

    When ``checkpoint`` names an existing file the run resumes from it; the
    file is rewritten every ``checkpoint_every`` orientations.
    ``max_orientations`` stops early, as an interruption would.
    Returns ``(SearchReport, SearchCheckpoint)``.
    """
    part_sizes = tuple(int(s) for s in part_sizes)
    total = orientation_count(part_sizes, allow_symmetric)
    if total > budget:
        raise BudgetExceeded(total, budget)
    # validates part sizes
    next(enumerate_smp(part_sizes, allow_symmetric, budget=budget), None)

    state = SearchCheckpoint(part_sizes, allow_symmetric, coarsenings, seed, dedup)
    if checkpoint is not None and Path(checkpoint).exists():
        state = SearchCheckpoint.load(checkpoint)
        mine = (part_sizes, allow_symmetric, coarsenings, seed, dedup)
        theirs = (state.part_sizes, state.allow_symmetric, state.coarsenings, state.seed, state.dedup)
        if mine != theirs:
            raise CorruptCheckpoint(f"checkpoint was written for {theirs}, not {mine}")
        if state.cursor > total:
            raise CorruptCheckpoint(f"cursor {state.cursor} is past the end ({total})")

    stop = total if max_orientations is None else min(total, state.cursor + max_orientations)
    step = max(1, checkpoint_every)
    seen = set(state.seen_hashes)
    fn = partial(_search_chunk, part_sizes, allow_symmetric, coarsenings, seed)
    while state.cursor < stop:
        # one checkpoint interval, split across workers
        end = min(stop, state.cursor + step)
        width = max(1, -(-(end - state.cursor) // max(1, workers)))
        chunks = [(a, min(end, a + width)) for a in range(state.cursor, end, width)]
        for records in _map_ordered(fn, chunks, workers, chunksize=1):
            for rec in records:
                if dedup:
                    if rec["hash"] in seen:
                        state.skipped_duplicates += 1
                        continue
                    seen.add(rec["hash"])
                state.examined += 1
                if rec["counterexample"] is not None:
                    state.counterexamples.append(rec["counterexample"])
        state.cursor = end
        if dedup:
            state.seen_hashes = sorted(seen)
        if checkpoint is not None:
            state.save(checkpoint)

    report = SearchReport(part_sizes, allow_symmetric, coarsenings, seed, total, state.cursor,
                          state.examined, state.skipped_duplicates, list(state.counterexamples),
                          complete=state.cursor == total)
    return report, state


__all__ = [
    "Campaign", "CampaignReport", "CorruptCheckpoint", "InvalidCampaign", "LemmaReport",
    "SearchCheckpoint", "SearchReport", "THEOREMS", "lemma_suite", "search_conjecture",
    "verify_theorem",
]
