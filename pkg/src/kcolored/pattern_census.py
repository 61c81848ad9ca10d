"""Short directed cycles, joined-cycle patterns and the coloring hypotheses built on them.

Patterns are matched as subdigraphs (extra arcs among the matched vertices
are allowed).  Every stream is in ascending lexicographic order of the
canonical vertex tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core_model import ColoredDigraph

C3, C4, C5 = "C3", "C4", "C5"
C3C3, C4C4 = "C3joinC3", "C4joinC4"

PATTERN_SIZES = {C3: (3, 3), C4: (4, 4), C5: (5, 5), C3C3: (4, 5), C4C4: (5, 6)}


@dataclass(frozen=True)
class PatternOccurrence:
    """One embedding of a pattern.

    ``vertices`` is canonical: for cycles, the cycle order starting at its
    smallest vertex.  For ``C3joinC3`` it is ``(a, b, t, s)`` with shared arc
    ``a -> b`` and cycles ``a b t`` and ``a b s``, ``t < s``.  For
    ``C4joinC4`` it is ``(p, q, r, t, s)`` with shared path ``p -> q -> r``
    and cycles ``p q r t`` and ``p q r s``, ``t < s``.
    """

    kind: str
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    colors: frozenset[int] = field(compare=False)

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def validate(self, D: ColoredDigraph) -> bool:
        nv, na = PATTERN_SIZES[self.kind]
        if len(self.vertices) != nv or len(set(self.vertices)) != nv or len(set(self.arcs)) != na:
            return False
        if not all(D.has_arc(u, v) for u, v in self.arcs):
            return False
        return set(self.colors) == {D.color(u, v) for u, v in self.arcs}

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "arcs": [list(a) for a in self.arcs],
            "colors": sorted(self.colors),
        }


def _occurrence(D: ColoredDigraph, kind: str, vertices, arcs) -> PatternOccurrence:
    arcs = tuple(arcs)
    return PatternOccurrence(kind, tuple(vertices), arcs, frozenset(D.color(u, v) for u, v in arcs))


def _cycle_tuples(D: ColoredDigraph, length: int) -> Iterator[tuple[int, ...]]:
    # start at the smallest vertex; every other vertex must be larger
    for s in range(D.n):
        path = [s]
        on_path = 1 << s

        def extend(u: int) -> Iterator[tuple[int, ...]]:
            nonlocal on_path
            if len(path) == length:
                if D.succ[u] >> s & 1:
                    yield tuple(path)
                return
            for w, _ in D.out[u]:
                if w > s and not on_path >> w & 1:
                    path.append(w)
                    on_path |= 1 << w
                    yield from extend(w)
                    on_path &= ~(1 << w)
                    path.pop()

        yield from extend(s)


def enumerate_cycles(D: ColoredDigraph, length: int) -> Iterator[PatternOccurrence]:
    if length not in (3, 4, 5):
        raise ValueError(f"cycle length must be 3, 4 or 5, got {length}")
    kind = {3: C3, 4: C4, 5: C5}[length]
    for cyc in _cycle_tuples(D, length):
        arcs = [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
        yield _occurrence(D, kind, cyc, arcs)


def enumerate_joined(D: ColoredDigraph, kind: str) -> Iterator[PatternOccurrence]:
    if kind == C3C3:
        for (a, b) in sorted(D.arcs):
            # t with b -> t -> a
            closers = [t for t, _ in D.out[b] if t != a and D.succ[t] >> a & 1]
            for i, t in enumerate(closers):
                for s in closers[i + 1:]:
                    yield _occurrence(D, C3C3, (a, b, t, s),
                                      [(a, b), (b, t), (t, a), (b, s), (s, a)])
    elif kind == C4C4:
        for p in range(D.n):
            for q, _ in D.out[p]:
                for r, _ in D.out[q]:
                    if r == p:
                        continue
                    closers = [t for t, _ in D.out[r]
                               if t not in (p, q) and D.succ[t] >> p & 1]
                    for i, t in enumerate(closers):
                        for s in closers[i + 1:]:
                            yield _occurrence(D, C4C4, (p, q, r, t, s),
                                              [(p, q), (q, r), (r, t), (t, p), (r, s), (s, p)])
    else:
        raise ValueError(f"unknown joined pattern {kind!r}")


def enumerate_pattern(D: ColoredDigraph, kind: str) -> Iterator[PatternOccurrence]:
    if kind in (C3, C4, C5):
        return enumerate_cycles(D, int(kind[1]))
    return enumerate_joined(D, kind)


# flag -> (pattern, maximum number of colors allowed)
HYPOTHESES: dict[str, tuple[str, int]] = {
    "all_C3_monochromatic": (C3, 1),
    "all_C4_monochromatic": (C4, 1),
    "all_C4_at_most_2_colored": (C4, 2),
    "all_C5_at_most_3_colored": (C5, 3),
    "all_C3joinC3_at_most_2_colored": (C3C3, 2),
    "all_C4joinC4_at_most_2_colored": (C4C4, 2),
    "all_C4joinC4_at_most_3_colored": (C4C4, 3),
}


def first_violation(D: ColoredDigraph, flag: str) -> PatternOccurrence | None:
    kind, bound = HYPOTHESES[flag]
    for occ in enumerate_pattern(D, kind):
        if occ.num_colors > bound:
            return occ
    return None


@dataclass(frozen=True)
class HypothesisReport:
    all_C3_monochromatic: bool
    all_C4_monochromatic: bool
    all_C4_at_most_2_colored: bool
    all_C5_at_most_3_colored: bool
    all_C3joinC3_at_most_2_colored: bool
    all_C4joinC4_at_most_2_colored: bool
    all_C4joinC4_at_most_3_colored: bool
    witnesses: dict[str, PatternOccurrence] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out = {flag: getattr(self, flag) for flag in HYPOTHESES}
        out["witnesses"] = {flag: occ.to_dict() for flag, occ in sorted(self.witnesses.items())}
        return out


def hypothesis_report(D: ColoredDigraph, flags=None) -> HypothesisReport:
    """Evaluate the coloring hypotheses, stopping each flag at its first violation.

    ``flags`` restricts the work to a subset; skipped flags are left ``True``
    and mean nothing.
    """
    wanted = HYPOTHESES if flags is None else flags
    values = {}
    witnesses = {}
    for flag in HYPOTHESES:
        if flag not in wanted:
            values[flag] = True
            continue
        occ = first_violation(D, flag)
        values[flag] = occ is None
        if occ is not None:
            witnesses[flag] = occ
    return HypothesisReport(**values, witnesses=witnesses)


def is_3_quasi_transitive(D: ColoredDigraph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Every directed 3-path on distinct vertices must have its endpoints adjacent."""
    for a in range(D.n):
        for b, _ in D.out[a]:
            for c, _ in D.out[b]:
                if c == a:
                    continue
                for d, _ in D.out[c]:
                    if d in (a, b):
                        continue
                    if not ((D.succ[a] >> d) & 1 or (D.succ[d] >> a) & 1):
                        return False, (a, b, c, d)
    return True, None
