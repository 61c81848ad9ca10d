"""Random and exhaustive colored semicomplete multipartite digraphs, and cycle-driven colorings."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

import numpy as np

from .core_model import ColoredDigraph
from .pattern_census import enumerate_cycles

DEFAULT_ENUM_BUDGET = 3 ** 13


class InvalidParams(ValueError):
    pass


class BudgetExceeded(ValueError):
    def __init__(self, total: int, budget: int):
        super().__init__(f"{total} orientations exceed the enumeration budget of {budget}")
        self.total = total
        self.budget = budget


def parts_from_sizes(part_sizes: Sequence[int]) -> list[list[int]]:
    parts, start = [], 0
    for size in part_sizes:
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def cross_pairs(part_sizes: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``u < v`` lying in different parts, ascending."""
    part_of = [i for i, size in enumerate(part_sizes) for _ in range(size)]
    n = len(part_of)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]]


def derive_seed(*keys: int) -> int:
    """A 64-bit seed that depends only on ``keys``."""
    return int(np.random.SeedSequence([int(k) for k in keys]).generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class GenParams:
    part_sizes: tuple[int, ...]
    p_symmetric: float = 0.0
    orientation_bias: float = 0.5
    m: int = 2
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(self.part_sizes))
        if len(self.part_sizes) < 2 or any(s < 1 for s in self.part_sizes):
            raise InvalidParams(f"need at least two nonempty parts, got {self.part_sizes}")
        if not 0.0 <= self.p_symmetric <= 1.0:
            raise InvalidParams(f"p_symmetric must lie in [0, 1], got {self.p_symmetric}")
        if not 0.0 <= self.orientation_bias <= 1.0:
            raise InvalidParams(f"orientation_bias must lie in [0, 1], got {self.orientation_bias}")
        if self.m < 1:
            raise InvalidParams(f"m must be positive, got {self.m}")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidParams(f"seed must be a 64-bit unsigned value, got {self.seed}")

    def to_json(self) -> str:
        d = asdict(self)
        d["part_sizes"] = list(self.part_sizes)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GenParams":
        return cls(**json.loads(text))


def random_colored_smp(params: GenParams) -> ColoredDigraph:
    """Each cross pair gets both arcs with probability ``p_symmetric``,
    otherwise one arc, oriented low-to-high with probability ``orientation_bias``.
    Arc colors are uniform over ``0..m-1``."""
    rng = np.random.default_rng(params.seed)
    arcs = []
    for u, v in cross_pairs(params.part_sizes):
        if rng.random() < params.p_symmetric:
            arcs += [(u, v), (v, u)]
        elif rng.random() < params.orientation_bias:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    arcs.sort()
    colors = rng.integers(0, params.m, size=len(arcs))
    return ColoredDigraph(
        sum(params.part_sizes),
        parts_from_sizes(params.part_sizes),
        [(u, v, int(c)) for (u, v), c in zip(arcs, colors)],
        params.m,
    )


def orientation_count(part_sizes: Sequence[int], allow_symmetric: bool) -> int:
    return (3 if allow_symmetric else 2) ** len(cross_pairs(part_sizes))


def orientation_at(part_sizes: Sequence[int], allow_symmetric: bool, index: int) -> ColoredDigraph:
    """The ``index``-th labeled orientation; the last cross pair is the fastest-moving digit.

    Digit values per pair ``(u, v)``: 0 is ``u -> v``, 1 is ``v -> u``, 2 is both.
    """
    pairs = cross_pairs(part_sizes)
    radix = 3 if allow_symmetric else 2
    if not 0 <= index < radix ** len(pairs):
        raise IndexError(index)
    arcs = []
    for u, v in reversed(pairs):
        index, digit = divmod(index, radix)
        if digit != 1:
            arcs.append((u, v, 0))
        if digit != 0:
            arcs.append((v, u, 0))
    return ColoredDigraph(sum(part_sizes), parts_from_sizes(part_sizes), arcs, 1)


def enumerate_smp(part_sizes: Sequence[int], allow_symmetric: bool,
                  cursor: int | str | None = None,
                  budget: int = DEFAULT_ENUM_BUDGET) -> Iterator[tuple[int, ColoredDigraph]]:
    """Yield ``(index, digraph)`` for every labeled orientation from ``cursor`` on.

    Digraphs are uncolored (all arcs color 0).  The cursor to resume after an
    item is its index plus one.
    """
    if len(part_sizes) < 2 or any(s < 1 for s in part_sizes):
        raise InvalidParams(f"need at least two nonempty parts, got {tuple(part_sizes)}")
    total = orientation_count(part_sizes, allow_symmetric)
    if total > budget:
        raise BudgetExceeded(total, budget)
    start = 0 if cursor is None else int(cursor)
    for index in range(start, total):
        yield index, orientation_at(part_sizes, allow_symmetric, index)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # the smaller index stays the root, so roots are class minima
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _recolor(D: ColoredDigraph, arc_list, class_of) -> ColoredDigraph:
    # dense color ids in order of each class's smallest arc
    ids: dict[int, int] = {}
    arcs = []
    for i, (u, v, _) in enumerate(arc_list):
        c = ids.setdefault(class_of(i), len(ids))
        arcs.append((u, v, c))
    return D.with_arcs(arcs, m=max(1, len(ids)))


def finest_short_cycle_coloring(D: ColoredDigraph, lengths=(3, 4)) -> ColoredDigraph:
    """Recolor ``D`` with the most colors such that every cycle of the given lengths is monochromatic."""
    lengths = tuple(lengths)
    if not set(lengths) <= {3, 4}:
        raise InvalidParams(f"lengths must be a subset of {{3, 4}}, got {lengths}")
    arc_list = D.arc_list()
    index = {(u, v): i for i, (u, v, _) in enumerate(arc_list)}
    uf = _UnionFind(len(arc_list))
    for length in lengths:
        for occ in enumerate_cycles(D, length):
            first = index[occ.arcs[0]]
            for arc in occ.arcs[1:]:
                uf.union(first, index[arc])
    return _recolor(D, arc_list, uf.find)


def coarsen_coloring(D: ColoredDigraph, merge_count: int, seed: int) -> ColoredDigraph:
    """Merge ``merge_count`` random pairs of color classes (a uniform pair each time)."""
    arc_list = D.arc_list()
    used = sorted({c for _, _, c in arc_list})
    if merge_count < 0 or (merge_count >= len(used) and merge_count > 0):
        raise InvalidParams(f"cannot perform {merge_count} merges on {len(used)} color classes")
    rng = np.random.default_rng(seed)
    slot = {c: i for i, c in enumerate(used)}
    uf = _UnionFind(len(used))
    classes = list(range(len(used)))
    for _ in range(merge_count):
        i, j = sorted(rng.choice(len(classes), size=2, replace=False))
        uf.union(classes[i], classes[j])
        classes = sorted({uf.find(c) for c in classes})
    return _recolor(D, arc_list, lambda i: uf.find(slot[arc_list[i][2]]))


def invariant_hash(D: ColoredDigraph) -> int:
    """Cheap isomorphism invariant: per-part sorted degree pairs plus color class sizes."""
    per_part = tuple(
        tuple(sorted((D.succ[v].bit_count(), D.pred[v].bit_count()) for v in part))
        for part in D.parts
    )
    class_sizes: dict[int, int] = {}
    for _, _, c in D.arc_list():
        class_sizes[c] = class_sizes.get(c, 0) + 1
    return hash((tuple(sorted(per_part)), tuple(sorted(class_sizes.values()))))


def count_closed_form(part_sizes: Sequence[int], allow_symmetric: bool) -> int:
    """Number of labeled orientations from the part sizes alone."""
    n = sum(part_sizes)
    pairs = math.comb(n, 2) - sum(math.comb(s, 2) for s in part_sizes)
    return (3 if allow_symmetric else 2) ** pairs
