"""Reachability through paths that use a bounded number of colors.

Color sets are plain ``int`` bitmasks (bit ``c`` set when color ``c`` is
used); union is ``|`` and cardinality is ``int.bit_count``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core_model import ColoredDigraph, DigraphError, uncolored


def mask_of(colors) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


def colors_of(mask: int) -> frozenset[int]:
    out = []
    c = 0
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return frozenset(out)


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    colors: frozenset[int]

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def validate(self, D: ColoredDigraph) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        used = set()
        for a, b in zip(vs, vs[1:]):
            c = D.color(a, b)
            if c is None:
                return False
            used.add(c)
        return used == set(self.colors)


def _dominated(seen: list[int], mask: int) -> bool:
    return any(s & ~mask == 0 for s in seen)


def _bounded_search(D: ColoredDigraph, source: int, k: int, target: int | None = None):
    """BFS over (vertex, color set) states seeded at (source, {}).

    States whose color set exceeds ``k`` are dropped, as are states dominated
    by a visited state at the same vertex with a subset of its colors.
    Returns the per-vertex lists of visited masks and, when ``target`` is
    given, the parent chain of the first state reaching it (else None).
    """
    seen: list[list[int]] = [[] for _ in range(D.n)]
    seen[source].append(0)
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    queue = deque([(source, 0)])
    while queue:
        u, mask = queue.popleft()
        for v, c in D.out[u]:
            nmask = mask | (1 << c)
            if nmask.bit_count() > k or _dominated(seen[v], nmask):
                continue
            seen[v].append(nmask)
            parent[(v, nmask)] = (u, mask)
            if v == target:
                path = [v]
                state = (v, nmask)
                while state in parent:
                    state = parent[state]
                    path.append(state[0])
                path.reverse()
                return seen, (tuple(path), nmask)
            queue.append((v, nmask))
    return seen, None


def min_colors_path(D: ColoredDigraph, u: int, v: int, k_max: int):
    """Fewest colors over all ``u -> v`` paths, if at most ``k_max``.

    Returns ``(j, PathWitness)`` or ``None``.  Bounds are tried in increasing
    order so the witness is the first BFS hit at the minimal bound.
    """
    D.check_vertex(u)
    D.check_vertex(v)
    if u == v:
        raise DigraphError("min_colors_path needs distinct endpoints")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    for j in range(1, min(k_max, D.m) + 1):
        _, hit = _bounded_search(D, u, j, target=v)
        if hit is not None:
            path, mask = hit
            # a dominated-pruned BFS tree never revisits a vertex, so ``path`` is simple
            return mask.bit_count(), PathWitness(path, colors_of(mask))
    return None


def reach_masks(D: ColoredDigraph, k: int) -> list[int]:
    """``reach[u]`` is the bitmask of vertices reachable from ``u`` with at most ``k`` colors."""
    reach = []
    for u in range(D.n):
        seen, _ = _bounded_search(D, u, k)
        mask = 0
        for v, masks in enumerate(seen):
            if v != u and masks:
                mask |= 1 << v
        reach.append(mask)
    return reach


def min_color_matrix(D: ColoredDigraph) -> list[list[int | None]]:
    """Minimum color count for every ordered pair (``None`` when unreachable or on the diagonal)."""
    table: list[list[int | None]] = [[None] * D.n for _ in range(D.n)]
    for u in range(D.n):
        seen, _ = _bounded_search(D, u, D.m)
        for v, masks in enumerate(seen):
            if v != u and masks:
                table[u][v] = min(mk.bit_count() for mk in masks)
    return table


def k_closure(D: ColoredDigraph, k: int) -> ColoredDigraph:
    """The digraph with arc (u, v) iff some u -> v path uses at most ``k`` colors.

    The result carries one vertex per part and the sentinel color 0.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    reach = reach_masks(D, k)
    arcs = [(u, v) for u in range(D.n) for v in range(D.n) if reach[u] >> v & 1]
    return uncolored(D.n, arcs)


def distance(D: ColoredDigraph, u: int, v: int) -> int | None:
    D.check_vertex(u)
    D.check_vertex(v)
    if u == v:
        raise DigraphError("distance needs distinct endpoints")
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, _ in D.out[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def _distances_from(D: ColoredDigraph, u: int) -> list[int | None]:
    dist: list[int | None] = [None] * D.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, _ in D.out[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class WrongPartCount(DigraphError):
    def __init__(self, variant: str, r: int):
        super().__init__(f"variant {variant} does not apply to a digraph with {r} parts")
        self.variant = variant
        self.r = r


# variant -> (forward color bound, reverse color bound, distance bound, bipartite only)
LEMMA_VARIANTS: dict[str, tuple[int, int, int, bool]] = {
    "L1": (4, 4, 2, False),
    "L2_k2": (2, 2, 4, False),
    "L2_k3": (3, 3, 4, False),
    "L3": (3, 3, 2, False),
    "L4": (2, 2, 2, False),
    "L5_k2": (2, 2, 2, True),
    "L5_k3": (3, 3, 2, True),
}


def check_distance_lemma(D: ColoredDigraph, variant: str) -> list[tuple[int, int]]:
    """Ordered pairs where the lemma's reachability antecedent holds but the distance bound fails.

    The antecedent for ``(x, y)``: some ``x -> y`` path with at most ``k``
    colors, and no ``y -> x`` path with at most the reverse bound.  Coloring
    hypotheses are the caller's business.
    """
    try:
        k, back, bound, bipartite = LEMMA_VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown lemma variant {variant!r}") from None
    r = len(D.parts)
    if (bipartite and r != 2) or (not bipartite and r < 3):
        raise WrongPartCount(variant, r)

    forward = reach_masks(D, k)
    backward = forward if back == k else reach_masks(D, back)
    violations = []
    for x in range(D.n):
        if not forward[x]:
            continue
        dist = _distances_from(D, x)
        for y in range(D.n):
            if forward[x] >> y & 1 and not backward[y] >> x & 1 and dist[y] > bound:
                violations.append((x, y))
    return violations
