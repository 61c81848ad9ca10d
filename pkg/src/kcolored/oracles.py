"""Brute-force reference implementations.

These deliberately share nothing with the fast paths: paths come from
permutations of vertex subsets, kernels from subset enumeration, patterns
from raw vertex tuples.  Only for small digraphs.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .core_model import ColoredDigraph


def simple_paths(D: ColoredDigraph, u: int, v: int):
    """Every simple ``u -> v`` path as a vertex tuple."""
    others = [x for x in range(D.n) if x not in (u, v)]
    for size in range(len(others) + 1):
        for middle in permutations(others, size):
            path = (u, *middle, v)
            if all(D.has_arc(a, b) for a, b in zip(path, path[1:])):
                yield path


def path_colors(D: ColoredDigraph, path) -> set[int]:
    return {D.color(a, b) for a, b in zip(path, path[1:])}


def min_colors_brute(D: ColoredDigraph, u: int, v: int) -> int | None:
    best = None
    for path in simple_paths(D, u, v):
        j = len(path_colors(D, path))
        if best is None or j < best:
            best = j
    return best


def closure_brute(D: ColoredDigraph, k: int) -> set[tuple[int, int]]:
    arcs = set()
    for u in range(D.n):
        for v in range(D.n):
            if u == v:
                continue
            best = min_colors_brute(D, u, v)
            if best is not None and best <= k:
                arcs.add((u, v))
    return arcs


def kernels_brute(n: int, arcs) -> list[tuple[int, ...]]:
    """All kernels of the plain digraph ``(range(n), arcs)``, smallest tuple first."""
    arcs = set(arcs)
    found = []
    for size in range(1, n + 1):
        for K in combinations(range(n), size):
            if any((a, b) in arcs for a in K for b in K if a != b):
                continue
            if all(any((x, y) in arcs for y in K) for x in range(n) if x not in K):
                found.append(K)
    return sorted(found)


def first_kernel_brute(n: int, arcs) -> tuple[int, ...] | None:
    ks = kernels_brute(n, arcs)
    return ks[0] if ks else None


def k_colored_kernel_brute(D: ColoredDigraph, k: int) -> tuple[int, ...] | None:
    return first_kernel_brute(D.n, closure_brute(D, k))


def cycles_brute(D: ColoredDigraph, length: int) -> set[tuple[int, ...]]:
    """Directed cycles as canonical rotations (smallest vertex first)."""
    found = set()
    for tup in permutations(range(D.n), length):
        if all(D.has_arc(tup[i], tup[(i + 1) % length]) for i in range(length)):
            i = tup.index(min(tup))
            found.add(tup[i:] + tup[:i])
    return found


def joined_brute(D: ColoredDigraph, kind: str) -> set[frozenset[tuple[int, int]]]:
    """Joined-cycle occurrences identified by their arc sets."""
    found = set()
    if kind == "C3joinC3":
        for a, b, t, s in permutations(range(D.n), 4):
            arcs = [(a, b), (b, t), (t, a), (b, s), (s, a)]
            if all(D.has_arc(*e) for e in arcs):
                found.add(frozenset(arcs))
    elif kind == "C4joinC4":
        for p, q, r, t, s in permutations(range(D.n), 5):
            arcs = [(p, q), (q, r), (r, t), (t, p), (r, s), (s, p)]
            if all(D.has_arc(*e) for e in arcs):
                found.add(frozenset(arcs))
    else:
        raise ValueError(kind)
    return found
