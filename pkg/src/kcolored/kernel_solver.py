"""Kernels of plain digraphs and k-colored kernels through the closure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .chroma_paths import k_closure, reach_masks
from .core_model import ColoredDigraph

DEFAULT_CAP = 24


class TooLarge(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"{n} vertices exceeds the solver cap of {cap}")
        self.n = n
        self.cap = cap


class CertificationError(AssertionError):
    """A kernel found on the closure failed direct re-certification on the colored digraph."""


class Violation(NamedTuple):
    kind: str  # "empty", "not_independent" or "not_absorbed"
    vertices: tuple[int, ...]


class Verdict(NamedTuple):
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class KernelResult:
    """Either ``kernel`` is set, or the search proved there is none."""

    kernel: frozenset[int] | None
    exhaustive: bool
    search_nodes: int

    @property
    def found(self) -> bool:
        return self.kernel is not None

    def describe(self) -> str:
        if self.found:
            return "Found({%s})" % ", ".join(map(str, sorted(self.kernel)))
        return "NoneExists(exhaustive=%s)" % self.exhaustive

    def to_dict(self) -> dict:
        return {
            "outcome": "found" if self.found else "none",
            "kernel": sorted(self.kernel) if self.found else None,
            "exhaustive": self.exhaustive,
            "search_nodes": self.search_nodes,
        }


def _check_kernel(n: int, succ: Iterable[int], K: Iterable[int]) -> Verdict:
    succ = list(succ)
    K = sorted(set(K))
    if not K:
        return Verdict(False, Violation("empty", ()))
    kmask = 0
    for v in K:
        kmask |= 1 << v
    for u in K:
        hit = succ[u] & kmask
        if hit:
            v = (hit & -hit).bit_length() - 1
            return Verdict(False, Violation("not_independent", (u, v)))
    for u in range(n):
        if not kmask >> u & 1 and not succ[u] & kmask:
            return Verdict(False, Violation("not_absorbed", (u,)))
    return Verdict(True)


def is_kernel(G: ColoredDigraph, K: Iterable[int]) -> Verdict:
    K = list(K)
    for v in K:
        G.check_vertex(v)
    return _check_kernel(G.n, G.succ, K)


def find_kernel(G: ColoredDigraph, cap: int = DEFAULT_CAP) -> KernelResult:
    """Exact backtracking search for the lexicographically smallest kernel.

    Vertices are decided in ascending order, trying "in" before "out", so the
    first kernel met is the smallest by sorted vertex tuple.
    """
    n = G.n
    if n > cap:
        raise TooLarge(n, cap)
    if n == 0:
        return KernelResult(None, True, 0)
    succ = G.succ
    nbr = [G.succ[v] | G.pred[v] for v in range(n)]
    full = (1 << n) - 1
    nodes = 0

    def feasible(v: int, inset: int, avail: int) -> bool:
        # every vertex already placed outside K must keep a possible absorber
        targets = inset | avail
        out = ((1 << v) - 1) & ~inset
        while out:
            low = out & -out
            if not succ[low.bit_length() - 1] & targets:
                return False
            out ^= low
        return True

    def search(v: int, inset: int, blocked: int) -> int | None:
        nonlocal nodes
        nodes += 1
        if v == n:
            return inset if inset else None
        avail = full & ~((1 << v) - 1) & ~blocked
        bit = 1 << v
        if avail & bit:
            new_in = inset | bit
            new_blocked = blocked | nbr[v]
            new_avail = full & ~((bit << 1) - 1) & ~new_blocked
            if feasible(v + 1, new_in, new_avail):
                found = search(v + 1, new_in, new_blocked)
                if found is not None:
                    return found
        new_avail = avail & ~bit
        if feasible(v + 1, inset, new_avail):
            return search(v + 1, inset, blocked)
        return None

    found = search(0, 0, 0)
    if found is None:
        return KernelResult(None, True, nodes)
    kernel = frozenset(v for v in range(n) if found >> v & 1)
    return KernelResult(kernel, False, nodes)


def duchet_condition(G: ColoredDigraph) -> tuple[bool, tuple[int, ...] | None]:
    """Whether every directed cycle has a symmetric arc.

    Equivalent to acyclicity of the asymmetric arcs.  On failure the second
    item is a cycle of asymmetric arcs ``(v0, ..., v0)`` found by iterative
    DFS in ascending vertex order.
    """
    n = G.n
    asym = [[w for w, _ in G.out[v] if not G.pred[v] >> w & 1] for v in range(n)]
    WHITE, GREY, BLACK = 0, 1, 2
    state = [WHITE] * n
    for root in range(n):
        if state[root] != WHITE:
            continue
        stack = [(root, iter(asym[root]))]
        path = [root]
        state[root] = GREY
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                path.pop()
                state[v] = BLACK
            elif state[w] == GREY:
                start = path.index(w)
                return False, tuple(path[start:]) + (w,)
            elif state[w] == WHITE:
                state[w] = GREY
                path.append(w)
                stack.append((w, iter(asym[w])))
    return True, None


def is_k_colored_kernel(D: ColoredDigraph, K: Iterable[int], k: int) -> Verdict:
    """Check k-colored independence and absorbency directly on ``D``."""
    K = list(K)
    for v in K:
        D.check_vertex(v)
    return _check_kernel(D.n, reach_masks(D, k), K)


def find_k_colored_kernel(D: ColoredDigraph, k: int, cap: int = DEFAULT_CAP) -> KernelResult:
    if k < 1:
        raise ValueError("k must be at least 1")
    if D.n > cap:
        raise TooLarge(D.n, cap)
    result = find_kernel(k_closure(D, k), cap=cap)
    if result.found:
        verdict = is_k_colored_kernel(D, result.kernel, k)
        if not verdict:
            raise CertificationError(f"closure kernel {sorted(result.kernel)} rejected on D: {verdict.violation}")
    return result
