"""Colored digraph model, validation, serialization and structural classification.

Vertices are the integers ``0..n-1``.  Parts are given explicitly, so the
same type also carries closures (one vertex per part) and generic digraphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence


class DigraphError(ValueError):
    """Base class for invalid digraph descriptions."""


class DuplicateArc(DigraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"arc ({u}, {v}) listed more than once")
        self.arc = (u, v)


class IntraPartArc(DigraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"arc ({u}, {v}) joins two vertices of the same part")
        self.arc = (u, v)


class ColorOutOfRange(DigraphError):
    def __init__(self, u: int, v: int, c: int, m: int):
        super().__init__(f"arc ({u}, {v}) has color {c}, outside 0..{m - 1}")
        self.arc = (u, v)
        self.color = c


class PartsNotPartition(DigraphError):
    def __init__(self, detail: str, vertex: int | None = None):
        super().__init__(f"parts do not partition the vertex set: {detail}")
        self.vertex = vertex


class VertexOutOfRange(DigraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside 0..{n - 1}")
        self.vertex = vertex


class ColoredDigraph:
    """Immutable arc-colored digraph with a vertex partition.

    ``arcs`` maps each ordered pair ``(u, v)`` to its color.  Both ``(u, v)``
    and ``(v, u)`` may be present with independent colors.
    """

    __slots__ = ("n", "m", "parts", "_arcs", "part_of", "out", "succ", "pred")

    def __init__(self, n: int, parts: Sequence[Sequence[int]],
                 arcs: Iterable[tuple[int, int, int]], m: int):
        if not isinstance(n, int) or n < 0:
            raise DigraphError(f"vertex count must be a non-negative integer, got {n!r}")
        if not isinstance(m, int) or m < 1:
            raise DigraphError(f"color count must be a positive integer, got {m!r}")

        part_of = [-1] * n
        frozen_parts = []
        for i, part in enumerate(parts):
            if len(part) == 0:
                raise PartsNotPartition(f"part {i} is empty")
            for x in part:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise PartsNotPartition(f"vertex {x!r} in part {i} is out of range", x)
                if part_of[x] != -1:
                    raise PartsNotPartition(f"vertex {x} appears in more than one part", x)
                part_of[x] = i
            frozen_parts.append(tuple(part))
        if -1 in part_of:
            missing = part_of.index(-1)
            raise PartsNotPartition(f"vertex {missing} is in no part", missing)

        arc_map: dict[tuple[int, int], int] = {}
        for u, v, c in arcs:
            for x in (u, v):
                if not isinstance(x, int) or not 0 <= x < n:
                    raise VertexOutOfRange(x, n)
            if (u, v) in arc_map:
                raise DuplicateArc(u, v)
            if part_of[u] == part_of[v]:
                raise IntraPartArc(u, v)
            if not isinstance(c, int) or not 0 <= c < m:
                raise ColorOutOfRange(u, v, c, m)
            arc_map[(u, v)] = c

        out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        succ = [0] * n
        pred = [0] * n
        for (u, v), c in sorted(arc_map.items()):
            out[u].append((v, c))
            succ[u] |= 1 << v
            pred[v] |= 1 << u

        self.n = n
        self.m = m
        self.parts = tuple(frozen_parts)
        self._arcs = dict(sorted(arc_map.items()))
        self.part_of = tuple(part_of)
        # out[u]: (v, color) pairs in ascending v
        self.out = tuple(tuple(o) for o in out)
        self.succ = tuple(succ)
        self.pred = tuple(pred)

    def __setattr__(self, name, value):
        if hasattr(self, "pred"):
            raise AttributeError("ColoredDigraph is immutable")
        object.__setattr__(self, name, value)

    @property
    def arcs(self) -> Mapping[tuple[int, int], int]:
        return dict(self._arcs)

    def arc_list(self) -> list[tuple[int, int, int]]:
        """Arcs as ``(u, v, c)`` triples sorted by ``(u, v)``."""
        return [(u, v, c) for (u, v), c in self._arcs.items()]

    def color(self, u: int, v: int) -> int | None:
        return self._arcs.get((u, v))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def num_arcs(self) -> int:
        return len(self._arcs)

    def colors_used(self) -> set[int]:
        return set(self._arcs.values())

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)

    def with_arcs(self, arcs: Iterable[tuple[int, int, int]], m: int | None = None) -> "ColoredDigraph":
        """Same vertices and parts, new arc set."""
        return ColoredDigraph(self.n, self.parts, arcs, self.m if m is None else m)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "parts": [list(p) for p in self.parts],
            "arcs": [list(a) for a in self.arc_list()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and self.parts == other.parts and self._arcs == other._arcs)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.parts, tuple(self._arcs.items())))

    def __repr__(self) -> str:
        return (f"ColoredDigraph(n={self.n}, m={self.m}, parts={[list(p) for p in self.parts]}, "
                f"arcs={self.arc_list()})")


def build_digraph(raw: Mapping[str, Any]) -> ColoredDigraph:
    """Validate a raw description with keys ``n``, ``m``, ``parts``, ``arcs``."""
    missing = [key for key in ("n", "m", "parts", "arcs") if key not in raw]
    if missing:
        raise DigraphError(f"missing keys: {', '.join(missing)}")
    arcs = []
    for a in raw["arcs"]:
        if len(a) != 3:
            raise DigraphError(f"arc {a!r} is not a [u, v, c] triple")
        arcs.append(tuple(a))
    return ColoredDigraph(raw["n"], raw["parts"], arcs, raw["m"])


def from_json(text: str) -> ColoredDigraph:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DigraphError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DigraphError("digraph file must hold a JSON object")
    return build_digraph(raw)


def uncolored(n: int, arcs: Iterable[tuple[int, int]],
              parts: Sequence[Sequence[int]] | None = None) -> ColoredDigraph:
    """Plain digraph: every arc gets the sentinel color 0, one vertex per part by default."""
    if parts is None:
        parts = [[v] for v in range(n)]
    return ColoredDigraph(n, parts, [(u, v, 0) for u, v in arcs], 1)


@dataclass(frozen=True)
class StructureClass:
    is_semicomplete_multipartite: bool
    is_bipartite: bool
    is_tournament: bool
    r: int


def classify(D: ColoredDigraph) -> StructureClass:
    semicomplete = True
    tournament = True
    for u in range(D.n):
        for v in range(u + 1, D.n):
            if D.part_of[u] == D.part_of[v]:
                continue
            forward, backward = D.has_arc(u, v), D.has_arc(v, u)
            if not (forward or backward):
                semicomplete = False
            if forward and backward:
                tournament = False
    r = len(D.parts)
    return StructureClass(
        is_semicomplete_multipartite=semicomplete,
        is_bipartite=r == 2,
        is_tournament=semicomplete and tournament,
        r=r,
    )


def asymmetric_subdigraph(D: ColoredDigraph) -> ColoredDigraph:
    return D.with_arcs((u, v, c) for u, v, c in D.arc_list() if not D.has_arc(v, u))
