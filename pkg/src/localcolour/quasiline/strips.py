"""Compositions of linear interval strips over a pattern digraph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..errors import StructureError
from ..linegraph import SimpleGraph
from .graphs import Adj
from .intervals import LinearIntervalGraph


@dataclass
class Strip:
    """A linear interval graph with end-cliques of the given sizes.

    ``X`` is the ``x`` leftmost vertices and ``Y`` the ``y`` rightmost ones.
    """

    graph: LinearIntervalGraph
    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise StructureError("strip end-cliques must be nonempty")
        self.graph.left_clique(self.x)
        self.graph.right_clique(self.y)

    @property
    def X(self) -> list[int]:
        return self.graph.ids[: self.x]

    @property
    def Y(self) -> list[int]:
        return self.graph.ids[len(self.graph) - self.y:]

    @property
    def vertices(self) -> list[int]:
        return list(self.graph.ids)

    def is_trivial(self) -> bool:
        """A single vertex forming both end-cliques: it behaves like one edge of a line graph."""
        return len(self.graph) == 1


@dataclass
class StripComposition:
    """Pattern digraph on ``0..h-1`` with one strip per arc ``(tail, head)``.

    Strip vertex ids are global and must partition ``0..N-1``.
    """

    h: int
    arcs: list[tuple[int, int]]
    strips: list[Strip] = field(default_factory=list)

    def __post_init__(self):
        if len(self.arcs) != len(self.strips):
            raise StructureError("need exactly one strip per pattern arc")
        for a, b in self.arcs:
            if not (0 <= a < self.h and 0 <= b < self.h):
                raise StructureError(f"pattern arc ({a}, {b}) out of range")
        ids = [v for s in self.strips for v in s.vertices]
        if sorted(ids) != list(range(len(ids))):
            raise StructureError("strip vertices must partition 0..N-1")
        self.n = len(ids)

    def hub_cliques(self, arcs: list[int] | None = None) -> list[set[int]]:
        """``C_v`` for each pattern vertex: X-ends of arcs leaving it, Y-ends of arcs entering it."""
        hubs: list[set[int]] = [set() for _ in range(self.h)]
        for i in range(len(self.arcs)) if arcs is None else arcs:
            tail, head = self.arcs[i]
            hubs[tail].update(self.strips[i].X)
            hubs[head].update(self.strips[i].Y)
        return hubs

    def adjacency(self, arcs: list[int] | None = None) -> Adj:
        """Realized graph restricted to the strips of ``arcs`` (default: all)."""
        chosen = range(len(self.arcs)) if arcs is None else arcs
        adj: Adj = {}
        for i in chosen:
            for v, nb in self.strips[i].graph.adjacency().items():
                adj[v] = set(nb)
        for hub in self.hub_cliques(list(chosen)):
            for v in hub:
                adj[v] |= hub - {v}
        return adj

    def realize(self) -> tuple[SimpleGraph, set[int]]:
        """The composed graph and the vertex set of its hub subgraph."""
        adj = self.adjacency()
        g = SimpleGraph(self.n)
        for v, nb in adj.items():
            for w in nb:
                if v < w:
                    g.add_edge(v, w)
        hub_vertices = set().union(*self.hub_cliques()) if self.h else set()
        return g, hub_vertices


def realize(sc: StripComposition) -> tuple[SimpleGraph, set[int]]:
    return sc.realize()


def neighbourhood_cover_problem(adj: Mapping[int, set[int]]) -> str | None:
    """``None`` when every neighbourhood splits into two cliques.

    That holds exactly when the complement of each neighbourhood is
    bipartite, which is tested by 2-colouring it.
    """
    for v in sorted(adj):
        nb = sorted(adj[v])
        side: dict[int, int] = {}
        for s in nb:
            if s in side:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                a = stack.pop()
                for b in nb:
                    if b == a or b in adj[a]:
                        continue
                    if b not in side:
                        side[b] = 1 - side[a]
                        stack.append(b)
                    elif side[b] == side[a]:
                        return f"neighbourhood of {v} is not covered by two cliques"
    return None


def is_quasi_line(g: SimpleGraph | Mapping[int, set[int]]) -> bool:
    adj = {v: set(a) for v, a in enumerate(g.adj)} if isinstance(g, SimpleGraph) else g
    return neighbourhood_cover_problem(adj) is None
