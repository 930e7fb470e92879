"""Simple graphs, line graphs of multigraphs, and the edge/vertex bridge."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, TextIO

from .driver import edge_colour_optimal_local
from .errors import ColouringError, ParseError
from .multigraph import Multigraph, _ints, _parse_mgraph, local_edge_bound
from .oracle import OracleGuard, local_vertex_bound_bf, max_clique_containing


class SimpleGraph:
    """Undirected graph on ``0..n-1`` without loops or parallel edges."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def from_adjacency(cls, adj: Iterable[Iterable[int]]) -> "SimpleGraph":
        rows = [set(a) for a in adj]
        g = cls(len(rows))
        for u, row in enumerate(rows):
            for v in row:
                g.add_edge(u, v)
        return g

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range 0..{self.n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        self.adj[u].add(v)
        self.adj[v].add(u)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(b in self.adj[a] for i, a in enumerate(vs) for b in vs[i + 1:])

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


def check_vertex_colouring(h: SimpleGraph, colour: Mapping[int, int] | list[int]) -> str | None:
    """``None`` when ``colour`` is a proper colouring of every vertex, else the first problem."""
    get = colour.get if isinstance(colour, Mapping) else (lambda v: colour[v] if v < len(colour) else None)
    for v in range(h.n):
        if not get(v) or get(v) < 1:
            return f"vertex {v} is uncoloured"
    for u, v in h.edges():
        if get(u) == get(v):
            return f"adjacent vertices {u} and {v} share colour {get(u)}"
    return None


# ---------------------------------------------------------------- text format

def read_simple_graph(f: TextIO | str) -> SimpleGraph:
    text = f if isinstance(f, str) else f.read()
    n, edges = _parse_mgraph(enumerate(text.splitlines(), 1), header_kind="graph")
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"parallel edge {u} {v} in a simple graph")
        seen.add(key)
    return SimpleGraph(n, edges)


def format_simple_graph(h: SimpleGraph) -> str:
    es = h.edges()
    return "\n".join([f"p graph {h.n} {len(es)}"] + [f"e {u} {v}" for u, v in es]) + "\n"


def format_vertex_colouring(colour: Mapping[int, int] | list[int]) -> str:
    items = sorted(colour.items()) if isinstance(colour, Mapping) else enumerate(colour)
    return "".join(f"v {v} {c}\n" for v, c in items)


def read_vertex_colouring(f: TextIO | str) -> dict[int, int]:
    text = f if isinstance(f, str) else f.read()
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] != "v" or len(parts) != 3:
            raise ParseError("expected 'v <vertex> <colour>'", lineno)
        v, col = _ints(parts[1:], lineno)
        if v in out:
            raise ParseError(f"vertex {v} listed twice", lineno)
        out[v] = col
    return out


# ----------------------------------------------------------------- line graphs

def line_graph(g: Multigraph) -> SimpleGraph:
    """Vertex ``e`` of the result is edge ``e`` of ``g``."""
    h = SimpleGraph(g.m)
    for x in range(g.n):
        inc = [e for _, e in g.adj[x]]
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                h.adj[a].add(b)
                h.adj[b].add(a)
    return h


@dataclass
class LineCorrespondence:
    mismatches: list[str] = field(default_factory=list)
    gamma_edge: int = 0
    gamma_vertex: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_line_correspondence(g: Multigraph, guard: OracleGuard | None = None) -> LineCorrespondence:
    """Compare degrees, cliques and local bounds of ``L(g)`` with their multigraph formulas.

    Clique sizes and the vertex bound of ``L(g)`` come from the exhaustive
    oracle, so the guard applies to ``L(g)``, which has ``m`` vertices.
    """
    h = line_graph(g)
    report = LineCorrespondence()
    for e, (u, v) in enumerate(g.edges):
        mu = g.multiplicity(u, v)
        want = g.deg[u] + g.deg[v] - mu - 1
        if h.degree(e) != want:
            report.mismatches.append(f"edge {e}: line-graph degree {h.degree(e)}, formula {want}")
        omega = max_clique_containing(h, e, guard)
        want = max(g.deg[u], g.deg[v], g.triangle_weight(u, v))
        if omega != want:
            report.mismatches.append(f"edge {e}: clique size {omega}, formula {want}")
    report.gamma_edge = local_edge_bound(g).gamma
    report.gamma_vertex = local_vertex_bound_bf(h, guard) if g.m else 0
    if report.gamma_edge != report.gamma_vertex:
        report.mismatches.append(
            f"local bounds differ: multigraph {report.gamma_edge}, line graph {report.gamma_vertex}"
        )
    return report


def vertex_colour_line_graph(g: Multigraph) -> list[int]:
    """Colour ``L(g)`` by edge-colouring ``g``; entry ``e`` is the colour of line vertex ``e``."""
    if g.m == 0:
        return []
    c, _ = edge_colour_optimal_local(g)
    if not c.is_complete():
        raise ColouringError("edge colouring left an edge uncoloured")
    return list(c.colour)
