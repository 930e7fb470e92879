"""Loop-free multigraphs and the local edge-colouring bound.

Vertices are ``0..n-1``.  Edges keep their input order; the position of an
edge in :attr:`Multigraph.edges` is its edge id.

The local bound of a multigraph is the maximum over edges ``uv`` of the
ceiling of the largest of

* ``d(u) + (d(v) - mu(uv)) / 2``
* ``d(v) + (d(u) - mu(uv)) / 2``
* ``(d(u) + d(v) - mu(uv) + t(uv)) / 2``

where ``t(uv)`` is the heaviest triangle through ``uv``.  Every term is kept
doubled so the arithmetic stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import LoopError, ParseError


class Multigraph:
    """Immutable loop-free multigraph with an adjacency index."""

    __slots__ = ("n", "edges", "adj", "deg", "_mult", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        es = []
        for i, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} ({u}, {v}) has an endpoint out of range 0..{n - 1}")
            if u == v:
                raise LoopError(f"edge {i} is a loop at vertex {u}")
            es.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(es)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        mult: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(es):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        self.adj = tuple(tuple(a) for a in adj)
        self.deg = tuple(len(a) for a in adj)
        self._mult = mult
        self._nbrs = tuple(frozenset(w for w, _ in a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return self.deg[v]

    def max_degree(self) -> int:
        return max(self.deg, default=0)

    def neighbours(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def pairs(self):
        """Distinct adjacent pairs ``(u, v)`` with ``u < v`` and their multiplicity."""
        return self._mult.items()

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: ({u}, {v})")
        if u == v:
            raise ValueError("multiplicity is only defined for distinct vertices")

    def multiplicity(self, u: int, v: int) -> int:
        self._check_pair(u, v)
        return self._mult.get((u, v) if u < v else (v, u), 0)

    def triangle_weight(self, u: int, v: int) -> int:
        """Max over common neighbours w of mu(uv)+mu(uw)+mu(vw).

        Falls back to mu(uv) when u and v have no common neighbour, which
        keeps the triangle term no larger than the degree terms.
        """
        muv = self.multiplicity(u, v)
        if muv == 0:
            raise ValueError(f"vertices {u} and {v} are not adjacent")
        a, b = self._nbrs[u], self._nbrs[v]
        if len(a) > len(b):
            a, b = b, a
        best = muv
        mult = self._mult
        for w in a:
            if w in b:
                t = muv + mult[(u, w) if u < w else (w, u)] + mult[(v, w) if v < w else (w, v)]
                if t > best:
                    best = t
        return best

    def relabel(self, perm: list[int]) -> "Multigraph":
        """Copy with vertex ``x`` renamed ``perm[x]``; edge order kept."""
        return Multigraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        return Multigraph(self.n, list(self.edges) + list(edges))


# Free-function spellings used across the package and in tests.
def multiplicity(g: Multigraph, u: int, v: int) -> int:
    return g.multiplicity(u, v)


def triangle_weight(g: Multigraph, u: int, v: int) -> int:
    return g.triangle_weight(u, v)


@dataclass
class EdgeBoundReport:
    """Per-edge terms of the local bound, doubled, and the resulting bound."""

    terms: list[tuple[int, int, int]] = field(default_factory=list)
    gamma: int = 0
    argmax: int | None = None

    def term_values(self, eid: int) -> tuple[float, float, float]:
        return tuple(x / 2 for x in self.terms[eid])

    def to_csv(self, g: Multigraph) -> str:
        lines = ["edge,u,v,term_u,term_v,term_t"]
        for eid, (tu, tv, tt) in enumerate(self.terms):
            u, v = g.edges[eid]
            lines.append(f"{eid},{u},{v},{_half(tu)},{_half(tv)},{_half(tt)}")
        return "\n".join(lines) + "\n"


def _half(x: int) -> str:
    return str(x // 2) if x % 2 == 0 else f"{x // 2}.5"


def local_edge_bound(g: Multigraph) -> EdgeBoundReport:
    """Evaluate the local bound. An edgeless graph reports gamma 0."""
    if g.m == 0:
        return EdgeBoundReport()
    deg = g.deg
    per_pair: dict[tuple[int, int], tuple[int, int, int]] = {}
    for (u, v), mu in g.pairs():
        t = g.triangle_weight(u, v)
        du, dv = deg[u], deg[v]
        per_pair[(u, v)] = (2 * du + dv - mu, 2 * dv + du - mu, du + dv - mu + t)
    terms = []
    best, arg = -1, None
    for eid, (u, v) in enumerate(g.edges):
        if u < v:
            tri = per_pair[(u, v)]
        else:
            tv, tu, tt = per_pair[(v, u)]
            tri = (tu, tv, tt)
        terms.append(tri)
        top = max(tri)
        if top > best:
            best, arg = top, eid
    return EdgeBoundReport(terms=terms, gamma=(best + 1) // 2, argmax=arg)


# ---------------------------------------------------------------- text format

def read_multigraph(f: TextIO | str) -> Multigraph:
    """Parse ``p mgraph <n> <m>`` followed by ``e <u> <v>`` lines."""
    text = f if isinstance(f, str) else f.read()
    n, edges = _parse_mgraph(enumerate(text.splitlines(), 1))
    return Multigraph(n, edges)


def _parse_mgraph(numbered, header_kind="mgraph"):
    n = m = None
    edges = []
    for lineno, raw in numbered:
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != header_kind:
                raise ParseError(f"expected 'p {header_kind} <n> <m>'", lineno)
            n, m = _ints(parts[2:], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
            if u == v:
                raise LoopError(f"line {lineno}: loop at vertex {u}")
            edges.append((u, v))
        else:
            raise ParseError(f"unknown record {tag!r}", lineno)
    if n is None:
        raise ParseError("missing header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return n, edges


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def format_multigraph(g: Multigraph) -> str:
    out = [f"p mgraph {g.n} {g.m}"]
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def load_multigraph(path) -> Multigraph:
    with open(path) as fh:
        return read_multigraph(fh.read())


def save_multigraph(g: Multigraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_multigraph(g))
