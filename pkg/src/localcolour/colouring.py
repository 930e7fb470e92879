"""Partial proper edge colourings with O(1) colour probes and Kempe swaps.

Colours are ``1..k``; ``0`` means uncoloured.  ``table[v][col]`` holds the id
of the edge carrying ``col`` at ``v`` or ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TextIO

from .errors import ColouringError, ParseError
from .multigraph import Multigraph, _ints


@dataclass(frozen=True)
class TraceEvent:
    op: str
    edges: tuple[int, ...]
    colours: tuple[int, ...]

    def format(self) -> str:
        es = ",".join(map(str, self.edges))
        cs = ",".join(map(str, self.colours))
        return f"{self.op} edges={es} colours={cs}"


Tracer = Callable[[TraceEvent], None]


class PartialEdgeColouring:
    """Proper partial edge colouring of a fixed multigraph over palette ``1..k``."""

    def __init__(self, g: Multigraph, k: int):
        if k < 0:
            raise ValueError("palette size must be non-negative")
        self.g = g
        self.k = k
        self.colour = [0] * g.m
        self.table = [[-1] * (k + 1) for _ in range(g.n)]
        # assign/unassign counter, used by the complexity tests
        self.ops = 0
        self.tracer: Tracer | None = None

    def copy(self) -> "PartialEdgeColouring":
        c = PartialEdgeColouring.__new__(PartialEdgeColouring)
        c.g, c.k = self.g, self.k
        c.colour = list(self.colour)
        c.table = [list(row) for row in self.table]
        c.ops = 0
        c.tracer = None
        return c

    def emit(self, op, edges, colours):
        if self.tracer is not None:
            self.tracer(TraceEvent(op, tuple(edges), tuple(colours)))

    # ------------------------------------------------------------- queries

    def is_missing(self, v: int, col: int) -> bool:
        return self.table[v][col] < 0

    def missing_colours(self, v: int) -> list[int]:
        row = self.table[v]
        return [col for col in range(1, self.k + 1) if row[col] < 0]

    def present_colours(self, v: int) -> list[int]:
        row = self.table[v]
        return [col for col in range(1, self.k + 1) if row[col] >= 0]

    def coloured_degree(self, v: int) -> int:
        return sum(1 for x in self.table[v] if x >= 0)

    def edge_at(self, v: int, col: int) -> int:
        return self.table[v][col]

    def uncoloured(self) -> list[int]:
        return [e for e, col in enumerate(self.colour) if col == 0]

    def used_colours(self) -> set[int]:
        return {col for col in self.colour if col}

    def is_complete(self) -> bool:
        return all(self.colour)

    # ------------------------------------------------------------ mutation

    def assign(self, eid: int, col: int) -> None:
        if not 1 <= col <= self.k:
            raise ColouringError(f"colour {col} outside palette 1..{self.k}")
        if self.colour[eid]:
            raise ColouringError(f"edge {eid} is already coloured {self.colour[eid]}")
        u, v = self.g.edges[eid]
        tu, tv = self.table[u], self.table[v]
        if tu[col] >= 0:
            raise ColouringError(f"colour {col} already present at vertex {u} (edge {tu[col]})")
        if tv[col] >= 0:
            raise ColouringError(f"colour {col} already present at vertex {v} (edge {tv[col]})")
        tu[col] = eid
        tv[col] = eid
        self.colour[eid] = col
        self.ops += 1

    def unassign(self, eid: int) -> int:
        col = self.colour[eid]
        if col:
            u, v = self.g.edges[eid]
            self.table[u][col] = -1
            self.table[v][col] = -1
            self.colour[eid] = 0
            self.ops += 1
        return col

    def kempe_component(self, alpha: int, beta: int, start: int) -> list[int]:
        """Edge ids of the alpha/beta component containing ``start``.

        Every vertex has at most one edge of each colour, so the component is
        a path or an even cycle; it is walked iteratively in both directions.
        """
        table = self.table
        other = self.g.other
        found: list[int] = []
        seen: set[int] = set()
        for first in (alpha, beta):
            e = table[start][first]
            v = start
            col = first
            while e >= 0 and e not in seen:
                seen.add(e)
                found.append(e)
                v = other(e, v)
                col = beta if col == alpha else alpha
                e = table[v][col]
        return found

    def kempe_swap(self, alpha: int, beta: int, start: int) -> list[int]:
        """Exchange alpha and beta on the component of ``start``; return the edges touched."""
        if alpha == beta:
            raise ValueError("kempe_swap needs two distinct colours")
        comp = self.kempe_component(alpha, beta, start)
        new = [beta if self.colour[e] == alpha else alpha for e in comp]
        for e in comp:
            self.unassign(e)
        for e, col in zip(comp, new):
            self.assign(e, col)
        if comp:
            self.emit("kempe", comp, (alpha, beta))
        return comp

    # ---------------------------------------------------------- validation

    def validate(self) -> str | None:
        """Full rescan. Returns ``None`` when consistent, else a description."""
        g, k = self.g, self.k
        seen: list[dict[int, int]] = [{} for _ in range(g.n)]
        for eid, col in enumerate(self.colour):
            if col == 0:
                continue
            if not 1 <= col <= k:
                return f"edge {eid} has colour {col} outside 1..{k}"
            for x in g.edges[eid]:
                prev = seen[x].get(col)
                if prev is not None:
                    return f"vertex {x}: edges {prev} and {eid} both coloured {col}"
                seen[x][col] = eid
        for v in range(g.n):
            row = self.table[v]
            for col in range(1, k + 1):
                want = seen[v].get(col, -1)
                if row[col] != want:
                    return f"vertex {v}: index says colour {col} on edge {row[col]}, assignment says {want}"
        return None


def missing_colours(c: PartialEdgeColouring, v: int) -> set[int]:
    return set(c.missing_colours(v))


def kempe_swap(c: PartialEdgeColouring, alpha: int, beta: int, start: int) -> list[int]:
    return c.kempe_swap(alpha, beta, start)


def validate(c: PartialEdgeColouring) -> str | None:
    return c.validate()


def from_assignment(g: Multigraph, k: int, colours) -> PartialEdgeColouring:
    """Build a colouring from a per-edge list (0 = uncoloured); raises if improper."""
    c = PartialEdgeColouring(g, k)
    if len(colours) != g.m:
        raise ColouringError(f"expected {g.m} colours, got {len(colours)}")
    for eid, col in enumerate(colours):
        if col:
            c.assign(eid, col)
    c.ops = 0
    return c


# ---------------------------------------------------------------- text format

def format_colouring(c: PartialEdgeColouring) -> str:
    out = [f"s colouring {c.k}"]
    out.extend(f"l {eid} {col}" for eid, col in enumerate(c.colour))
    return "\n".join(out) + "\n"


def read_colouring(g: Multigraph, f: TextIO | str) -> PartialEdgeColouring:
    text = f if isinstance(f, str) else f.read()
    k = None
    colours: list[int | None] = [None] * g.m
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "s":
            if len(parts) != 3 or parts[1] != "colouring":
                raise ParseError("expected 's colouring <k>'", lineno)
            (k,) = _ints(parts[2:], lineno)
        elif parts[0] == "l":
            if k is None:
                raise ParseError("colour line before header", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'l <edge-id> <colour>'", lineno)
            eid, col = _ints(parts[1:], lineno)
            if not 0 <= eid < g.m:
                raise ParseError(f"edge id {eid} out of range", lineno)
            if not 0 <= col <= k:
                raise ParseError(f"colour {col} outside 0..{k}", lineno)
            if colours[eid] is not None:
                raise ParseError(f"edge {eid} listed twice", lineno)
            colours[eid] = col
        else:
            raise ParseError(f"unknown record {parts[0]!r}", lineno)
    if k is None:
        raise ParseError("missing header")
    try:
        return from_assignment(g, k, [col or 0 for col in colours])
    except ColouringError as exc:
        raise ParseError(f"improper colouring: {exc}") from None
