"""Exhaustive ground truth for small instances.

Everything here is exponential.  Each entry point checks an
:class:`OracleGuard` before searching and keeps checking the time budget while
it runs.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .errors import GuardExceeded
from .multigraph import Multigraph


@dataclass(frozen=True)
class OracleGuard:
    max_vertices: int = 8
    max_edges: int = 16
    max_palette: int = 12
    seconds: float = 10.0

    @classmethod
    def from_env(cls, var: str = "LC_ORACLE_GUARD") -> "OracleGuard":
        """Read ``n,m,k,secs`` from the environment, falling back to defaults."""
        raw = os.environ.get(var)
        if not raw:
            return cls()
        parts = raw.split(",")
        if len(parts) != 4:
            raise ValueError(f"{var} must look like n,m,k,secs")
        return cls(int(parts[0]), int(parts[1]), int(parts[2]), float(parts[3]))

    def check_multigraph(self, g: Multigraph, palette: int) -> None:
        if g.n > self.max_vertices:
            raise GuardExceeded(f"{g.n} vertices exceeds guard {self.max_vertices}")
        if g.m > self.max_edges:
            raise GuardExceeded(f"{g.m} edges exceeds guard {self.max_edges}")
        if palette > self.max_palette:
            raise GuardExceeded(f"palette {palette} exceeds guard {self.max_palette}")

    def check_graph(self, n: int) -> None:
        # simple graphs reaching the oracle are mostly line graphs, whose
        # vertices are multigraph edges, so the larger budget applies
        limit = max(self.max_vertices, self.max_edges)
        if n > limit:
            raise GuardExceeded(f"{n} vertices exceeds guard {limit}")


DEFAULT_GUARD = OracleGuard()


class _Clock:
    def __init__(self, seconds):
        self.deadline = time.monotonic() + seconds
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise GuardExceeded("oracle time budget exhausted")


# ------------------------------------------------------------ chromatic index

def chromatic_index_bf(g: Multigraph, guard: OracleGuard | None = None) -> int:
    """Exact chromatic index by backtracking.

    Lower bounds: max degree, and edges / (largest matching size), since a
    colour class is a matching on at most ``floor(n'/2)`` pairs.  The upper
    end of the search is the smaller of Vizing's ``D + mu`` and Shannon's
    ``floor(3D/2)``.
    """
    guard = guard or DEFAULT_GUARD
    if g.m == 0:
        return 0
    delta = g.max_degree()
    mu = max(mult for _, mult in g.pairs())
    upper = min(delta + mu, (3 * delta) // 2)
    guard.check_multigraph(g, 0)
    active = sum(1 for d in g.deg if d)
    per_class = active // 2
    lower = max(delta, -(-g.m // per_class))
    clock = _Clock(guard.seconds)
    for k in range(lower, upper + 1):
        if k > guard.max_palette:
            raise GuardExceeded(f"palette {k} exceeds guard {guard.max_palette}")
        if _edge_colourable(g, k, per_class, clock) is not None:
            return k
    raise AssertionError("no colouring found up to the Vizing/Shannon bound")


def edge_colouring_bf(g: Multigraph, k: int, guard: OracleGuard | None = None) -> list[int] | None:
    """A proper k-edge-colouring as a per-edge list, or None if none exists."""
    guard = guard or DEFAULT_GUARD
    guard.check_multigraph(g, k)
    if g.m == 0:
        return []
    active = sum(1 for d in g.deg if d)
    return _edge_colourable(g, k, active // 2, _Clock(guard.seconds))


def _edge_colourable(g: Multigraph, k: int, per_class: int, clock: _Clock) -> list[int] | None:
    m = g.m
    if m > k * per_class:
        return None
    ends = g.edges
    conflict = [g.deg[u] + g.deg[v] - g.multiplicity(u, v) - 1 for u, v in ends]
    # edges at one max-degree vertex get distinct colours 1..d up front
    hub = max(range(g.n), key=lambda x: (g.deg[x], -x))
    hub_edges = [e for _, e in g.adj[hub]]
    rest = sorted((e for e in range(m) if e not in set(hub_edges)), key=lambda e: (-conflict[e], e))
    order = hub_edges + rest
    # neighbouring edges of each edge, for forward checking
    inc = [[e for _, e in g.adj[x]] for x in range(g.n)]
    used = [0] * g.n  # bitmask of colours at each vertex
    colour = [0] * m
    size = [0] * (k + 1)
    full = (1 << (k + 1)) - 2

    for pos, e in enumerate(hub_edges):
        col = pos + 1
        u, v = ends[e]
        if used[u] >> col & 1 or used[v] >> col & 1:
            return None
        colour[e] = col
        used[u] |= 1 << col
        used[v] |= 1 << col
        size[col] += 1

    def forward_ok(e):
        u, v = ends[e]
        for x in (u, v):
            for f in inc[x]:
                if not colour[f]:
                    a, b = ends[f]
                    if (used[a] | used[b]) & full == full:
                        return False
        return True

    start = len(hub_edges)

    def rec(i, top):
        clock.tick()
        if i == m:
            return True
        # every remaining edge needs a slot in some colour class
        slack = sum(per_class - size[col] for col in range(1, k + 1))
        if slack < m - i:
            return False
        e = order[i]
        u, v = ends[e]
        busy = used[u] | used[v]
        for col in range(1, min(top + 1, k) + 1):
            if busy >> col & 1 or size[col] >= per_class:
                continue
            colour[e] = col
            used[u] |= 1 << col
            used[v] |= 1 << col
            size[col] += 1
            if forward_ok(e) and rec(i + 1, max(top, col)):
                return True
            colour[e] = 0
            used[u] &= ~(1 << col)
            used[v] &= ~(1 << col)
            size[col] -= 1
        return False

    if rec(start, len(hub_edges)):
        return colour
    return None


# ----------------------------------------------------------- simple graphs

def _adjacency(h):
    """Accept a SimpleGraph-like object (``n`` and ``adj``) or a list of neighbour sets."""
    if hasattr(h, "adj"):
        return h.n, [set(a) for a in h.adj]
    return len(h), [set(a) for a in h]


def _max_clique_in(cands: set[int], adj: list[set[int]], clock: _Clock) -> int:
    best = 0

    def expand(size, pool):
        nonlocal best
        clock.tick()
        if not pool:
            best = max(best, size)
            return
        if size + len(pool) <= best:
            return
        for x in sorted(pool):
            if size + len(pool) <= best:
                return
            expand(size + 1, pool & adj[x])
            pool = pool - {x}

    expand(0, set(cands))
    return best


def max_clique_containing(h, v: int, guard: OracleGuard | None = None) -> int:
    guard = guard or DEFAULT_GUARD
    n, adj = _adjacency(h)
    guard.check_graph(n)
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range")
    return 1 + _max_clique_in(adj[v], adj, _Clock(guard.seconds))


def clique_number_bf(h, guard: OracleGuard | None = None) -> int:
    guard = guard or DEFAULT_GUARD
    n, adj = _adjacency(h)
    guard.check_graph(n)
    return _max_clique_in(set(range(n)), adj, _Clock(guard.seconds))


def chromatic_number_bf(h, guard: OracleGuard | None = None) -> int:
    """Exact chromatic number: try k = clique number, k+1, ... with backtracking."""
    guard = guard or DEFAULT_GUARD
    n, adj = _adjacency(h)
    guard.check_graph(n)
    if n == 0:
        return 0
    clock = _Clock(guard.seconds)
    lower = _max_clique_in(set(range(n)), adj, clock)
    order = sorted(range(n), key=lambda x: (-len(adj[x]), x))
    for k in range(max(lower, 1), n + 1):
        if _vertex_colourable(order, adj, k, clock):
            return k
    return n


def _vertex_colourable(order, adj, k, clock) -> bool:
    col = {}

    def rec(i, top):
        clock.tick()
        if i == len(order):
            return True
        x = order[i]
        taken = {col[y] for y in adj[x] if y in col}
        for c in range(1, min(top + 1, k) + 1):
            if c not in taken:
                col[x] = c
                if rec(i + 1, max(top, c)):
                    return True
                del col[x]
        return False

    return rec(0, 0)


def local_vertex_bound_bf(h, guard: OracleGuard | None = None) -> int:
    """max over vertices of ceil((deg + 1 + largest clique through it) / 2)."""
    guard = guard or DEFAULT_GUARD
    n, adj = _adjacency(h)
    guard.check_graph(n)
    clock = _Clock(guard.seconds)
    best = 0
    for v in range(n):
        omega = 1 + _max_clique_in(adj[v], adj, clock)
        best = max(best, (len(adj[v]) + 1 + omega + 1) // 2)
    return best
