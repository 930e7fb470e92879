"""Incremental edge colouring within the local bound.

:func:`extend_one_edge` colours one more edge given a colouring of everything
else, walking a chain of overlapping size-2 fans when no single fan resolves.
:func:`edge_colour` inserts edges one at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .colouring import PartialEdgeColouring, Tracer
from .errors import InfeasiblePalette, InvariantViolation
from .fans import (
    Fan,
    assert_resolvable_by_size,
    build_maximal_fan,
    current_degree,
    fan_degree,
    resolve_fan,
)
from .multigraph import EdgeBoundReport, Multigraph, local_edge_bound


@dataclass
class FanChain:
    """Record of one fan-chain walk, kept for tests and tracing."""

    vertices: list[int] = field(default_factory=list)
    edges: list[int] = field(default_factory=list)
    alphas: list[int] = field(default_factory=list)
    closed: bool = False
    outcome: str = ""

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass
class ExtendStats:
    """Counts how each insertion finished; filled by :func:`edge_colour`."""

    outcomes: dict[str, int] = field(default_factory=dict)
    longest_chain: int = 0
    cycles: int = 0

    def add(self, chain: FanChain) -> None:
        self.outcomes[chain.outcome] = self.outcomes.get(chain.outcome, 0) + 1
        self.longest_chain = max(self.longest_chain, chain.length)
        if chain.closed:
            self.cycles += 1


def _pick_hinge(c: PartialEdgeColouring, e0: int) -> tuple[int, int]:
    """Return ``(v0, v1)`` with ``v1`` the hinge: larger degree, ties to smaller id."""
    a, b = c.g.edges[e0]
    da, db = current_degree(c, a, e0), current_degree(c, b, e0)
    if da > db or (da == db and a < b):
        return b, a
    return a, b


def _resolve_or_size(c, fan: Fan, k, gamma, chain: FanChain, tag: str) -> bool:
    outcome = resolve_fan(c, fan)
    if outcome.completed:
        chain.outcome = f"{tag}:{outcome.branch}"
        return True
    assert_resolvable_by_size(fan, k, gamma, outcome)
    if k > fan_degree(c, fan):
        raise InvariantViolation("palette exceeds d(F) yet the fan's missing sets are disjoint")
    return False


def extend_one_edge(
    g: Multigraph,
    c: PartialEdgeColouring,
    e0: int,
    k: int | None = None,
    *,
    gamma: int | None = None,
    tracer: Tracer | None = None,
) -> FanChain:
    """Colour ``e0`` given a proper colouring ``c`` of the other present edges.

    ``c`` is modified in place.  Uncoloured edges other than ``e0`` count as
    absent from the graph.  Requires ``k >= gamma``, the local bound of ``g``.
    """
    if c.g is not g:
        raise ValueError("colouring belongs to a different multigraph")
    k = c.k if k is None else k
    if k != c.k:
        raise ValueError(f"palette {k} differs from the colouring's palette {c.k}")
    if gamma is None:
        gamma = local_edge_bound(g).gamma
    if k < gamma:
        raise InfeasiblePalette(f"palette {k} is below the local bound {gamma}")
    if c.colour[e0]:
        raise ValueError(f"edge {e0} is already coloured")
    if tracer is not None:
        c.tracer = tracer
    try:
        return _extend(c, e0, k, gamma)
    finally:
        if tracer is not None:
            c.tracer = None


def _extend(c: PartialEdgeColouring, e0: int, k: int, gamma: int) -> FanChain:
    g = c.g
    table = c.table
    v0, v1 = _pick_hinge(c, e0)
    chain = FanChain(vertices=[v0, v1], edges=[e0])
    position = {v0: 0, v1: 1}
    i = 0
    while True:
        fan = build_maximal_fan(c, chain.edges[i], chain.vertices[i + 1])
        if _resolve_or_size(c, fan, k, gamma, chain, "fan" if i == 0 else "chain"):
            return chain
        # size-2 maximal fan whose three missing sets are pairwise disjoint
        vi, hinge, nxt = chain.vertices[i], chain.vertices[i + 1], fan.seq[1]
        if i < 2:
            alpha = c.missing_colours(vi)[0]
        else:
            alpha = chain.alphas[i - 2]
            if not c.is_missing(vi, alpha):
                raise InvariantViolation(f"alternating colour {alpha} not missing at chain vertex {vi}")
        e_next = table[hinge][alpha]
        if e_next < 0 or g.other(e_next, hinge) != nxt:
            raise InvariantViolation("alternating colour does not lead to the second fan vertex")
        chain.alphas.append(alpha)
        if nxt in position:
            j = i + 2
            if position[nxt] != 0 or j % 2 == 0:
                raise InvariantViolation(
                    f"fan chain closed at position {position[nxt]} with length {j}; expected v0 and odd"
                )
            chain.edges.append(e_next)
            chain.closed = True
            return _close_cycle(c, chain, k, gamma)
        c.unassign(e_next)
        c.assign(chain.edges[i], alpha)
        c.emit("shift", (chain.edges[i], e_next), (alpha,))
        chain.vertices.append(nxt)
        chain.edges.append(e_next)
        position[nxt] = len(chain.vertices) - 1
        i += 1


def _set_state(c: PartialEdgeColouring, chain: FanChain, i: int) -> None:
    """Recolour the cycle edges into the i-th colouring of the walk.

    In that colouring edge ``e_m`` carries ``alpha_m`` for ``m < i``, is
    uncoloured for ``m == i`` and carries ``alpha_{m-1}`` for ``m > i``.
    """
    a0, a1 = chain.alphas[0], chain.alphas[1]
    for e in chain.edges:
        c.unassign(e)
    for m, e in enumerate(chain.edges):
        if m < i:
            c.assign(e, a0 if m % 2 == 0 else a1)
        elif m > i:
            c.assign(e, a0 if (m - 1) % 2 == 0 else a1)


def _close_cycle(c: PartialEdgeColouring, chain: FanChain, k: int, gamma: int) -> FanChain:
    g = c.g
    verts, edges = chain.vertices, chain.edges
    j = len(edges)
    a0, a1 = chain.alphas[0], chain.alphas[1]

    # last fan of the cycle, F_{j-1}, hinged at v0
    _set_state(c, chain, j - 1)
    fan = build_maximal_fan(c, edges[j - 1], verts[0])
    if _resolve_or_size(c, fan, k, gamma, chain, "cycle-fan"):
        return chain
    if fan.seq[1] != verts[1]:
        raise InvariantViolation("last fan of the cycle does not return to v1")

    # colours other than the alternating pair have the same missing sets in
    # every colouring of the walk
    table = c.table
    missing = [[col for col in c.missing_colours(x) if col != a0 and col != a1] for x in verts]

    for i in range(j):
        nxt = verts[(i + 1) % j]
        for beta in missing[i]:
            if table[nxt][beta] < 0:
                _set_state(c, chain, i)
                c.assign(edges[i], beta)
                c.emit("assign", (edges[i],), (beta,))
                chain.outcome = "cycle:consecutive"
                return chain

    if j >= 5:
        for i in range(j):
            hinge = verts[(i + 1) % j]
            far = verts[(i + 2) % j]
            third = verts[(i + 3) % j]
            for beta in missing[i]:
                if table[third][beta] >= 0:
                    continue
                e_beta = table[hinge][beta]
                if e_beta < 0 or g.other(e_beta, hinge) != far:
                    raise InvariantViolation("maximal size-2 fan left a missing colour outside the fan")
                _set_state(c, chain, i)
                e2 = edges[(i + 2) % j]
                col2 = c.colour[e2]
                if not c.is_missing(hinge, col2):
                    raise InvariantViolation("two-edge swap colour is present at the hinge")
                c.unassign(e_beta)
                c.unassign(e2)
                c.assign(e2, beta)
                c.assign(e_beta, col2)
                c.assign(edges[i], beta)
                c.emit("swap2", (e_beta, e2, edges[i]), (col2, beta, beta))
                chain.outcome = "cycle:swap"
                return chain

    raise InvariantViolation(f"odd fan cycle of length {j} admits no extension")


def edge_colour(
    g: Multigraph,
    k: int | None = None,
    order: Sequence[int] | None = None,
    *,
    tracer: Tracer | None = None,
    stats: ExtendStats | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> PartialEdgeColouring:
    """Colour every edge of ``g`` with colours ``1..k`` by inserting edges in ``order``."""
    report = local_edge_bound(g)
    if k is None:
        k = report.gamma
    if k < report.gamma:
        raise InfeasiblePalette(f"palette {k} is below the local bound {report.gamma}")
    if order is None:
        order = range(g.m)
    order = list(order)
    if sorted(order) != list(range(g.m)):
        raise ValueError("insertion order must be a permutation of the edge ids")
    c = PartialEdgeColouring(g, k)
    c.tracer = tracer
    for step, e in enumerate(order):
        chain = _extend(c, e, k, report.gamma)
        if stats is not None:
            stats.add(chain)
        if progress is not None:
            progress(step + 1, g.m)
    c.tracer = None
    return c


def random_order(m: int, seed: int) -> list[int]:
    order = list(range(m))
    random.Random(seed).shuffle(order)
    return order


def edge_colour_optimal_local(g: Multigraph, **kwargs) -> tuple[PartialEdgeColouring, EdgeBoundReport]:
    report = local_edge_bound(g)
    return edge_colour(g, report.gamma, **kwargs), report
