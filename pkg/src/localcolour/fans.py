"""Generalised Vizing fans over a partial edge colouring.

A fan hinged at ``v`` starts from the uncoloured edge ``e0 = v v1`` and lists
distinct neighbours ``v1..vl`` of ``v``.  Every later vertex ``vj`` carries a
witness edge ``v vj`` whose colour is missing at an earlier fan vertex
``v_f(j)``.  Indices below are 0-based, so ``seq[0]`` is ``v1``.

The graph being coloured is the set of coloured edges plus ``e0``; any other
uncoloured edge of the host multigraph is treated as absent.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .colouring import PartialEdgeColouring
from .errors import InvariantViolation


@dataclass
class Fan:
    hinge: int
    e0: int
    seq: list[int] = field(default_factory=list)
    witness: list[int] = field(default_factory=list)
    back: list[int | None] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.seq)

    def chain(self, j: int) -> list[int]:
        """Indices ``j, f(j), f(f(j)), ..., 0``."""
        out = [j]
        while j:
            j = self.back[j]
            out.append(j)
        return out

    def check(self, c: PartialEdgeColouring) -> None:
        """Raise InvariantViolation unless this is a fan for ``c``."""
        g = c.g
        v = self.hinge
        if c.colour[self.e0] or v not in g.edges[self.e0]:
            raise InvariantViolation("fan base edge must be uncoloured and incident to the hinge")
        if not self.seq or g.other(self.e0, v) != self.seq[0]:
            raise InvariantViolation("first fan vertex must be the far end of the base edge")
        if len(set(self.seq)) != len(self.seq):
            raise InvariantViolation("fan vertices repeat")
        for j in range(1, len(self.seq)):
            e, fj = self.witness[j], self.back[j]
            if fj is None or not 0 <= fj < j:
                raise InvariantViolation(f"fan index {j} has back pointer {fj}")
            if g.other(e, v) != self.seq[j] or v not in g.edges[e]:
                raise InvariantViolation(f"witness edge {e} does not join hinge and fan vertex {j}")
            col = c.colour[e]
            if not col or not c.is_missing(self.seq[fj], col):
                raise InvariantViolation(f"witness colour {col} not missing at fan index {fj}")


def current_degree(c: PartialEdgeColouring, x: int, e0: int) -> int:
    """Degree of ``x`` in the graph of coloured edges plus ``e0``."""
    d = c.coloured_degree(x)
    return d + 1 if x in c.g.edges[e0] else d


def fan_degree(c: PartialEdgeColouring, fan: Fan) -> int:
    return current_degree(c, fan.hinge, fan.e0) + sum(current_degree(c, x, fan.e0) for x in fan.seq)


def build_maximal_fan(c: PartialEdgeColouring, e0: int, hinge: int) -> Fan:
    """Grow the fan ``(e0; hinge; other end of e0)`` until no vertex can join.

    Keeps two colour sets: colours at the hinge that do not yet lead to a fan
    vertex, and the subset of those missing at some fan vertex.  The fan is
    maximal exactly when the second set is empty.  Ties go to the smallest
    colour, so the result is deterministic.
    """
    g = c.g
    if c.colour[e0]:
        raise ValueError(f"edge {e0} is coloured; a fan needs an uncoloured base edge")
    if hinge not in g.edges[e0]:
        raise ValueError(f"vertex {hinge} is not an endpoint of edge {e0}")
    table = c.table
    hrow = table[hinge]
    first = g.other(e0, hinge)
    fan = Fan(hinge=hinge, e0=e0, seq=[first], witness=[e0], back=[None])
    in_fan = {first}

    # colours at the hinge on edges to vertices outside the fan
    pending: set[int] = set()
    open_set: set[int] = set()
    heap: list[int] = []
    earliest: dict[int, int] = {}
    frow = table[first]
    for col in range(1, c.k + 1):
        e = hrow[col]
        if e < 0 or g.other(e, hinge) == first:
            continue
        if frow[col] < 0:
            open_set.add(col)
            earliest[col] = 0
        else:
            pending.add(col)
    heap = sorted(open_set)

    while open_set:
        col = heapq.heappop(heap)
        if col not in open_set:
            continue
        e = hrow[col]
        u = g.other(e, hinge)
        fan.seq.append(u)
        fan.witness.append(e)
        fan.back.append(earliest[col])
        in_fan.add(u)
        idx = len(fan.seq) - 1
        colour = c.colour
        for w, eu in g.adj[u]:
            if w == hinge and colour[eu]:
                cu = colour[eu]
                open_set.discard(cu)
                pending.discard(cu)
        urow = table[u]
        moved = [x for x in pending if urow[x] < 0]
        for x in moved:
            pending.remove(x)
            open_set.add(x)
            earliest[x] = idx
            heapq.heappush(heap, x)
    return fan


def rotate_from(c: PartialEdgeColouring, fan: Fan, j: int) -> None:
    """Shift colours down the back-pointer chain from ``j`` so ``witness[j]`` is uncoloured.

    ``j`` is 0-based; ``j == 0`` leaves the colouring unchanged.
    """
    if not 0 <= j < fan.size:
        raise IndexError(f"fan index {j} out of range 0..{fan.size - 1}")
    if j == 0:
        return
    idx = fan.chain(j)
    edges = [fan.witness[i] for i in idx]
    cols = [c.colour[e] for e in edges[:-1]]
    for e in edges[:-1]:
        c.unassign(e)
    # edge idx[s+1] takes the colour that sat on edge idx[s]
    for e, col in zip(edges[1:], cols):
        c.assign(e, col)
    c.emit("rotate", edges, cols)


@dataclass
class Resolution:
    completed: bool
    branch: str  # "direct", "kempe" or "disjoint"
    index: int | None = None


def _first_common(c: PartialEdgeColouring, miss_v: list[int], miss_v_set: set[int], u: int) -> int | None:
    row = c.table[u]
    if len(miss_v) <= c.g.deg[u]:
        for col in miss_v:
            if row[col] < 0:
                return col
        return None
    colour = c.colour
    present = 0
    for _, e in c.g.adj[u]:
        if colour[e] in miss_v_set:
            present += 1
    if present == len(miss_v):
        return None
    for col in miss_v:
        if row[col] < 0:
            return col
    return None


def _finish_at(c: PartialEdgeColouring, fan: Fan, j: int, col: int) -> None:
    rotate_from(c, fan, j)
    e = fan.witness[j]
    c.assign(e, col)
    c.emit("assign", (e,), (col,))


def resolve_fan(c: PartialEdgeColouring, fan: Fan) -> Resolution:
    """Complete the colouring from ``fan`` if two of its missing sets meet.

    First looks for the earliest fan vertex sharing a missing colour with the
    hinge (rotate, then colour).  Failing that, looks for two fan vertices
    sharing a missing colour ``beta`` and swaps ``alpha``/``beta`` on a path
    that avoids the hinge, which creates the first situation.
    """
    v = fan.hinge
    miss_v = c.missing_colours(v)
    miss_set = set(miss_v)
    for j, u in enumerate(fan.seq):
        col = _first_common(c, miss_v, miss_set, u)
        if col is not None:
            _finish_at(c, fan, j, col)
            return Resolution(True, "direct", j)

    # pairwise intersections among fan vertices
    k = c.k
    count = [0] * (k + 1)
    colour = c.colour
    for u in fan.seq:
        for _, e in c.g.adj[u]:
            if colour[e]:
                count[colour[e]] += 1
    ell = fan.size
    beta = next((col for col in range(1, k + 1) if ell - count[col] >= 2), None)
    if beta is None:
        return Resolution(False, "disjoint")
    if not miss_v:
        raise InvariantViolation("hinge has no missing colour although the palette exceeds its degree")
    alpha = miss_v[0]
    table = c.table
    hits = [i for i, u in enumerate(fan.seq) if table[u][beta] < 0]
    p, q = hits[0], hits[1]
    # f maps a beta-coloured witness to p, the first fan vertex missing beta,
    # so swapping the path at p (or at q when p's path reaches the hinge)
    # leaves the back-pointer chain of the target intact.
    comp = c.kempe_component(alpha, beta, fan.seq[p])
    target = p
    if any(v in c.g.edges[e] for e in comp):
        target = q
    c.kempe_swap(alpha, beta, fan.seq[target])
    if not (c.is_missing(v, alpha) and c.is_missing(fan.seq[target], alpha)):
        raise InvariantViolation("kempe swap did not free alpha at the chosen fan vertex")
    _finish_at(c, fan, target, alpha)
    return Resolution(True, "kempe", target)


def assert_resolvable_by_size(fan: Fan, k: int, gamma: int, outcome: Resolution) -> None:
    """Maximal fans of size 1 or >= 3 always resolve once ``k >= gamma``."""
    if k < gamma:
        raise ValueError("palette below the local bound; the size argument does not apply")
    if fan.size != 2 and not outcome.completed:
        raise InvariantViolation(
            f"maximal fan of size {fan.size} at hinge {fan.hinge} has pairwise disjoint missing sets"
        )
