"""Linear and circular interval graphs.

Coordinates are :class:`fractions.Fraction` so file round trips are exact.
Vertices carry global ids; a graph's ``ids`` lists them in point order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import ColouringError, InvariantViolation, StructureError
from .graphs import Adj, exact_colouring, local_bound, proper_problem


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class LinearIntervalGraph:
    """Points on the real line joined when some closed interval holds both.

    ``reach[i]`` is the largest position adjacent to position ``i`` (or ``i``
    itself).  Positions ``i < j`` are adjacent exactly when ``j <= reach[i]``.
    """

    def __init__(
        self,
        points: Sequence,
        intervals: Iterable[tuple] = (),
        ids: Sequence[int] | None = None,
    ):
        self.points = [_frac(p) for p in points]
        if any(a >= b for a, b in zip(self.points, self.points[1:])):
            raise StructureError("interval-graph points must be strictly increasing")
        self.ids = list(range(len(self.points))) if ids is None else list(ids)
        if len(self.ids) != len(self.points) or len(set(self.ids)) != len(self.ids):
            raise StructureError("need one distinct id per point")
        self.intervals = []
        for lo, hi in intervals:
            lo, hi = _frac(lo), _frac(hi)
            if lo > hi:
                raise StructureError(f"interval [{lo}, {hi}] is empty")
            self.intervals.append((lo, hi))
        n = len(self.points)
        reach = list(range(n))
        for lo, hi in self.intervals:
            inside = [i for i, p in enumerate(self.points) if lo <= p <= hi]
            if inside:
                last = inside[-1]
                for i in inside:
                    reach[i] = max(reach[i], last)
        # a vertex later in the order can never reach less far
        for i in range(1, n):
            reach[i] = max(reach[i], reach[i - 1], i)
        self.reach = reach
        self.position = {v: i for i, v in enumerate(self.ids)}

    @classmethod
    def from_order(cls, ids: Sequence[int], adj: Mapping[int, set[int]]) -> "LinearIntervalGraph":
        """Build a representation from a vertex order, verifying the order is an interval order."""
        n = len(ids)
        pos = {v: i for i, v in enumerate(ids)}
        intervals = []
        for i, v in enumerate(ids):
            right = [pos[w] for w in adj[v] if w in pos and pos[w] > i]
            r = max(right, default=i)
            if r > i:
                intervals.append((i, r))
        li = cls(list(range(n)), intervals, ids)
        if li.adjacency() != {v: set(adj[v]) & set(ids) for v in ids}:
            raise StructureError("vertex order is not a linear interval order for this graph")
        return li

    def __len__(self):
        return len(self.ids)

    def __eq__(self, other):
        return (
            isinstance(other, LinearIntervalGraph)
            and self.ids == other.ids
            and self.points == other.points
            and self.intervals == other.intervals
        )

    def adjacent_pos(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return j <= self.reach[i]

    def adjacency(self) -> Adj:
        adj: Adj = {v: set() for v in self.ids}
        for i, v in enumerate(self.ids):
            for j in range(i + 1, self.reach[i] + 1):
                adj[v].add(self.ids[j])
                adj[self.ids[j]].add(v)
        return adj

    def clique_number(self) -> int:
        return max((r - i + 1 for i, r in enumerate(self.reach)), default=0)

    def first_max_clique(self) -> list[int]:
        """Positions of the leftmost maximum clique; cliques are consecutive runs."""
        omega = self.clique_number()
        for i, r in enumerate(self.reach):
            if r - i + 1 == omega:
                return list(range(i, r + 1))
        return []

    def left_clique(self, size: int) -> list[int]:
        """Ids of the ``size`` leftmost vertices; StructureError unless they form a clique."""
        if size > len(self.ids) or (size and self.reach[0] < size - 1):
            raise StructureError(f"the {size} leftmost vertices do not form a clique")
        return self.ids[:size]

    def right_clique(self, size: int) -> list[int]:
        n = len(self.ids)
        if size > n or (size and self.reach[n - size] < n - 1):
            raise StructureError(f"the {size} rightmost vertices do not form a clique")
        return self.ids[n - size:]

    def sub_order(self, keep: Iterable[int]) -> list[int]:
        keep = set(keep)
        return [v for v in self.ids if v in keep]


def greedy_stable_set(li: LinearIntervalGraph, skip: Iterable[int] = ()) -> list[int]:
    """Scan left to right, taking each vertex not adjacent to the last one taken."""
    skip = set(skip)
    chosen: list[int] = []
    last = None
    for i, v in enumerate(li.ids):
        if v in skip:
            continue
        if last is None or not li.adjacent_pos(last, i):
            chosen.append(v)
            last = i
    return chosen


def colour_linear_interval(li: LinearIntervalGraph, k: int | None = None) -> list[int]:
    """Colour position ``p`` with ``p mod omega`` (1-based); proper because cliques are runs."""
    omega = li.clique_number()
    if k is not None and k < omega:
        raise ColouringError(f"palette {k} is below the clique number {omega}")
    if omega == 0:
        return []
    return [p % omega + 1 for p in range(len(li))]


def roll_back(colours: Sequence[int], start: int, omega: int, times: int = 1) -> list[int]:
    """Advance the colour of every position from ``start`` on by ``times`` steps modulo ``omega``."""
    return [c if p < start else (c - 1 + times) % omega + 1 for p, c in enumerate(colours)]


def positional_problem(li: LinearIntervalGraph, colours: Sequence[int]) -> str | None:
    for i, r in enumerate(li.reach):
        for j in range(i + 1, r + 1):
            if colours[i] == colours[j]:
                return f"positions {i} and {j} are adjacent and share colour {colours[i]}"
    return None


class CircularIntervalGraph:
    """Points on a circle of circumference 1, joined when some arc holds both.

    An arc ``(a, b)`` runs counterclockwise from ``a`` to ``b`` and wraps past
    zero when ``b < a``.
    """

    def __init__(self, points: Sequence, arcs: Iterable[tuple] = (), ids: Sequence[int] | None = None):
        self.points = [_frac(p) for p in points]
        if any(not 0 <= p < 1 for p in self.points):
            raise StructureError("circle points must lie in [0, 1)")
        if len(set(self.points)) != len(self.points):
            raise StructureError("circle points must be distinct")
        self.ids = list(range(len(self.points))) if ids is None else list(ids)
        if len(self.ids) != len(self.points) or len(set(self.ids)) != len(self.ids):
            raise StructureError("need one distinct id per point")
        self.arcs = []
        for a, b in arcs:
            a, b = _frac(a), _frac(b)
            if not (0 <= a < 1 and 0 <= b < 1):
                raise StructureError("arc ends must lie in [0, 1)")
            self.arcs.append((a, b))

    @staticmethod
    def _contains(arc, p) -> bool:
        a, b = arc
        return a <= p <= b if a <= b else (p >= a or p <= b)

    def adjacency(self) -> Adj:
        adj: Adj = {v: set() for v in self.ids}
        for arc in self.arcs:
            inside = [v for v, p in zip(self.ids, self.points) if self._contains(arc, p)]
            for i, a in enumerate(inside):
                for b in inside[i + 1:]:
                    adj[a].add(b)
                    adj[b].add(a)
        return adj

    def __len__(self):
        return len(self.ids)

    def __eq__(self, other):
        return (
            isinstance(other, CircularIntervalGraph)
            and self.ids == other.ids
            and self.points == other.points
            and self.arcs == other.arcs
        )

    @classmethod
    def from_linear(cls, li: LinearIntervalGraph) -> "CircularIntervalGraph":
        """Squeeze a linear representation into the first half of the circle."""
        if not li.ids:
            return cls([], [], [])
        lo = min([li.points[0]] + [a for a, _ in li.intervals])
        hi = max([li.points[-1]] + [b for _, b in li.intervals])
        span = hi - lo or Fraction(1)

        def squeeze(x):
            return (x - lo) / span / 2

        return cls([squeeze(p) for p in li.points], [(squeeze(a), squeeze(b)) for a, b in li.intervals], li.ids)


def colour_circular_interval_exact(ci: CircularIntervalGraph, guard: int | None = None) -> dict[int, int]:
    """Optimal colouring; the count never exceeds the local vertex bound of ``ci``."""
    adj = ci.adjacency()
    colour = exact_colouring(adj) if guard is None else exact_colouring(adj, guard)
    used = max(colour.values(), default=0)
    bound = local_bound(adj)
    if used > bound:
        raise InvariantViolation(f"circular interval graph needed {used} colours, local bound {bound}")
    problem = proper_problem(adj, colour)
    if problem:
        raise ColouringError(problem)
    return colour
