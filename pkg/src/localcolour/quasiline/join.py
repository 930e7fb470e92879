"""Extending a colouring across a canonical interval 2-join.

The host graph splits into ``V1`` and ``V2``.  ``G|V2`` is a linear interval
graph with disjoint end-cliques ``X2`` (leftmost) and ``Y2`` (rightmost), and
the only edges between the sides are ``X1 x X2`` and ``Y1 x Y2`` for cliques
``X1, Y1`` of ``V1``.  Given a proper colouring of ``G|V1`` with ``l`` colours,
:func:`extend_over_join` colours ``V2`` without leaving the palette, provided
``l`` is at least the join bound of ``H2 = G|(V2 + X1 + Y1)``.

The extension works by induction on ``l``: several cases peel off a stable
set made of one colour class of ``V1`` plus a greedy stable set of ``V2``,
and recurse on what remains; the others finish in one step.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import ColouringError, InfeasiblePalette, InvariantViolation, StructureError
from .graphs import (
    Adj,
    clique_through,
    components,
    exact_colouring,
    induced,
    is_clique,
    permutation_onto,
    proper_problem,
)
from .intervals import LinearIntervalGraph, colour_linear_interval, greedy_stable_set, positional_problem, roll_back


@dataclass
class CanonicalJoin:
    adj: Adj
    v1: frozenset[int]
    x1: frozenset[int]
    y1: frozenset[int]
    strip: LinearIntervalGraph
    x2: tuple[int, ...]
    y2: tuple[int, ...]

    @classmethod
    def attach(
        cls,
        g1: Mapping[int, set[int]],
        x1: Iterable[int],
        y1: Iterable[int],
        strip: LinearIntervalGraph,
        x2_size: int,
        y2_size: int,
    ) -> "CanonicalJoin":
        """Glue ``strip`` onto ``g1``: its left ``x2_size`` vertices see ``x1``, its right ones see ``y1``."""
        x1, y1 = frozenset(x1), frozenset(y1)
        if set(strip.ids) & set(g1):
            raise StructureError("strip vertices overlap the first side")
        x2 = strip.left_clique(x2_size)
        y2 = strip.right_clique(y2_size)
        adj: Adj = {v: set(nb) for v, nb in g1.items()}
        adj.update({v: set(nb) for v, nb in strip.adjacency().items()})
        for a, b in ((x1, x2), (y1, y2)):
            for u in a:
                if u not in adj:
                    raise StructureError(f"attachment vertex {u} is not in the first side")
                for w in b:
                    adj[u].add(w)
                    adj[w].add(u)
        j = cls(adj, frozenset(g1), x1, y1, strip, tuple(x2), tuple(y2))
        j.validate()
        return j

    @property
    def v2(self) -> list[int]:
        return list(self.strip.ids)

    def g1(self) -> Adj:
        return induced(self.adj, self.v1)

    def validate(self) -> None:
        v2 = set(self.strip.ids)
        if not self.v1 or not v2:
            raise StructureError("both sides of a join must be nonempty")
        if self.v1 & v2 or self.v1 | v2 != set(self.adj):
            raise StructureError("join sides must partition the vertex set")
        if not self.x2 or not self.y2:
            raise StructureError("X2 and Y2 must be nonempty; use a clique cutset for one-sided attachments")
        if set(self.x2) & set(self.y2):
            raise StructureError("X2 and Y2 must be disjoint")
        if list(self.x2) != self.strip.left_clique(len(self.x2)):
            raise StructureError("X2 must be the leftmost vertices of the strip")
        if list(self.y2) != self.strip.right_clique(len(self.y2)):
            raise StructureError("Y2 must be the rightmost vertices of the strip")
        for name, c in (("X1", self.x1), ("Y1", self.y1)):
            if not c <= self.v1:
                raise StructureError(f"{name} must lie in the first side")
            if not is_clique(self.adj, c):
                raise StructureError(f"{name} is not a clique")
        if induced(self.adj, v2) != self.strip.adjacency():
            raise StructureError("the second side does not match its interval representation")
        x2, y2 = set(self.x2), set(self.y2)
        for u in self.v1:
            want = (x2 if u in self.x1 else set()) | (y2 if u in self.y1 else set())
            if self.adj[u] & v2 != want:
                raise StructureError(f"cross edges at {u} differ from the X1xX2 + Y1xY2 pattern")


def join_bound(
    adj: Mapping[int, set[int]],
    v2: Iterable[int],
    x1: Iterable[int],
    y1: Iterable[int],
) -> int:
    """Join-local bound of ``H2``: max over its vertices of ``ceil((d(v) + 1 + w'(v)) / 2)``.

    ``d`` is the degree in the whole graph ``adj``; ``w'(v)`` is the largest
    clique of ``H2`` through ``v`` that does not meet both ``X1 - Y1`` and
    ``Y1 - X1``.
    """
    x1, y1 = set(x1), set(y1)
    hv = set(v2) | x1 | y1
    h2 = induced(adj, hv)
    only_x, only_y = x1 - y1, y1 - x1
    best = 0
    for v in sorted(hv):
        omega = 0
        if v not in only_y:
            omega = clique_through(h2, v, hv - only_y)
        if v not in only_x:
            omega = max(omega, clique_through(h2, v, hv - only_x))
        best = max(best, (len(adj[v]) + omega + 2) // 2)
    return best


def join_bound_of(j: CanonicalJoin) -> int:
    return join_bound(j.adj, j.strip.ids, j.x1, j.y1)


class _Extension:
    """Mutable state of one extension run; see :func:`extend_over_join`."""

    def __init__(self, j: CanonicalJoin, colour: dict[int, int], palette: list[int], stats: Counter):
        self.adj = j.adj
        self.colour = colour
        self.palette = palette
        self.stats = stats
        self.alive1 = set(j.v1)
        self.order = list(j.strip.ids)
        self.x1, self.y1 = set(j.x1), set(j.y1)
        self.x2, self.y2 = set(j.x2), set(j.y2)
        self.recoloured: set[int] = set()
        self.hold_overlap = False

    # -------------------------------------------------------------- helpers

    def alive(self) -> set[int]:
        return self.alive1 | set(self.order)

    def residual(self) -> Adj:
        return induced(self.adj, self.alive())

    def strip(self) -> LinearIntervalGraph:
        return LinearIntervalGraph.from_order(self.order, self.residual())

    def cols(self, vs: Iterable[int]) -> set[int]:
        return {self.colour[v] for v in vs}

    def overlap(self) -> int:
        return len(self.cols(self.x1) & self.cols(self.y1))

    def bound(self) -> int:
        return join_bound(self.residual(), self.order, self.x1, self.y1)

    def mirror(self) -> None:
        self.order.reverse()
        self.x1, self.y1 = self.y1, self.x1
        self.x2, self.y2 = self.y2, self.x2

    def class_of(self, col: int) -> set[int]:
        return {v for v in self.alive1 if self.colour[v] == col}

    def remove(self, col: int, stable: list[int], case: str) -> None:
        """Drop colour ``col`` from the palette with its class in V1 and ``stable`` in V2."""
        for s in stable:
            self.colour[s] = col
        gone = self.class_of(col) | set(stable)
        for a in gone:
            if self.adj[a] & gone:
                raise InvariantViolation(f"{case}: removed set is not stable")
        self.alive1 -= gone
        self.order = [v for v in self.order if v not in gone]
        for s in (self.x1, self.y1, self.x2, self.y2):
            s -= gone
        self.palette.remove(col)
        if self.order:
            b = self.bound()
            if b > len(self.palette):
                raise InvariantViolation(
                    f"{case}: join bound {b} exceeds the reduced palette {len(self.palette)}"
                )

    def paste(self, local: Mapping[int, int], attach: Iterable[int], vertices: Iterable[int]) -> None:
        """Permute ``local`` so it agrees with V1 on ``attach``, then copy it onto ``vertices``."""
        fixed = {}
        for v in attach:
            if local[v] in fixed and fixed[local[v]] != self.colour[v]:
                raise InvariantViolation("attachment clique repeats a colour")
            fixed[local[v]] = self.colour[v]
        perm = permutation_onto(local, fixed, self.palette)
        for v in vertices:
            self.colour[v] = perm[local[v]]

    def colour_piece(self, vertices: list[int], front: list[int], back: list[int]) -> None:
        """Colour the strip piece ``vertices`` (in order) next to cliques of V1.

        With one attachment the piece plus that clique is an interval graph,
        coloured optimally left to right; with two it is coloured exactly.
        """
        adj = self.residual()
        if front and back:
            local = exact_colouring(induced(adj, vertices + front + back))
        else:
            seq = front + vertices + back
            li = LinearIntervalGraph.from_order(seq, adj)
            local = dict(zip(seq, colour_linear_interval(li)))
        if max(local.values(), default=0) > len(self.palette):
            raise InvariantViolation(
                f"piece needs {max(local.values())} colours, palette has {len(self.palette)}"
            )
        self.paste(local, front + back, vertices)

    # -------------------------------------------------------------- phases

    def maximize_overlap(self) -> None:
        """Recolour X1/Y1 vertices until every colour private to one side is forced.

        Afterwards, a vertex of X1 whose colour does not occur in Y1 sees every
        colour of Y1 among its V1 neighbours, and symmetrically.
        """
        changed = True
        while changed:
            changed = False
            for side, other in ((self.x1, self.y1), (self.y1, self.x1)):
                target = self.cols(other)
                for v in sorted(side):
                    if self.colour[v] in target:
                        continue
                    seen = self.cols(self.adj[v] & self.alive1)
                    options = sorted(target - seen)
                    if options:
                        self.colour[v] = options[0]
                        self.recoloured.add(v)
                        self.stats["maximize"] += 1
                        changed = True
                        break
                if changed:
                    break

    def run(self) -> None:
        while True:
            if not self.order:
                return
            # Removing the shared class after a case-6 recolour can leave the
            # recoloured vertex non-maximal, so maximality is restored every
            # round except the one that must see the reduced overlap.
            if self.hold_overlap:
                self.hold_overlap = False
            else:
                self.maximize_overlap()
            # an empty strip end leaves the matching V1 clique unattached
            if not self.x2:
                self.x1 = set()
            if not self.y2:
                self.y1 = set()
            if self.y1 <= self.x1 or self.x1 <= self.y1:
                self.case1()
                return
            l = len(self.palette)
            b = self.bound()
            if b > l:
                raise InvariantViolation(f"join bound {b} exceeds palette {l}")
            if b < l:
                self.drop_spare_class()
                continue
            k = self.overlap()
            if k == 0:
                if l > len(self.x1) + len(self.y1):
                    self.case2()
                    continue
                if l == len(self.x1) + len(self.y1):
                    self.case3()
                    return
                raise InvariantViolation("X1 and Y1 carry more distinct colours than the palette holds")
            if len(self.x1) < len(self.y1):
                self.mirror()
            if k < len(self.x1):
                self.case4()
                continue
            if not (k == len(self.x1) == len(self.y1)):
                raise InvariantViolation("overlap larger than an attachment clique")
            if k == 1:
                self.case5()
                return
            if self.case6():
                return

    def drop_spare_class(self) -> None:
        self.stats["excess"] += 1
        touch = self.x1 | self.y1
        spare = [c for c in self.palette if not (self.class_of(c) & touch)]
        self.remove(spare[0] if spare else self.palette[0], [], "excess")

    def case1(self) -> None:
        """One attachment clique contains the other, so it is a clique cutset."""
        self.stats["case1"] += 1
        if self.x1 and self.y1:
            attach = sorted(self.x1 | self.y1)
            adj = self.residual()
            local = exact_colouring(induced(adj, self.order + attach))
            if max(local.values()) > len(self.palette):
                raise InvariantViolation("cutset side needs more colours than the palette")
            self.paste(local, attach, self.order)
        else:
            self.colour_piece(list(self.order), sorted(self.x1), sorted(self.y1))

    def case2(self) -> None:
        """Disjoint attachments with spare colours: peel a greedy stable set."""
        self.stats["case2"] += 1
        s = greedy_stable_set(self.strip())
        touch = self.x1 | self.y1
        if set(s) & self.y2:
            options = [c for c in self.palette if not (self.class_of(c) & touch)]
        else:
            options = sorted(self.cols(self.y1))
        self.remove(options[0], s, "case 2")

    def case3(self) -> None:
        """Disjoint attachments using the whole palette: colour ``G|(X1 + V2)`` modulo its clique number."""
        self.stats["case3"] += 1
        if len(self.y2) > len(self.x2):
            self.mirror()
        l = len(self.palette)
        if len(self.y1) < 2 * len(self.x2) or len(self.x1) < 2 * len(self.y2):
            raise InvariantViolation("case 3 size relations between attachment cliques fail")
        xs = sorted(self.x1)
        seq = xs + self.order
        h3 = LinearIntervalGraph.from_order(seq, self.residual())
        omega = h3.clique_number()
        base = colour_linear_interval(h3)
        y2_pos = [p for p, v in enumerate(seq) if v in self.y2]
        x1_pos = range(len(xs))
        if omega <= l - len(self.y2):
            colours = base
            bad = y2_pos
        else:
            self.stats["case3-rollback"] += 1
            b = l - omega
            clique = h3.first_max_clique()
            start = clique[0]
            if start < len(xs):
                raise InvariantViolation("case 3 maximum clique meets X1")
            if seq[start] in self.y2:
                raise InvariantViolation("case 3 maximum clique starts inside Y2")
            for t in range(omega):
                colours = roll_back(base, start, omega, t)
                if positional_problem(h3, colours):
                    continue
                on_x1 = {colours[p] for p in x1_pos}
                bad = [p for p in y2_pos if colours[p] not in on_x1]
                if len(bad) <= b:
                    self.stats["case3-steps"] += t
                    break
            else:
                raise InvariantViolation("case 3 found no roll-back with few new colours on Y2")
        # give each offending Y2 vertex a fresh colour shared with a spare X1 vertex
        colours = list(colours)
        on_y2 = {colours[p] for p in y2_pos}
        spare = [p for p in x1_pos if colours[p] not in on_y2]
        if len(spare) < len(bad):
            raise InvariantViolation("case 3 has too few X1 vertices to pair with Y2")
        fresh = omega + 1
        for py, px in zip(bad, spare):
            colours[py] = colours[px] = fresh
            fresh += 1
        if fresh - 1 > l:
            raise InvariantViolation("case 3 used more colours than the palette")
        local = dict(zip(seq, colours))
        problem = proper_problem(induced(self.residual(), seq), local)
        if problem:
            raise InvariantViolation(f"case 3 colouring is improper: {problem}")
        self.paste(local, xs, self.order)

    def case4(self) -> None:
        """Partial overlap: peel a greedy stable set that avoids X2."""
        self.stats["case4"] += 1
        s = greedy_stable_set(self.strip(), skip=self.x2)
        cx, cy = self.cols(self.x1), self.cols(self.y1)
        options = sorted(cx - cy) if set(s) & self.y2 else sorted(cx & cy)
        self.remove(options[0], s, "case 4")

    def case5(self) -> None:
        """Single-vertex attachments sharing one colour."""
        self.stats["case5"] += 1
        strip_adj = induced(self.residual(), self.order)
        comps = components(strip_adj)
        if len(comps) > 1:
            pos = {v: i for i, v in enumerate(self.order)}
            for comp in comps:
                comp = sorted(comp, key=pos.__getitem__)
                front = sorted(self.x1) if set(comp) & self.x2 else []
                back = sorted(self.y1) if set(comp) & self.y2 else []
                self.colour_piece(comp, front, back)
            return
        li = self.strip()
        omega = li.clique_number()
        banned = self.cols(self.x1 | self.y1)
        free = [c for c in self.palette if c not in banned]
        if omega > len(free):
            raise InvariantViolation("case 5 strip clique does not fit in the unused colours")
        for v, c in zip(li.ids, colour_linear_interval(li)):
            self.colour[v] = free[c - 1]

    def case6(self) -> bool:
        """Equal attachments carrying the same colours.

        Returns False after recolouring one vertex, which reduces the overlap
        and hands over to the partial-overlap case on the next round.
        """
        self.stats["case6"] += 1
        palette = set(self.palette)
        for v in sorted(self.x1 ^ self.y1):
            seen = self.cols(self.adj[v] & self.alive1) | {self.colour[v]}
            missing = sorted(palette - seen)
            if missing:
                self.colour[v] = missing[0]
                self.recoloured.add(v)
                self.stats["case6-recolour"] += 1
                self.hold_overlap = True
                return False
        self.stats["case6-direct"] += 1
        li = self.strip()
        base = dict(zip(li.ids, colour_linear_interval(li)))
        banned = self.cols(self.x1 | self.y1)
        free = [c for c in self.palette if c not in banned]
        ends = sorted({base[v] for v in self.x2 | self.y2})
        if len(ends) > len(free):
            raise InvariantViolation("case 6 strip ends need more colours than X1 and Y1 leave free")
        perm = permutation_onto(base, dict(zip(ends, free)), self.palette)
        for v in li.ids:
            self.colour[v] = perm[base[v]]
        return True


def extend_over_join(
    j: CanonicalJoin,
    c1: Mapping[int, int],
    l: int,
    stats: Counter | None = None,
) -> dict[int, int]:
    """Extend a proper ``l``-colouring ``c1`` of ``G|V1`` to all of ``G``.

    Colours are ``1..l``.  Only vertices of ``X1`` and ``Y1`` may change colour
    on the first side; everything else in ``c1`` is kept.  Dispatch counts go
    to ``stats`` under ``case1`` .. ``case6`` and ``excess``.
    """
    stats = Counter() if stats is None else stats
    j.validate()
    bound = join_bound_of(j)
    if l < bound:
        raise InfeasiblePalette(f"palette {l} is below the join bound {bound}")
    colour = {v: c1[v] for v in j.v1} if set(c1) >= j.v1 else None
    if colour is None:
        raise ColouringError("first-side colouring misses vertices")
    if any(not 1 <= c <= l for c in colour.values()):
        raise ColouringError(f"first-side colouring leaves the palette 1..{l}")
    problem = proper_problem(j.g1(), colour)
    if problem:
        raise ColouringError(problem)

    state = _Extension(j, colour, list(range(1, l + 1)), stats)
    state.run()

    problem = proper_problem(j.adj, colour)
    if problem:
        raise InvariantViolation(f"join extension produced an improper colouring: {problem}")
    if any(not 1 <= c <= l for c in colour.values()):
        raise InvariantViolation("join extension left the palette")
    moved = {v for v in j.v1 if colour[v] != c1[v]}
    if not moved <= (j.x1 | j.y1):
        raise InvariantViolation("join extension recoloured first-side vertices outside X1 and Y1")
    return colour
