"""Seeded instance families used by tests, the CLI benchmark and fixtures."""

from __future__ import annotations

import random

from .multigraph import Multigraph
from .quasiline.graphs import Adj
from .quasiline.intervals import LinearIntervalGraph
from .quasiline.join import CanonicalJoin
from .quasiline.strips import Strip, StripComposition


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def cycle(n: int, fold: int = 1) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n) for _ in range(fold)])


def c5_fold(fold: int) -> Multigraph:
    """C5 with every edge repeated ``fold`` times; its line graph is C5 strong-product K_fold."""
    return cycle(5, fold)


def fat_triangle(fold: int) -> Multigraph:
    return cycle(3, fold)


def star(leaves: int) -> Multigraph:
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def random_multigraph(seed, n: int, m: int, max_mult: int | None = None) -> Multigraph:
    """``m`` edges with uniform endpoints; loops and pairs at ``max_mult`` are redrawn."""
    rng = _rng(seed)
    if n < 2 and m:
        raise ValueError("need two vertices for a loop-free edge")
    if max_mult is not None and m > max_mult * n * (n - 1) // 2:
        raise ValueError("too many edges for the multiplicity cap")
    edges: list[tuple[int, int]] = []
    count: dict[tuple[int, int], int] = {}
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if max_mult is not None and count.get(key, 0) >= max_mult:
            continue
        count[key] = count.get(key, 0) + 1
        edges.append((u, v))
    return Multigraph(n, edges)


def small_random_multigraph(seed, max_n: int = 7, max_m: int = 14, max_mult: int = 4) -> Multigraph:
    rng = _rng(seed)
    n = rng.randint(2, max_n)
    m = rng.randint(1, min(max_m, max_mult * n * (n - 1) // 2))
    return random_multigraph(rng, n, m, max_mult)


def bench_instance(m: int, seed) -> Multigraph:
    """The benchmark family: ``m / 2`` vertices, uniform endpoints, loops rejected."""
    return random_multigraph(seed, max(2, m // 2), m)


# ----------------------------------------------------------- interval strips

def random_interval_strip(seed, ids: list[int], reach: int = 3) -> tuple[LinearIntervalGraph, int, int]:
    """Random linear interval graph on ``ids`` plus end-clique sizes with disjoint ends."""
    rng = _rng(seed)
    n = len(ids)
    if n < 2:
        raise ValueError("a strip with disjoint ends needs two vertices")
    while True:
        intervals = []
        for _ in range(rng.randint(0, n + 1)):
            a = rng.randrange(n)
            intervals.append((a, min(n - 1, a + rng.randint(0, reach))))
        li = LinearIntervalGraph(list(range(n)), intervals, ids)
        x_max = li.reach[0] + 1
        y_max = n - min(i for i in range(n) if li.reach[i] >= n - 1)
        x, y = rng.randint(1, x_max), rng.randint(1, y_max)
        if x + y <= n:
            return li, x, y


def random_composition(seed, max_vertices: int = 12) -> StripComposition:
    """Pattern digraph without loops; each arc carries a single vertex or a strip with disjoint ends."""
    rng = _rng(seed)
    while True:
        h = rng.randint(2, 5)
        arcs = []
        for _ in range(rng.randint(1, 7)):
            a = rng.randrange(h)
            b = rng.randrange(h - 1)
            arcs.append((a, b if b < a else b + 1))
        sizes = [1 if rng.random() < 0.55 else rng.randint(2, 4) for _ in arcs]
        if sum(sizes) <= max_vertices:
            break
    strips = []
    nxt = 0
    for size in sizes:
        ids = list(range(nxt, nxt + size))
        nxt += size
        if size == 1:
            strips.append(Strip(LinearIntervalGraph([0], [], ids), 1, 1))
        else:
            li, x, y = random_interval_strip(rng, ids)
            strips.append(Strip(li, x, y))
    return StripComposition(h, arcs, strips)


def random_join(seed, max_first: int = 7, max_strip: int = 6) -> CanonicalJoin:
    """Random first side with clique attachments and a random strip on fresh ids."""
    rng = _rng(seed)
    n1 = rng.randint(1, max_first)
    n2 = rng.randint(2, max_strip)
    adj: Adj = {v: set() for v in range(n1)}
    p = rng.random()
    for u in range(n1):
        for v in range(u + 1, n1):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)

    def make_clique(vs):
        for a in vs:
            adj[a] |= set(vs) - {a}
        return vs

    x1 = make_clique(rng.sample(range(n1), rng.randint(1, n1)))
    if rng.random() < 0.8:
        y1 = make_clique(rng.sample(range(n1), rng.randint(1, n1)))
    else:
        y1 = rng.sample(x1, rng.randint(1, len(x1)))
    li, x, y = random_interval_strip(rng, list(range(n1, n1 + n2)))
    return CanonicalJoin.attach(adj, x1, y1, li, x, y)
