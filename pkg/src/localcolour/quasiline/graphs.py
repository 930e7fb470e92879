"""Small-graph helpers over adjacency dictionaries ``{vertex: set(neighbours)}``.

Vertex ids are arbitrary hashable integers here, so subgraphs keep the ids of
their host graph.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import ColouringError, GuardExceeded

Adj = dict[int, set[int]]

EXACT_GUARD = 24


def induced(adj: Mapping[int, set[int]], vertices: Iterable[int]) -> Adj:
    keep = set(vertices)
    return {v: adj[v] & keep for v in keep}


def is_clique(adj: Mapping[int, set[int]], vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(b in adj[a] for i, a in enumerate(vs) for b in vs[i + 1:])


def proper_problem(adj: Mapping[int, set[int]], colour: Mapping[int, int]) -> str | None:
    for v in sorted(adj):
        if colour.get(v, 0) < 1:
            return f"vertex {v} is uncoloured"
    for v in sorted(adj):
        for w in adj[v]:
            if v < w and colour[v] == colour[w]:
                return f"adjacent vertices {v} and {w} share colour {colour[v]}"
    return None


def components(adj: Mapping[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


# ------------------------------------------------------------------ cliques

class _Bits:
    """Bitset view of an adjacency dict: vertex ``order[i]`` is bit ``i``."""

    def __init__(self, adj: Mapping[int, set[int]]):
        self.order = sorted(adj)
        self.index = {v: i for i, v in enumerate(self.order)}
        self.nb = [0] * len(self.order)
        for v, i in self.index.items():
            mask = 0
            for w in adj[v]:
                j = self.index.get(w)
                if j is not None:
                    mask |= 1 << j
            self.nb[i] = mask

    def mask(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index[v]
        return m


def _max_clique_bits(nb: list[int], pool: int) -> int:
    best = 0

    def expand(size, pool):
        nonlocal best
        if not pool:
            if size > best:
                best = size
            return
        while pool:
            if size + pool.bit_count() <= best:
                return
            low = pool & -pool
            i = low.bit_length() - 1
            expand(size + 1, pool & nb[i])
            pool ^= low

    expand(0, pool)
    return best


def clique_number(adj: Mapping[int, set[int]]) -> int:
    if not adj:
        return 0
    b = _Bits(adj)
    return _max_clique_bits(b.nb, (1 << len(b.order)) - 1)


def clique_through(adj: Mapping[int, set[int]], v: int, allowed: Iterable[int] | None = None) -> int:
    """Largest clique containing ``v`` inside ``allowed`` (default: everything)."""
    b = _Bits(adj)
    pool = b.nb[b.index[v]]
    if allowed is not None:
        pool &= b.mask(w for w in allowed if w in b.index)
    return 1 + _max_clique_bits(b.nb, pool)


def local_bound(adj: Mapping[int, set[int]]) -> int:
    """max over v of ceil((deg(v) + 1 + largest clique through v) / 2)."""
    if not adj:
        return 0
    b = _Bits(adj)
    best = 0
    for i, v in enumerate(b.order):
        omega = 1 + _max_clique_bits(b.nb, b.nb[i])
        best = max(best, (len(adj[v]) + omega + 2) // 2)
    return best


# ------------------------------------------------------------ exact colouring

def exact_colouring(adj: Mapping[int, set[int]], guard: int = EXACT_GUARD) -> dict[int, int]:
    """Optimal vertex colouring with colours ``1..chi``.

    Branch and bound in DSATUR order: a greedy DSATUR pass gives the first
    upper bound, the clique number the lower bound.
    """
    n = len(adj)
    if n > guard:
        raise GuardExceeded(f"exact colouring limited to {guard} vertices, got {n}")
    if n == 0:
        return {}
    b = _Bits(adj)
    nb = b.nb
    lower = _max_clique_bits(nb, (1 << n) - 1)
    best = _dsatur_greedy(nb, n)
    best_k = max(best)
    if best_k > lower:
        col = [0] * n
        found = _dsatur_search(nb, n, best_k - 1, lower, col)
        while found is not None:
            best = found
            best_k = max(found)
            if best_k <= lower:
                break
            found = _dsatur_search(nb, n, best_k - 1, lower, [0] * n)
    return {b.order[i]: best[i] for i in range(n)}


def _saturation(nb, col, i):
    seen = 0
    m = nb[i]
    while m:
        low = m & -m
        c = col[low.bit_length() - 1]
        if c:
            seen |= 1 << c
        m ^= low
    return seen


def _dsatur_greedy(nb, n):
    col = [0] * n
    deg = [x.bit_count() for x in nb]
    for _ in range(n):
        i = max((i for i in range(n) if not col[i]),
                key=lambda i: (_saturation(nb, col, i).bit_count(), deg[i], -i))
        seen = _saturation(nb, col, i)
        c = 1
        while seen >> c & 1:
            c += 1
        col[i] = c
    return col


def _dsatur_search(nb, n, k, lower, col):
    """A colouring with at most ``k`` colours, or None."""
    deg = [x.bit_count() for x in nb]

    def rec(done, top):
        if done == n:
            return True
        i = max((i for i in range(n) if not col[i]),
                key=lambda i: (_saturation(nb, col, i).bit_count(), deg[i], -i))
        seen = _saturation(nb, col, i)
        for c in range(1, min(top + 1, k) + 1):
            if seen >> c & 1:
                continue
            col[i] = c
            if rec(done + 1, max(top, c)):
                return True
            col[i] = 0
        return False

    if rec(0, 0):
        return list(col)
    return None


# -------------------------------------------------------- colour permutations

def permutation_onto(
    source: Mapping[int, int],
    fixed: Mapping[int, int],
    palette: Iterable[int],
) -> dict[int, int]:
    """Injective map from the colours of ``source`` into ``palette``.

    ``fixed`` pins some source colours to given palette colours; the others
    take the unused palette colours in increasing order.
    """
    palette = list(palette)
    pinned = dict(fixed)
    if len(set(pinned.values())) != len(pinned):
        raise ColouringError("two source colours pinned to the same target")
    taken = set(pinned.values())
    free = [c for c in palette if c not in taken]
    rest = sorted(set(source.values()) - set(pinned))
    if len(rest) > len(free):
        raise ColouringError(f"need {len(rest) + len(taken)} colours, palette has {len(palette)}")
    for c, t in zip(rest, free):
        pinned[c] = t
    return pinned
