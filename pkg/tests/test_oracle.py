import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from localcolour import (
    GuardExceeded,
    Multigraph,
    OracleGuard,
    SimpleGraph,
    chromatic_index_bf,
    chromatic_number_bf,
    line_graph,
    local_edge_bound,
    local_vertex_bound_bf,
    max_clique_containing,
)
from localcolour.generators import c5_fold, cycle, petersen, star
from localcolour.oracle import clique_number_bf, edge_colouring_bf


def complete(n):
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def c5_simple():
    return SimpleGraph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.mark.parametrize("g,chi", [(cycle(3), 3), (cycle(5), 3), (c5_fold(2), 5)])
def test_chromatic_index_examples(g, chi):
    assert chromatic_index_bf(g) == chi


def test_petersen_needs_raised_guard():
    with pytest.raises(GuardExceeded):
        chromatic_index_bf(petersen())
    assert chromatic_index_bf(petersen(), OracleGuard(10, 15, 12, 30.0)) == 4


def test_edge_colouring_bf_witness():
    g = c5_fold(2)
    assert edge_colouring_bf(g, 4) is None
    cols = edge_colouring_bf(g, 5)
    for e, (u, v) in enumerate(g.edges):
        for f, (x, y) in enumerate(g.edges):
            if e < f and {u, v} & {x, y}:
                assert cols[e] != cols[f]


def test_k4_values():
    k4 = complete(4)
    assert chromatic_number_bf(k4) == 4
    assert all(max_clique_containing(k4, v) == 4 for v in range(4))
    assert local_vertex_bound_bf(k4) == 4


def test_c5_values():
    h = c5_simple()
    assert chromatic_number_bf(h) == 3
    assert all(max_clique_containing(h, v) == 2 for v in range(5))
    assert local_vertex_bound_bf(h) == 3
    assert clique_number_bf(h) == 2


def test_line_graph_bridge_values():
    assert max_clique_containing(line_graph(star(3)), 0) == 3
    assert local_vertex_bound_bf(line_graph(c5_fold(2))) == 5


def test_empty_inputs():
    assert chromatic_index_bf(Multigraph(3, [])) == 0
    assert chromatic_number_bf(SimpleGraph(0, [])) == 0
    assert chromatic_number_bf(SimpleGraph(3, [])) == 1


def test_guard_checks_before_search():
    with pytest.raises(GuardExceeded):
        chromatic_index_bf(Multigraph(9, [(0, 1)]))
    with pytest.raises(GuardExceeded):
        chromatic_index_bf(c5_fold(4))
    with pytest.raises(GuardExceeded):
        chromatic_number_bf(complete(17))


def test_guard_from_env(monkeypatch):
    monkeypatch.setenv("LC_ORACLE_GUARD", "5,6,7,1.5")
    assert OracleGuard.from_env() == OracleGuard(5, 6, 7, 1.5)
    monkeypatch.setenv("LC_ORACLE_GUARD", "5,6")
    with pytest.raises(ValueError):
        OracleGuard.from_env()
    monkeypatch.delenv("LC_ORACLE_GUARD")
    assert OracleGuard.from_env() == OracleGuard()


@settings(max_examples=40)
@given(multigraphs(max_n=6, max_m=10))
def test_chromatic_index_within_local_bound(g):
    chi = chromatic_index_bf(g)
    assert g.max_degree() <= chi <= local_edge_bound(g).gamma


@settings(max_examples=30)
@given(multigraphs(max_n=6, max_m=9, min_m=1), st.randoms(use_true_random=False))
def test_oracle_ignores_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Multigraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert chromatic_index_bf(h) == chromatic_index_bf(g)
    lg, lh = line_graph(g), line_graph(h)
    assert chromatic_number_bf(lg) == chromatic_number_bf(lh)
    assert local_vertex_bound_bf(lg) == local_vertex_bound_bf(lh)


def _naive_chromatic_index(g):
    """Try every assignment; only viable for a handful of edges."""
    import itertools

    if not g.m:
        return 0
    conflicts = [(e, f) for e in range(g.m) for f in range(e + 1, g.m) if set(g.edges[e]) & set(g.edges[f])]
    k = 1
    while True:
        for cols in itertools.product(range(k), repeat=g.m):
            if all(cols[e] != cols[f] for e, f in conflicts):
                return k
        k += 1


@settings(max_examples=60)
@given(multigraphs(max_n=5, max_m=7, max_mult=3))
def test_chromatic_index_matches_naive_search(g):
    assert chromatic_index_bf(g) == _naive_chromatic_index(g)


def _naive_chromatic_number(h):
    import itertools

    if not h.n:
        return 0
    for k in range(1, h.n + 1):
        for cols in itertools.product(range(k), repeat=h.n):
            if all(cols[u] != cols[v] for u, v in h.edges()):
                return k


@settings(max_examples=60)
@given(multigraphs(max_n=5, max_m=7, max_mult=2))
def test_chromatic_number_matches_naive_search(g):
    h = line_graph(g)
    assert chromatic_number_bf(h) == _naive_chromatic_number(h)
