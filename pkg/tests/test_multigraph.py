import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from localcolour import (
    LoopError,
    Multigraph,
    ParseError,
    local_edge_bound,
    multiplicity,
    read_multigraph,
    triangle_weight,
)
from localcolour.generators import c5_fold, cycle, fat_triangle, star
from localcolour.multigraph import format_multigraph


def test_multiplicity_examples():
    assert multiplicity(fat_triangle(3), 0, 1) == 3
    assert multiplicity(cycle(5), 0, 2) == 0
    g = Multigraph(3, [(0, 1), (0, 1), (0, 2)])
    assert multiplicity(g, 0, 1) == 2
    assert multiplicity(g, 1, 0) == 2


@pytest.mark.parametrize("u,v", [(0, 0), (0, 3), (-1, 1)])
def test_multiplicity_rejects_bad_pairs(u, v):
    with pytest.raises(ValueError):
        multiplicity(Multigraph(3, [(0, 1)]), u, v)


def test_triangle_weight_examples():
    g = Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2), (1, 2), (1, 2)])
    assert triangle_weight(g, 0, 1) == 6
    # no common neighbour: falls back to the multiplicity
    assert triangle_weight(cycle(5), 0, 1) == 1
    assert triangle_weight(fat_triangle(2), 0, 1) == 6


def test_triangle_weight_needs_adjacent_pair():
    with pytest.raises(ValueError):
        triangle_weight(cycle(5), 0, 2)


@pytest.mark.parametrize(
    "graph,gamma",
    [(cycle(3), 3), (c5_fold(2), 5), (star(3), 3), (fat_triangle(3), 9)],
)
def test_local_edge_bound_examples(graph, gamma):
    assert local_edge_bound(graph).gamma == gamma


def test_report_terms_are_doubled_halves():
    rep = local_edge_bound(cycle(3))
    # K3: term_u = 2 + (2-1)/2, term_t = (2+2-1+3)/2
    assert rep.terms[0] == (5, 5, 6)
    assert rep.term_values(0) == (2.5, 2.5, 3.0)
    assert rep.argmax == 0


def test_empty_edge_set_reports_zero():
    rep = local_edge_bound(Multigraph(4, []))
    assert rep.gamma == 0 and rep.terms == [] and rep.argmax is None


def test_loops_are_rejected():
    with pytest.raises(LoopError):
        Multigraph(2, [(1, 1)])
    with pytest.raises(LoopError):
        read_multigraph("p mgraph 2 1\ne 0 0\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 0 1\n", 1),
        ("p mgraph 2 1\ne 0 5\n", 2),
        ("p mgraph 2 1\nc note\ne 0 x\n", 3),
        ("p graph 2 1\ne 0 1\n", 1),
        ("p mgraph 2 1\nq 0 1\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        read_multigraph(text)
    assert info.value.line == line


def test_edge_count_mismatch():
    with pytest.raises(ParseError, match="declares 2 edges"):
        read_multigraph("p mgraph 3 2\ne 0 1\n")


def test_round_trip_ignores_comments():
    text = "p mgraph 3 3\ne 0 1\ne 1 0\nc parallel pair above\ne 2 1\n"
    g = read_multigraph(text)
    assert format_multigraph(g) == "p mgraph 3 3\ne 0 1\ne 1 0\ne 2 1\n"
    assert read_multigraph(format_multigraph(g)) == g


@given(multigraphs())
def test_degree_sum_and_symmetry(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert multiplicity(g, u, v) == multiplicity(g, v, u)


@given(multigraphs(min_m=1))
def test_bound_sandwich(g):
    delta = g.max_degree()
    gamma = local_edge_bound(g).gamma
    assert delta <= gamma <= (3 * delta + 1) // 2


@given(multigraphs(min_m=1), st.randoms(use_true_random=False))
def test_bound_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    edges = list(g.edges)
    rnd.shuffle(edges)
    h = Multigraph(g.n, [(perm[u], perm[v]) for u, v in edges])
    assert local_edge_bound(h).gamma == local_edge_bound(g).gamma


@given(multigraphs(min_m=1), st.data())
def test_adding_parallel_edge_never_lowers_bound(g, data):
    u, v = data.draw(st.sampled_from(g.edges))
    h = Multigraph(g.n, list(g.edges) + [(u, v)])
    assert local_edge_bound(h).gamma >= local_edge_bound(g).gamma


@given(multigraphs(max_n=5))
def test_triangle_weight_dominates_every_triangle(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not multiplicity(g, u, v):
                continue
            tw = triangle_weight(g, u, v)
            for w in range(g.n):
                if w in (u, v) or not (multiplicity(g, u, w) and multiplicity(g, v, w)):
                    continue
                assert multiplicity(g, u, v) + multiplicity(g, u, w) + multiplicity(g, v, w) <= tw
