import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from localcolour import (
    InvariantViolation,
    Multigraph,
    PartialEdgeColouring,
    assert_resolvable_by_size,
    build_maximal_fan,
    edge_colour,
    local_edge_bound,
    resolve_fan,
    rotate_from,
    validate,
)
from localcolour.colouring import from_assignment
from localcolour.fans import Fan, Resolution, fan_degree


@pytest.fixture
def rotation():
    """Hinge v=0, v1=1, v2=2 with pendant a=3, b=4, c=5 and palette 3."""
    g = Multigraph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    return from_assignment(g, 3, [0, 1, 2, 3, 3])


def test_rotation_fixture_missing_sets(rotation):
    assert rotation.missing_colours(0) == [2, 3]
    assert rotation.missing_colours(1) == [1]
    assert rotation.missing_colours(2) == [2]


def test_build_maximal_fan_on_rotation_fixture(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    fan.check(rotation)
    assert fan.seq[:2] == [1, 2]
    assert fan.witness[1] == 1 and fan.back[1] == 0


def test_rotate_then_colour_completes(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    rotate_from(rotation, fan, 1)
    assert rotation.colour[0] == 1 and rotation.colour[1] == 0
    rotation.assign(1, 2)
    assert validate(rotation) is None and rotation.is_complete()


def test_rotate_from_zero_is_identity(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    before = list(rotation.colour)
    rotate_from(rotation, fan, 0)
    assert rotation.colour == before


def test_rotate_index_out_of_range(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    with pytest.raises(IndexError):
        rotate_from(rotation, fan, fan.size)


def test_rotation_replays_backwards(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    before = list(rotation.colour)
    chain = fan.chain(1)
    rotate_from(rotation, fan, 1)
    # move the colours back up the chain
    edges = [fan.witness[i] for i in chain]
    cols = [rotation.colour[e] for e in edges[1:]]
    for e in edges[1:]:
        rotation.unassign(e)
    for e, col in zip(edges[:-1], cols):
        rotation.assign(e, col)
    assert rotation.colour == before


def test_resolve_rotation_fixture(rotation):
    fan = build_maximal_fan(rotation, 0, 0)
    out = resolve_fan(rotation, fan)
    assert out == Resolution(True, "direct", 1)
    assert rotation.is_complete() and validate(rotation) is None


def test_star_fan_grows_to_second_leaf():
    g = Multigraph(3, [(0, 1), (0, 2)])
    c = from_assignment(g, 2, [0, 1])
    fan = build_maximal_fan(c, 0, 0)
    assert fan.seq == [1, 2]
    fan.check(c)


def test_single_edge_fan_has_size_one():
    g = Multigraph(2, [(0, 1)])
    c = PartialEdgeColouring(g, 1)
    fan = build_maximal_fan(c, 0, 1)
    assert fan.seq == [0] and fan.size == 1
    assert resolve_fan(c, fan).branch == "direct"


def test_p3_resolves_directly():
    g = Multigraph(3, [(0, 1), (1, 2)])
    c = from_assignment(g, 2, [1, 0])
    fan = build_maximal_fan(c, 1, 1)
    assert resolve_fan(c, fan).completed
    assert c.colour == [1, 2]


def test_disjoint_missing_sets_report_disjoint():
    # path 0-1-2 coloured 1,2 with k=2 leaves nothing missing at vertex 1
    g = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    c = from_assignment(g, 2, [1, 2, 0])
    fan = Fan(hinge=0, e0=2, seq=[2], witness=[2], back=[None])
    out = resolve_fan(c, fan)
    assert out == Resolution(False, "disjoint")
    assert c.colour == [1, 2, 0]


def test_build_rejects_bad_input(rotation):
    with pytest.raises(ValueError):
        build_maximal_fan(rotation, 1, 0)
    with pytest.raises(ValueError):
        build_maximal_fan(rotation, 0, 3)


def test_assert_resolvable_by_size():
    fan1 = Fan(hinge=0, e0=0, seq=[1], witness=[0], back=[None])
    fan2 = Fan(hinge=0, e0=0, seq=[1, 2], witness=[0, 1], back=[None, 0])
    stuck = Resolution(False, "disjoint")
    with pytest.raises(InvariantViolation):
        assert_resolvable_by_size(fan1, 3, 3, stuck)
    assert_resolvable_by_size(fan2, 3, 3, stuck)  # size two is the driver's job
    assert_resolvable_by_size(fan1, 3, 3, Resolution(True, "direct", 0))
    with pytest.raises(ValueError):
        assert_resolvable_by_size(fan1, 2, 3, stuck)


def _mid_run_states(g, k, stop):
    """Colour the first ``stop`` edges, leaving edge ``stop`` as the fan base."""
    c = edge_colour(Multigraph(g.n, g.edges[:stop]), k)
    full = PartialEdgeColouring(g, k)
    for e, col in enumerate(c.colour):
        full.assign(e, col)
    return full


@given(multigraphs(min_m=1), st.data())
def test_fans_are_valid_and_ops_stay_local(g, data):
    k = local_edge_bound(g).gamma
    stop = data.draw(st.integers(0, g.m - 1))
    c = _mid_run_states(g, k, stop)
    hinge = data.draw(st.sampled_from(g.edges[stop]))
    before = c.ops
    fan = build_maximal_fan(c, stop, hinge)
    fan.check(c)
    assert c.ops == before  # building never mutates
    others = list(c.colour)
    out = resolve_fan(c, fan)
    assert validate(c) is None
    assert c.ops - before <= 4 * (k + fan_degree(c, fan)) + 4
    if out.completed:
        assert c.is_complete() or c.colour[stop]
        assert max(c.colour) <= k
    else:
        assert c.colour == others
