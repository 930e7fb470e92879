import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from localcolour import Multigraph
from localcolour.quasiline import CanonicalJoin, LinearIntervalGraph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@st.composite
def multigraphs(draw, max_n=7, max_m=14, max_mult=4, min_m=0):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = draw(st.integers(min_m, min(max_m, max_mult * len(pairs))))
    counts: dict = {}
    edges = []
    for _ in range(m):
        free = [p for p in pairs if counts.get(p, 0) < max_mult]
        u, v = draw(st.sampled_from(free))
        counts[(u, v)] = counts.get((u, v), 0) + 1
        if draw(st.booleans()):
            u, v = v, u
        edges.append((u, v))
    return Multigraph(n, edges)


def strip_from_reach(ids, reach):
    """Linear interval graph on ``ids`` at points 0..n-1 whose position i sees up to reach[i]."""
    n = len(ids)
    return LinearIntervalGraph(range(n), [(i, reach[i]) for i in range(n) if reach[i] > i], ids)


def load_join_cases():
    """Frozen 2-join extension inputs: (name, expected counter, join, c1, l)."""
    out = []
    for rec in json.loads((FIXTURES / "joins.json").read_text()):
        g1 = {v: set() for v in rec["n1"]}
        for u, v in rec["g1"]:
            g1[u].add(v)
            g1[v].add(u)
        strip = strip_from_reach(rec["strip_ids"], rec["reach"])
        j = CanonicalJoin.attach(g1, rec["x1"], rec["y1"], strip, rec["x2"], rec["y2"])
        c1 = {int(v): c for v, c in rec["c1"].items()}
        out.append((rec["name"], rec["expect"], j, c1, rec["l"]))
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = getattr(config, "_acceptance_verdicts", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(verdicts[n])
