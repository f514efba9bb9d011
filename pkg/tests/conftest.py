import itertools
import re
import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twinwidth.trigraph import BLACK, RED, Trigraph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Trigraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def trigraphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    colors = draw(st.lists(st.sampled_from([None, BLACK, BLACK, RED]), min_size=len(pairs), max_size=len(pairs)))
    g = Trigraph(range(n))
    for (u, v), c in zip(pairs, colors):
        if c is not None:
            g.add_edge(u, v, c)
    return g


@st.composite
def partitions_of(draw, vertices):
    vs = sorted(vertices)
    labels = draw(st.lists(st.integers(0, len(vs) - 1), min_size=len(vs), max_size=len(vs)))
    parts = {}
    for v, lab in zip(vs, labels):
        parts.setdefault(lab, set()).add(v)
    return list(parts.values())


@st.composite
def complete_sequences(draw, g):
    """A uniformly drawn complete sequence (random pair at each step)."""
    alive = sorted(g.vertices)
    steps = []
    while len(alive) > 1:
        a, b = draw(st.lists(st.sampled_from(alive), min_size=2, max_size=2, unique=True))
        s, t = min(a, b), max(a, b)
        steps.append((s, t))
        alive.remove(t)
    return steps


@pytest.fixture
def c5():
    from twinwidth.families import cycle
    return cycle(5)


# one verdict line per acceptance criterion
_CRITERION = re.compile(r"test_acceptance\.py::test_c(\d\d)_")
_verdicts: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        failed = report.outcome != "passed" or hasattr(report, "wasxfail")
        if failed or n not in _verdicts:
            _verdicts[n] = "FAIL" if failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_verdicts):
        terminalreporter.write_line(f"criterion {n}: {_verdicts[n]}")
