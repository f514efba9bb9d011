import itertools
import os
import subprocess
import sys
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from twinwidth import oracle
from twinwidth.errors import ResourceLimitError
from twinwidth.families import caterpillar, complete, cycle, grid, path, random_tree, star
from twinwidth.sequence import check_respects, verify_width
from twinwidth.trigraph import Trigraph


def brute_tww(g: Trigraph) -> int:
    """Minimum over all orders, memoised on the partition itself."""
    vs = sorted(g.vertices)

    @lru_cache(maxsize=None)
    def best(parts):
        if len(parts) == 1:
            return 0
        out = None
        for i, j in itertools.combinations(range(len(parts)), 2):
            nxt = [p for k, p in enumerate(parts) if k not in (i, j)] + [parts[i] | parts[j]]
            nxt = tuple(sorted(nxt, key=min))
            here = g.quotient(nxt).max_red_degree()
            if out is not None and here >= out:
                continue
            val = max(here, best(nxt))
            out = val if out is None else min(out, val)
        return out

    return best(tuple(frozenset([v]) for v in vs))


@pytest.mark.parametrize("g,expected", [(complete(5), 0), (cycle(5), 2), (path(4), 1), (star(4), 0)])
def test_known_values(g, expected):
    w, seq = oracle.exact_tww(g)
    assert w == expected
    assert verify_width(g, seq).width == w


@given(graphs(max_n=6))
@settings(max_examples=40)
def test_matches_brute_force(g):
    w, seq = oracle.exact_tww(g)
    assert w == brute_tww(g)
    assert verify_width(g, seq).width == w
    assert len(seq) == len(g) - 1


@given(graphs(min_n=2, max_n=8), st.integers(0, 3))
def test_decide_agrees_with_exact(g, d):
    w, _ = oracle.exact_tww(g)
    dec = oracle.decide_tww_le(g, d)
    assert dec.value == (w <= d)
    if dec.value:
        assert verify_width(g, dec.witness).width <= d


@pytest.mark.parametrize("seed", range(5))
def test_trees_have_width_at_most_two(seed):
    import random
    g = Trigraph.from_edges(10, random_tree(10, random.Random(seed)))
    assert oracle.decide_tww_le(g, 2).value


def test_complete_graphs_zero():
    for n in range(1, 9):
        assert oracle.decide_tww_le(complete(n), 0).value


def test_size_limit():
    with pytest.raises(ResourceLimitError):
        oracle.exact_tww(grid(4, 4), limit=12)


def test_budget_exhaustion_is_inconclusive():
    dec = oracle.decide_tww_le(grid(4, 4), 2, budget=5)
    assert dec.inconclusive and dec.value is None


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=40)
def test_respecting_search(g, data):
    a = data.draw(st.sets(st.sampled_from(sorted(g.vertices)), max_size=2))
    w, seq = oracle.exact_tww(g, respect=sorted(a))
    rep = check_respects(g, seq, a)
    assert rep.respects and rep.complete
    assert verify_width(g, seq).width == w


@given(graphs(min_n=2, max_n=8), st.data())
@settings(max_examples=40)
def test_within_search_only_touches_u(g, data):
    u = data.draw(st.sets(st.sampled_from(sorted(g.vertices)), min_size=1))
    w, seq = oracle.exact_tww(g, within=sorted(u))
    rep = check_respects(g, seq, u, mode="u")
    assert rep.respects and rep.complete
    assert verify_width(g, seq).width == w


def test_greedy_is_flagged():
    w, seq = oracle.greedy_sequence(caterpillar(4, 2))
    assert seq.heuristic
    assert verify_width(caterpillar(4, 2), seq).width == w


def test_best_sequence_falls_back():
    g = grid(4, 4)
    seq = oracle.best_sequence(g, limit=8)
    assert seq.heuristic and len(seq) == 15


def test_threads_give_same_answer():
    g = cycle(7)
    assert oracle.exact_tww(g, threads=2)[0] == oracle.exact_tww(g, threads=1)[0] == 2


def test_pure_numpy_backend_agrees():
    code = ("from twinwidth import oracle, kernels;"
            "from twinwidth.families import grid;"
            "print(kernels.backend(), oracle.exact_tww(grid(3, 4))[0])")
    env = dict(os.environ, TWINWIDTH_PURE_NUMPY="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, width = out.stdout.split()
    assert backend == "numpy"
    assert int(width) == oracle.exact_tww(grid(3, 4))[0]
