import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twinwidth import kernels

pytestmark = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")


@st.composite
def masks(draw):
    n = draw(st.integers(2, 20))
    black = np.zeros(n, np.uint64)
    red = np.zeros(n, np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            c = draw(st.sampled_from([0, 0, 1, 2]))
            arr = black if c == 1 else red if c == 2 else None
            if arr is not None:
                arr[i] |= np.uint64(1) << np.uint64(j)
                arr[j] |= np.uint64(1) << np.uint64(i)
    dead = draw(st.sets(st.integers(0, n - 1), max_size=n - 2))
    for d in dead:
        bit = ~(np.uint64(1) << np.uint64(d))
        black &= bit
        red &= bit
        black[d] = red[d] = 0
    alive = np.array([i for i in range(n) if i not in dead], np.int64)
    extra = np.array(draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)), np.int64)
    return black, red, extra, alive


@given(masks())
def test_pair_scores_backends_agree(m):
    black, red, extra, alive = m
    pairs = [(i, j) for a, i in enumerate(alive) for j in alive[a + 1:]]
    pi = np.array([p[0] for p in pairs], np.int64)
    pj = np.array([p[1] for p in pairs], np.int64)
    a = kernels.pair_scores_numpy(black, red, extra, alive, pi, pj)
    b = kernels.pair_scores_numba(black, red, extra, alive, pi, pj)
    assert np.array_equal(a, b)


@given(masks(), st.data())
def test_contract_backends_agree(m, data):
    black, red, _, alive = m
    i, j = data.draw(st.lists(st.sampled_from(list(alive)), min_size=2, max_size=2, unique=True))
    b1, r1 = kernels.contract_numpy(black, red, i, j)
    b2, r2 = kernels.contract_numba(black.copy(), red.copy(), i, j)
    assert np.array_equal(b1, b2) and np.array_equal(r1, r2)


def test_score_matches_trigraph_contraction():
    from twinwidth.families import cycle
    g = cycle(5)
    black = np.zeros(5, np.uint64)
    for u, v in g.black_edges():
        black[u] |= np.uint64(1) << np.uint64(v)
        black[v] |= np.uint64(1) << np.uint64(u)
    red = np.zeros(5, np.uint64)
    alive = np.arange(5, dtype=np.int64)
    score = kernels.pair_scores(black, red, np.zeros(5, np.int64), alive,
                                np.array([0], np.int64), np.array([1], np.int64))
    assert score[0] == g.contract(0, 1).max_red_degree() == 2
