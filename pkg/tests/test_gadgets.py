import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twinwidth.decomp import TreeDecomposition
from twinwidth.errors import PreconditionError
from twinwidth.families import complete, path, random_tree_decomposition
from twinwidth.gadgets import (build_hat, build_pendant_hat, build_red_torso, build_tilde, hat_gadget,
                               mark_virtual_edges, pendant_map, tilde_gadget)
from twinwidth.trigraph import BLACK, RED, Trigraph


def _root_with_child(child_bag, edges, n):
    g = Trigraph.from_edges(n, edges)
    td = TreeDecomposition({1: [0, 1, 2], 2: child_bag}, [(1, 2)], root=1)
    return g, td


def test_leaf_tilde_is_the_part():
    g, td = _root_with_child([1, 2, 3], [(0, 1), (1, 2), (2, 3)], 4)
    assert build_tilde(g, td, 2) == g.induced([1, 2, 3])
    assert build_hat(g, td, 2) == g.induced([1, 2, 3])
    assert build_red_torso(g, td, 2) == g.induced([1, 2, 3])


def test_full_neighbourhood_family_gives_red_clique():
    # separator {1, 2}; vertices 3..6 see nothing, {1}, {2}, {1, 2}
    edges = [(0, 1), (0, 2), (1, 4), (2, 5), (1, 6), (2, 6), (3, 4), (4, 5), (5, 6)]
    g, td = _root_with_child([1, 2, 3, 4, 5, 6], edges, 7)
    gad = tilde_gadget(g, td, 1)
    ids = gad.gadget_vertices()
    assert len(ids) == 4
    h = gad.trigraph
    assert all(h.edge_color(a, b) == RED for a, b in itertools.combinations(ids, 2))
    traces = {frozenset(h.black_neighbors(x)) for x in ids}
    assert traces == {frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})}


def test_uniform_child_gives_single_vertex():
    edges = [(0, 1), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]
    g, td = _root_with_child([1, 2, 3, 4], edges, 5)
    gad = tilde_gadget(g, td, 1)
    assert len(gad.gadget_vertices()) == 1
    assert gad.trigraph.red_edges() == []


def test_hat_keeps_only_maximal_separators():
    g = complete(6)
    td = TreeDecomposition({1: [0, 1, 2, 3], 2: [0, 1, 4], 3: [0, 1, 2, 5]}, [(1, 2), (1, 3)])
    hat = hat_gadget(g, td, 1)
    assert list(hat.apex_of) == [frozenset({0, 1, 2})]
    apex = hat.apex_of[frozenset({0, 1, 2})]
    assert hat.trigraph.red_neighbors(apex) == {0, 1, 2} and hat.trigraph.red_degree(apex) == 3


def test_torso_adds_red_edge():
    g = Trigraph.from_edges(4, [(0, 2), (1, 2), (0, 3), (1, 3)])
    td = TreeDecomposition({1: [0, 1, 2], 2: [0, 1, 3]}, [(1, 2)])
    torso = build_red_torso(g, td, 1)
    assert torso.edge_color(0, 1) == RED
    assert torso.edge_color(0, 2) == BLACK


def test_pendant_hat_small_cases():
    h = build_pendant_hat(Trigraph(range(1)))
    assert len(h) == 2 and h.red_edges() == [(0, 1)]
    h = build_pendant_hat(path(2))
    assert h.black_edges() == [(0, 1)]
    assert h.red_edges() == [(0, 2), (1, 3)]
    assert pendant_map(path(2)) == {0: 2, 1: 3}


def test_mark_virtual_edges():
    cyc = [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert mark_virtual_edges(range(4), cyc, []) == Trigraph.from_edges(4, cyc)
    h = mark_virtual_edges(range(2), [(0, 1), (0, 1)], [(0, 1)])
    assert h.red_edges() == [(0, 1)] and h.black_edges() == []
    h = mark_virtual_edges(range(4), cyc, [(0, 1), (2, 3)])
    assert len(h.red_edges()) == 2 and len(h.black_edges()) == 2
    with pytest.raises(PreconditionError):
        mark_virtual_edges(range(4), cyc, [(0, 2)])


@given(st.integers(0, 10_000))
def test_tilde_structure(seed):
    g, td = random_tree_decomposition(4, 3, 6, seed)
    for t in td.nodes():
        gad = tilde_gadget(g, td, t)
        h = gad.trigraph
        assert h.induced(gad.part) == g.induced(gad.part)
        for grp in gad.groups:
            assert len(grp.vertex_of) <= 2 ** len(grp.separator)
            for m, x in grp.vertex_of.items():
                assert h.black_neighbors(x) == set(m)
                assert h.red_neighbors(x) == set(grp.vertex_of.values()) - {x}
        hat = hat_gadget(g, td, t)
        seps = list(hat.apex_of)
        assert not any(a < b for a in seps for b in seps)
