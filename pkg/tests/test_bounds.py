import itertools
import math
from fractions import Fraction

import networkx as nx
import pytest

from twinwidth import bounds
from twinwidth.bounds import BoundName, binom, cap, d_k, evaluate
from twinwidth.errors import DomainError


def test_thm1_k1_is_exact():
    v = evaluate("thm1", k=1)
    assert v.exact == Fraction(7, 2) and v.cap == 3


def test_thm1_k7_matches_float():
    k = 7
    approx = 3 * k / 2 + 1 + (math.sqrt(k + math.log(k)) + math.sqrt(k) + 2 * math.log(k)) / 2
    v = evaluate("thm1", k=k)
    assert v.cap == math.floor(approx) and abs(v.approx - approx) < 1e-9


@pytest.mark.parametrize("k,w,expected", [(1, 2, 3), (2, 6, 8), (3, 6, 13), (3, 3, 12)])
def test_thm6(k, w, expected):
    assert cap("thm6", k=k, w=w) == expected


def test_torso_version_example():
    assert cap("torso_version", k=2, t=1) == 3


def test_domain_errors():
    with pytest.raises(DomainError):
        evaluate("thm6", k=0, w=3)
    with pytest.raises(DomainError):
        evaluate("thm3")
    with pytest.raises(DomainError):
        evaluate("thm3", t=1.5)
    with pytest.raises(ValueError):
        evaluate("nope", t=1)


def test_as_dict_fields():
    d = evaluate("thm3", t=5).as_dict()
    assert d["value"] == 46 and d["cap"] == 46 and d["formula"] and d["citation"]


@pytest.mark.parametrize("t", range(0, 101))
def test_instantiation_identities(t):
    assert cap("thm3", t=t) == cap("simpler_gadgets", k=2, t=cap("torso_version", k=2, t=t))
    assert cap("thm4_hat", t=t) == cap("simpler_gadgets", k=3, t=t)
    assert cap("thm4_torso", t=t) == cap("simpler_gadgets", k=3, t=cap("torso_version", k=3, t=t))
    assert cap("thm5_hat", k=3, t=t) >= cap("thm4_hat", t=t)


def test_d_k_small():
    assert d_k(1) == 4
    assert d_k(2) == max(4 * 1 + 6, 18)
    assert d_k(3) == 70
    assert binom(-1, 0) == 1 and binom(-1, 1) == 0


def test_f_monotone_and_above_paley():
    prev = -1
    for a in range(1, 200):
        v = evaluate("f_of_a", a=a)
        assert v.cap >= prev
        prev = v.cap
        assert v.approx >= (a - 1) / 2


def _max_antichain(n, k):
    """Width of the poset of subsets of [n] of size <= k, via Dilworth and bipartite matching."""
    sets = [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(n), r)]
    b = nx.Graph()
    left = [("l", i) for i in range(len(sets))]
    b.add_nodes_from(left)
    b.add_nodes_from(("r", i) for i in range(len(sets)))
    for i, s in enumerate(sets):
        for j, u in enumerate(sets):
            if s < u:
                b.add_edge(("l", i), ("r", j))
    matching = nx.bipartite.hopcroft_karp_matching(b, top_nodes=left)
    return len(sets) - len(matching) // 2


@pytest.mark.parametrize("n", range(0, 7))
def test_sperner_brute_force(n):
    for k in range(0, n + 1):
        assert cap("sperner", n=n, k=k) == _max_antichain(n, k)


def test_every_name_evaluates():
    sample = {"a": 3, "k": 2, "t": 4, "w": 5, "d": 1, "n": 5, "delta": 4}
    for name in BoundName:
        v = evaluate(name.value, **sample)
        assert v.cap >= 0 and v.formula
