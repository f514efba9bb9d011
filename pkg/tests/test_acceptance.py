"""Acceptance criteria 1-10, one test per criterion.

Run ``pytest tests/test_acceptance.py -v`` (or ``python tests/test_acceptance.py``);
either way one ``criterion N: PASS|FAIL`` line is printed per criterion.
"""
import itertools
import random
import time

import pytest

from twinwidth import oracle, synth
from twinwidth.bounds import cap
from twinwidth.families import (complete, cycle, paley, random_block_glued, random_gadget_instance,
                                random_strong_tree, random_tree_decomposition, star, subdivided_clique)
from twinwidth.gadgets import hat_gadget, tilde_gadget
from twinwidth.sequence import check_respects, verify_width
from twinwidth.trigraph import BLACK, RED, Trigraph


def _witnessed(g, **kw):
    w, seq = oracle.exact_tww(g, **kw)
    assert len(seq) == len(g) - 1
    assert verify_width(g, seq).width == w
    return w


def _gnp(rng, n, p):
    return Trigraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_c01_exact_ground_truth():
    start = time.perf_counter()
    for n in range(1, 9):
        assert _witnessed(complete(n)) == 0
    assert _witnessed(cycle(5)) == 2
    assert paley(5)[0] == cycle(5)
    assert _witnessed(paley(13)[0], limit=13) == 6
    assert time.perf_counter() - start < 300


@pytest.mark.xfail(strict=True, reason="the subdivided K4 has twin-width exactly 2; the claim needs n >= 5 (see ledger)")
def test_c02_subdivided_clique_lower_bound():
    start = time.perf_counter()
    dec = oracle.decide_tww_le(subdivided_clique(4), 2)
    assert not dec.inconclusive
    assert time.perf_counter() - start < 600
    assert dec.value is False


def test_subdivided_k4_measured_facts():
    """Measured facts behind the expected failure above."""
    g4 = subdivided_clique(4)
    dec = oracle.decide_tww_le(g4, 2)
    assert dec.value is True and verify_width(g4, dec.witness).width == 2
    assert oracle.decide_tww_le(g4, 1).value is False
    assert oracle.decide_tww_le(subdivided_clique(5), 2).value is False


def test_c03_strong_tree_pipeline():
    failures = []
    for i in range(50):
        k = (2, 3, 4)[i % 3]
        g, std = random_strong_tree(k, 40, seed=1000 + i)
        assert len(g) <= 40 and std.width == k
        seq = synth.strong_tree_contract(g, std)
        assert not seq.heuristic
        if verify_width(g, seq).width > cap("thm1", k=k):
            failures.append(i)
    assert failures == []


def test_c04_block_sandwich():
    seen = 0
    for seed in range(80):
        g, bct = random_block_glued(9, seed)
        if len(bct.blocks) < 2:
            continue
        seen += 1
        lo = max(_witnessed(g.induced(b)) for b in bct.blocks)
        mid = _witnessed(g)
        hi = verify_width(g, synth.compose_blocks(g, bct)).width
        assert lo <= mid <= hi <= lo + 2
    assert seen >= 40
    spider = Trigraph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert _witnessed(spider) == 2
    assert _witnessed(star(6)) == 0


def test_c05_apex_machinery():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = _gnp(rng, n, rng.choice([0.3, 0.5, 0.7]))
        v = rng.randrange(n)
        rest = [x for x in range(n) if x != v]
        a = set(rng.sample(rest, min(len(rest), rng.randint(0, 2))))
        d, seq = oracle.exact_tww(g.without([v]), respect=sorted(a))
        out = synth.apex_lift(g, v, a, seq)
        rep = check_respects(g, out, a | {v})
        assert rep.respects and rep.complete
        assert verify_width(g, out).width <= 2 * d + 2
        a2 = a | {v}
        d0, base = oracle.exact_tww(g.without(a2))
        lifted = synth.respect_lift(g, a2, base)
        rep = check_respects(g, lifted, a2)
        assert rep.respects and rep.complete
        assert verify_width(g, lifted).width <= 2 ** len(a2) * d0 + 2 ** (len(a2) + 1) - 2


def test_c06_adhesion_pipeline():
    failures = []
    for i in range(30):
        w = 2 + i % 5
        k = 1 + i % 3
        k = min(k, w)
        g, td = random_tree_decomposition(w, k, 6, seed=2000 + i)
        seq, bound = synth.adhesion_pipeline(g, td, k=k, w=w)
        assert bound == 3 * 2 ** (k - 1) + max(w - k - 2, 0)
        if verify_width(g, seq).width > bound:
            failures.append(i)
    assert failures == []


def test_c07_gadget_chain():
    for i in range(60):
        k = 2 + i % 2
        g, td = random_gadget_instance(k, seed=3000 + i)
        gad = tilde_gadget(g, td, td.root)
        assert verify_width(gad.trigraph, synth.tilde_to_hat(gad, k)).width <= 2 ** k - 1
        hat = hat_gadget(g, td, td.root)
        t, torso_seq = oracle.exact_tww(synth.red_torso_of(hat))
        # hat_from_torso raises on any loop-head antichain or apex degree violation
        out = synth.hat_from_torso(hat, torso_seq, k)
        assert verify_width(hat.trigraph, out).width <= cap("torso_version", k=k, t=t)


def test_c08_formula_layer():
    from test_bounds import _max_antichain
    for t in range(101):
        assert cap("thm3", t=t) == cap("simpler_gadgets", k=2, t=cap("torso_version", k=2, t=t))
        assert cap("thm4_hat", t=t) == cap("simpler_gadgets", k=3, t=t)
        assert cap("thm4_torso", t=t) == cap("simpler_gadgets", k=3, t=cap("torso_version", k=3, t=t))
    for n in range(7):
        for k in range(n + 1):
            assert cap("sperner", n=n, k=k) == _max_antichain(n, k)


def test_c09_split_off_one_vertex():
    rng = random.Random(9)
    for _ in range(10_000):
        n = rng.randint(1, 10)
        g = Trigraph(range(n))
        for u, v in itertools.combinations(range(n), 2):
            r = rng.random()
            if r < 0.35:
                g.add_edge(u, v, BLACK)
            elif r < 0.45:
                g.add_edge(u, v, RED)
        labels = [rng.randrange(max(1, n // 2)) for _ in range(n)]
        parts = {}
        for x, lab in enumerate(labels):
            parts.setdefault(lab, set()).add(x)
        v = rng.randrange(n)
        split = [p - {v} for p in parts.values() if p - {v}] + [{v}]
        assert g.quotient(split).max_red_degree() <= g.quotient(parts.values()).max_red_degree() + 1


def test_c10_metamorphic():
    rng = random.Random(10)
    for _ in range(150):
        n = rng.randint(1, 8)
        g = _gnp(rng, n, rng.random())
        w = _witnessed(g)
        keep = rng.sample(range(n), rng.randint(1, n))
        assert _witnessed(g.induced(keep)) <= w
        comps = g.components()
        assert w == max(_witnessed(g.induced(c)) for c in comps)
    for _ in range(60):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        g1, g2 = _gnp(rng, a, 0.5), _gnp(rng, b, 0.5)
        union = Trigraph(range(a + b), black=g1.black_edges() + [(u + a, v + a) for u, v in g2.black_edges()])
        assert _witnessed(union) == max(_witnessed(g1), _witnessed(g2))


CRITERIA = [
    test_c01_exact_ground_truth, test_c02_subdivided_clique_lower_bound, test_c03_strong_tree_pipeline,
    test_c04_block_sandwich, test_c05_apex_machinery, test_c06_adhesion_pipeline, test_c07_gadget_chain,
    test_c08_formula_layer, test_c09_split_off_one_vertex, test_c10_metamorphic,
]


if __name__ == "__main__":
    import sys
    sys.path.insert(0, __import__("os").path.dirname(__file__))
    for i, fn in enumerate(CRITERIA, start=1):
        try:
            fn()
            ok = True
        except AssertionError:
            ok = False
        print(f"criterion {i}: {'PASS' if ok else 'FAIL'}")
