import pytest

from twinwidth import families
from twinwidth.decomp import block_cut_tree, validate_std
from twinwidth.errors import DomainError
from twinwidth.families import (BLOCK_MENU, block_glue, cycle, generate, paley, random_block_glued,
                                random_gadget_instance, subdivided_clique)

PRIMES = [p for p in range(5, 98) if p % 4 == 1 and all(p % d for d in range(2, p))]


def test_paley5_is_c5():
    g, _ = paley(5)
    assert g == cycle(5)


@pytest.mark.parametrize("q", PRIMES)
def test_paley_regular_and_self_complementary(q):
    g, std = paley(q)
    assert all(len(g.neighbors(v)) == (q - 1) // 2 for v in g)
    assert validate_std(g, std) == []
    squares = {x * x % q for x in range(1, q)}
    c = next(x for x in range(2, q) if x not in squares)
    edges = set(g.black_edges())
    for u, v in edges:
        a, b = u * c % q, v * c % q
        assert (min(a, b), max(a, b)) not in edges


@pytest.mark.parametrize("q", [3, 7, 9, 15])
def test_paley_rejects_bad_orders(q):
    with pytest.raises(DomainError):
        paley(q)


def test_subdivided_clique_counts():
    g = subdivided_clique(4)
    assert len(g) == 10 and len(g.black_edges()) == 12
    side = {v for v in g if len(g.neighbors(v)) == 3}
    assert all(not (g.neighbors(v) & side) for v in side)


def test_block_glue_two_triangles():
    g, bct = block_glue([BLOCK_MENU["K3"], BLOCK_MENU["K3"]])
    assert len(g) == 5 and len(bct.blocks) == 2 and len(bct.cut_vertices) == 1


@pytest.mark.parametrize("seed", range(10))
def test_generators_are_deterministic(seed):
    a, _ = random_block_glued(9, seed)
    b, _ = random_block_glued(9, seed)
    assert a == b and len(a) <= 9
    assert block_cut_tree(a).blocks == block_cut_tree(b).blocks
    g1, td1 = random_gadget_instance(2, seed)
    g2, td2 = random_gadget_instance(2, seed)
    assert g1 == g2 and td1.bags == td2.bags
    assert families.gnp(8, 0.5, seed) == families.gnp(8, 0.5, seed)


@pytest.mark.parametrize("seed", range(20))
def test_gadget_instance_shape(seed):
    k = 2 + seed % 2
    g, td = random_gadget_instance(k, seed)
    seps = [s for _, s in td.child_separators(td.root)]
    assert all(len(s) == k for s in seps)
    assert len(set(seps)) == len(seps)
    for v in td.bags[td.root]:
        assert sum(v in s for s in seps) <= 2 ** k - 1


def test_generate_dispatch():
    g, dec = generate("grid", rows=2, cols=3)
    assert len(g) == 6 and dec is None
    with pytest.raises(DomainError):
        generate("nope")
