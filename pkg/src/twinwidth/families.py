"""Deterministic graph families and seeded random corpora.

Every generator is a pure function of its parameters (and seed). Vertices are
``0..n-1``.
"""
from __future__ import annotations

import itertools
import random
from typing import Sequence

from .decomp import BlockCutTree, StrongTreeDecomposition, TreeDecomposition, block_cut_tree
from .errors import DomainError
from .trigraph import Trigraph


def complete(n: int) -> Trigraph:
    return Trigraph.from_edges(n, itertools.combinations(range(n), 2))


def path(n: int) -> Trigraph:
    return Trigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Trigraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Trigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Trigraph:
    """K_{1,leaves}; the centre is vertex 0."""
    return Trigraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def caterpillar(spine: int, legs: int) -> Trigraph:
    """A path on ``spine`` vertices with ``legs`` pendant leaves on each spine vertex."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        for _ in range(legs):
            edges.append((i, nxt))
            nxt += 1
    return Trigraph.from_edges(nxt, edges)


def complete_binary(depth: int) -> Trigraph:
    """Complete binary tree with ``2^(depth+1) - 1`` vertices, heap-numbered."""
    n = 2 ** (depth + 1) - 1
    return Trigraph.from_edges(n, [((i - 1) // 2, i) for i in range(1, n)])


def grid(rows: int, cols: int) -> Trigraph:
    def idx(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Trigraph.from_edges(rows * cols, edges)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def paley(q: int) -> tuple[Trigraph, StrongTreeDecomposition]:
    """Paley graph on the integers mod a prime ``q = 1 (mod 4)``.

    Also returns the two-bag strong tree decomposition with bags of sizes
    ``(q+1)/2`` and ``(q-1)/2``.
    """
    if not _is_prime(q):
        raise DomainError(f"paley graphs are only generated for primes, got {q}")
    if q % 4 != 1:
        raise DomainError(f"paley graphs need q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    g = Trigraph.from_edges(q, [(a, b) for a in range(q) for b in range(a + 1, q) if (b - a) % q in squares])
    half = (q + 1) // 2
    std = StrongTreeDecomposition({1: range(half), 2: range(half, q)}, [(1, 2)], root=1)
    return g, std


def subdivided_clique(n: int) -> Trigraph:
    """K_n with every edge subdivided once; branch vertices are ``0..n-1``."""
    edges = []
    nxt = n
    for a, b in itertools.combinations(range(n), 2):
        edges += [(a, nxt), (b, nxt)]
        nxt += 1
    return Trigraph.from_edges(nxt, edges)


def block_glue(blocks: Sequence[Sequence[tuple[int, int]]],
               attach: Sequence[int] | None = None) -> tuple[Trigraph, BlockCutTree]:
    """Glue blocks (edge lists on local ids) into a tree of blocks.

    Local vertex 0 of block ``i >= 1`` is identified with the global vertex
    ``attach[i-1]``; by default with the last vertex of the previous block.
    """
    g = Trigraph()
    nxt = 0
    last = None
    for i, edges in enumerate(blocks):
        m = max(max(e) for e in edges) + 1
        local = {}
        if i == 0:
            for v in range(m):
                local[v] = nxt
                nxt += 1
        else:
            anchor = attach[i - 1] if attach is not None else last
            if anchor not in g:
                raise DomainError(f"block {i} attaches to unknown vertex {anchor}")
            local[0] = anchor
            for v in range(1, m):
                local[v] = nxt
                nxt += 1
        for u, v in edges:
            g.add_edge(local[u], local[v])
        last = local[m - 1]
    return g, block_cut_tree(g)


def gnp(n: int, p: float, seed: int) -> Trigraph:
    rng = random.Random(seed)
    return Trigraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


# ---------------------------------------------------------------- random corpora
BLOCK_MENU = {
    "K2": [(0, 1)],
    "K3": [(0, 1), (1, 2), (0, 2)],
    "C4": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "K4": list(itertools.combinations(range(4), 2)),
    "diamond": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    "C5": [(i, (i + 1) % 5) for i in range(5)],
}


def random_block_glued(max_vertices: int, seed: int) -> tuple[Trigraph, BlockCutTree]:
    """Blocks from a small menu glued at random existing vertices."""
    rng = random.Random(seed)
    names = sorted(BLOCK_MENU)
    g = Trigraph()
    nxt = 0
    first = True
    while True:
        choices = [nm for nm in names if _block_size(nm) - (0 if first else 1) + nxt <= max_vertices]
        if not choices or (not first and rng.random() < 0.25):
            break
        nm = rng.choice(choices)
        edges = BLOCK_MENU[nm]
        m = _block_size(nm)
        perm = list(range(m))
        rng.shuffle(perm)
        local = {}
        start = 0
        if not first:
            local[perm[0]] = rng.randrange(nxt)
            start = 1
        for v in perm[start:]:
            local[v] = nxt
            nxt += 1
        for u, v in edges:
            g.add_edge(local[u], local[v])
        first = False
    return g, block_cut_tree(g)


def _block_size(name: str) -> int:
    return max(max(e) for e in BLOCK_MENU[name]) + 1


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, n)]


def random_strong_tree(k: int, max_vertices: int, seed: int, p_in: float = 0.5,
                       p_cross: float = 0.4) -> tuple[Trigraph, StrongTreeDecomposition]:
    """Random graph with a strong tree decomposition of width exactly ``k``."""
    rng = random.Random(seed)
    sizes = []
    total = 0
    while True:
        s = rng.randint(1, k)
        if total + s > max_vertices:
            break
        sizes.append(s)
        total += s
        if len(sizes) >= 2 and rng.random() < 0.12:
            break
    if not sizes or max(sizes) < k:
        sizes.append(k)
    nodes = len(sizes)
    tree = random_tree(nodes, rng)
    bags = {}
    nxt = 0
    for t, s in enumerate(sizes, start=1):
        bags[t] = list(range(nxt, nxt + s))
        nxt += s
    g = Trigraph(range(nxt))
    for b in bags.values():
        for u, v in itertools.combinations(b, 2):
            if rng.random() < p_in:
                g.add_edge(u, v)
    for a, b in tree:
        for u in bags[a + 1]:
            for v in bags[b + 1]:
                if rng.random() < p_cross:
                    g.add_edge(u, v)
    std = StrongTreeDecomposition(bags, [(a + 1, b + 1) for a, b in tree], root=1)
    return g, std


def random_tree_decomposition(width: int, adhesion: int, nodes: int, seed: int,
                              p_edge: float = 0.5) -> tuple[Trigraph, TreeDecomposition]:
    """Random graph together with a tree decomposition of the given width and adhesion bound.

    Every bag has at most ``width + 1`` vertices and every separator at most
    ``adhesion`` vertices (the realised values may be smaller).
    """
    rng = random.Random(seed)
    bags: dict[int, list[int]] = {}
    edges = []
    nxt = 0
    size = rng.randint(max(1, min(adhesion, width + 1)), width + 1)
    bags[1] = list(range(size))
    nxt = size
    for t in range(2, nodes + 1):
        s = rng.randrange(1, t)
        parent = bags[s]
        sep_size = rng.randint(1, min(adhesion, len(parent), width))
        sep = rng.sample(parent, sep_size)
        fresh = rng.randint(1, width + 1 - sep_size)
        bags[t] = sorted(sep) + list(range(nxt, nxt + fresh))
        nxt += fresh
        edges.append((s, t))
    g = Trigraph(range(nxt))
    for b in bags.values():
        for u, v in itertools.combinations(b, 2):
            if rng.random() < p_edge:
                g.add_edge(u, v)
    return g, TreeDecomposition(bags, edges, root=1)


FAMILIES = ("paley", "subdivided_clique", "complete", "path", "cycle", "star", "caterpillar",
            "complete_binary", "grid", "gnp", "block_glue")


def generate(family: str, **params):
    """Dispatch by family name. Returns ``(graph, decomposition_or_None)``."""
    if family == "paley":
        return paley(int(params["q"]))
    if family == "subdivided_clique":
        return subdivided_clique(int(params["n"])), None
    if family == "complete":
        return complete(int(params["n"])), None
    if family == "path":
        return path(int(params["n"])), None
    if family == "cycle":
        return cycle(int(params["n"])), None
    if family == "star":
        return star(int(params["n"])), None
    if family == "caterpillar":
        return caterpillar(int(params["spine"]), int(params["legs"])), None
    if family == "complete_binary":
        return complete_binary(int(params["depth"])), None
    if family == "grid":
        return grid(int(params["rows"]), int(params["cols"])), None
    if family == "gnp":
        return gnp(int(params["n"]), float(params["p"]), int(params.get("seed", 0))), None
    if family == "block_glue":
        names = params["blocks"]
        return block_glue([BLOCK_MENU[nm] for nm in names], params.get("attach"))
    raise DomainError(f"unknown family {family!r}")


def random_gadget_instance(k: int, seed: int, p_edge: float = 0.5) -> tuple[Trigraph, TreeDecomposition]:
    """Root bag with child separators of size ``k`` that form an antichain.

    Every child bag holds its separator plus one fresh vertex per realised
    neighbourhood in the separator (all of them with probability 1/2, a
    random nonempty subfamily otherwise). No root vertex lies in more than
    ``2^k - 1`` separators.
    """
    rng = random.Random(seed)
    size = rng.randint(k + 1, 2 * k + 2)
    root = list(range(size))
    nxt = size
    bags = {1: root}
    edges = []
    load = {v: 0 for v in root}
    seps: list[frozenset[int]] = []
    for _ in range(rng.randint(1, 4)):
        free = [v for v in root if load[v] < 2 ** k - 1]
        if len(free) < k:
            break
        s = frozenset(rng.sample(free, k))
        if s in seps:
            continue
        seps.append(s)
        for v in s:
            load[v] += 1
    g = Trigraph(range(size))
    for u, v in itertools.combinations(root, 2):
        if rng.random() < p_edge:
            g.add_edge(u, v)
    order = {}
    for i, s in enumerate(seps, start=2):
        members = sorted(s)
        masks = list(range(2 ** k))
        if rng.random() >= 0.5:
            masks = sorted(rng.sample(masks, rng.randint(1, len(masks))))
        fresh = []
        for m in masks:
            g.add_vertex(nxt)
            for j, v in enumerate(members):
                if m >> j & 1:
                    g.add_edge(nxt, v)
            fresh.append(nxt)
            nxt += 1
        bags[i] = members + fresh
        edges.append((1, i))
        order[i] = s
    return g, TreeDecomposition(bags, edges, root=1)
