"""Tree decompositions, strong tree decompositions and block-cut trees."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DecompositionError
from .trigraph import Trigraph


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    witness: tuple = ()


class _BagTree:
    """Bags on the nodes of a tree, rooted at ``root`` (default: smallest node id)."""

    def __init__(self, bags: dict[int, Iterable[int]], edges: Iterable[tuple[int, int]] = (),
                 root: int | None = None):
        self.bags: dict[int, frozenset[int]] = {t: frozenset(b) for t, b in bags.items()}
        self.edges: list[tuple[int, int]] = [(int(a), int(b)) for a, b in edges]
        if root is None and self.bags:
            root = min(self.bags)
        self.root = root
        self._parent: dict[int, int | None] | None = None

    # tree structure ------------------------------------------------------
    def nodes(self) -> list[int]:
        return sorted(self.bags)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {t: set() for t in self.bags}
        for a, b in self.edges:
            if a in adj and b in adj:
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def is_tree(self) -> bool:
        if not self.bags:
            return True
        if len(self.edges) != len(self.bags) - 1:
            return False
        if any(a not in self.bags or b not in self.bags or a == b for a, b in self.edges):
            return False
        adj = self.adjacency()
        seen = {self.root}
        stack = [self.root]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.bags)

    @property
    def parent(self) -> dict[int, int | None]:
        if self._parent is None:
            if not self.is_tree():
                raise DecompositionError("decomposition tree is not a tree")
            adj = self.adjacency()
            par: dict[int, int | None] = {self.root: None}
            queue = deque([self.root])
            while queue:
                u = queue.popleft()
                for w in sorted(adj[u]):
                    if w not in par:
                        par[w] = u
                        queue.append(w)
            self._parent = par
        return self._parent

    def children(self, t: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == t)

    def depth(self, t: int) -> int:
        d = 0
        par = self.parent
        while par[t] is not None:
            t = par[t]
            d += 1
        return d

    def subtree(self, t: int) -> list[int]:
        out = [t]
        i = 0
        while i < len(out):
            out.extend(self.children(out[i]))
            i += 1
        return out

    def postorder(self) -> list[int]:
        """Children before parents; siblings by ascending id."""
        out = []
        stack = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                out.append(t)
                continue
            stack.append((t, True))
            for c in reversed(self.children(t)):
                stack.append((c, False))
        return out

    def vertices_below(self, t: int) -> frozenset[int]:
        out: set[int] = set()
        for s in self.subtree(t):
            out |= self.bags[s]
        return frozenset(out)


class TreeDecomposition(_BagTree):
    """Classical tree decomposition with rooted-tree helpers."""

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @property
    def adhesion(self) -> int:
        return max((len(self.bags[a] & self.bags[b]) for a, b in self.edges), default=0)

    def separator(self, t: int) -> frozenset[int]:
        """Parent separator ``B_t & B_parent``; empty for the root."""
        p = self.parent[t]
        return frozenset() if p is None else self.bags[t] & self.bags[p]

    def child_separators(self, t: int) -> list[tuple[int, frozenset[int]]]:
        return [(c, self.separator(c)) for c in self.children(t)]

    def maximal_child_separators(self, t: int) -> list[frozenset[int]]:
        """Distinct child separators not strictly contained in another one."""
        seps = {s for _, s in self.child_separators(t)}
        keep = [s for s in seps if not any(s < o for o in seps)]
        return sorted(keep, key=lambda s: (sorted(s), len(s)))

    def copy(self) -> "TreeDecomposition":
        return TreeDecomposition(dict(self.bags), list(self.edges), self.root)

    def __repr__(self) -> str:
        return f"TreeDecomposition(nodes={len(self.bags)}, width={self.width}, adhesion={self.adhesion})"


class StrongTreeDecomposition(_BagTree):
    """Pairwise disjoint bags; every edge lies in a bag or between adjacent bags."""

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0)

    def bag_of(self) -> dict[int, int]:
        return {v: t for t, b in self.bags.items() for v in b}

    def copy(self) -> "StrongTreeDecomposition":
        return StrongTreeDecomposition(dict(self.bags), list(self.edges), self.root)

    def __repr__(self) -> str:
        return f"StrongTreeDecomposition(nodes={len(self.bags)}, width={self.width})"


def _tree_violations(t: _BagTree) -> list[Violation]:
    out = []
    for a, b in t.edges:
        if a not in t.bags or b not in t.bags:
            out.append(Violation("tree", f"tree edge {a}-{b} uses an unknown node", (a, b)))
        elif a == b:
            out.append(Violation("tree", f"tree edge {a}-{b} is a loop", (a, b)))
    if not out and not t.is_tree():
        out.append(Violation("tree", "nodes and tree edges do not form a tree", ()))
    return out


def validate_td(g: Trigraph, td: TreeDecomposition) -> list[Violation]:
    """All violated tree-decomposition conditions; empty list means valid."""
    out = _tree_violations(td)
    verts = set(g.vertices)
    for t, bag in td.bags.items():
        for v in sorted(bag - verts):
            out.append(Violation("unknown-vertex", f"bag {t} contains {v}, which is not in the graph", (v, t)))
    where: dict[int, list[int]] = {v: [] for v in verts}
    for t, bag in td.bags.items():
        for v in bag:
            if v in where:
                where[v].append(t)
    for v in sorted(verts):
        if not where[v]:
            out.append(Violation("coverage", f"vertex {v} is in no bag", (v,)))
    tree_ok = not out or all(x.kind != "tree" for x in out)
    if tree_ok:
        adj = td.adjacency()
        for v in sorted(verts):
            nodes = set(where[v])
            if len(nodes) <= 1:
                continue
            start = min(nodes)
            seen = {start}
            stack = [start]
            while stack:
                for w in adj[stack.pop()]:
                    if w in nodes and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != nodes:
                out.append(Violation("subtree", f"nodes containing vertex {v} are not connected",
                                     (v, tuple(sorted(nodes - seen)))))
    for u, v in g.black_edges() + g.red_edges():
        if not any(u in b and v in b for b in td.bags.values()):
            out.append(Violation("edge", f"edge {u}-{v} is in no bag", (u, v)))
    return out


def validate_std(g: Trigraph, std: StrongTreeDecomposition) -> list[Violation]:
    """All violated strong-tree-decomposition conditions; empty list means valid."""
    out = _tree_violations(std)
    verts = set(g.vertices)
    owner: dict[int, int] = {}
    for t in sorted(std.bags):
        for v in sorted(std.bags[t]):
            if v not in verts:
                out.append(Violation("unknown-vertex", f"bag {t} contains {v}, which is not in the graph", (v, t)))
            elif v in owner:
                out.append(Violation("disjoint", f"vertex {v} is in bags {owner[v]} and {t}", (v, owner[v], t)))
            else:
                owner[v] = t
    for v in sorted(verts - owner.keys()):
        out.append(Violation("coverage", f"vertex {v} is in no bag", (v,)))
    adj = std.adjacency()
    for u, v in g.black_edges() + g.red_edges():
        if u not in owner or v not in owner:
            continue
        a, b = owner[u], owner[v]
        if a != b and b not in adj.get(a, ()):
            out.append(Violation("edge", f"edge {u}-{v} joins non-adjacent bags {a} and {b}", (u, v, a, b)))
    return out


def normalize_siblings(td: TreeDecomposition) -> TreeDecomposition:
    """Re-hang nodes so that nodes with equal parent separators are siblings.

    For each separator, every node carrying it is attached to the parent of
    the highest such node. Bags, width and adhesion are unchanged.
    """
    cur = td.copy()
    seps = sorted({cur.separator(t) for t in cur.nodes() if t != cur.root}, key=lambda s: (len(s), sorted(s)))
    for sep in seps:
        carriers = [t for t in cur.nodes() if t != cur.root and cur.separator(t) == sep]
        if len(carriers) < 2:
            continue
        top = min(carriers, key=lambda t: (cur.depth(t), t))
        anchor = cur.parent[top]
        par = dict(cur.parent)
        for t in carriers:
            par[t] = anchor
        edges = sorted((min(c, p), max(c, p)) for c, p in par.items() if p is not None)
        cur = TreeDecomposition(cur.bags, edges, cur.root)
    return cur


# ---------------------------------------------------------------- block-cut tree
@dataclass
class BlockCutTree:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]
    # bipartite incidences (block index, cut vertex)
    edges: list[tuple[int, int]] = field(default_factory=list)

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def rooted(self, root: int | None = None):
        """Parent structure rooted at a cut vertex (smallest one by default).

        Returns ``(root, parent_cut, child_blocks)`` where ``parent_cut[i]`` is
        the cut vertex above block ``i`` (the root vertex for top blocks) and
        ``child_blocks[c]`` lists the blocks below cut vertex ``c``.
        """
        if root is None:
            root = min(self.cut_vertices) if self.cut_vertices else min(self.blocks[0])
        parent_cut: dict[int, int] = {}
        child_blocks: dict[int, list[int]] = {}
        queue = deque([root])
        seen_cut = {root}
        while queue:
            c = queue.popleft()
            kids = [i for i in self.blocks_at(c) if i not in parent_cut]
            child_blocks[c] = kids
            for i in kids:
                parent_cut[i] = c
                for w in sorted(self.blocks[i] & self.cut_vertices):
                    if w not in seen_cut:
                        seen_cut.add(w)
                        queue.append(w)
        return root, parent_cut, child_blocks


def block_cut_tree(g: Trigraph) -> BlockCutTree:
    """Biconnected components and cut vertices by an iterative lowpoint DFS."""
    verts = sorted(g.vertices)
    if not verts:
        return BlockCutTree([], frozenset(), [])
    if len(g.components()) > 1:
        raise DecompositionError("block_cut_tree needs a connected graph; process components separately")
    if len(verts) == 1:
        return BlockCutTree([frozenset(verts)], frozenset(), [])
    nbrs = {v: sorted(g.neighbors(v)) for v in verts}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    root = verts[0]
    disc[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack = [(root, None, iter(nbrs[root]))]
    while stack:
        u, par, it = stack[-1]
        advanced = False
        for w in it:
            if w == par:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(nbrs[w])))
                advanced = True
                break
            if disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if par is None:
            continue
        low[par] = min(low[par], low[u])
        if low[u] >= disc[par]:
            if par == root:
                root_children += 1
            else:
                cuts.add(par)
            comp: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                comp.update((a, b))
                if (a, b) == (par, u):
                    break
            blocks.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    blocks.sort(key=lambda b: sorted(b))
    cut_set = frozenset(cuts)
    edges = [(i, c) for i, b in enumerate(blocks) for c in sorted(b & cut_set)]
    return BlockCutTree(blocks, cut_set, edges)
