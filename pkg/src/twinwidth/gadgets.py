"""Part gadgets for tree decompositions.

For a node ``t`` of a rooted tree decomposition the part ``P_t = G[B_t]`` is
augmented in one of three ways:

* neighbourhood clique (``build_tilde``): one vertex per neighbourhood that
  the vertices below a child leave on the child's separator; each child's
  vertices form a red clique and are joined black to their neighbourhood.
* apex (``build_hat``): one vertex per subset-maximal child separator,
  joined red to the separator.
* red torso (``build_red_torso``): maximal child separators completed to
  red cliques.

New vertices get ids above the largest vertex id of ``G``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .decomp import TreeDecomposition
from .errors import DecompositionError, PreconditionError
from .trigraph import BLACK, RED, Trigraph


@dataclass
class TildeGroup:
    child: int
    separator: frozenset[int]
    # neighbourhood on the separator -> gadget vertex id
    vertex_of: dict[frozenset[int], int]


@dataclass
class TildeGadget:
    trigraph: Trigraph
    node: int
    part: frozenset[int]
    separator: frozenset[int]
    groups: list[TildeGroup]

    def gadget_vertices(self) -> list[int]:
        return [v for grp in self.groups for v in grp.vertex_of.values()]


def _check_node(td: TreeDecomposition, t: int) -> None:
    if t not in td.bags:
        raise DecompositionError(f"node {t} is not in the tree decomposition")


def _mask(m: Iterable[int], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return sum(1 << pos[v] for v in m)


def child_neighbourhoods(g: Trigraph, td: TreeDecomposition, c: int) -> list[frozenset[int]]:
    """Distinct neighbourhoods in ``S_c`` of the vertices of ``G_c - S_c``, by bitmask order."""
    sep = td.separator(c)
    below = td.vertices_below(c) - sep
    seen = {frozenset(g.neighbors(v) & sep) for v in below}
    order = sorted(sep)
    return sorted(seen, key=lambda m: _mask(m, order))


def tilde_gadget(g: Trigraph, td: TreeDecomposition, t: int) -> TildeGadget:
    _check_node(td, t)
    part = td.bags[t]
    h = g.induced(part)
    nxt = g.max_vertex() + 1
    groups = []
    for c in td.children(t):
        sep = td.separator(c)
        vertex_of = {}
        for m in child_neighbourhoods(g, td, c):
            vertex_of[m] = nxt
            h.add_vertex(nxt)
            for s in m:
                h.add_edge(nxt, s, BLACK)
            nxt += 1
        ids = list(vertex_of.values())
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                h.add_edge(a, b, RED)
        groups.append(TildeGroup(c, sep, vertex_of))
    return TildeGadget(h, t, part, td.separator(t), groups)


def build_tilde(g: Trigraph, td: TreeDecomposition, t: int) -> Trigraph:
    """The part at ``t`` with a red neighbourhood clique per child."""
    return tilde_gadget(g, td, t).trigraph


@dataclass
class HatGadget:
    trigraph: Trigraph
    node: int
    part: frozenset[int]
    # maximal separator -> apex vertex id
    apex_of: dict[frozenset[int], int]


def _maximal(seps: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    uniq = {frozenset(s) for s in seps}
    keep = [s for s in uniq if not any(s < o for o in uniq)]
    return sorted(keep, key=lambda s: (sorted(s), len(s)))


def hat_gadget(g: Trigraph, td: TreeDecomposition, t: int,
               separators: Iterable[Iterable[int]] | None = None) -> HatGadget:
    _check_node(td, t)
    part = td.bags[t]
    seps = td.maximal_child_separators(t) if separators is None else _maximal(separators)
    h = g.induced(part)
    nxt = g.max_vertex() + 1
    apex_of = {}
    for s in seps:
        if not s <= part:
            raise PreconditionError(f"separator {sorted(s)} is not inside bag {t}")
        h.add_vertex(nxt)
        for v in s:
            h.add_edge(nxt, v, RED)
        apex_of[s] = nxt
        nxt += 1
    return HatGadget(h, t, part, apex_of)


def build_hat(g: Trigraph, td: TreeDecomposition, t: int,
              separators: Iterable[Iterable[int]] | None = None) -> Trigraph:
    """The part at ``t`` plus one red apex per subset-maximal child separator.

    ``separators`` overrides the child separators (e.g. the separators a
    decomposition was split along, read from a sidecar file).
    """
    return hat_gadget(g, td, t, separators).trigraph


def build_red_torso(g: Trigraph, td: TreeDecomposition, t: int,
                    separators: Iterable[Iterable[int]] | None = None,
                    include_parent: bool = False) -> Trigraph:
    """The part at ``t`` with every maximal child separator completed to a red clique.

    Black edges inside such a separator are recoloured red. With
    ``include_parent`` the parent separator is completed as well.
    """
    _check_node(td, t)
    seps = list(td.maximal_child_separators(t) if separators is None else _maximal(separators))
    if include_parent and td.separator(t):
        seps.append(td.separator(t))
    h = g.induced(td.bags[t])
    for s in seps:
        members = sorted(s)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                h.add_edge(a, b, RED)
    return h


def pendant_map(g: Trigraph) -> dict[int, int]:
    """Vertex -> id of its pendant copy in :func:`build_pendant_hat`."""
    base = g.max_vertex() + 1
    return {v: base + i for i, v in enumerate(sorted(g.vertices))}


def build_pendant_hat(g: Trigraph) -> Trigraph:
    """``G`` plus one new vertex per vertex, attached to it by a red edge."""
    h = g.copy()
    for v, r in pendant_map(g).items():
        h.add_edge(v, r, RED)
    return h


def mark_virtual_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]],
                       virtual: Iterable[tuple[int, int]], red: Iterable[tuple[int, int]] = ()) -> Trigraph:
    """Simple trigraph from a multigraph component whose virtual edges are coloured red.

    Parallel edges collapse to one edge, red iff some copy was virtual or red.
    """
    edges = [tuple(e) for e in edges]
    present = {frozenset(e) for e in edges} | {frozenset(e) for e in red}
    virtual = [tuple(e) for e in virtual]
    for e in virtual:
        if frozenset(e) not in present:
            raise PreconditionError(f"virtual edge {e} is not an edge of the component")
    h = Trigraph(vertices)
    for u, v in edges:
        h.add_edge(u, v, BLACK)
    for u, v in list(red) + virtual:
        h.add_edge(u, v, RED)
    return h
