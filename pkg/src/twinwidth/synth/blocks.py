"""Contraction sequences assembled from sequences of the biconnected components."""
from __future__ import annotations

from collections import deque
from typing import Mapping

from .. import bounds, oracle
from ..decomp import BlockCutTree, block_cut_tree
from ..errors import DecompositionError
from ..gadgets import build_pendant_hat, pendant_map
from ..sequence import ContractionSequence, verify_width
from ..trigraph import Trigraph
from ._check import ensure_width
from .lifts import avoid_vertex_lift, restrict_sequence
from .tracker import PartTracker


def _check_bct(g: Trigraph, bct: BlockCutTree) -> None:
    covered = set()
    for b in bct.blocks:
        if not b <= set(g.vertices):
            raise DecompositionError("block contains vertices outside the graph")
        covered |= b
    if covered != set(g.vertices):
        raise DecompositionError("blocks do not cover every vertex")
    for u, v in g.black_edges() + g.red_edges():
        if not any(u in b and v in b for b in bct.blocks):
            raise DecompositionError(f"edge ({u}, {v}) lies in no block")
    for c in bct.cut_vertices:
        if len(bct.blocks_at(c)) < 2:
            raise DecompositionError(f"cut vertex {c} lies in fewer than two blocks")


def _leaf_first(bct: BlockCutTree, root: int, child_blocks) -> list[int]:
    order = []
    queue = deque([root])
    while queue:
        c = queue.popleft()
        for i in child_blocks.get(c, []):
            order.append(i)
            for w in sorted(bct.blocks[i] & bct.cut_vertices):
                if w != c:
                    queue.append(w)
    return order[::-1]


def compose_blocks(g: Trigraph, bct: BlockCutTree | None = None,
                   per_block: Mapping[int, ContractionSequence] | None = None, *,
                   limit: int = oracle.PLAIN_LIMIT) -> ContractionSequence:
    """Complete sequence of a connected graph from sequences of its blocks.

    Works on the graph with a red pendant ``r_v`` at every vertex. Blocks are
    removed leaf first: the block minus its parent cut vertex is collapsed
    with :func:`avoid_vertex_lift`, and before each of those merges the two
    pendants of the merged parts are merged. The collapsed block and its
    pendants then fold into the pendant of the cut vertex. The result is
    restricted back to ``g``.

    ``per_block`` maps block indices to sequences of the induced block; missing
    blocks get a width-minimal sequence from the oracle (or a flagged greedy
    one above ``limit``).
    """
    if len(g) <= 1:
        return ContractionSequence([])
    if bct is None:
        bct = block_cut_tree(g)
    _check_bct(g, bct)
    per_block = dict(per_block or {})
    hat = build_pendant_hat(g)
    pend = pendant_map(g)
    root, parent_cut, child_blocks = bct.rooted()
    tracker = PartTracker(hat.vertices)
    worst = 0
    for i in _leaf_first(bct, root, child_blocks):
        block = bct.blocks[i]
        top = parent_cut[i]
        sub = g.induced(block)
        seq = per_block.get(i)
        if seq is None:
            seq = oracle.best_sequence(sub, limit=limit)
        tracker.heuristic |= seq.heuristic
        worst = max(worst, verify_width(sub, seq).width)
        if len(block) == 1:
            continue
        for a, b in avoid_vertex_lift(sub, top, seq):
            tracker.merge(pend[a], pend[b])
            tracker.merge(a, b)
        body = min(block - {top})
        tracker.merge(body, pend[body])
        tracker.merge(body, pend[top])
    tracker.merge(root, pend[root])
    full = tracker.sequence()
    out = restrict_sequence(hat, g, full)
    ensure_width(g, out, bounds.cap("thm2_upper", t=worst), "compose_blocks")
    return out
