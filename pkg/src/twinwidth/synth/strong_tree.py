"""Contraction sequences from strong tree decompositions.

Bags are collapsed from the deepest leaves upwards. A bag of size one is
*merged*. Each round looks at a deepest leaf ``l`` and its parent ``p``
(all children of ``p`` are then leaves) and runs the first rule that
applies:

1. two merged children of ``p``: contract their vertices;
2. ``l`` is the only child and merged: collapse ``B_p``, then contract the
   result with ``l``'s vertex;
3. an unmerged child and at most one merged child: collapse the unmerged
   child's bag.

Collapsing a bag uses a width-minimal sequence that only merges inside the
bag, found by the exact oracle.
"""
from __future__ import annotations

from .. import bounds, oracle
from ..decomp import StrongTreeDecomposition, validate_std
from ..errors import DecompositionError, InconclusiveError, InternalInvariantError, ResourceLimitError
from ..sequence import ContractionSequence, Replay
from ..trigraph import Trigraph
from ._check import ensure_width


class _State:
    def __init__(self, g: Trigraph, std: StrongTreeDecomposition, limit: int, budget: int):
        self.rp = Replay(g)
        self.limit = limit
        self.budget = budget
        self.root = std.root
        self.bags = {t: set(b) for t, b in std.bags.items()}
        par = std.parent
        self.parent = dict(par)
        self.children = {t: set() for t in self.bags}
        for t, p in par.items():
            if p is not None:
                self.children[p].add(t)
        self.depth = {t: std.depth(t) for t in self.bags}
        self.steps: list[tuple[int, int]] = []
        self.heuristic = False

    def merged(self, t: int) -> bool:
        return len(self.bags[t]) == 1

    def only(self, t: int) -> int:
        (v,) = self.bags[t]
        return v

    def contract(self, a: int, b: int) -> int:
        s, t = (a, b) if a < b else (b, a)
        self.rp.step(s, t)
        self.steps.append((s, t))
        return s

    def collapse(self, t: int) -> int:
        """Contract the bag of ``t`` to one vertex with a width-minimal in-bag sequence."""
        u = sorted(self.bags[t])
        if len(u) > 1:
            g = self.rp.graph
            try:
                _, seq = oracle.exact_tww(g, within=u, local=True, limit=self.limit,
                                          budget=self.budget, threads=1)
            except (ResourceLimitError, InconclusiveError):
                seq = _greedy_within(g, u)
                self.heuristic = True
            for a, b in seq:
                self.rp.step(a, b)
                self.steps.append((a, b))
                self.bags[t].discard(b)
        return self.only(t)

    def remove(self, t: int) -> None:
        p = self.parent.pop(t)
        self.children[p].discard(t)
        del self.bags[t], self.children[t], self.depth[t]


def _greedy_within(g: Trigraph, u):
    try:
        return oracle.greedy_sequence(g, within=u, local=True)[1]
    except ResourceLimitError:
        return oracle._python_greedy(g, within=u)


def strong_tree_contract(g: Trigraph, std: StrongTreeDecomposition, *,
                         limit: int = oracle.PLAIN_LIMIT, budget: int = oracle.DEFAULT_BUDGET) -> ContractionSequence:
    """Complete contraction sequence of ``g`` driven by a strong tree decomposition.

    The result is checked against the strong-tree-width bound unless some
    bag was too large for the exact oracle (then it is flagged heuristic).
    """
    bad = validate_std(g, std)
    if bad:
        raise DecompositionError(f"invalid strong tree decomposition: {bad[0]}")
    st = _State(g, std, limit, budget)
    # empty bags carry no vertices; splice them out first
    for t in sorted(st.bags, key=lambda n: -st.depth[n]):
        if not st.bags[t] and t != st.root and not st.children[t]:
            st.remove(t)
    while len(st.bags) >= 2:
        leaves = [t for t in st.bags if t != st.root and not st.children[t]]
        leaf = min(leaves, key=lambda t: (-st.depth[t], t))
        p = st.parent[leaf]
        kids = sorted(st.children[p])
        if any(st.children[c] for c in kids):
            raise InternalInvariantError(f"parent {p} of a deepest leaf has a non-leaf child")
        merged = [c for c in kids if st.merged(c)]
        unmerged = [c for c in kids if not st.merged(c)]
        if len(merged) >= 2:
            a, b = merged[0], merged[1]
            x = st.contract(st.only(a), st.only(b))
            st.bags[a] = {x}
            st.remove(b)
        elif len(kids) == 1 and st.merged(leaf):
            v = st.only(leaf)
            x = st.contract(st.collapse(p), v) if st.bags[p] else v
            st.bags[p] = {x}
            st.remove(leaf)
        elif unmerged and len(merged) <= 1:
            st.collapse(unmerged[0])
        else:
            raise InternalInvariantError(f"no rule applies at leaf {leaf} below {p}")
    rest = st.rp.graph
    if len(rest) > 1:
        try:
            _, seq = oracle.exact_tww(rest, limit=limit, budget=budget, threads=1)
        except (ResourceLimitError, InconclusiveError):
            seq = oracle.best_sequence(rest, limit=0)
            st.heuristic = True
        for a, b in seq:
            st.rp.step(a, b)
            st.steps.append((a, b))
    out = ContractionSequence(st.steps, st.heuristic)
    k = max(std.width, 1)
    ensure_width(g, out, bounds.cap("thm1", k=k), "strong_tree_contract")
    return out
