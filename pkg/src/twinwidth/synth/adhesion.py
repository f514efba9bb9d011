"""Sequences from tree decompositions of bounded adhesion.

Each node ``t`` contributes a sequence of its neighbourhood-clique part
(:func:`~twinwidth.gadgets.tilde_gadget`) that respects the parent separator
``S_t``. :func:`compose_adhesion` splices those together bottom-up: once all
children of ``t`` are done, the leftover parts below each child are exactly
the gadget vertices of ``t``'s part.
"""
from __future__ import annotations

from typing import Mapping

from .. import bounds, oracle
from ..decomp import TreeDecomposition, normalize_siblings, validate_td
from ..errors import BoundViolation, DecompositionError, InternalInvariantError, PreconditionError
from ..gadgets import TildeGadget, tilde_gadget
from ..sequence import ContractionSequence, Replay, check_respects, verify_width
from ..trigraph import Trigraph
from ._check import ensure_width
from .tracker import PartTracker


def compose_adhesion(g: Trigraph, td: TreeDecomposition,
                     part_sequences: Mapping[int, ContractionSequence]) -> ContractionSequence:
    """Complete sequence of ``g`` from per-node sequences of the parts ``P~_t``.

    ``part_sequences[t]`` must be a complete sequence of
    ``tilde_gadget(g, td, t).trigraph`` respecting ``S_t``, written in that
    trigraph's vertex ids.
    """
    bad = validate_td(g, td)
    if bad:
        raise DecompositionError(f"invalid tree decomposition: {bad[0]}")
    tracker = PartTracker(g.vertices)
    worst = 0
    for t in td.postorder():
        gad = tilde_gadget(g, td, t)
        seq = part_sequences.get(t)
        if seq is None:
            raise PreconditionError(f"no sequence for part {t}")
        rep = check_respects(gad.trigraph, seq, gad.separator)
        if not rep.respects or not rep.complete:
            raise PreconditionError(f"sequence of part {t} is not complete and respecting its separator")
        tracker.heuristic |= seq.heuristic
        worst = max(worst, verify_width(gad.trigraph, seq).width)
        where = {v: v for v in gad.part}
        for grp in gad.groups:
            sep = grp.separator
            leftover = {}
            for u in td.vertices_below(grp.child) - sep:
                m = frozenset(g.neighbors(u) & sep)
                r = tracker.rep(u)
                if leftover.setdefault(m, r) != r:
                    raise InternalInvariantError(f"child {grp.child} left two parts with neighbourhood {sorted(m)}")
            for m, vid in grp.vertex_of.items():
                where[vid] = leftover[m]
        for a, b in seq:
            tracker.merge(where[a], where[b])
    out = tracker.sequence()
    ensure_width(g, out, worst, "compose_adhesion")
    return out


def _s_trace(h: Trigraph, x: int, sep: frozenset[int]) -> frozenset[int]:
    return frozenset(h.neighbors(x) & sep)


def contract_tilde_bounded(gad: TildeGadget, k: int, w: int, *,
                           limit: int = oracle.RESPECT_LIMIT) -> ContractionSequence:
    """Complete sequence of ``P~_t`` respecting ``S_t`` for width ``w`` and adhesion ``k``.

    The children's gadget sets are folded one at a time into an accumulated
    set ``B``: first the set's own vertices with equal traces on ``S_t`` are
    merged, then each survivor is merged into the vertex of ``B`` with the
    same trace. The vertices left outside ``S_t`` are then collapsed by
    trace, using the exact oracle when at most ``limit`` of them remain and a
    greedy order otherwise; any order stays within the bound.
    """
    h = gad.trigraph
    st = gad.separator
    if k < 1:
        raise PreconditionError("adhesion bound k must be at least 1")
    if len(st) > k:
        raise PreconditionError(f"parent separator has {len(st)} > k vertices")
    if len(gad.part) > w + 1:
        raise PreconditionError(f"bag has {len(gad.part)} > w + 1 vertices")
    for grp in gad.groups:
        if len(grp.separator) > k:
            raise PreconditionError(f"child separator of {grp.child} has more than k vertices")
        if st and grp.separator == st:
            raise PreconditionError(f"child {grp.child} repeats the parent separator; normalize first")
    tracker = PartTracker(h.vertices)
    acc: dict[frozenset[int], int] = {}
    for grp in gad.groups:
        folded: dict[frozenset[int], int] = {}
        for x in sorted(grp.vertex_of.values()):
            key = _s_trace(h, x, st)
            if key in folded:
                tracker.merge(folded[key], x)
            else:
                folded[key] = x
        for key, x in sorted(folded.items(), key=lambda kv: kv[1]):
            if key in acc:
                acc[key] = tracker.merge(acc[key], x)
            else:
                acc[key] = x
    head = tracker.sequence()
    rp = Replay(h)
    for a, b in head:
        rp.step(a, b)
    rest = rp.graph
    free = len(rest) - len(st)
    if free <= limit:
        _, tail = oracle.exact_tww(rest, respect=sorted(st), limit=limit, threads=1)
    else:
        tail = oracle.greedy_sequence(rest, respect=sorted(st))[1]
    # the bound holds for every order of this last phase, so a greedy tail is not flagged
    out = ContractionSequence(head.steps + list(tail.steps), False)
    rep = check_respects(h, out, st)
    if not rep.respects or not rep.complete:
        raise BoundViolation("tilde contraction lost its respecting property")
    ensure_width(h, out, bounds.cap("lemma_width_adhesion", k=k, w=w), "contract_tilde_bounded")
    return out


def adhesion_pipeline(g: Trigraph, td: TreeDecomposition, *, k: int | None = None,
                      w: int | None = None) -> tuple[ContractionSequence, int]:
    """Normalize ``td``, contract every part with :func:`contract_tilde_bounded`, compose.

    Returns the sequence and the bound it was checked against.
    """
    td = normalize_siblings(td)
    k = max(td.adhesion, 1) if k is None else k
    w = td.width if w is None else w
    parts = {t: contract_tilde_bounded(tilde_gadget(g, td, t), k, w) for t in td.nodes()}
    seq = compose_adhesion(g, td, parts)
    cap = bounds.cap("thm6", k=k, w=w)
    ensure_width(g, seq, cap, "adhesion_pipeline")
    return seq, cap
