"""Moving between the three part gadgets.

:func:`tilde_to_hat` shrinks every neighbourhood clique of ``P~_t`` to a
single vertex, which leaves (a subtrigraph of) the apex part ``P^_t``.
:func:`hat_from_torso` turns a sequence of the red torso into a complete
sequence of the apex part, merging apex vertices as soon as one's
neighbourhood is swallowed by another's.
"""
from __future__ import annotations

from typing import Iterable

from .. import bounds
from ..errors import BoundViolation, InvalidSequenceError
from ..gadgets import HatGadget, TildeGadget
from ..sequence import ContractionSequence, Replay, verify_width
from ..trigraph import RED, Trigraph
from ._check import ensure_width
from .tracker import PartTracker


def _maximal(seps: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    uniq = set(seps)
    return sorted((s for s in uniq if not any(s < o for o in uniq)), key=sorted)


def tilde_to_hat(gad: TildeGadget, k: int | None = None) -> ContractionSequence:
    """Partial sequence collapsing each child's gadget clique into one vertex.

    Children whose separators lie inside a common maximal separator are
    first merged class by class. Then, for each group with separator
    ``s_1 < ... < s_k`` and first vertex ``x`` (trace ``M``), the vertices
    with traces ``M xor {s_1..s_j}`` are merged into ``x`` for ``j = 1..k``,
    and the rest of the group after them.

    The width is checked against ``2^k - 1`` (``2^(k+1) - 2`` if a pre-merge
    happened), or the red degree the apex part forces on the bag, if larger.
    """
    h = gad.trigraph
    seps = [grp.separator for grp in gad.groups]
    if k is None:
        k = max((len(s) for s in seps), default=1) or 1
    tracker = PartTracker(h.vertices)
    groups: list[tuple[frozenset[int], dict[frozenset[int], int]]] = []
    premerged = False
    used = set()
    for big in _maximal(seps):
        members = [grp for grp in gad.groups if grp.separator <= big and grp.child not in used]
        if not members:
            continue
        used.update(grp.child for grp in members)
        classes: dict[frozenset[int], int] = {}
        for grp in members:
            for m, vid in sorted(grp.vertex_of.items(), key=lambda kv: kv[1]):
                if m in classes:
                    classes[m] = tracker.merge(classes[m], vid)
                    premerged = True
                else:
                    classes[m] = vid
        groups.append((big, classes))
    for sep, classes in groups:
        if len(classes) < 2:
            continue
        x = min(classes.values())
        m0 = next(m for m, v in classes.items() if v == x)
        order = sorted(sep)
        done = {x}
        flip = set(m0)
        for s in order:
            flip ^= {s}
            y = classes.get(frozenset(flip))
            if y is not None and y not in done:
                tracker.merge(x, y)
                done.add(y)
        for y in sorted(classes.values()):
            if y not in done:
                tracker.merge(x, y)
                done.add(y)
    out = tracker.sequence()
    rp = Replay(h)
    for a, b in out:
        rp.step(a, b)
    base = 2 ** (k + 1) - 2 if premerged else 2 ** k - 1
    part_red = max((rp.graph.red_degree(v) for v in gad.part), default=0)
    ensure_width(h, out, max(base, part_red), "tilde_to_hat")
    return out


def red_torso_of(hat: HatGadget) -> Trigraph:
    """The red torso matching an apex part: each apex's neighbourhood becomes a red clique."""
    g = hat.trigraph.induced(hat.part)
    for s in hat.apex_of:
        members = sorted(s)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                g.add_edge(a, b, RED)
    return g


def hat_from_torso(hat: HatGadget, torso_seq: ContractionSequence, k: int | None = None) -> ContractionSequence:
    """Complete sequence of the apex part from a complete sequence of its red torso.

    Before each torso step ``xy`` every pair of apex vertices whose
    neighbourhoods (with ``y`` renamed to ``x``) are nested is merged. At
    every loop head the apex neighbourhoods must form an antichain and each
    apex must have red degree at most ``k``; throughout, at most ``k + 1``.
    """
    torso = red_torso_of(hat)
    if len(torso_seq) != max(len(torso) - 1, 0):
        raise InvalidSequenceError("torso sequence is not complete for the red torso", len(torso_seq))
    t_width = verify_width(torso, torso_seq).width
    if k is None:
        k = max((len(s) for s in hat.apex_of), default=1) or 1
    rp = Replay(hat.trigraph)
    apex = set(hat.apex_of.values())
    steps: list[tuple[int, int]] = []

    def nb(v: int) -> frozenset[int]:
        return frozenset(rp.graph.neighbors(v))

    def apex_degree_at_most(cap: int, where: str) -> None:
        for v in apex:
            if rp.graph.red_degree(v) > cap:
                raise BoundViolation(f"apex {v} has red degree {rp.graph.red_degree(v)} > {cap} {where}")

    def apply(a: int, b: int, survivor: int | None = None) -> None:
        s = min(a, b) if survivor is None else survivor
        gone = b if s == a else a
        rp.step(s, gone)
        steps.append((s, gone))
        apex.discard(gone)
        apex_degree_at_most(k + 1, "during the merge loop")

    def sweep(x: int | None, y: int | None) -> None:
        while True:
            pair = None
            live = sorted(apex)
            for i, a in enumerate(live):
                na = _rename(nb(a), x, y)
                for b in live[i + 1:]:
                    nbb = _rename(nb(b), x, y)
                    if na <= nbb or nbb <= na:
                        pair = (a, b)
                        break
                if pair:
                    break
            if pair is None:
                return
            apply(*pair)

    for x, y in torso_seq:
        live = sorted(apex)
        for i, a in enumerate(live):
            for b in live[i + 1:]:
                if nb(a) <= nb(b) or nb(b) <= nb(a):
                    raise BoundViolation(f"apex neighbourhoods of {a} and {b} are nested at a loop head")
        apex_degree_at_most(k, "at a loop head")
        sweep(x, y)
        apply(x, y, survivor=x)
    sweep(None, None)
    rest = sorted(rp.graph.vertices)
    while len(rest) > 1:
        apply(rest[0], rest[1])
        rest = sorted(rp.graph.vertices)
    out = ContractionSequence(steps, torso_seq.heuristic)
    ensure_width(hat.trigraph, out, bounds.cap("torso_version", k=k, t=t_width), "hat_from_torso")
    return out


def _rename(s: frozenset[int], x: int | None, y: int | None) -> frozenset[int]:
    if y is not None and y in s:
        return (s - {y}) | {x}
    return s
