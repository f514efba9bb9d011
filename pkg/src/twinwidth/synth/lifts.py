"""Sequences derived from other sequences by restricting or refining their partitions.

Every function here reads a sequence as the chain of partitions it produces
and emits steps whose survivor is the smaller of the two part minima. Under
that convention the live id of a part is always its smallest member.
"""
from __future__ import annotations

from typing import Iterable

from .. import bounds
from ..errors import BoundViolation, PreconditionError
from ..sequence import ContractionSequence, check_respects, partition_trace, verify_width
from ..trigraph import Trigraph
from ._check import ensure_width


def _step(a: frozenset[int], b: frozenset[int]) -> tuple[int, int]:
    x, y = min(a), min(b)
    return (x, y) if x < y else (y, x)


def restricted_steps(vertices: Iterable[int], seq, keep: set[int]) -> list[tuple[int, int]]:
    """The merges of ``seq`` seen through the vertex subset ``keep``."""
    out = []
    for pa, pb in partition_trace(vertices, seq):
        a, b = pa & keep, pb & keep
        if a and b:
            out.append(_step(a, b))
    return out


def restrict_sequence(g: Trigraph, h: Trigraph | Iterable[int], seq: ContractionSequence) -> ContractionSequence:
    """A sequence of the induced subgraph ``h`` whose partitions are those of ``seq`` restricted to ``h``.

    Every quotient of ``h`` along the way is an induced subtrigraph of the
    matching quotient of ``g`` (up to red edges that are black in ``g``), so
    the width can only drop.
    """
    keep = set(h.vertices if isinstance(h, Trigraph) else h)
    if not keep <= set(g.vertices):
        raise PreconditionError("restriction target is not a subset of the graph")
    return ContractionSequence(restricted_steps(g.vertices, seq, keep), seq.heuristic)


def avoid_vertex_lift(g: Trigraph, v: int, seq: ContractionSequence) -> ContractionSequence:
    """Collapse ``V(G) - v`` into one vertex without ever touching ``v``.

    Each partition of ``seq`` with ``v`` split off into a singleton; by the
    one-split rule this costs at most one extra red degree.
    """
    if v not in g:
        raise PreconditionError(f"vertex {v} is not in the trigraph")
    d = verify_width(g, seq).width
    out = ContractionSequence(restricted_steps(g.vertices, seq, set(g.vertices) - {v}), seq.heuristic)
    ensure_width(g, out, d + 1, "avoid_vertex_lift")
    return out


def apex_lift(g: Trigraph, v: int, protected: Iterable[int], seq: ContractionSequence) -> ContractionSequence:
    """Lift a complete sequence of ``G - v`` respecting ``A`` to one of ``G`` respecting ``A + v``.

    Every part is split by membership in ``N(v)``; each merge of ``seq``
    becomes the merge of the two ``N(v)`` halves followed by the merge of
    the two outer halves (whichever exist).
    """
    a = set(protected)
    if v not in g:
        raise PreconditionError(f"vertex {v} is not in the trigraph")
    if v in a:
        raise PreconditionError(f"apex {v} is already in the respected set")
    for x in a | {v}:
        if x not in g:
            raise PreconditionError(f"vertex {x} is not in the trigraph")
        if g.red_degree(x):
            raise PreconditionError(f"vertex {x} has red degree {g.red_degree(x)}")
    rest = g.without([v])
    rep = check_respects(rest, seq, a)
    if not rep.respects or not rep.complete:
        raise PreconditionError(f"input sequence is not a complete sequence respecting {sorted(a)}"
                                f" (first violation {rep.first_violation})")
    d = verify_width(rest, seq).width
    nv = g.neighbors(v)
    steps = []
    for pa, pb in partition_trace(rest.vertices, seq):
        for side_a, side_b in ((pa & nv, pb & nv), (pa - nv, pb - nv)):
            if side_a and side_b:
                steps.append(_step(side_a, side_b))
    out = ContractionSequence(steps, seq.heuristic)
    check = check_respects(g, out, a | {v})
    if not check.respects or not check.complete:
        raise BoundViolation(f"lifted sequence does not completely respect {sorted(a | {v})}")
    ensure_width(g, out, 2 * d + 2, "apex_lift")
    return out


def respect_lift(g: Trigraph, protected: Iterable[int], base: ContractionSequence) -> ContractionSequence:
    """Complete sequence of ``G`` respecting ``A`` from a complete sequence of ``G - A``.

    Adds the vertices of ``A`` back one at a time in increasing id order,
    each with :func:`apex_lift`.
    """
    order = sorted(set(protected))
    for x in order:
        if x not in g:
            raise PreconditionError(f"vertex {x} is not in the trigraph")
        if g.red_degree(x):
            raise PreconditionError(f"vertex {x} has red degree {g.red_degree(x)}")
    core = g.without(order)
    if len(base) != max(len(core) - 1, 0):
        raise PreconditionError("base sequence is not complete for the graph minus the respected set")
    d = verify_width(core, base).width
    seq = base
    for i, x in enumerate(order):
        sub = g.without(order[i + 1:])
        seq = apex_lift(sub, x, order[:i], seq)
    if order:
        ensure_width(g, seq, bounds.cap("cor_apex_iter", a=len(order), d=d), "respect_lift")
    return seq
