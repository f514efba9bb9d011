"""Contraction sequences and their verification.

A sequence is a list of ``(survivor, absorbed)`` pairs. Nothing about a
sequence is trusted: width is always recomputed by replaying it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidSequenceError, PreconditionError
from .trigraph import Trigraph


@dataclass
class ContractionSequence:
    steps: list[tuple[int, int]] = field(default_factory=list)
    # set when some piece came from a heuristic instead of an exact search
    heuristic: bool = False

    def __post_init__(self):
        self.steps = [(int(a), int(b)) for a, b in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __add__(self, other: "ContractionSequence") -> "ContractionSequence":
        return ContractionSequence(self.steps + list(other.steps), self.heuristic or other.heuristic)

    def check_structure(self, vertices: Iterable[int]) -> None:
        """Raise :class:`InvalidSequenceError` if a step uses a dead or unknown vertex."""
        alive = set(vertices)
        for i, (a, b) in enumerate(self.steps):
            if a == b:
                raise InvalidSequenceError(f"step {i} contracts {a} with itself", i)
            for v in (a, b):
                if v not in alive:
                    raise InvalidSequenceError(f"step {i} uses vertex {v}, which is absent or already absorbed", i)
            alive.discard(b)

    def is_complete_for(self, g: Trigraph) -> bool:
        return len(self.steps) == max(len(g) - 1, 0)


@dataclass
class WidthReport:
    width: int
    initial_red_degree: int
    per_step_max_red_degree: list[int]
    respected_set_ok: bool | None = None
    complete: bool | None = None


class Replay:
    """A private trigraph copy that applies contractions and tracks red degrees.

    Keeps a histogram of red degrees so the maximum is available after each
    step without rescanning all vertices.
    """

    def __init__(self, g: Trigraph):
        self.graph = g.copy()
        self._hist: dict[int, int] = {}
        for v in self.graph:
            d = self.graph.red_degree(v)
            self._hist[d] = self._hist.get(d, 0) + 1
        self.max_red = max(self._hist, default=0)
        self.width = self.max_red

    def _bump(self, d: int, delta: int) -> None:
        c = self._hist.get(d, 0) + delta
        if c:
            self._hist[d] = c
        else:
            self._hist.pop(d, None)

    def step(self, survivor: int, absorbed: int) -> int:
        g = self.graph
        touched = {survivor, absorbed} | g.neighbors(survivor) | g.neighbors(absorbed)
        for v in touched:
            self._bump(g.red_degree(v), -1)
        g.contract_inplace(survivor, absorbed, survivor)
        touched.discard(absorbed)
        for v in touched:
            self._bump(g.red_degree(v), +1)
        # new degrees may exceed the old max; a lower max is found by scanning down
        top = max((g.red_degree(v) for v in touched), default=0)
        m = max(self.max_red, top)
        while m > 0 and m not in self._hist:
            m -= 1
        self.max_red = m
        self.width = max(self.width, m)
        return m

    def recount(self) -> int:
        """Max red degree recomputed from scratch (for consistency checks)."""
        return self.graph.max_red_degree()


def verify_width(g: Trigraph, seq: ContractionSequence | Sequence[tuple[int, int]]) -> WidthReport:
    """Replay ``seq`` on ``g`` and report the maximum red degree ever seen."""
    seq = seq if isinstance(seq, ContractionSequence) else ContractionSequence(list(seq))
    seq.check_structure(g.vertices)
    rp = Replay(g)
    initial = rp.max_red
    per_step = [rp.step(a, b) for a, b in seq]
    return WidthReport(width=rp.width, initial_red_degree=initial, per_step_max_red_degree=per_step)


@dataclass
class RespectReport:
    respects: bool
    first_violation: int | None
    complete: bool
    # vertices outside the protected set left at the end
    residual: int


def check_respects(g: Trigraph, seq: ContractionSequence | Sequence[tuple[int, int]],
                   protected: Iterable[int], mode: str = "respect") -> RespectReport:
    """Check a (partial) sequence against a protected vertex set.

    ``mode="respect"``: no step touches the set ``A``, every ``a`` in ``A`` keeps
    red degree 0 and ``G_i[A] = G[A]``. Complete means no two remaining
    vertices outside ``A`` share their neighbourhood in ``A``.

    ``mode="u"``: only vertices of ``U`` are contracted; complete means ``U``
    has been collapsed to one vertex, i.e. ``|U| - 1`` steps.
    """
    seq = seq if isinstance(seq, ContractionSequence) else ContractionSequence(list(seq))
    prot = set(protected)
    if not prot <= set(g.vertices):
        raise PreconditionError(f"protected vertices not in graph: {sorted(prot - set(g.vertices))}")
    seq.check_structure(g.vertices)
    if mode == "u":
        return _check_u(g, seq, prot)
    if mode != "respect":
        raise ValueError(f"unknown mode {mode!r}")
    for a in prot:
        if g.red_degree(a):
            raise PreconditionError(f"vertex {a} of the respected set has red degree {g.red_degree(a)}")
    base = g.induced(prot)
    h = g.copy()
    violation = None
    for i, (x, y) in enumerate(seq):
        if x in prot or y in prot:
            violation = i
            break
        h.contract_inplace(x, y, x)
        if any(h.red_degree(a) for a in prot) or h.induced(prot) != base:
            violation = i
            break
    if violation is not None:
        return RespectReport(False, violation, False, len(h) - len(prot))
    traces = [frozenset(h.black_neighbors(v) & prot) for v in h if v not in prot]
    complete = len(traces) == len(set(traces))
    residual = len(traces)
    if complete:
        assert residual <= 2 ** len(prot), "complete respecting sequence left too many vertices"
    return RespectReport(True, None, complete, residual)


def _check_u(g: Trigraph, seq: ContractionSequence, u: set[int]) -> RespectReport:
    # parts of U are tracked by their current representative
    alive_u = set(u)
    for i, (x, y) in enumerate(seq):
        if x not in alive_u or y not in alive_u:
            return RespectReport(False, i, False, len(alive_u))
        alive_u.discard(y)
    # |U| - 1 merges collapse U to one part (the length in the definition is off by one)
    return RespectReport(True, None, len(alive_u) <= 1, len(alive_u))


def partition_trace(vertices: Iterable[int], seq: ContractionSequence | Sequence[tuple[int, int]]):
    """Yield, for each step, the two parts (as frozensets of original vertices) being merged."""
    parts = {v: frozenset([v]) for v in vertices}
    for i, (a, b) in enumerate(seq):
        if a not in parts or b not in parts or a == b:
            raise InvalidSequenceError(f"step {i} ({a}, {b}) is not valid here", i)
        pa, pb = parts[a], parts.pop(b)
        parts[a] = pa | pb
        yield pa, pb


def final_partition(vertices: Iterable[int], seq) -> list[frozenset[int]]:
    parts = {v: frozenset([v]) for v in vertices}
    for a, b in seq:
        parts[a] = parts[a] | parts.pop(b)
    return sorted(parts.values(), key=min)
