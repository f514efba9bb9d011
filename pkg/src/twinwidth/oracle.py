"""Exact twin-width at desk scale.

Depth-first branch and bound over partition states. A state is determined by
the partition reached so far, so failed states are memoised by their
partition. Children are tried in increasing order of the maximum red degree
they produce, which finds low-width witnesses early.

Three modes share the search:

* plain: any two vertices may be contracted; done at one vertex.
* ``respect=A``: only vertices outside ``A`` with equal neighbourhoods in
  ``A``; done when no such pair is left.
* ``within=U``: only vertices of ``U``; done when ``U`` is a single vertex.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .errors import InconclusiveError, PreconditionError, ResourceLimitError
from .sequence import ContractionSequence
from .trigraph import Trigraph

PLAIN_LIMIT = 12
RESPECT_LIMIT = 10
DEFAULT_BUDGET = 5_000_000


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("TWINWIDTH_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class Decision:
    """Outcome of :func:`decide_tww_le`. ``value`` is None when the budget ran out."""

    value: bool | None
    witness: ContractionSequence | None = None
    nodes: int = 0

    @property
    def inconclusive(self) -> bool:
        return self.value is None


class _BudgetExhausted(Exception):
    pass


class _Problem:
    """Bitmask encoding of a trigraph plus the mode's move and goal rules."""

    def __init__(self, g: Trigraph, respect=None, within=None, local: bool = False):
        if respect is not None and within is not None:
            raise ValueError("respect and within modes are exclusive")
        self.mode = "plain" if respect is None and within is None else ("respect" if respect is not None else "within")
        focus = None
        extra_src = {}
        if self.mode == "within" and local:
            # only U and its neighbours can change red degree while U is merged
            u = set(within)
            focus = set(u)
            for v in u:
                focus |= g.neighbors(v)
            if len(focus) < len(g):
                for w in focus - u:
                    extra_src[w] = len(g.red_neighbors(w) - focus)
                g = g.induced(focus)
        self.ids = sorted(g.vertices)
        m = len(self.ids)
        if m > kernels.MAX_SLOTS:
            raise ResourceLimitError(f"exact search supports at most {kernels.MAX_SLOTS} vertices, got {m}")
        self.slot = {v: i for i, v in enumerate(self.ids)}
        self.black = np.zeros(m, np.uint64)
        self.red = np.zeros(m, np.uint64)
        for u, v in g.black_edges():
            a, b = self.slot[u], self.slot[v]
            self.black[a] |= np.uint64(1) << np.uint64(b)
            self.black[b] |= np.uint64(1) << np.uint64(a)
        for u, v in g.red_edges():
            a, b = self.slot[u], self.slot[v]
            self.red[a] |= np.uint64(1) << np.uint64(b)
            self.red[b] |= np.uint64(1) << np.uint64(a)
        self.extra = np.zeros(m, np.int64)
        for w, e in extra_src.items():
            self.extra[self.slot[w]] = e
        self.has_extra = bool(self.extra.any())
        self.prot_mask = 0
        self.u_slots = None
        if self.mode == "respect":
            for a in respect:
                if a not in self.slot:
                    raise PreconditionError(f"respected vertex {a} not in graph")
                if g.red_degree(a):
                    raise PreconditionError(f"respected vertex {a} has red degree {g.red_degree(a)}")
                self.prot_mask |= 1 << self.slot[a]
        elif self.mode == "within":
            missing = [v for v in within if v not in self.slot]
            if missing:
                raise PreconditionError(f"vertices {missing} not in graph")
            self.u_slots = frozenset(self.slot[v] for v in within)
        self.members = np.array([1 << i for i in range(m)], dtype=np.uint64)

    @property
    def search_size(self) -> int:
        if self.mode == "within":
            return len(self.u_slots)
        if self.mode == "respect":
            return len(self.ids) - bin(self.prot_mask).count("1")
        return len(self.ids)

    def initial(self):
        alive = np.arange(len(self.ids), dtype=np.int64)
        return self.black.copy(), self.red.copy(), alive

    def max_red(self, red, alive) -> int:
        if alive.size == 0:
            return 0
        return int((np.bitwise_count(red[alive]).astype(np.int64) + self.extra[alive]).max())

    def moves(self, black, alive):
        """Candidate pairs (pi, pj) with pi < pj as slot arrays."""
        if self.mode == "plain":
            cand = alive
        elif self.mode == "within":
            cand = np.array([s for s in alive if s in self.u_slots], dtype=np.int64)
        else:
            pm = self.prot_mask
            cand = np.array([s for s in alive if not (pm >> int(s)) & 1], dtype=np.int64)
        n = cand.size
        if n < 2:
            return np.empty(0, np.int64), np.empty(0, np.int64)
        ii, jj = np.triu_indices(n, 1)
        pi, pj = cand[ii], cand[jj]
        if self.mode == "respect" and self.prot_mask:
            pm = np.uint64(self.prot_mask)
            keep = (black[pi] & pm) == (black[pj] & pm)
            pi, pj = pi[keep], pj[keep]
        return pi, pj

    def finished(self, black, alive) -> bool:
        if self.mode == "plain":
            return alive.size <= 1
        pi, _ = self.moves(black, alive)
        return pi.size == 0

    def step_ids(self, i, j) -> tuple[int, int]:
        return self.ids[i], self.ids[j]


def _child(black, red, alive, i, j):
    b, r = kernels.contract(black, red, i, j)
    return b, r, alive[alive != j]


def _finish_any(prob: _Problem, black, red, alive) -> list[tuple[int, int]]:
    steps = []
    while True:
        pi, pj = prob.moves(black, alive)
        if pi.size == 0:
            return steps
        i, j = int(pi[0]), int(pj[0])
        steps.append(prob.step_ids(i, j))
        black, red, alive = _child(black, red, alive, i, j)


class _Decider:
    def __init__(self, prob: _Problem, d: int, budget: int):
        self.prob = prob
        self.d = d
        self.budget = budget
        self.nodes = 0
        self.failed: set[bytes] = set()
        # arbitrary completion is safe once every red degree is bounded by |alive| - 1
        self.shortcut = not prob.has_extra

    def key(self, alive, members) -> bytes:
        return members[alive].tobytes()

    def run(self, black, red, alive, members):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        prob = self.prob
        if self.shortcut and alive.size <= self.d + 1:
            return _finish_any(prob, black, red, alive)
        pi, pj = prob.moves(black, alive)
        if pi.size == 0:
            return []
        k = self.key(alive, members)
        if k in self.failed:
            return None
        scores = kernels.pair_scores(black, red, prob.extra, alive, pi, pj)
        ok = np.nonzero(scores <= self.d)[0]
        if ok.size:
            order = ok[np.lexsort((pj[ok], pi[ok], scores[ok]))]
            for idx in order:
                i, j = int(pi[idx]), int(pj[idx])
                b, r, a = _child(black, red, alive, i, j)
                mem = members.copy()
                mem[i] |= mem[j]
                mem[j] = 0
                rest = self.run(b, r, a, mem)
                if rest is not None:
                    return [prob.step_ids(i, j)] + rest
        self.failed.add(k)
        return None


def _greedy(prob: _Problem):
    black, red, alive = prob.initial()
    width = prob.max_red(red, alive)
    steps = []
    while True:
        pi, pj = prob.moves(black, alive)
        if pi.size == 0:
            return width, steps
        scores = kernels.pair_scores(black, red, prob.extra, alive, pi, pj)
        idx = int(np.lexsort((pj, pi, scores))[0])
        i, j = int(pi[idx]), int(pj[idx])
        width = max(width, int(scores[idx]))
        steps.append(prob.step_ids(i, j))
        black, red, alive = _child(black, red, alive, i, j)


def _lower_bound(prob: _Problem) -> int:
    black, red, alive = prob.initial()
    lb = prob.max_red(red, alive)
    pi, pj = prob.moves(black, alive)
    if pi.size:
        lb = max(lb, int(kernels.pair_scores(black, red, prob.extra, alive, pi, pj).min()))
    return lb


def _check_limit(prob: _Problem, limit: int | None) -> None:
    if limit is None:
        limit = RESPECT_LIMIT if prob.mode == "respect" else PLAIN_LIMIT
    if prob.search_size > limit:
        raise ResourceLimitError(
            f"exact {prob.mode} search limited to {limit} contractible vertices, got {prob.search_size}")


def _subtree_worker(args):
    g, respect, within, local, d, budget, first = args
    prob = _Problem(g, respect, within, local)
    black, red, alive = prob.initial()
    i, j = first
    b, r, a = _child(black, red, alive, i, j)
    mem = prob.members.copy()
    mem[i] |= mem[j]
    mem[j] = 0
    dec = _Decider(prob, d, budget)
    try:
        rest = dec.run(b, r, a, mem)
    except _BudgetExhausted:
        return "budget", None, dec.nodes
    return ("yes" if rest is not None else "no"), rest, dec.nodes


def _decide(prob: _Problem, d: int, budget: int, threads: int, spec) -> Decision:
    black, red, alive = prob.initial()
    if prob.max_red(red, alive) > d:
        return Decision(False, None, 1)
    dec = _Decider(prob, d, budget)
    if threads <= 1 or spec is None:
        try:
            steps = dec.run(black, red, alive, prob.members.copy())
        except _BudgetExhausted:
            return Decision(None, None, dec.nodes)
        if steps is None:
            return Decision(False, None, dec.nodes)
        return Decision(True, ContractionSequence(steps), dec.nodes)
    # fan the first level out to worker processes
    if dec.shortcut and alive.size <= d + 1:
        return Decision(True, ContractionSequence(_finish_any(prob, black, red, alive)), 1)
    pi, pj = prob.moves(black, alive)
    if pi.size == 0:
        return Decision(True, ContractionSequence([]), 1)
    scores = kernels.pair_scores(black, red, prob.extra, alive, pi, pj)
    ok = np.nonzero(scores <= d)[0]
    order = ok[np.lexsort((pj[ok], pi[ok], scores[ok]))]
    jobs = [(*spec, d, budget, (int(pi[k]), int(pj[k]))) for k in order]
    nodes = 1
    inconclusive = False
    with ProcessPoolExecutor(max_workers=threads) as ex:
        for (status, rest, n), job in zip(ex.map(_subtree_worker, jobs), jobs):
            nodes += n
            if status == "yes":
                i, j = job[-1]
                return Decision(True, ContractionSequence([prob.step_ids(i, j)] + rest), nodes)
            if status == "budget":
                inconclusive = True
    return Decision(None if inconclusive else False, None, nodes)


def decide_tww_le(g: Trigraph, d: int, *, respect: Iterable[int] | None = None,
                  within: Iterable[int] | None = None, budget: int = DEFAULT_BUDGET,
                  threads: int | None = None) -> Decision:
    """Is there a complete ``d``-contraction sequence (of the requested mode)?

    Returns a :class:`Decision`; ``value is None`` means the node budget was
    exhausted, which says nothing about the answer.
    """
    respect = None if respect is None else sorted(respect)
    within = None if within is None else sorted(within)
    prob = _Problem(g, respect, within)
    threads = default_threads() if threads is None else threads
    return _decide(prob, d, budget, threads, (g, respect, within, False))


def exact_tww(g: Trigraph, *, respect: Iterable[int] | None = None, within: Iterable[int] | None = None,
              limit: int | None = None, budget: int = DEFAULT_BUDGET,
              threads: int | None = None, local: bool = False) -> tuple[int, ContractionSequence]:
    """Minimum width over complete sequences of the given mode, with a witness.

    ``local=True`` (``within`` mode only) searches on ``U`` and its
    neighbourhood; red degrees of the neighbours towards the rest of the
    graph are carried as constants, so the returned width is the maximum
    over that neighbourhood rather than the whole graph.

    Raises :class:`ResourceLimitError` above ``limit`` contractible vertices
    and :class:`InconclusiveError` when the budget runs out.
    """
    respect = None if respect is None else sorted(respect)
    within = None if within is None else sorted(within)
    prob = _Problem(g, respect, within, local)
    _check_limit(prob, limit)
    threads = default_threads() if threads is None else threads
    ub, steps = _greedy(prob)
    lb = _lower_bound(prob)
    spec = None if local else (g, respect, within, False)
    for d in range(lb, ub):
        res = _decide(prob, d, budget, threads, spec)
        if res.value is None:
            raise InconclusiveError(f"budget of {budget} nodes exhausted while deciding width <= {d}")
        if res.value:
            return d, res.witness
    return ub, ContractionSequence(steps)


def greedy_sequence(g: Trigraph, *, respect=None, within=None, local: bool = False) -> tuple[int, ContractionSequence]:
    """Least-red-degree-first heuristic; the returned sequence is flagged heuristic."""
    prob = _Problem(g, None if respect is None else sorted(respect), None if within is None else sorted(within), local)
    width, steps = _greedy(prob)
    return width, ContractionSequence(steps, heuristic=True)


def best_sequence(g: Trigraph, *, respect=None, within=None, limit: int | None = None,
                  local: bool = False, budget: int = DEFAULT_BUDGET) -> ContractionSequence:
    """Exact sequence when the instance is small enough, else the greedy one (flagged)."""
    try:
        return exact_tww(g, respect=respect, within=within, limit=limit, local=local,
                         budget=budget, threads=1)[1]
    except (ResourceLimitError, InconclusiveError):
        if len(g) > kernels.MAX_SLOTS and not local:
            return _python_greedy(g, respect=respect, within=within)
        try:
            return greedy_sequence(g, respect=respect, within=within, local=local)[1]
        except ResourceLimitError:
            return _python_greedy(g, respect=respect, within=within)


def _python_greedy(g: Trigraph, respect=None, within=None) -> ContractionSequence:
    """Slow fallback for graphs beyond the bitmask kernel's 64 slots."""
    h = g.copy()
    prot = set(respect or ())
    u = set(within) if within is not None else None
    steps = []
    while True:
        cand = [v for v in sorted(h) if v not in prot and (u is None or v in u)]
        best = None
        for a_i, a in enumerate(cand):
            for b in cand[a_i + 1:]:
                if prot and (h.black_neighbors(a) & prot) != (h.black_neighbors(b) & prot):
                    continue
                t = h.contract(a, b)
                s = t.max_red_degree()
                if best is None or s < best[0]:
                    best = (s, a, b)
        if best is None:
            return ContractionSequence(steps, heuristic=True)
        _, a, b = best
        h.contract_inplace(a, b)
        steps.append((a, b))
