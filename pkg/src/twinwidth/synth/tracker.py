from __future__ import annotations

from typing import Iterable

from ..sequence import ContractionSequence


class PartTracker:
    """Records merges of parts addressed by any of their members.

    The emitted step is ``(min(rep_a, rep_b), max(rep_a, rep_b))`` so the
    representative of every part is its smallest member, which matches
    :meth:`Trigraph.contract_inplace` with the default survivor.
    """

    def __init__(self, vertices: Iterable[int]):
        self._rep = {v: v for v in vertices}
        self._members = {v: {v} for v in self._rep}
        self.steps: list[tuple[int, int]] = []
        self.heuristic = False

    def rep(self, v: int) -> int:
        return self._rep[v]

    def members(self, v: int) -> set[int]:
        return self._members[self._rep[v]]

    def same(self, u: int, v: int) -> bool:
        return self._rep[u] == self._rep[v]

    def merge(self, u: int, v: int) -> int:
        a, b = self._rep[u], self._rep[v]
        if a == b:
            raise ValueError(f"{u} and {v} are already in the same part")
        s, t = (a, b) if a < b else (b, a)
        moved = self._members.pop(t)
        for w in moved:
            self._rep[w] = s
        self._members[s] |= moved
        self.steps.append((s, t))
        return s

    def replay(self, seq, mapping=None) -> None:
        """Apply the merges of ``seq``, translating vertex names through ``mapping``."""
        for a, b in seq:
            if mapping is not None:
                a, b = mapping[a], mapping[b]
            self.merge(a, b)

    def parts(self) -> list[set[int]]:
        return [self._members[r] for r in sorted(self._members)]

    def representatives(self) -> list[int]:
        return sorted(self._members)

    def sequence(self) -> ContractionSequence:
        return ContractionSequence(list(self.steps), self.heuristic)
