from __future__ import annotations

from ..errors import BoundViolation
from ..sequence import ContractionSequence, WidthReport, verify_width
from ..trigraph import Trigraph


def ensure_width(g: Trigraph, seq: ContractionSequence, cap: int, what: str) -> WidthReport:
    """Replay ``seq`` and raise :class:`BoundViolation` if it is wider than ``cap``.

    Sequences built with a heuristic piece are only measured, never asserted.
    """
    rep = verify_width(g, seq)
    if rep.width > cap and not seq.heuristic:
        raise BoundViolation(f"{what}: width {rep.width} exceeds the guaranteed {cap}")
    return rep
