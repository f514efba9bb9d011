"""Text formats: PACE-style graphs, sequences and tree decompositions.

Ids are 1-indexed in files and 0-indexed in memory. Graph files may carry
red edges as ``r u v`` lines; tree decomposition files may carry separator
(``sep <node> <v...>``) and virtual edge (``virt u v``) annotations, either
inline or in a sidecar file.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .decomp import StrongTreeDecomposition, TreeDecomposition
from .errors import ParseError
from .sequence import ContractionSequence
from .trigraph import BLACK, RED, Trigraph


def _lines(src: str | Path | TextIO | Iterable[str]):
    if isinstance(src, Path):
        text = src.read_text().splitlines()
    elif isinstance(src, str):
        text = src.splitlines()
    else:
        text = list(src)
    for no, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield no, line.split()


def _vid(tok: str, n: int | None, no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"line {no}: {tok!r} is not a vertex id") from None
    if v < 1 or (n is not None and v > n):
        raise ParseError(f"line {no}: vertex {v} out of range 1..{n}")
    return v - 1


# ---------------------------------------------------------------- graphs
def parse_gr(src) -> Trigraph:
    """Read ``p tww n m`` followed by ``u v`` (black) and ``r u v`` (red) lines.

    Parallel edges collapse to one edge, red if any copy is red.
    """
    n = None
    g = Trigraph()
    declared = None
    count = 0
    for no, tok in _lines(src):
        if tok[0] == "p":
            if n is not None:
                raise ParseError(f"line {no}: second header")
            if len(tok) != 4 or tok[1] not in ("tww", "twinwidth"):
                raise ParseError(f"line {no}: expected 'p tww <n> <m>'")
            n, declared = int(tok[2]), int(tok[3])
            for v in range(n):
                g.add_vertex(v)
            continue
        if n is None:
            raise ParseError(f"line {no}: edge before header")
        color = BLACK
        if tok[0] == "r":
            color, tok = RED, tok[1:]
        if len(tok) != 2:
            raise ParseError(f"line {no}: expected two vertex ids")
        u, v = _vid(tok[0], n, no), _vid(tok[1], n, no)
        if u == v:
            raise ParseError(f"line {no}: loop at vertex {u + 1}")
        g.add_edge(u, v, color)
        count += 1
    if n is None:
        raise ParseError("missing 'p tww' header")
    if declared is not None and count != declared:
        raise ParseError(f"header declares {declared} edges, found {count}")
    return g


def format_gr(g: Trigraph, comments: Iterable[str] = ()) -> str:
    """Write ``g`` with vertices renumbered ``1..n`` in id order.

    When the ids are not ``0..n-1`` a comment records the original ids.
    """
    ids = sorted(g.vertices)
    pos = {v: i + 1 for i, v in enumerate(ids)}
    out = [f"c {c}" for c in comments]
    if ids != list(range(len(ids))):
        out.append("c ids " + " ".join(str(v) for v in ids))
    black, red = g.black_edges(), g.red_edges()
    out.append(f"p tww {len(ids)} {len(black) + len(red)}")
    out += [f"{pos[u]} {pos[v]}" for u, v in black]
    out += [f"r {pos[u]} {pos[v]}" for u, v in red]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- sequences
def parse_sequence(src, n: int | None = None) -> ContractionSequence:
    """One ``u v`` pair per line; ``v`` is absorbed into ``u``."""
    steps = []
    for no, tok in _lines(src):
        if len(tok) != 2:
            raise ParseError(f"line {no}: expected 'u v'")
        steps.append((_vid(tok[0], n, no), _vid(tok[1], n, no)))
    return ContractionSequence(steps)


def format_sequence(seq: ContractionSequence, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out += [f"{a + 1} {b + 1}" for a, b in seq]
    return "\n".join(out) + ("\n" if out else "")


# ---------------------------------------------------------------- decompositions
@dataclass
class Annotations:
    # node -> separators marked at that node
    separators: dict[int, list[frozenset[int]]] = field(default_factory=dict)
    virtual: list[tuple[int, int]] = field(default_factory=list)

    def all_separators(self, node: int) -> list[frozenset[int]] | None:
        return self.separators.get(node)


def _parse_annotation(tok, no, ann: Annotations) -> bool:
    if tok[0] == "sep":
        if len(tok) < 2:
            raise ParseError(f"line {no}: 'sep' needs a node id")
        node = int(tok[1])
        ann.separators.setdefault(node, []).append(frozenset(_vid(x, None, no) for x in tok[2:]))
        return True
    if tok[0] == "virt":
        if len(tok) != 3:
            raise ParseError(f"line {no}: 'virt' needs two vertex ids")
        ann.virtual.append((_vid(tok[1], None, no), _vid(tok[2], None, no)))
        return True
    return False


def parse_td(src) -> tuple[TreeDecomposition | StrongTreeDecomposition, Annotations]:
    """Read ``s td|std <bags> <max> <n>``, ``b <id> <v...>`` and tree edge lines."""
    kind = None
    n = None
    nbags = None
    bags: dict[int, list[int]] = {}
    edges = []
    ann = Annotations()
    for no, tok in _lines(src):
        if _parse_annotation(tok, no, ann):
            continue
        if tok[0] == "s":
            if len(tok) != 5 or tok[1] not in ("td", "std"):
                raise ParseError(f"line {no}: expected 's td|std <bags> <max-bag> <n>'")
            kind, nbags, n = tok[1], int(tok[2]), int(tok[4])
            continue
        if kind is None:
            raise ParseError(f"line {no}: content before 's' header")
        if tok[0] == "b":
            if len(tok) < 2:
                raise ParseError(f"line {no}: bag line without id")
            t = int(tok[1])
            if t in bags:
                raise ParseError(f"line {no}: bag {t} declared twice")
            bags[t] = [_vid(x, n, no) for x in tok[2:]]
            continue
        if len(tok) != 2:
            raise ParseError(f"line {no}: expected a tree edge 'i j'")
        edges.append((int(tok[0]), int(tok[1])))
    if kind is None:
        raise ParseError("missing 's td' header")
    if nbags is not None and len(bags) != nbags:
        raise ParseError(f"header declares {nbags} bags, found {len(bags)}")
    root = 1 if 1 in bags else None
    cls = TreeDecomposition if kind == "td" else StrongTreeDecomposition
    return cls(bags, edges, root=root), ann


def parse_annotations(src) -> Annotations:
    ann = Annotations()
    for no, tok in _lines(src):
        if not _parse_annotation(tok, no, ann):
            raise ParseError(f"line {no}: expected 'sep' or 'virt'")
    return ann


def format_td(td: TreeDecomposition | StrongTreeDecomposition, n: int, ann: Annotations | None = None) -> str:
    kind = "std" if isinstance(td, StrongTreeDecomposition) else "td"
    biggest = max((len(b) for b in td.bags.values()), default=0)
    out = [f"s {kind} {len(td.bags)} {biggest} {n}"]
    for t in td.nodes():
        out.append(" ".join(["b", str(t)] + [str(v + 1) for v in sorted(td.bags[t])]))
    out += [f"{a} {b}" for a, b in td.edges]
    if ann is not None:
        for node in sorted(ann.separators):
            for s in ann.separators[node]:
                out.append(" ".join(["sep", str(node)] + [str(v + 1) for v in sorted(s)]))
        out += [f"virt {u + 1} {v + 1}" for u, v in ann.virtual]
    return "\n".join(out) + "\n"
