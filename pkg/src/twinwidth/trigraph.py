"""Trigraphs: graphs with disjoint black and red edge sets.

Vertices are non-negative integers. The survivor of a contraction keeps its
id, by default the smaller of the two merged ids.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidContractionError, InvalidPartitionError, ParseError

BLACK = "black"
RED = "red"


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Trigraph:
    """Undirected trigraph stored as per-color adjacency sets.

    Red degree is ``len(red[v])`` so it is O(1). Instances are treated as
    immutable once handed out; the ``*_inplace`` methods are for code that
    owns a private copy.
    """

    __slots__ = ("_black", "_red")

    def __init__(self, vertices: Iterable[int] = (), black: Iterable = (), red: Iterable = ()):
        self._black: dict[int, set[int]] = {}
        self._red: dict[int, set[int]] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in black:
            self.add_edge(u, v, BLACK)
        for u, v in red:
            self.add_edge(u, v, RED)

    @classmethod
    def from_edges(cls, n: int, black: Iterable = (), red: Iterable = ()) -> "Trigraph":
        """Trigraph on vertices ``0..n-1``."""
        return cls(range(n), black, red)

    # construction --------------------------------------------------------
    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise ValueError(f"vertex ids must be non-negative, got {v}")
        if v not in self._black:
            self._black[v] = set()
            self._red[v] = set()

    def add_edge(self, u: int, v: int, color: str = BLACK) -> None:
        """Add an edge; a red edge overrides a parallel black one."""
        if u == v:
            raise ParseError(f"loops are not allowed (vertex {u})")
        self.add_vertex(u)
        self.add_vertex(v)
        if color == RED:
            self._black[u].discard(v)
            self._black[v].discard(u)
            self._red[u].add(v)
            self._red[v].add(u)
        elif color == BLACK:
            if v in self._red[u]:
                return
            self._black[u].add(v)
            self._black[v].add(u)
        else:
            raise ValueError(f"unknown edge color {color!r}")

    def remove_edge(self, u: int, v: int) -> None:
        self._black[u].discard(v)
        self._black[v].discard(u)
        self._red[u].discard(v)
        self._red[v].discard(u)

    def copy(self) -> "Trigraph":
        g = Trigraph.__new__(Trigraph)
        g._black = {v: set(s) for v, s in self._black.items()}
        g._red = {v: set(s) for v, s in self._red.items()}
        return g

    # queries -------------------------------------------------------------
    @property
    def vertices(self):
        return self._black.keys()

    def __len__(self) -> int:
        return len(self._black)

    def __contains__(self, v) -> bool:
        return v in self._black

    def __iter__(self) -> Iterator[int]:
        return iter(self._black)

    def black_neighbors(self, v: int) -> set[int]:
        return self._black[v]

    def red_neighbors(self, v: int) -> set[int]:
        return self._red[v]

    def neighbors(self, v: int) -> set[int]:
        return self._black[v] | self._red[v]

    def red_degree(self, v: int) -> int:
        return len(self._red[v])

    def max_red_degree(self) -> int:
        return max((len(s) for s in self._red.values()), default=0)

    def edge_color(self, u: int, v: int) -> str | None:
        if v in self._black[u]:
            return BLACK
        if v in self._red[u]:
            return RED
        return None

    def black_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, s in self._black.items() for v in s if u < v)

    def red_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, s in self._red.items() for v in s if u < v)

    def num_edges(self) -> int:
        return sum(map(len, self._black.values())) // 2 + sum(map(len, self._red.values())) // 2

    def max_vertex(self) -> int:
        return max(self._black, default=-1)

    def is_graph(self) -> bool:
        return not any(self._red.values())

    def check(self) -> None:
        """Assert the structural invariants (symmetry, disjoint colors, no loops)."""
        for v in self._black:
            b, r = self._black[v], self._red[v]
            assert v not in b and v not in r, f"loop at {v}"
            assert not (b & r), f"vertex {v} has an edge that is both black and red"
            for u in b:
                assert v in self._black[u], f"black edge {v}-{u} not symmetric"
            for u in r:
                assert v in self._red[u], f"red edge {v}-{u} not symmetric"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self._black == other._black and self._red == other._red

    def __repr__(self) -> str:
        return (f"Trigraph(n={len(self)}, black={len(self.black_edges())}, "
                f"red={len(self.red_edges())})")

    # derived graphs ------------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> "Trigraph":
        keep = set(vertices)
        missing = keep - self._black.keys()
        if missing:
            raise KeyError(f"vertices not in trigraph: {sorted(missing)}")
        g = Trigraph.__new__(Trigraph)
        g._black = {v: self._black[v] & keep for v in self._black if v in keep}
        g._red = {v: self._red[v] & keep for v in self._red if v in keep}
        return g

    def without(self, vertices: Iterable[int]) -> "Trigraph":
        drop = set(vertices)
        return self.induced(v for v in self._black if v not in drop)

    def relabel(self, mapping: dict[int, int]) -> "Trigraph":
        g = Trigraph(mapping[v] for v in self._black)
        for u, v in self.black_edges():
            g.add_edge(mapping[u], mapping[v], BLACK)
        for u, v in self.red_edges():
            g.add_edge(mapping[u], mapping[v], RED)
        return g

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        out = []
        for s in sorted(self._black):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._black[u] | self._red[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(comp)
        return out

    # contraction ---------------------------------------------------------
    def contract(self, x: int, y: int, survivor: int | None = None) -> "Trigraph":
        """Return ``G/xy``; see :meth:`contract_inplace`."""
        g = self.copy()
        g.contract_inplace(x, y, survivor)
        return g

    def contract_inplace(self, x: int, y: int, survivor: int | None = None) -> int:
        """Merge ``x`` and ``y`` into one vertex and return its id.

        Common black neighbours stay black; every other neighbour of either
        vertex becomes red.
        """
        if x == y:
            raise InvalidContractionError(f"cannot contract vertex {x} with itself")
        if x not in self._black or y not in self._black:
            raise InvalidContractionError(f"contraction ({x}, {y}) uses a vertex not in the trigraph")
        z = min(x, y) if survivor is None else survivor
        if z not in (x, y):
            raise InvalidContractionError(f"survivor {z} is neither {x} nor {y}")
        gone = y if z == x else x
        bx, by = self._black[x], self._black[y]
        nx = bx | self._red[x]
        ny = by | self._red[y]
        new_black = (bx & by) - {x, y}
        new_red = (nx | ny) - new_black - {x, y}
        for w in nx | ny:
            if w == x or w == y:
                continue
            self._black[w].discard(gone)
            self._red[w].discard(gone)
            if w in new_black:
                self._red[w].discard(z)
                self._black[w].add(z)
            else:
                self._black[w].discard(z)
                self._red[w].add(z)
        del self._black[gone], self._red[gone]
        self._black[z] = new_black
        self._red[z] = new_red
        return z

    def quotient(self, partition: "Partition | Iterable[Iterable[int]]") -> "Trigraph":
        """Contract every part of ``partition`` into its representative (its minimum).

        Two parts are joined black iff all cross pairs are black edges, red
        iff some cross pair is adjacent but not all are black.
        """
        part = partition if isinstance(partition, Partition) else Partition(partition)
        part.validate_for(self)
        rep = part.representative_map()
        reps = sorted(set(rep.values()))
        size = {r: len(p) for r, p in zip(part.representatives(), part.parts)}
        black_count: dict[tuple[int, int], int] = {}
        red_pairs: set[tuple[int, int]] = set()
        for u, v in self.black_edges():
            a, b = rep[u], rep[v]
            if a != b:
                key = _pair(a, b)
                black_count[key] = black_count.get(key, 0) + 1
        for u, v in self.red_edges():
            a, b = rep[u], rep[v]
            if a != b:
                red_pairs.add(_pair(a, b))
        q = Trigraph(reps)
        for key, cnt in black_count.items():
            if key not in red_pairs and cnt == size[key[0]] * size[key[1]]:
                q.add_edge(*key, BLACK)
            else:
                red_pairs.add(key)
        for key in red_pairs:
            q.add_edge(*key, RED)
        return q


class Partition:
    """A family of disjoint non-empty parts; each part is represented by its minimum."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Iterable[int]]):
        self.parts: list[frozenset[int]] = sorted((frozenset(p) for p in parts), key=min_or_raise)

    @classmethod
    def discrete(cls, vertices: Iterable[int]) -> "Partition":
        return cls([v] for v in vertices)

    def representatives(self) -> list[int]:
        return [min(p) for p in self.parts]

    def representative_map(self) -> dict[int, int]:
        return {v: min(p) for p in self.parts for v in p}

    def part_of(self, v: int) -> frozenset[int]:
        for p in self.parts:
            if v in p:
                return p
        raise KeyError(v)

    def split_off(self, v: int) -> "Partition":
        """The refinement that separates ``v`` from the rest of its part."""
        p = self.part_of(v)
        if len(p) == 1:
            return self
        rest = [q for q in self.parts if q is not p]
        return Partition(rest + [p - {v}, frozenset([v])])

    def validate_for(self, g: Trigraph) -> None:
        seen: set[int] = set()
        for p in self.parts:
            if seen & p:
                raise InvalidPartitionError(f"parts overlap on {sorted(seen & p)}")
            seen |= p
        if seen != set(g.vertices):
            extra = sorted(seen - set(g.vertices))
            missing = sorted(set(g.vertices) - seen)
            raise InvalidPartitionError(
                f"partition does not cover the vertex set (extra={extra}, missing={missing})")

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and set(self.parts) == set(other.parts)

    def __repr__(self) -> str:
        return f"Partition({[sorted(p) for p in self.parts]})"


def min_or_raise(p: frozenset[int]) -> int:
    if not p:
        raise InvalidPartitionError("partition parts must be non-empty")
    return min(p)


def normalize_multigraph(vertices: Iterable[int], edges: Iterable[tuple[int, int]],
                         red: Iterable[tuple[int, int]] = ()) -> Trigraph:
    """Collapse parallel edges; the survivor is red iff some parallel copy was red."""
    g = Trigraph(vertices)
    for u, v in edges:
        g.add_edge(u, v, BLACK)
    for u, v in red:
        g.add_edge(u, v, RED)
    return g
