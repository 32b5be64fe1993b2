"""Hypergraph data model, subhypergraphs, link graphs and the edge-list format.

Vertex labels are drawn from ``1..n``. Internally a vertex set is an ``int`` bitmask
with bit ``v`` standing for vertex ``v`` (bit 0 is never used).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

MAX_VERTICES = 30

VertexSet = tuple[int, ...]


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def check_vertex_count(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(f"n={n} exceeds the exact-search guard of {MAX_VERTICES} vertices")


def _canonical_vertex_set(n: int, vertex_set: Iterable[int] | None) -> VertexSet:
    if vertex_set is None:
        return tuple(range(1, n + 1))
    vs = tuple(sorted(set(vertex_set)))
    if vs and (vs[0] < 1 or vs[-1] > n):
        raise ValueError(f"vertex set is not a subset of 1..{n}")
    return vs


def _canonical_edges(vertex_set: VertexSet, edges: Iterable[Iterable[int]]) -> tuple[VertexSet, ...]:
    allowed = frozenset(vertex_set)
    seen = set()
    for edge in edges:
        edge = list(edge)
        e = tuple(sorted(set(edge)))
        if not e:
            raise ValueError("edges must be non-empty")
        if len(e) != len(edge):
            raise ValueError(f"edge {tuple(edge)} repeats a vertex")
        if not allowed.issuperset(e):
            raise ValueError(f"edge {e} is not a subset of the vertex set")
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph with labels drawn from ``1..n``.

    ``vertex_set`` defaults to all of ``1..n``; subhypergraphs such as
    ``H - v`` keep the labels and ``n`` but shrink the vertex set. Edges are
    canonicalized on construction: each edge becomes an ascending tuple and
    the edge list is sorted lexicographically. Duplicate edges, empty edges
    and labels outside the vertex set raise ``ValueError``.
    """

    n: int
    edges: tuple[VertexSet, ...] = field(default=())
    vertex_set: VertexSet | None = None

    def __post_init__(self):
        check_vertex_count(self.n)
        vs = _canonical_vertex_set(self.n, self.vertex_set)
        object.__setattr__(self, "vertex_set", vs)
        object.__setattr__(self, "edges", _canonical_edges(vs, self.edges))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> Hypergraph:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges if e), default=0)
        return cls(n, edges)

    @property
    def vertices(self) -> VertexSet:
        return self.vertex_set

    @cached_property
    def all_mask(self) -> int:
        return to_mask(self.vertex_set)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(e) for e in self.edges)

    @cached_property
    def edge_index(self) -> dict[VertexSet, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_index

    def canonical_edge(self, edge: Iterable[int]) -> VertexSet:
        """Return ``edge`` as stored in this hypergraph, or raise if absent."""
        e = tuple(sorted(edge))
        if e not in self.edge_index:
            raise ValueError(f"{e} is not an edge of the hypergraph")
        return e

    def uniformity(self) -> int | None:
        """The common edge size, or ``None`` if edge sizes differ or there are no edges."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Graph:
    """A simple graph given by its unordered vertex pairs."""

    n: int
    pairs: tuple[tuple[int, int], ...] = field(default=())
    vertex_set: VertexSet | None = None

    def __post_init__(self):
        check_vertex_count(self.n)
        vs = _canonical_vertex_set(self.n, self.vertex_set)
        object.__setattr__(self, "vertex_set", vs)
        pairs = _canonical_edges(vs, self.pairs)
        if any(len(p) != 2 for p in pairs):
            raise ValueError("graph pairs must have exactly two distinct vertices")
        object.__setattr__(self, "pairs", pairs)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.pairs

    @property
    def vertices(self) -> VertexSet:
        return self.vertex_set

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.pairs, self.vertex_set)


def check_subset(H: Hypergraph | Graph, vertices: Iterable[int], what: str = "vertex set") -> frozenset[int]:
    s = frozenset(vertices)
    bad = sorted(s.difference(H.vertices))
    if bad:
        raise ValueError(f"{what} contains non-vertices {bad}")
    return s


def parse_edge_list(text: bytes | str) -> Hypergraph:
    """Parse the plain edge-list format: one edge per line, blank lines ignored.

    ``n`` is the largest label seen. Duplicate edges are rejected.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges: list[VertexSet] = []
    seen: dict[VertexSet, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        labels = []
        for tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(lineno, f"not an integer: {tok!r}") from None
            if v < 1:
                raise ParseError(lineno, f"vertex labels must be >= 1, got {v}")
            labels.append(v)
        if len(set(labels)) != len(labels):
            raise ParseError(lineno, "vertex repeated within an edge")
        e = tuple(sorted(labels))
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {e} (first on line {seen[e]})")
        seen[e] = lineno
        edges.append(e)
    n = max((e[-1] for e in edges), default=0)
    try:
        return Hypergraph(n, edges)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from None


def emit_edge_list(H: Hypergraph) -> bytes:
    return "".join(" ".join(map(str, e)) + "\n" for e in H.edges).encode("utf-8")


def degrees(H: Hypergraph) -> dict[int, int]:
    d = dict.fromkeys(H.vertices, 0)
    for e in H.edges:
        for v in e:
            d[v] += 1
    return d


def min_degree(H: Hypergraph) -> int:
    """Minimum degree over the vertex set (0 when it is empty)."""
    return min(degrees(H).values(), default=0)


def isolated_vertices(H: Hypergraph) -> VertexSet:
    return tuple(v for v, d in degrees(H).items() if d == 0)


def delete_edge(H: Hypergraph, e: Iterable[int]) -> Hypergraph:
    e = H.canonical_edge(e)
    return Hypergraph(H.n, [f for f in H.edges if f != e], H.vertex_set)


def induce(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """The subhypergraph on ``S``: edges inside ``S``, labels and ``n`` unchanged."""
    s = check_subset(H, S)
    return Hypergraph(H.n, [e for e in H.edges if s.issuperset(e)], s)


def delete_vertex(H: Hypergraph, v: int) -> Hypergraph:
    check_vertex(H, v)
    return induce(H, (u for u in H.vertices if u != v))


def check_vertex(H: Hypergraph | Graph, v: int) -> None:
    if v not in H.vertices:
        raise ValueError(f"{v} is not a vertex")


def link_graph(H: Hypergraph, v: int) -> Graph:
    """Pairs ``{x, y}`` with ``{v, x, y}`` an edge of the 3-uniform ``H``."""
    if not H.is_uniform(3):
        raise ValueError("link graphs are defined for 3-uniform hypergraphs")
    check_vertex(H, v)
    pairs = [tuple(u for u in e if u != v) for e in H.edges if v in e]
    return Graph(H.n, pairs, [u for u in H.vertices if u != v])
