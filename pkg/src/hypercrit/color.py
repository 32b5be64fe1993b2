"""Exact weak-colouring searches.

A weak (proper) colouring leaves no edge monochromatic. All searches are
exhaustive and deterministic: witnesses are the lexicographically least
candidates, comparing vertex sets as ascending tuples.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from hypercrit.core import Graph, Hypergraph, VertexSet, check_subset, check_vertex, from_mask, to_mask


@dataclass(frozen=True)
class TwoColoring:
    """A 2-colouring given by its blue set; every other vertex is red."""

    blue: VertexSet = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "blue", tuple(sorted(set(self.blue))))

    def color(self, v: int) -> int:
        return 1 if v in self.blue else 0


@dataclass(frozen=True)
class KColoring:
    """A total map vertex -> colour in ``1..k``."""

    assignment: Mapping[int, int]

    @property
    def k(self) -> int:
        return max(self.assignment.values(), default=0)

    def classes(self) -> dict[int, VertexSet]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.assignment):
            out.setdefault(self.assignment[v], []).append(v)
        return {c: tuple(vs) for c, vs in sorted(out.items())}


def _blue_mask(H: Hypergraph, c: TwoColoring | Iterable[int]) -> int:
    blue = c.blue if isinstance(c, TwoColoring) else tuple(c)
    return to_mask(check_subset(H, blue, "blue set"))


def monochromatic_edges(H: Hypergraph, c: TwoColoring | Iterable[int]) -> list[VertexSet]:
    blue = _blue_mask(H, c)
    red = H.all_mask & ~blue
    return [e for e, m in zip(H.edges, H.edge_masks) if m & blue == m or m & red == m]


def is_proper(H: Hypergraph, c: KColoring | Mapping[int, int]) -> bool:
    assignment = c.assignment if isinstance(c, KColoring) else c
    missing = [v for v in H.vertices if v not in assignment]
    if missing:
        raise ValueError(f"colouring is not total: vertices {missing} uncoloured")
    return all(len({assignment[v] for v in e}) >= 2 for e in H.edges)


class _TwoColorSearch:
    """Lex-least blue set subject to edge constraints.

    ``bichrome`` edges must see both colours, the optional ``mono`` edge must
    be monochromatic, and vertices in ``fixed_red`` are never blue.

    Vertices are branched on in label order. Within a subtree whose decided
    vertices are all below ``v``, the candidate "every undecided vertex red"
    is a prefix of every other solution there, so it is lex-least if valid;
    otherwise putting ``v`` blue beats putting it red. Unit propagation is
    used only to discard infeasible subtrees.
    """

    def __init__(self, all_mask: int, bichrome: Iterable[int], mono: int | None = None, fixed_red: int = 0):
        self.all = all_mask
        self.bichrome = tuple(bichrome)
        self.mono = mono
        self.fixed_red = fixed_red

    def _valid(self, blue: int, red: int) -> bool:
        for m in self.bichrome:
            if m & blue == m or m & red == m:
                return False
        m = self.mono
        return m is None or m & blue == m or m & red == m

    def _propagate(self, blue: int, red: int) -> bool:
        changed = True
        while changed:
            changed = False
            for m in self.bichrome:
                if m & blue == m or m & red == m:
                    return False
                free = m & ~(blue | red)
                if free and not free & (free - 1):
                    if not m & red:
                        red |= free
                        changed = True
                    elif not m & blue:
                        blue |= free
                        changed = True
            m = self.mono
            if m is not None:
                if m & blue and m & red:
                    return False
                if m & blue and m & ~blue:
                    blue |= m
                    changed = True
                elif m & red and m & ~red:
                    red |= m
                    changed = True
            if blue & red:
                return False
        return True

    def run(self) -> int | None:
        if any(not m & (m - 1) for m in self.bichrome):
            return None  # a singleton edge is always monochromatic
        return self._search(0, self.fixed_red & self.all)

    def _search(self, blue: int, red: int) -> int | None:
        rest = self.all & ~(blue | red)
        if self._valid(blue, red | rest):
            return blue
        if not rest or not self._propagate(blue, red):
            return None
        bit = rest & -rest
        found = self._search(blue | bit, red)
        if found is not None:
            return found
        return self._search(blue, red | bit)


def find_2coloring(H: Hypergraph) -> TwoColoring | None:
    """Lex-least blue set of a proper 2-colouring, or ``None``.

    Colour swapping is broken by keeping the smallest vertex (vertex 1 for a
    full vertex set) red.
    """
    first = H.all_mask & -H.all_mask
    blue = _TwoColorSearch(H.all_mask, H.edge_masks, fixed_red=first).run()
    return None if blue is None else TwoColoring(from_mask(blue))


def is_two_colorable(H: Hypergraph) -> bool:
    return find_2coloring(H) is not None


def find_unique_mono_certificate(H: Hypergraph, e: Iterable[int]) -> TwoColoring | None:
    """Lex-least blue set under which ``e`` is the only monochromatic edge."""
    e = H.canonical_edge(e)
    target = H.edge_index[e]
    others = [m for i, m in enumerate(H.edge_masks) if i != target]
    blue = _TwoColorSearch(H.all_mask, others, mono=H.edge_masks[target]).run()
    return None if blue is None else TwoColoring(from_mask(blue))


def find_vertex_deletion_coloring(H: Hypergraph, v: int) -> TwoColoring | None:
    """Lex-least blue set avoiding ``v`` that properly 2-colours ``H - v``."""
    check_vertex(H, v)
    bit = 1 << v
    kept = [m for m in H.edge_masks if not m & bit]
    blue = _TwoColorSearch(H.all_mask, kept, fixed_red=bit).run()
    return None if blue is None else TwoColoring(from_mask(blue))


def _find_k_coloring(H: Hypergraph, k: int) -> dict[int, int] | None:
    # edges are checked when their largest vertex gets coloured
    closing: dict[int, list[VertexSet]] = {}
    for e in H.edges:
        closing.setdefault(e[-1], []).append(e)
    order = H.vertices
    colors = [0] * (H.n + 1)

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(1, min(k, used + 1) + 1):
            colors[v] = c
            if all(any(colors[u] != c for u in e) for e in closing.get(v, ())):
                if rec(i + 1, max(used, c)):
                    return True
        colors[v] = 0
        return False

    if not rec(0, 0):
        return None
    return {v: colors[v] for v in order}


def chromatic_number(H: Hypergraph) -> tuple[int, KColoring]:
    """Smallest ``k`` admitting a proper ``k``-colouring, with a witness.

    Raises ``ValueError`` if ``H`` has a single-vertex edge, which no colouring
    can make non-monochromatic.
    """
    if any(len(e) == 1 for e in H.edges):
        raise ValueError("hypergraph has a single-vertex edge; no proper colouring exists")
    if not H.edges:
        return 1, KColoring({v: 1 for v in H.vertices})
    for k in range(2, len(H.vertices) + 1):
        found = _find_k_coloring(H, k)
        if found is not None:
            return k, KColoring(found)
    raise AssertionError("unreachable: n colours always suffice without singleton edges")


def independence_number(H: Hypergraph | Graph) -> tuple[int, VertexSet]:
    """Maximum size of a vertex set containing no edge, with the lex-least witness.

    Branch and bound, include-before-exclude in label order, so among sets of
    one size the first one reached is lexicographically least.
    """
    order = H.vertices
    n = len(order)
    masks = [to_mask(e) for e in H.edges]
    by_vertex: dict[int, list[int]] = {v: [] for v in order}
    for m in masks:
        for v in from_mask(m):
            by_vertex[v].append(m)
    best = [-1, 0]

    def blocked(v: int, S: int) -> bool:
        t = S | (1 << v)
        return any(m & t == m for m in by_vertex[v])

    def bound(i: int, S: int) -> int:
        cand = 0
        for u in order[i:]:
            if not blocked(u, S):
                cand |= 1 << u
        # every edge whose missing part lies in the candidates loses a vertex
        used = 0
        packed = 0
        for m in masks:
            rest = m & ~S
            if rest and rest & cand == rest and not rest & used:
                used |= rest
                packed += 1
        return cand.bit_count() - packed

    def rec(i: int, S: int, size: int) -> None:
        if i == n:
            if size > best[0]:
                best[0], best[1] = size, S
            return
        if size + bound(i, S) <= best[0]:
            return
        v = order[i]
        if not blocked(v, S):
            rec(i + 1, S | (1 << v), size + 1)
        rec(i + 1, S, size)

    rec(0, 0, 0)
    return best[0], from_mask(best[1])
