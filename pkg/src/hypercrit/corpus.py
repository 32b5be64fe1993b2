"""Built-in fixtures: the paper's explicit instances plus standard test hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from hypercrit.core import Hypergraph, check_vertex_count

H9_EDGES = (
    (1, 2, 3), (1, 2, 9), (1, 3, 8), (1, 4, 6), (1, 4, 8), (1, 4, 9),
    (1, 5, 7), (1, 5, 8), (1, 5, 9), (1, 6, 7),
    (2, 3, 6), (2, 3, 7), (2, 4, 9), (2, 5, 9), (2, 6, 7),
    (3, 4, 8), (3, 5, 8), (3, 6, 7),
    (4, 6, 8), (4, 6, 9),
    (5, 7, 8), (5, 7, 9),
)

# lines {i, i+1, i+3} mod 7, relabelled to 1..7
FANO_EDGES = tuple(tuple(sorted((i + d) % 7 + 1 for d in (0, 1, 3))) for i in range(7))


def builtin_h9() -> Hypergraph:
    """The 9-vertex, 22-edge critically 3-chromatic 3-graph with minimum degree 7."""
    return Hypergraph(9, H9_EDGES)


def complete_uniform(n: int, r: int) -> Hypergraph:
    check_vertex_count(n)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return Hypergraph(n, combinations(range(1, n + 1), r))


def fano_plane() -> Hypergraph:
    return Hypergraph(7, FANO_EDGES)


def disjoint_triples(k: int = 3) -> Hypergraph:
    """``k`` pairwise disjoint 3-edges on ``3k`` vertices."""
    return Hypergraph(3 * k, [(3 * i + 1, 3 * i + 2, 3 * i + 3) for i in range(k)])


def single_edge() -> Hypergraph:
    return Hypergraph(3, [(1, 2, 3)])


@dataclass(frozen=True)
class Fixture:
    name: str
    hypergraph: Hypergraph
    provenance: str


FIXTURES = {
    f.name: f
    for f in (
        Fixture("h9", builtin_h9(), "explicit 22-edge construction on [9]"),
        Fixture("k5_3", complete_uniform(5, 3), "complete 3-uniform hypergraph on 5 vertices"),
        Fixture("fano", fano_plane(), "Fano plane, classical non-2-colourable 3-graph"),
        Fixture("disjoint3", disjoint_triples(3), "three pairwise disjoint 3-edges"),
        Fixture("single", single_edge(), "a single 3-edge"),
    )
}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(FIXTURES)}") from None
