"""Transversal (hitting set) numbers and tau-criticality."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import partial
from itertools import combinations

from hypercrit._parallel import pmap
from hypercrit.core import Hypergraph, VertexSet, check_subset, delete_edge


@dataclass(frozen=True)
class EdgeDeletion:
    tau_after: int
    witness: VertexSet
    blocker: VertexSet | None


@dataclass(frozen=True)
class TauCriticalVerdict:
    is_critical: bool
    r: int
    t: int
    tau: int
    witness: VertexSet
    per_edge: dict[VertexSet, EdgeDeletion]


def is_transversal(H: Hypergraph, T: Iterable[int]) -> bool:
    T = check_subset(H, T, "transversal candidate")
    return all(not T.isdisjoint(e) for e in H.edges)


def _incidence(H: Hypergraph) -> list[int]:
    # inc[v] has bit i set when vertex v lies in edge i
    inc = [0] * (H.n + 1)
    for i, e in enumerate(H.edges):
        for v in e:
            inc[v] |= 1 << i
    return inc


def _smallest_transversal(H: Hypergraph, max_size: int) -> VertexSet | None:
    """Lex-least transversal of minimum size, searching sizes ``0..max_size``."""
    m = len(H.edges)
    full = (1 << m) - 1
    inc = _incidence(H)
    max_deg = max((c.bit_count() for c in inc), default=0)
    for s in range(0, max_size + 1):
        if s * max_deg < m:
            continue
        for T in combinations(H.vertices, s):
            hit = 0
            for v in T:
                hit |= inc[v]
            if hit == full:
                return T
    return None


def transversal_number(H: Hypergraph) -> tuple[int, VertexSet]:
    # V itself meets every non-empty edge, so the search always succeeds
    T = _smallest_transversal(H, len(H.vertices))
    assert T is not None
    return len(T), T


def find_blocker_pair(H: Hypergraph, e: Iterable[int], max_size: int = 2) -> VertexSet | None:
    """Smallest (then lex-least) set of at most ``max_size`` vertices meeting every edge but ``e``."""
    return _smallest_transversal(delete_edge(H, e), max_size)


def _edge_deletion(H: Hypergraph, t: int, e: VertexSet) -> EdgeDeletion:
    tau_after, witness = transversal_number(delete_edge(H, e))
    return EdgeDeletion(tau_after, witness, witness if tau_after <= t - 1 else None)


def check_tau_critical(H: Hypergraph, r: int = 3, t: int = 3, jobs: int = 1) -> TauCriticalVerdict:
    """Decide whether the r-uniform ``H`` has ``tau == t`` and ``tau(H - e) <= t - 1`` for all edges."""
    if not H.is_uniform(r):
        raise ValueError(f"hypergraph is not {r}-uniform")
    tau, witness = transversal_number(H)
    results = pmap(partial(_edge_deletion, H, t), H.edges, jobs)
    per_edge = dict(zip(H.edges, results))
    critical = tau == t and all(d.tau_after <= t - 1 for d in results)
    return TauCriticalVerdict(critical, r, t, tau, witness, per_edge)
