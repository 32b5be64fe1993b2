"""Set-pair systems and the Bollobas inequality, in exact rational arithmetic."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import numpy as np

from hypercrit.core import Hypergraph, VertexSet
from hypercrit.transversal import check_tau_critical

MAX_AUDIT_GROUND = 9


@dataclass(frozen=True)
class SetPairSystem:
    pairs: tuple[tuple[VertexSet, VertexSet], ...]

    def __post_init__(self):
        pairs = tuple((tuple(sorted(set(a))), tuple(sorted(set(b)))) for a, b in self.pairs)
        for a, b in pairs:
            if any(x < 1 for x in a + b):
                raise ValueError("set-pair elements must be positive integers")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> SetPairSystem:
        return cls(tuple((tuple(a), tuple(b)) for a, b in pairs))

    @property
    def ground(self) -> VertexSet:
        return tuple(sorted({x for a, b in self.pairs for x in a + b}))

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PermutationAudit:
    ground: VertexSet
    permutations: int
    counts: tuple[int, ...]
    disjoint: bool
    probabilities_match: bool

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.permutations) for c in self.counts)


def edge_bound(r: int, t: int) -> int:
    """Maximum edge count of an r-uniform hypergraph that is tau-critical of order t."""
    if r < 1 or t < 1:
        raise ValueError("need r >= 1 and t >= 1")
    return comb(r + t - 1, r)


def verify_cross_intersecting(S: SetPairSystem) -> bool:
    sets = [(frozenset(a), frozenset(b)) for a, b in S.pairs]
    for i, (a, b) in enumerate(sets):
        if not a.isdisjoint(b):
            return False
        for j, (_, bj) in enumerate(sets):
            if i != j and a.isdisjoint(bj):
                return False
    return True


def bollobas_sum(S: SetPairSystem) -> Fraction:
    return sum((Fraction(1, comb(len(a) + len(b), len(a))) for a, b in S.pairs), Fraction(0))


def extract_setpair_system(H: Hypergraph, jobs: int = 1) -> SetPairSystem:
    """Pairs ``(e, B_e)`` where ``B_e`` is the lex-least blocker of ``H - e``.

    ``H`` must be 3-uniform and tau-critical of order 3. The resulting system
    is checked to be cross-intersecting with every blocker a 2-set disjoint
    from its edge; a failure raises ``RuntimeError``.
    """
    verdict = check_tau_critical(H, 3, 3, jobs=jobs)
    if not verdict.is_critical:
        raise ValueError("hypergraph is not tau-critical of order 3")
    pairs = []
    for e, d in verdict.per_edge.items():
        B = d.blocker
        if B is None or len(B) != 2 or set(B) & set(e):
            raise RuntimeError(f"blocker {B} for edge {e} is not a 2-set disjoint from the edge")
        pairs.append((e, B))
    S = SetPairSystem(tuple(pairs))
    if not verify_cross_intersecting(S):
        raise RuntimeError("extracted set-pair system is not cross-intersecting")
    return S


def permutation_event_audit(S: SetPairSystem) -> PermutationAudit:
    """Count, over every ordering of the ground set, when all of A_i precedes all of B_i."""
    if not verify_cross_intersecting(S):
        raise ValueError("set-pair system is not cross-intersecting")
    ground = S.ground
    k = len(ground)
    if k > MAX_AUDIT_GROUND:
        raise ValueError(f"ground set of size {k} exceeds the audit limit {MAX_AUDIT_GROUND}")
    index = {x: i for i, x in enumerate(ground)}
    perms = np.array(list(permutations(range(k))), dtype=np.int8).reshape(factorial(k), k)
    pos = np.argsort(perms, axis=1)  # pos[p, x] = position of element x in permutation p
    events = np.zeros((len(perms), len(S.pairs)), dtype=bool)
    for i, (a, b) in enumerate(S.pairs):
        ia = [index[x] for x in a]
        ib = [index[x] for x in b]
        if not ia or not ib:
            events[:, i] = True
            continue
        events[:, i] = pos[:, ia].max(axis=1) < pos[:, ib].min(axis=1)
    counts = tuple(int(c) for c in events.sum(axis=0))
    disjoint = bool((events.sum(axis=1) <= 1).all())
    total = factorial(k)
    match = all(c * comb(len(a) + len(b), len(a)) == total for c, (a, b) in zip(counts, S.pairs))
    return PermutationAudit(ground, total, counts, disjoint, match)
