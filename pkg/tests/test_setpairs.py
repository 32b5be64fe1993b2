from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hypercrit.corpus import complete_uniform, disjoint_triples, single_edge
from hypercrit.setpairs import (
    SetPairSystem,
    bollobas_sum,
    edge_bound,
    extract_setpair_system,
    permutation_event_audit,
    verify_cross_intersecting,
)


def naive_counts(S):
    """Per-pair event counts by walking every ordering with list.index."""
    ground = sorted({x for a, b in S.pairs for x in a + b})
    counts = [0] * len(S.pairs)
    overlap = False
    for p in permutations(ground):
        hits = 0
        for i, (a, b) in enumerate(S.pairs):
            if all(p.index(x) < p.index(y) for x in a for y in b):
                counts[i] += 1
                hits += 1
        overlap |= hits > 1
    return counts, not overlap


@st.composite
def antichain_systems(draw, k_max=6):
    """Pairs (A, X - A) over an antichain of subsets of X = [k]; always cross-intersecting."""
    k = draw(st.integers(1, k_max))
    raw = draw(st.lists(st.frozensets(st.integers(1, k), max_size=k), max_size=8, unique=True))
    chain = [A for A in raw if not any(A < B or B < A for B in raw)]
    X = frozenset(range(1, k + 1))
    return SetPairSystem.of((sorted(A), sorted(X - A)) for A in chain)


@st.composite
def arbitrary_systems(draw):
    sets = st.frozensets(st.integers(1, 5), max_size=3)
    pairs = draw(st.lists(st.tuples(sets, sets), max_size=4))
    return SetPairSystem.of((sorted(a), sorted(b)) for a, b in pairs)


def test_extract_k5():
    S = extract_setpair_system(complete_uniform(5, 3))
    assert len(S) == 10
    for a, b in S.pairs:
        assert b == tuple(v for v in range(1, 6) if v not in a)


def test_extract_disjoint_triples():
    S = extract_setpair_system(disjoint_triples())
    assert len(S) == 3
    assert all(len(a) == 3 and len(b) == 2 for a, b in S.pairs)


def test_extract_rejects_non_critical():
    with pytest.raises(ValueError):
        extract_setpair_system(single_edge())


def test_verify_cross_intersecting():
    assert verify_cross_intersecting(extract_setpair_system(complete_uniform(5, 3)))
    assert not verify_cross_intersecting(SetPairSystem.of([((1,), (1,))]))
    assert not verify_cross_intersecting(SetPairSystem.of([((1,), (2,)), ((3,), (4,))]))
    assert verify_cross_intersecting(SetPairSystem(()))


def test_bollobas_sum_values():
    assert bollobas_sum(extract_setpair_system(complete_uniform(5, 3))) == 1
    assert bollobas_sum(SetPairSystem.of([((1,), (2,))])) == Fraction(1, 2)
    assert bollobas_sum(extract_setpair_system(disjoint_triples())) == Fraction(3, 10)
    assert bollobas_sum(SetPairSystem(())) == 0


def test_edge_bound():
    assert edge_bound(3, 3) == 10
    assert all(edge_bound(r, 1) == 1 for r in range(1, 8))
    assert edge_bound(3, 2) == 4
    with pytest.raises(ValueError):
        edge_bound(0, 3)


def test_audit_single_pair():
    a = permutation_event_audit(SetPairSystem.of([((1,), (2,))]))
    assert a.permutations == 2 and a.counts == (1,)
    assert a.probabilities == (Fraction(1, 2),)
    assert a.disjoint and a.probabilities_match


def test_audit_k5():
    a = permutation_event_audit(extract_setpair_system(complete_uniform(5, 3)))
    assert a.permutations == 120
    assert a.counts == (12,) * 10
    assert a.disjoint and a.total == 120


def test_audit_disjoint_triples():
    S = extract_setpair_system(disjoint_triples())
    a = permutation_event_audit(S)
    assert a.permutations == factorial(9)
    assert a.disjoint and a.probabilities_match
    assert Fraction(a.total, a.permutations) == bollobas_sum(S)


def test_audit_guards():
    with pytest.raises(ValueError):
        permutation_event_audit(SetPairSystem.of([((1,), (2,)), ((3,), (4,))]))
    big = SetPairSystem.of([(range(1, 6), range(6, 11))])
    with pytest.raises(ValueError):
        permutation_event_audit(big)


@settings(max_examples=150)
@given(antichain_systems())
def test_lemma_on_antichain_systems(S):
    assert verify_cross_intersecting(S)
    assert bollobas_sum(S) <= 1


@settings(max_examples=100)
@given(arbitrary_systems())
def test_cross_intersecting_implies_sum_at_most_one(S):
    if verify_cross_intersecting(S):
        assert bollobas_sum(S) <= 1


@settings(max_examples=60, deadline=None)
@given(antichain_systems(k_max=5))
def test_audit_matches_naive_enumeration(S):
    assume(len(S.ground) <= 6)
    a = permutation_event_audit(S)
    counts, disjoint = naive_counts(S)
    assert list(a.counts) == counts
    assert a.disjoint == disjoint
    assert a.total <= a.permutations
    for c, (x, y) in zip(a.counts, S.pairs):
        assert c * comb(len(x) + len(y), len(x)) == a.permutations


@given(antichain_systems(), st.randoms())
def test_sum_is_order_invariant(S, rnd):
    pairs = list(S.pairs)
    rnd.shuffle(pairs)
    assert bollobas_sum(SetPairSystem(tuple(pairs))) == bollobas_sum(S)
