"""Isomorphism classes of small r-uniform hypergraphs.

A hypergraph on ``1..n`` is encoded as a bitmask over the r-subsets of
``1..n`` (in ``itertools.combinations`` order). Its canonical form is the
minimum mask over all vertex relabellings, evaluated for every permutation at
once through per-byte lookup tables. Classes are grown one edge at a time,
which reaches every class because deleting any edge of a representative gives
a member of the previous level.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from hypercrit.core import Hypergraph

MAX_ENUM_VERTICES = 7
_CHUNK = 8


@dataclass(frozen=True)
class IsoClass:
    mask: int
    automorphisms: int

    def orbit_size(self, n_perms: int) -> int:
        return n_perms // self.automorphisms


class UniformEnumerator:
    def __init__(self, n: int, r: int):
        if not 1 <= r <= n <= MAX_ENUM_VERTICES:
            raise ValueError(f"need 1 <= r <= n <= {MAX_ENUM_VERTICES}")
        self.n, self.r = n, r
        self.subsets = list(combinations(range(1, n + 1), r))
        index = {s: i for i, s in enumerate(self.subsets)}
        perms = list(permutations(range(1, n + 1)))
        self.n_perms = len(perms)
        m = len(self.subsets)
        # image[p, i] = index of the image of subset i under permutation p
        image = np.empty((len(perms), m), dtype=np.int64)
        for p, perm in enumerate(perms):
            for i, s in enumerate(self.subsets):
                image[p, i] = index[tuple(sorted(perm[v - 1] for v in s))]
        self.n_chunks = -(-m // _CHUNK)
        self.tables = []
        bits = np.arange(1 << _CHUNK)
        for c in range(self.n_chunks):
            table = np.zeros((len(perms), 1 << _CHUNK), dtype=np.int64)
            for j in range(_CHUNK):
                i = c * _CHUNK + j
                if i >= m:
                    break
                present = ((bits >> j) & 1).astype(bool)
                table[:, present] |= (np.int64(1) << image[:, i])[:, None]
            self.tables.append(table)

    def images(self, mask: int) -> np.ndarray:
        out = np.zeros(self.n_perms, dtype=np.int64)
        for c, table in enumerate(self.tables):
            out |= table[:, (mask >> (c * _CHUNK)) & ((1 << _CHUNK) - 1)]
        return out

    def canonical(self, mask: int) -> IsoClass:
        imgs = self.images(mask)
        best = int(imgs.min())
        return IsoClass(best, int((imgs == mask).sum()))

    def hypergraph(self, mask: int) -> Hypergraph:
        return Hypergraph(self.n, [s for i, s in enumerate(self.subsets) if mask >> i & 1])

    def classes(self) -> Iterator[IsoClass]:
        """Every isomorphism class, level by level in edge count."""
        level = {0: self.canonical(0)}
        m = len(self.subsets)
        while level:
            yield from (level[k] for k in sorted(level))
            nxt: dict[int, IsoClass] = {}
            for mask in level:
                for i in range(m):
                    if not mask >> i & 1:
                        child = mask | (1 << i)
                        imgs = self.images(child)
                        best = int(imgs.min())
                        if best not in nxt:
                            nxt[best] = IsoClass(best, int((imgs == best).sum()))
            level = nxt
