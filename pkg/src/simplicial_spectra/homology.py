"""Exact Betti numbers over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boundary import LabeledSparseMatrix, signed_boundary
from .complex import Complex, ComplexError


@dataclass(frozen=True)
class BettiVector:
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


def rank_exact(M) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python ints."""
    if isinstance(M, LabeledSparseMatrix):
        M = M.toarray()
    rows = [[int(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank, prev = 0, 1
    for col in range(n):
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, m):
            a = rows[r][col]
            rows[r] = [(p * rows[r][c] - a * rows[rank][c]) // prev for c in range(n)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _top_betti(K: Complex, drop: Sequence[int] = ()) -> int:
    a = signed_boundary(K, K.dim).toarray()
    if drop:
        a = np.delete(a, list(drop), axis=1)
    return a.shape[1] - rank_exact(a)


def betti(K: Complex) -> BettiVector:
    d = K.dim
    ranks = [0] + [rank_exact(signed_boundary(K, i)) for i in range(1, d + 1)] + [0]
    return BettiVector(
        tuple(len(K.faces(i)) - ranks[i] - ranks[i + 1] for i in range(d + 1))
    )


def has_hole(K: Complex, i: int) -> bool:
    return 0 <= i <= K.dim and betti(K)[i] > 0


def is_basic_hole(K: Complex) -> bool:
    """Pure r-complex with one r-hole that disappears on deleting any r-face."""
    if not K.is_pure:
        raise ComplexError("basic-hole test needs a pure complex")
    if K.dim < 1:
        raise ComplexError("basic-hole test needs dimension >= 1")
    if _top_betti(K) != 1:
        return False
    return all(_top_betti(K, drop=[j]) == 0 for j in range(len(K.faces(K.dim))))
