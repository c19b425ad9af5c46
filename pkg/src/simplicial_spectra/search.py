"""Enumeration of pure complexes meeting the spectral equality condition.

A facet set S on vertices 1..n meets the condition when, for every F in S and
every u outside F, exactly r of the r+1 sets G + {u} (G in the boundary of F)
also lie in S. Candidate facets are handled as bit positions, in colex order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb
from typing import Literal, Optional

from .complex import Complex, ComplexError, Face, boundary_faces, canonical_form, from_facets
from .extremal import check_condition_cond

EXHAUSTIVE_LIMIT = 20


@dataclass
class SearchOutcome:
    classes: list[Complex]
    nodes_explored: int
    exhaustive: bool
    wall_time: float
    labeled_solutions: int

    def summary(self) -> dict:
        return {
            "n_classes": len(self.classes),
            "facet_counts": [len(K.facets) for K in self.classes],
            "nodes_explored": self.nodes_explored,
            "labeled_solutions": self.labeled_solutions,
            "exhaustive": self.exhaustive,
            "wall_time": round(self.wall_time, 3),
        }


def _candidates(n: int, r: int) -> list[Face]:
    faces = itertools.combinations(range(1, n + 1), r + 1)
    return sorted(faces, key=lambda f: tuple(reversed(f)))


def _constraints(cands: list[Face], n: int) -> list[tuple[int, tuple[int, ...]]]:
    index = {f: k for k, f in enumerate(cands)}
    out = []
    for a, F in enumerate(cands):
        for u in range(1, n + 1):
            if u not in F:
                members = tuple(index[tuple(sorted(g + (u,)))] for g in boundary_faces(F))
                out.append((a, members))
    return out


class _Deduper:
    def __init__(self):
        self.seen: dict[tuple, Complex] = {}
        self.labeled = 0

    def add(self, K: Complex) -> None:
        if not check_condition_cond(K):
            raise AssertionError(f"search produced a complex failing the condition: {K.facets}")
        self.labeled += 1
        key = canonical_form(K)
        if key not in self.seen:
            self.seen[key] = from_facets(key[0], key[1])

    def classes(self) -> list[Complex]:
        return [self.seen[k] for k in sorted(self.seen, key=lambda k: (len(k[1]), k[1]))]


def _exhaustive(n: int, r: int, dedup: _Deduper) -> int:
    cands = _candidates(n, r)
    cons = [(1 << a, sum(1 << m for m in members)) for a, members in _constraints(cands, n)]
    m = len(cands)
    for S in range(1, 1 << m):
        if all(not (S & bit) or bin(S & mask).count("1") == r for bit, mask in cons):
            dedup.add(from_facets(n, [cands[k] for k in range(m) if S >> k & 1]))
    return (1 << m) - 1


def _backtrack(n: int, r: int, dedup: _Deduper, deadline: Optional[float]) -> tuple[int, bool]:
    cands = _candidates(n, r)
    cons = _constraints(cands, n)
    m = len(cands)
    watch: list[list[int]] = [[] for _ in range(m)]
    for c, (a, members) in enumerate(cons):
        watch[a].append(c)
        for x in members:
            watch[x].append(c)

    def propagate(state: list[int], queue: list[int]) -> bool:
        pending = set(queue)
        while pending:
            c = pending.pop()
            a, members = cons[c]
            if state[a] == 0:
                continue
            inc = sum(1 for x in members if state[x] == 1)
            und = [x for x in members if state[x] == -1]
            feasible = inc <= r <= inc + len(und)
            if state[a] == -1:
                if not feasible:
                    state[a] = 0
                    pending.update(watch[a])
                continue
            if not feasible:
                return False
            if und and inc == r:
                forced = 0
            elif und and inc + len(und) == r:
                forced = 1
            else:
                continue
            for x in und:
                state[x] = forced
                pending.update(watch[x])
        return True

    nodes = 0
    # every nonempty solution has a relabeling containing the first candidate
    root = [-1] * m
    root[0] = 1
    stack = [root] if propagate(root, list(watch[0])) else []
    while stack:
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            return nodes, False
        state = stack.pop()
        nodes += 1
        try:
            k = state.index(-1)
        except ValueError:
            dedup.add(from_facets(n, [cands[j] for j in range(m) if state[j] == 1]))
            continue
        for value in (0, 1):
            child = state.copy()
            child[k] = value
            if propagate(child, list(watch[k])):
                stack.append(child)
    return nodes, True


def search_cond(
    n: int,
    r: int,
    mode: Literal["exhaustive", "backtracking"] = "backtracking",
    budget: Optional[float] = None,
) -> SearchOutcome:
    """Isomorphism classes of nonempty pure r-complexes on 1..n meeting the
    equality condition.

    ``exhaustive`` scans every facet subset and is limited to at most 20
    candidate facets. ``backtracking`` is a depth-first search with forward
    checking on the per-(F, u) counts; it stops after ``budget`` seconds and
    then reports ``exhaustive=False``.
    """
    if r < 0 or n < r + 1:
        raise ComplexError(f"search needs n >= r + 1, got n={n}, r={r}")
    start = time.monotonic()
    dedup = _Deduper()
    if mode == "exhaustive":
        if comb(n, r + 1) > EXHAUSTIVE_LIMIT:
            raise ComplexError(
                f"exhaustive mode needs C(n, r+1) <= {EXHAUSTIVE_LIMIT}, got {comb(n, r + 1)}"
            )
        nodes, complete = _exhaustive(n, r, dedup), True
    elif mode == "backtracking":
        deadline = None if budget is None else start + budget
        nodes, complete = _backtrack(n, r, dedup, deadline)
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    return SearchOutcome(dedup.classes(), nodes, complete, time.monotonic() - start, dedup.labeled)
