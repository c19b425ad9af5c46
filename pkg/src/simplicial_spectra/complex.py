"""Pure simplicial complexes given by their facets.

Faces are plain tuples of strictly increasing 1-based vertex ids. The sorted
order is also the positive orientation used by the boundary maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

Face = tuple[int, ...]

MAX_ISO_VERTICES = 9


class ComplexError(ValueError):
    """Invalid complex data or an operation outside its domain."""


def make_face(vertices: Iterable[int]) -> Face:
    face = tuple(sorted(int(v) for v in vertices))
    if not face:
        raise ComplexError("empty face")
    if len(set(face)) != len(face):
        raise ComplexError(f"repeated vertex in {face}")
    return face


def boundary_faces(face: Face) -> list[Face]:
    """Codimension-one faces, ordered by the index of the omitted vertex."""
    return [face[:j] + face[j + 1:] for j in range(len(face))]


@dataclass(frozen=True)
class Complex:
    """Simplicial complex on the vertex set 1..n generated by its facets.

    Every vertex in 1..n is a 0-face, including vertices covered by no facet.
    Use :func:`from_facets` to build one from raw vertex lists.
    """

    n: int
    facets: tuple[Face, ...]
    dropped: tuple[Face, ...] = field(default=(), compare=False)
    duplicates: int = field(default=0, compare=False)

    @property
    def normalized(self) -> bool:
        """True if dominated or duplicate facets were removed on construction."""
        return bool(self.dropped) or self.duplicates > 0

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _strata(self) -> dict[int, tuple[Face, ...]]:
        found: dict[int, set[Face]] = {0: {(v,) for v in self.vertices}}
        for facet in self.facets:
            for k in range(2, len(facet) + 1):
                found.setdefault(k - 1, set()).update(itertools.combinations(facet, k))
        return {i: tuple(sorted(s)) for i, s in found.items()}

    @cached_property
    def _face_sets(self) -> dict[int, frozenset[Face]]:
        return {i: frozenset(s) for i, s in self._strata.items()}

    @cached_property
    def _indices(self) -> dict[int, dict[Face, int]]:
        return {i: {f: k for k, f in enumerate(s)} for i, s in self._strata.items()}

    def faces(self, i: int) -> tuple[Face, ...]:
        """All i-faces in lexicographic order; empty outside 0..dim."""
        return self._strata.get(i, ())

    def face_index(self, i: int) -> dict[Face, int]:
        return self._indices.get(i, {})

    def has_face(self, face: Sequence[int]) -> bool:
        face = tuple(face)
        return face in self._face_sets.get(len(face) - 1, frozenset())

    def _require_face(self, face: Sequence[int]) -> Face:
        face = make_face(face)
        if not self.has_face(face):
            raise ComplexError(f"{face} is not a face of the complex")
        return face

    def degree(self, face: Sequence[int]) -> int:
        """Number of faces one dimension up that contain ``face``."""
        face = self._require_face(face)
        return len(self._cofaces(face))

    def _cofaces(self, face: Face) -> list[Face]:
        up = self._face_sets.get(len(face), frozenset())
        out = []
        for v in self.vertices:
            if v not in face:
                g = tuple(sorted(face + (v,)))
                if g in up:
                    out.append(g)
        return out

    def up_neighbors(self, face: Sequence[int]) -> set[Face]:
        """Same-dimension faces lying with ``face`` in a common coface."""
        face = self._require_face(face)
        out: set[Face] = set()
        for coface in self._cofaces(face):
            out.update(boundary_faces(coface))
        out.discard(face)
        return out

    def down_neighbors(self, face: Sequence[int]) -> set[Face]:
        """Same-dimension faces meeting ``face`` in a codimension-one face."""
        face = self._require_face(face)
        if len(face) == 1:
            return set()
        same = self._face_sets[len(face) - 1]
        out: set[Face] = set()
        for g in boundary_faces(face):
            for v in self.vertices:
                if v not in face:
                    h = tuple(sorted(g + (v,)))
                    if h in same:
                        out.add(h)
        return out

    def down_neighbors_via(self, face: Sequence[int], u: int) -> set[Face]:
        """The down neighbors of ``face`` of the form G + {u}, G in its boundary."""
        face = self._require_face(face)
        if u in face:
            raise ComplexError(f"vertex {u} lies in {face}")
        if not 1 <= u <= self.n:
            raise ComplexError(f"vertex {u} outside 1..{self.n}")
        same = self._face_sets[len(face) - 1]
        out = set()
        for g in boundary_faces(face):
            h = tuple(sorted(g + (u,)))
            if h in same:
                out.add(h)
        return out

    def without_facet(self, facet: Sequence[int]) -> "Complex":
        facet = tuple(facet)
        rest = tuple(f for f in self.facets if f != facet)
        if len(rest) == len(self.facets):
            raise ComplexError(f"{facet} is not a facet")
        if not rest:
            raise ComplexError("removing the last facet leaves an empty complex")
        return Complex(self.n, rest)

    def relabel(self, perm: Sequence[int]) -> "Complex":
        """Apply the vertex map v -> perm[v-1]."""
        return from_facets(self.n, [[perm[v - 1] for v in f] for f in self.facets])


def from_facets(n: int, raw: Iterable[Iterable[int]]) -> Complex:
    """Validate and normalize a facet list.

    Vertices are sorted, duplicates are dropped and facets contained in other
    facets are removed; the removed ones are kept in ``Complex.dropped``.
    """
    if n < 1:
        raise ComplexError(f"vertex count must be positive, got {n}")
    faces = []
    for entry in raw:
        face = make_face(entry)
        if face[0] < 1 or face[-1] > n:
            raise ComplexError(f"vertex out of range 1..{n} in {list(entry)}")
        faces.append(face)
    if not faces:
        raise ComplexError("empty facet list")

    unique = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    dropped: list[Face] = []
    for face in unique:
        s = set(face)
        if any(s < set(k) for k in kept):
            dropped.append(face)
        else:
            kept.append(face)
    return Complex(n, tuple(sorted(kept)), tuple(sorted(dropped)), len(faces) - len(unique))


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite containment graph between i-faces and (i+1)-faces."""

    left: tuple[Face, ...]
    right: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]

    def components(self) -> np.ndarray:
        """Component label for every node, left nodes first."""
        nl, nr = len(self.left), len(self.right)
        size = nl + nr
        if not self.edges:
            return np.arange(size)
        a = np.array(self.edges)
        g = coo_matrix((np.ones(len(a)), (a[:, 0], a[:, 1] + nl)), shape=(size, size))
        _, labels = connected_components(g, directed=False)
        return labels


def incidence_graph(K: Complex, i: int) -> IncidenceGraph:
    if not 0 <= i < K.dim:
        raise ComplexError(f"incidence graph needs 0 <= i < {K.dim}, got {i}")
    left, right = K.faces(i), K.faces(i + 1)
    index = K.face_index(i)
    edges = tuple(
        sorted((index[g], j) for j, f in enumerate(right) for g in boundary_faces(f))
    )
    return IncidenceGraph(left, right, edges)


def is_path_connected(K: Complex, i: int) -> bool:
    """Whether every two i-faces are joined by a chain of (i+1)-up-neighbor steps."""
    faces = K.faces(i)
    if len(faces) <= 1:
        return True
    if i >= K.dim or i < 0:
        return False
    labels = incidence_graph(K, i).components()
    return len(set(labels[: len(faces)].tolist())) == 1


def complete_and_connect(K: Complex) -> Complex:
    """Enlarge a pure r-complex until it has every r-subset of 1..n as an
    (r-1)-face and is (r-1)-path connected, without creating new r-holes.

    Two (r-1)-faces in different components that share an (r-2)-face are
    bridged by their union; the lexicographically smallest such pair is used
    at every step.
    """
    if not K.is_pure:
        raise ComplexError("complete_and_connect needs a pure complex")
    r = K.dim
    if r < 1:
        raise ComplexError("complete_and_connect needs dimension >= 1")

    ridge_list = list(itertools.combinations(K.vertices, r))
    ridge_index = {f: k for k, f in enumerate(ridge_list)}
    parent = list(range(len(ridge_list)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def attach(top: Face) -> None:
        roots = [find(ridge_index[g]) for g in boundary_faces(top)]
        for x in roots[1:]:
            parent[find(x)] = find(roots[0])

    facets = list(K.facets)
    for f in facets:
        attach(f)

    while True:
        bridge = None
        for a, b in itertools.combinations(range(len(ridge_list)), 2):
            fa, fb = ridge_list[a], ridge_list[b]
            if find(a) != find(b) and len(set(fa) & set(fb)) == r - 1:
                bridge = tuple(sorted(set(fa) | set(fb)))
                break
        if bridge is None:
            break
        facets.append(bridge)
        attach(bridge)
    return from_facets(K.n, facets)


def _lex_subset_ranks(n: int) -> tuple[np.ndarray, list[Face]]:
    subsets = sorted(
        s for k in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), k)
    )
    rank = np.zeros(1 << n, dtype=np.int64)
    for r, s in enumerate(subsets):
        rank[sum(1 << (v - 1) for v in s)] = r
    return rank, subsets


def canonical_form(K: Complex) -> tuple[int, tuple[Face, ...]]:
    """Lexicographically least sorted facet list over all vertex relabelings."""
    n = K.n
    if n > MAX_ISO_VERTICES:
        raise ComplexError(f"canonical form limited to n <= {MAX_ISO_VERTICES}, got {n}")
    rank, subsets = _lex_subset_ranks(n)
    facet_idx = [np.array(f) - 1 for f in K.facets]
    best = None
    perms = itertools.permutations(range(n))
    chunk = 40320
    while True:
        block = np.array(list(itertools.islice(perms, chunk)), dtype=np.int64)
        if block.size == 0:
            break
        bits = np.left_shift(1, block)
        masks = np.stack([bits[:, idx].sum(axis=1) for idx in facet_idx], axis=1)
        ranks = np.sort(rank[masks], axis=1)
        first = np.lexsort(ranks.T[::-1])[0]
        cand = tuple(ranks[first].tolist())
        if best is None or cand < best:
            best = cand
    return n, tuple(subsets[r] for r in best)


def _degree_signature(K: Complex) -> tuple:
    counts = [0] * K.n
    for f in K.facets:
        for v in f:
            counts[v - 1] += 1
    return K.n, len(K.facets), tuple(sorted(len(f) for f in K.facets)), tuple(sorted(counts))


def is_isomorphic(K1: Complex, K2: Complex) -> bool:
    if _degree_signature(K1) != _degree_signature(K2):
        return False
    return canonical_form(K1) == canonical_form(K2)


def face_count_complete(n: int, i: int) -> int:
    """Number of i-faces of the full simplex on n vertices."""
    return comb(n, i + 1)
