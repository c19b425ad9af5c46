"""Signed and signless boundary matrices and the Laplace operators built on them.

All matrices carry integer entries and face labels on both axes; rows and
columns follow the lexicographic face order of the complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Literal, TextIO

import numpy as np

from .complex import Complex, ComplexError, Face, boundary_faces


@dataclass(frozen=True)
class LabeledSparseMatrix:
    row_labels: tuple[Face, ...]
    col_labels: tuple[Face, ...]
    entries: tuple[tuple[int, int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def toarray(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros(self.shape, dtype=dtype)
        for i, j, v in self.entries:
            a[i, j] = v
        return a

    @classmethod
    def from_dense(cls, rows, cols, a: np.ndarray) -> "LabeledSparseMatrix":
        a = np.asarray(a)
        ii, jj = np.nonzero(a)
        entries = tuple((int(i), int(j), int(a[i, j])) for i, j in zip(ii, jj))
        return cls(tuple(rows), tuple(cols), entries)

    @property
    def T(self) -> "LabeledSparseMatrix":
        entries = tuple(sorted((j, i, v) for i, j, v in self.entries))
        return LabeledSparseMatrix(self.col_labels, self.row_labels, entries)

    def __matmul__(self, other: "LabeledSparseMatrix") -> "LabeledSparseMatrix":
        if self.col_labels != other.row_labels:
            raise ValueError("inner labels do not match")
        return LabeledSparseMatrix.from_dense(
            self.row_labels, other.col_labels, self.toarray() @ other.toarray()
        )

    def __add__(self, other: "LabeledSparseMatrix") -> "LabeledSparseMatrix":
        if (self.row_labels, self.col_labels) != (other.row_labels, other.col_labels):
            raise ValueError("labels do not match")
        return LabeledSparseMatrix.from_dense(
            self.row_labels, self.col_labels, self.toarray() + other.toarray()
        )

    def is_symmetric(self) -> bool:
        a = self.toarray()
        return self.row_labels == self.col_labels and np.array_equal(a, a.T)

    def to_triplets(self) -> list[tuple[Face, Face, int]]:
        return [(self.row_labels[i], self.col_labels[j], v) for i, j, v in self.entries]

    def dump(self, fp: TextIO) -> None:
        """Write coordinate triplets with face labels, one JSON object."""
        json.dump(
            {
                "shape": list(self.shape),
                "rows": [list(f) for f in self.row_labels],
                "cols": [list(f) for f in self.col_labels],
                "entries": [[list(r), list(c), v] for r, c, v in self.to_triplets()],
            },
            fp,
        )


@dataclass(frozen=True)
class FaceVector:
    labels: tuple[Face, ...]
    values: np.ndarray

    def __post_init__(self):
        if len(self.labels) != len(self.values):
            raise ValueError("labels and values differ in length")

    @classmethod
    def ones(cls, labels: Iterable[Face]) -> "FaceVector":
        labels = tuple(labels)
        return cls(labels, np.ones(len(labels)))

    def as_dict(self) -> dict[Face, float]:
        return dict(zip(self.labels, self.values.tolist()))


def _boundary(K: Complex, i: int, signed: bool) -> LabeledSparseMatrix:
    if not 1 <= i <= K.dim:
        raise ComplexError(f"boundary map needs 1 <= i <= {K.dim}, got {i}")
    rows, cols = K.faces(i - 1), K.faces(i)
    index = K.face_index(i - 1)
    entries = []
    for c, face in enumerate(cols):
        for j, g in enumerate(boundary_faces(face)):
            entries.append((index[g], c, (-1) ** j if signed else 1))
    return LabeledSparseMatrix(rows, cols, tuple(sorted(entries)))


def signed_boundary(K: Complex, i: int) -> LabeledSparseMatrix:
    """Oriented boundary map from i-chains to (i-1)-chains."""
    return _boundary(K, i, signed=True)


def signless_boundary(K: Complex, i: int) -> LabeledSparseMatrix:
    return _boundary(K, i, signed=False)


def q_up(K: Complex, i: int) -> LabeledSparseMatrix:
    """Up signless Laplacian on i-faces."""
    if not 0 <= i < K.dim:
        raise ComplexError(f"q_up needs 0 <= i < {K.dim}, got {i}")
    b = signless_boundary(K, i + 1)
    return b @ b.T


def q_down(K: Complex, i: int) -> LabeledSparseMatrix:
    """Down signless Laplacian on i-faces."""
    if not 1 <= i <= K.dim:
        raise ComplexError(f"q_down needs 1 <= i <= {K.dim}, got {i}")
    b = signless_boundary(K, i)
    return b.T @ b


def laplacian_signed(
    K: Complex, i: int, kind: Literal["up", "down", "full"] = "full"
) -> LabeledSparseMatrix:
    if kind == "up":
        if not 0 <= i < K.dim:
            raise ComplexError(f"up Laplacian needs 0 <= i < {K.dim}, got {i}")
        b = signed_boundary(K, i + 1)
        return b @ b.T
    if kind == "down":
        if not 1 <= i <= K.dim:
            raise ComplexError(f"down Laplacian needs 1 <= i <= {K.dim}, got {i}")
        b = signed_boundary(K, i)
        return b.T @ b
    if kind != "full":
        raise ValueError(f"unknown Laplacian kind {kind!r}")
    if not 0 <= i <= K.dim:
        raise ComplexError(f"Laplacian needs 0 <= i <= {K.dim}, got {i}")
    labels = K.faces(i)
    total = LabeledSparseMatrix(labels, labels, ())
    if i < K.dim:
        total = total + laplacian_signed(K, i, "up")
    if i >= 1:
        total = total + laplacian_signed(K, i, "down")
    return total


def _values_on(K: Complex, i: int, f: FaceVector) -> dict[Face, float]:
    if set(f.labels) != set(K.faces(i)):
        raise ValueError(f"vector labels are not the {i}-faces of the complex")
    return f.as_dict()


def quadratic_form(K: Complex, i: int, f: FaceVector) -> float:
    """Sum over (i+1)-faces of the squared boundary sum of ``f``."""
    vals = _values_on(K, i, f)
    return float(sum(sum(vals[g] for g in boundary_faces(top)) ** 2 for top in K.faces(i + 1)))


def q_up_apply(K: Complex, i: int, f: FaceVector) -> FaceVector:
    """Matrix-free product with the up signless Laplacian.

    Uses (Qf)(F) = deg(F) f(F) + sum of f over the up neighbors of F.
    """
    vals = _values_on(K, i, f)
    labels = K.faces(i)
    out = np.array(
        [K.degree(F) * vals[F] + sum(vals[G] for G in K.up_neighbors(F)) for F in labels],
        dtype=float,
    )
    return FaceVector(labels, out)
