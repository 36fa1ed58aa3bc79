"""Bit-matrix linear algebra over GF(2).

Each row is a Python int whose bit j is the entry in column j, so row
operations are single XORs on word-packed data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionError(f"row {r:#x} does not fit in {self.cols} columns")

    @classmethod
    def from_array(cls, a) -> "BitMatrix":
        a = np.asarray(a, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise DimensionError("expected a 2-d array")
        weights = 1 << np.arange(a.shape[1], dtype=object)
        return cls(tuple(int((row.astype(object) * weights).sum()) for row in a), a.shape[1])

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(k)), k)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.cols):
                out[i, j] = (r >> j) & 1
        return out

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def __str__(self):
        return "\n".join("".join("1" if (r >> j) & 1 else "." for j in range(self.cols)) for r in self.rows)


def _eliminate(rows: Sequence[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots = []
    r = 0
    for c in range(cols):
        bit = 1 << c
        p = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        pr = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pr
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(M: BitMatrix) -> int:
    return len(_eliminate(M.rows, M.cols)[0])


def rref(M: BitMatrix) -> BitMatrix:
    """Reduced row echelon form with zero rows dropped."""
    return BitMatrix(tuple(_eliminate(M.rows, M.cols)[0]), M.cols)


def null_space(M: BitMatrix) -> BitMatrix:
    """Basis (as rows) of {v : M v^T = 0}."""
    red, pivots = _eliminate(M.rows, M.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(red, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(tuple(basis), M.cols)


def matmul_t(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """A @ B^T over GF(2)."""
    if A.cols != B.cols:
        raise DimensionError(f"column counts differ: {A.cols} vs {B.cols}")
    out = []
    for a in A.rows:
        v = 0
        for j, b in enumerate(B.rows):
            if (a & b).bit_count() & 1:
                v |= 1 << j
        out.append(v)
    return BitMatrix(tuple(out), B.nrows)


def same_row_space(A: BitMatrix, B: BitMatrix) -> bool:
    if A.cols != B.cols:
        return False
    return rref(A).rows == rref(B).rows


def in_row_space(v: int, M: BitMatrix) -> bool:
    red, pivots = _eliminate(M.rows, M.cols)
    for row, p in zip(red, pivots):
        if (v >> p) & 1:
            v ^= row
    return v == 0


def is_self_dual(G: BitMatrix) -> bool:
    if rank(G) != G.nrows:
        raise DimensionError("generator matrix is rank deficient")
    if G.cols != 2 * G.nrows:
        return False
    return not any(matmul_t(G, G).rows)
