"""Dense exact linear algebra over GF(q).

Matrices hold integer-encoded field elements in a numpy array and delegate
scalar arithmetic to the field's lookup tables, so row operations vectorize.
Gauss-Jordan uses first-nonzero pivoting; arithmetic is exact, so no pivot
heuristics are needed and all canonical forms are deterministic.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .fields import GF, FieldElement

__all__ = ["MatrixGF"]


class MatrixGF:
    def __init__(self, field: GF, data):
        self.field = field
        arr = np.array(data, dtype=np.int16)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError("entry out of field range")
        arr.setflags(write=False)
        self.array = arr
        self._rref: Optional[Tuple[np.ndarray, Tuple[int, ...]]] = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "MatrixGF":
        return cls(field, np.zeros((rows, cols), dtype=np.int16))

    @classmethod
    def identity(cls, field: GF, n: int) -> "MatrixGF":
        return cls(field, np.eye(n, dtype=np.int16))

    @classmethod
    def from_elements(cls, field: GF, rows: Sequence[Sequence[FieldElement]]) -> "MatrixGF":
        return cls(field, [[e.value for e in row] for row in rows])

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __getitem__(self, key):
        return self.array[key]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.array.shape == other.array.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.array.shape, self.array.tobytes()))

    # -- elimination -------------------------------------------------------

    def _compute_rref(self) -> Tuple[np.ndarray, Tuple[int, ...]]:
        if self._rref is not None:
            return self._rref
        f = self.field
        a = self.array.astype(np.int16).copy()
        rows, cols = a.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = None
            for i in range(r, rows):
                if a[i, c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                a[[r, pr]] = a[[pr, r]]
            inv = f.inv[a[r, c]]
            a[r] = f.mul[inv, a[r]]
            col = a[:, c]
            hit = np.nonzero(col)[0]
            for i in hit:
                if i != r:
                    a[i] = f.sub[a[i], f.mul[col[i], a[r]]]
            pivots.append(c)
            r += 1
        a = a[:r] if r else a[:0]
        a.setflags(write=False)
        self._rref = (a, tuple(pivots))
        return self._rref

    def rref(self) -> Tuple["MatrixGF", Tuple[int, ...]]:
        """Reduced row-echelon form with zero rows dropped, and pivot columns."""
        a, piv = self._compute_rref()
        m = MatrixGF(self.field, a)
        m._rref = (a, piv)
        return m, piv

    def rank(self) -> int:
        return len(self._compute_rref()[1])

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self.array.T)

    def matmul(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        f = self.field
        out = np.zeros((self.rows, other.cols), dtype=np.int16)
        for k in range(self.cols):
            col = self.array[:, k]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            contrib = f.mul[col[nz][:, None], other.array[k][None, :]]
            out[nz] = f.add[out[nz], contrib]
        out.setflags(write=False)
        return MatrixGF(f, out)

    def stack(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("cannot stack: mismatched shapes or fields")
        return MatrixGF(self.field, np.vstack([self.array, other.array]))

    def is_zero(self) -> bool:
        return not self.array.any()

    # -- null spaces -------------------------------------------------------

    def right_null_space(self) -> "MatrixGF":
        """Basis of {x : Mx = 0}, returned with basis vectors as columns."""
        f = self.field
        r, piv = self._compute_rref()
        cols = self.cols
        free = [c for c in range(cols) if c not in set(piv)]
        basis = np.zeros((cols, len(free)), dtype=np.int16)
        for j, fc in enumerate(free):
            basis[fc, j] = 1
            for i, pc in enumerate(piv):
                basis[pc, j] = f.neg[r[i, fc]]
        basis.setflags(write=False)
        return MatrixGF(f, basis if len(free) else basis.reshape(cols, 0))

    def left_null_space(self) -> "MatrixGF":
        """Basis of {x : xM = 0}, returned with basis vectors as rows."""
        return self.transpose().right_null_space().transpose()

    # -- subspace comparison ----------------------------------------------

    def row_space_equal(self, other: "MatrixGF") -> bool:
        if self.field != other.field or self.cols != other.cols:
            raise ValueError("cannot compare: mismatched widths or fields")
        a, _ = self._compute_rref()
        b, _ = other._compute_rref()
        return a.shape == b.shape and bool(np.array_equal(a, b))

    def row_space_contains(self, vector) -> bool:
        vec = np.asarray(vector, dtype=np.int16).reshape(1, -1)
        if vec.shape[1] != self.cols:
            raise ValueError("vector length does not match column count")
        aug = MatrixGF(self.field, np.vstack([self.array, vec]))
        return aug.rank() == self.rank()

    # -- display -----------------------------------------------------------

    def pretty(self) -> str:
        """Digit-run layout: one row per line, entries space-separated tokens."""
        f = self.field
        lines = []
        for row in self.array:
            lines.append(" ".join(f.format_value(int(v)) for v in row))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.rows}x{self.cols})"
