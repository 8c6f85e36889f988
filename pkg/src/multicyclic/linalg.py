"""Exact Gauss-Jordan linear algebra over F_q.

No fraction-free or floating-point paths: all entries live in the field
and elimination uses field inversion directly.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .gf import Field


class GfMatrix:
    """Row-major matrix of canonical field elements (immutable)."""

    __slots__ = ("field", "array")

    def __init__(self, field: Field, array):
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2:
            array = array.reshape(0 if array.size == 0 else 1, -1)
        array = array.copy()
        array.setflags(write=False)
        self.field = field
        self.array = array

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __eq__(self, other):
        return (isinstance(other, GfMatrix) and other.field == self.field
                and np.array_equal(other.array, self.array))

    def __repr__(self):
        return f"GfMatrix({self.array.tolist()})"


def rref(M: GfMatrix):
    """Reduced row-echelon form: returns (R, rank, pivot_columns).

    Pivot choice is deterministic: first nonzero entry in column order.
    """
    fld = M.field
    A = M.array.copy()
    rows, cols = A.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pivot_row = None
        for r in range(row, rows):
            if A[r, col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            A[[row, pivot_row]] = A[[pivot_row, row]]
        A[row] = np.asarray(fld.mul(fld.inv(int(A[row, col])), A[row]))
        for r in range(rows):
            if r != row and A[r, col]:
                A[r] = np.asarray(fld.sub(A[r], fld.mul(int(A[r, col]), A[row])))
        pivots.append(col)
        row += 1
    return GfMatrix(fld, A), len(pivots), pivots


def rank(M: GfMatrix) -> int:
    return rref(M)[1]


def in_span(v, basis: GfMatrix):
    """Coefficients alpha with v = sum alpha_i * row_i, or None.

    Solved by reducing the augmented system basis^T * alpha = v.
    """
    fld = basis.field
    v = np.asarray(v, dtype=np.int64)
    if basis.rows == 0:
        return np.zeros(0, dtype=np.int64) if not v.any() else None
    if v.shape != (basis.cols,):
        raise DimensionMismatch(
            f"vector length {v.shape} incompatible with {basis.cols} columns")
    aug = GfMatrix(fld, np.hstack([basis.array.T, v[:, None]]))
    R, _, pivots = rref(aug)
    k = basis.rows
    if k in pivots:
        return None
    alpha = np.zeros(k, dtype=np.int64)
    for r, c in enumerate(pivots):
        alpha[c] = R.array[r, k]
    return alpha


class RowReducer:
    """Incremental rank builder keeping rows in reduced echelon state."""

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows = []     # reduced, pivot-normalized rows
        self.pivots = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, v) -> bool:
        """Reduce v against the current rows; keep it if independent."""
        fld = self.field
        v = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                v = np.asarray(fld.sub(v, fld.mul(int(v[pc]), row)))
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        pc = int(nz[0])
        v = np.asarray(fld.mul(fld.inv(int(v[pc])), v))
        for i, row in enumerate(self.rows):
            if row[pc]:
                self.rows[i] = np.asarray(fld.sub(row, fld.mul(int(row[pc]), v)))
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def contains(self, v) -> bool:
        fld = self.field
        v = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                v = np.asarray(fld.sub(v, fld.mul(int(v[pc]), row)))
        return not v.any()
