"""Multidimensional Fourier transform over F_q and primitive idempotents.

The transform evaluates a ring element at every tuple of root powers
(w_1^{j_1}, ..., w_r^{j_r}); it is linear and bijective, turns ring
multiplication into pointwise spectrum multiplication, and sends the
primitive idempotent at index i to the Kronecker delta at i.  Transforms
are direct O(N^2) matrix products, exact at desk scale.
"""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange
from .ring import Poly, Ring


class Spectrum:
    """Fourier image of a ring element: a tensor of field values indexed by j."""

    __slots__ = ("ring", "values")

    def __init__(self, ring: Ring, values):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != ring.lengths:
            raise IndexOutOfRange(
                f"spectrum shape {values.shape} != ring lengths {ring.lengths}")
        values = values.copy()
        values.setflags(write=False)
        self.ring = ring
        self.values = values

    def __getitem__(self, j):
        return int(self.values[tuple(j)])

    def support(self):
        """Sorted list of index tuples with nonzero value."""
        return sorted(map(tuple, np.argwhere(self.values != 0).tolist()))

    def __eq__(self, other):
        return (isinstance(other, Spectrum) and other.ring == self.ring
                and np.array_equal(other.values, self.values))

    def __repr__(self):
        return f"Spectrum({self.values.tolist()})"


def fourier(f: Poly) -> Spectrum:
    """f_hat(j_1,...,j_r) = f(w_1^{j_1}, ..., w_r^{j_r})."""
    ring = f.ring
    vec = ring.field.dot(ring.fourier_matrix, f.vector())
    flat = np.zeros(ring.N, dtype=np.int64)
    flat[ring._gather] = vec
    return Spectrum(ring, flat.reshape(ring.lengths))


def fourier_inverse(s: Spectrum) -> Poly:
    """Coefficients c[m] = (1/N) sum_j s[j] prod_t w_t^{-j_t m_t}."""
    ring = s.ring
    svec = s.values.ravel()[ring._gather]
    vec = ring.field.dot(ring.fourier_inverse_matrix, svec)
    return ring.from_vector(vec)


def theta(ring: Ring, axis: int, index: int) -> Poly:
    """Univariate primitive idempotent (1/n_t) sum_m w_t^{-i m} X_t^m."""
    if not 0 <= axis < ring.r:
        raise IndexOutOfRange(f"axis {axis} not in [0, {ring.r})")
    n = ring.lengths[axis]
    if not 0 <= index < n:
        raise IndexOutOfRange(f"index {index} not in [0, {n})")
    fld = ring.field
    n_inv = fld.inv(n % fld.p)
    coeffs = np.zeros(ring.lengths, dtype=np.int64)
    sl = [0] * ring.r
    for m in range(n):
        sl[axis] = m
        coeffs[tuple(sl)] = fld.mul(n_inv, fld.pow(ring.roots[axis], -index * m))
    return Poly(ring, coeffs)


def primitive_idempotent(ring: Ring, index) -> Poly:
    """r-dimensional primitive idempotent: the tensor product of the
    univariate ones, with closed form (1/N) sum_m prod_t w_t^{-i_t m_t} X^m."""
    index = tuple(index)
    if not ring.in_box(index):
        raise IndexOutOfRange(f"index {index} outside box {ring.lengths}")
    fld = ring.field
    n_inv = fld.inv(ring.N % fld.p)
    # outer product of per-axis character vectors
    acc = np.array([n_inv], dtype=np.int64).reshape((1,) * ring.r)
    for t in range(ring.r):
        col = np.array(
            [fld.pow(ring.roots[t], -index[t] * m) for m in range(ring.lengths[t])],
            dtype=np.int64)
        shape = [1] * ring.r
        shape[t] = ring.lengths[t]
        acc = np.asarray(fld.mul(acc, col.reshape(shape)))
    return Poly(ring, np.broadcast_to(acc, ring.lengths))


def idempotent_from_set(ring: Ring, indices) -> Poly:
    """Sum of primitive idempotents over a defining set, computed as the
    inverse transform of the 0/1 indicator of the set."""
    values = np.zeros(ring.lengths, dtype=np.int64)
    for idx in indices:
        idx = tuple(idx)
        if not ring.in_box(idx):
            raise IndexOutOfRange(f"index {idx} outside box {ring.lengths}")
        values[idx] = 1
    return fourier_inverse(Spectrum(ring, values))
