"""The ambient ring F_q[X_1,...,X_r] / <X_t^{n_t} - 1>.

Elements are dense r-dimensional coefficient tensors.  Multiplication is
schoolbook multidimensional cyclic convolution; everything is exact.
Flattened vectors (generator-matrix columns, spectra) use a fixed
graded-lex monomial order: exponent tuples sorted by total degree, ties
broken lexicographically with X_1 > X_2 > ... > X_r.
"""

from __future__ import annotations

import itertools
from functools import cached_property, reduce

import numpy as np

from .errors import ArityMismatch, AxisOutOfRange, CtxMismatch, OrderNotDividing
from .gf import Field

_VAR_NAMES_SHORT = ("x", "y", "z")


class Ring:
    """Immutable context: field, lengths, chosen roots, monomial order."""

    def __init__(self, field: Field, lengths):
        lengths = tuple(int(n) for n in lengths)
        if not lengths or any(n < 1 for n in lengths):
            raise ValueError("lengths must be a nonempty tuple of positive integers")
        for t, n in enumerate(lengths):
            if (field.q - 1) % n != 0:
                raise OrderNotDividing(
                    f"axis {t + 1}: n = {n} does not divide q-1 = {field.q - 1}")
        self.field = field
        self.lengths = lengths
        self.r = len(lengths)
        self.N = int(np.prod(lengths))
        self.roots = tuple(field.nth_root_of_unity(n) for n in lengths)
        self.monomials = sorted(
            itertools.product(*(range(n) for n in lengths)),
            key=lambda e: (sum(e), tuple(-x for x in e)))
        self._mono_pos = {e: i for i, e in enumerate(self.monomials)}
        # gather[i] = C-order flat index of the i-th monomial
        self._gather = np.array(
            [int(np.ravel_multi_index(e, lengths)) for e in self.monomials],
            dtype=np.int64)

    def var_names(self):
        if self.r <= len(_VAR_NAMES_SHORT):
            return _VAR_NAMES_SHORT[:self.r]
        return tuple(f"x{t + 1}" for t in range(self.r))

    def monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.var_names(), exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts) if parts else "1"

    def in_box(self, idx) -> bool:
        return (len(idx) == self.r
                and all(0 <= i < n for i, n in zip(idx, self.lengths)))

    @cached_property
    def _conv_index(self):
        # CONV[a, u] = position of monomial (m_a - m_u mod lengths)
        idx = np.empty((self.N, self.N), dtype=np.int64)
        for a, ma in enumerate(self.monomials):
            for u, mu in enumerate(self.monomials):
                diff = tuple((x - y) % n for x, y, n in zip(ma, mu, self.lengths))
                idx[a, u] = self._mono_pos[diff]
        return idx

    def _axis_power_table(self, t, sign=1):
        n = self.lengths[t]
        pw = np.array([self.field.pow(self.roots[t], sign * k) for k in range(n)],
                      dtype=np.int64)
        return pw[np.outer(np.arange(n), np.arange(n)) % n]

    @cached_property
    def fourier_matrix(self):
        """F[a, b] = prod_t w_t^(m_a[t] * m_b[t]) over the monomial order."""
        J = np.array(self.monomials, dtype=np.int64)
        F = np.ones((self.N, self.N), dtype=np.int64)
        for t in range(self.r):
            P = self._axis_power_table(t)
            F = np.asarray(self.field.mul(F, P[np.ix_(J[:, t], J[:, t])]))
        return F

    @cached_property
    def fourier_inverse_matrix(self):
        J = np.array(self.monomials, dtype=np.int64)
        F = np.ones((self.N, self.N), dtype=np.int64)
        for t in range(self.r):
            P = self._axis_power_table(t, sign=-1)
            F = np.asarray(self.field.mul(F, P[np.ix_(J[:, t], J[:, t])]))
        n_inv = self.field.inv(self.N % self.field.p)
        return np.asarray(self.field.mul(n_inv, F))

    def zero(self) -> "Poly":
        return Poly(self, np.zeros(self.lengths, dtype=np.int64))

    def one(self) -> "Poly":
        c = np.zeros(self.lengths, dtype=np.int64)
        c[(0,) * self.r] = 1
        return Poly(self, c)

    def monomial(self, exps, coeff: int = 1) -> "Poly":
        exps = tuple(exps)
        if not self.in_box(exps):
            raise AxisOutOfRange(f"exponent {exps} outside box {self.lengths}")
        c = np.zeros(self.lengths, dtype=np.int64)
        c[exps] = coeff
        return Poly(self, c)

    def from_vector(self, vec) -> "Poly":
        vec = np.asarray(vec, dtype=np.int64)
        flat = np.zeros(self.N, dtype=np.int64)
        flat[self._gather] = vec
        return Poly(self, flat.reshape(self.lengths))

    def random_poly(self, rng) -> "Poly":
        c = np.array([rng.randrange(self.field.q) for _ in range(self.N)],
                     dtype=np.int64).reshape(self.lengths)
        return Poly(self, c)

    def __repr__(self):
        return f"Ring({self.field!r}, lengths={self.lengths})"

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.field == other.field
                and self.lengths == other.lengths)

    def __hash__(self):
        return hash((self.field, self.lengths))


class Poly:
    """A ring element as a dense coefficient tensor (immutable)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != ring.lengths:
            raise CtxMismatch(
                f"coefficient shape {coeffs.shape} != ring lengths {ring.lengths}")
        coeffs = coeffs.copy()
        coeffs.setflags(write=False)
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise CtxMismatch("operands belong to different rings")

    def vector(self) -> np.ndarray:
        """Coefficients flattened in the ring's graded-lex monomial order."""
        return self.coeffs.ravel()[self.ring._gather]

    def __add__(self, other):
        self._check(other)
        return Poly(self.ring, self.ring.field.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.ring, self.ring.field.sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return Poly(self.ring, self.ring.field.neg(self.coeffs))

    def __mul__(self, other):
        """Multidimensional cyclic convolution, O(N^2)."""
        self._check(other)
        ring = self.ring
        B = other.vector()[ring._conv_index]
        vec = ring.field.dot(B, self.vector())
        return ring.from_vector(vec)

    def scale(self, c: int) -> "Poly":
        return Poly(self.ring, self.ring.field.mul(c, self.coeffs))

    def shift(self, axis: int, power: int = 1) -> "Poly":
        """Multiply by the monomial X_axis^power (cyclic coefficient shift)."""
        if not 0 <= axis < self.ring.r:
            raise AxisOutOfRange(f"axis {axis} not in [0, {self.ring.r})")
        return Poly(self.ring, np.roll(self.coeffs, power, axis=axis))

    def translate(self, exps) -> "Poly":
        """Multiply by the monomial X^exps (shift along every axis)."""
        if len(exps) != self.ring.r:
            raise ArityMismatch(f"expected {self.ring.r} exponents")
        return Poly(self.ring,
                    np.roll(self.coeffs, tuple(exps), axis=tuple(range(self.ring.r))))

    def __call__(self, point):
        """Evaluate at a point, Horner-style along each axis."""
        if len(point) != self.ring.r:
            raise ArityMismatch(f"expected {self.ring.r} coordinates, got {len(point)}")
        fld = self.ring.field
        arr = self.coeffs
        for x in reversed(list(point)):
            acc = arr[..., -1]
            for k in range(arr.shape[-1] - 2, -1, -1):
                acc = fld.add(fld.mul(acc, x), arr[..., k])
            arr = acc
        return int(arr)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __bool__(self):
        return bool(self.coeffs.any())

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ring == self.ring
                and np.array_equal(other.coeffs, self.coeffs))

    def __hash__(self):
        return hash((self.ring, self.coeffs.tobytes()))

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def __str__(self):
        terms = []
        for exps in self.ring.monomials:
            c = int(self.coeffs[exps])
            if c == 0:
                continue
            mono = self.ring.monomial_str(exps)
            if mono == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Poly({self})"


def product(polys, ring: Ring) -> Poly:
    return reduce(lambda a, b: a * b, polys, ring.one())
