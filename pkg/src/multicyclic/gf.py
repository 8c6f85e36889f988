"""Exact arithmetic in GF(p^m).

Elements are canonical integers in [0, q): the base-p encoding of the
polynomial representation.  Prime fields (m = 1) use direct modular
arithmetic; extension fields multiply through log/antilog tables built
once per field.  All public operations accept plain ints or numpy
integer arrays and are pure.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    NotPrime,
    OrderNotDividing,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over GF(p), coefficients low-degree first -----------

def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    while len(_poly_trim(a)) - 1 >= dm:
        a = _poly_trim(a)
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - lead * c) % p
    return _poly_trim(a)


def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
    return _poly_mod(res, mod, p)


def _is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in range(p ** d):
            div = [(low // p ** i) % p for i in range(d)] + [1]
            if not _poly_trim(_divides_remainder(poly, div, p)):
                return False
    return True


def _divides_remainder(a, div, p):
    a = list(a)
    dd = len(div) - 1
    inv_lead = pow(div[-1], p - 2, p)
    while len(_poly_trim(a)) - 1 >= dd:
        a = _poly_trim(a)
        shift = len(a) - 1 - dd
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(div):
            a[shift + i] = (a[shift + i] - factor * c) % p
    return _poly_trim(a)


class Field:
    """A finite field GF(p^m) with its arithmetic tables.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if m < 1 or m > 16 or p ** m > MAX_ORDER:
            raise DegreeTooLarge(f"p^m = {p}^{m} outside supported range")
        self.p = p
        self.m = m
        self.q = p ** m
        if m == 1:
            self.modulus = ()
            self._exp = None
            self._log = None
            self.generator = self._find_generator(lambda a, b: (a * b) % p)
        else:
            mod = tuple(int(c) % p for c in modulus) if modulus else None
            if mod is not None:
                if len(mod) != m + 1 or mod[-1] != 1:
                    raise ReducibleModulus(
                        f"modulus must be monic of degree {m}")
                if not _is_irreducible(mod, p):
                    raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
            else:
                mod = self._default_modulus()
            self.modulus = mod
            self._alpha_pow_digits = self._alpha_powers()
            self.generator = self._find_generator(self._raw_mul)
            self._build_tables()

    # -- construction ------------------------------------------------------

    def _default_modulus(self):
        # smallest monic irreducible of degree m, low coefficients as a
        # base-p integer ascending: deterministic across runs
        p, m = self.p, self.m
        for low in range(p ** m):
            cand = tuple((low // p ** i) % p for i in range(m)) + (1,)
            if _is_irreducible(cand, p):
                return cand
        raise ReducibleModulus("no irreducible modulus found")  # unreachable

    def _alpha_powers(self):
        p, m = self.p, self.m
        pows = []
        cur = [1]
        for _ in range(2 * m - 1):
            digits = list(cur) + [0] * (m - len(cur))
            pows.append(digits[:m])
            cur = _poly_mulmod(cur, [0, 1], self.modulus, p)
        return pows

    def _raw_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = [(a // p ** i) % p for i in range(m)]
        db = [(b // p ** i) % p for i in range(m)]
        digits = _poly_mulmod(da, db, self.modulus, p)
        return sum(c * p ** i for i, c in enumerate(digits))

    def _find_generator(self, mul) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._raw_pow(g, order // f, mul) != 1 for f in factors):
                return g
        raise NotPrime("no generator found")  # unreachable for a field

    @staticmethod
    def _raw_pow(a, e, mul):
        acc = 1
        while e:
            if e & 1:
                acc = mul(acc, a)
            a = mul(a, a)
            e >>= 1
        return acc

    def _build_tables(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._raw_mul(x, self.generator)
        if x != 1:
            raise NotPrime("generator order mismatch")  # unreachable
        self._exp = exp
        self._log = log

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _ret(out):
        if isinstance(out, np.ndarray) and out.ndim == 0:
            return int(out)
        return out

    def add(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return self._ret((a + b) % self.p)
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for i in range(self.m):
            pi = p ** i
            out += (((a // pi) + (b // pi)) % p) * pi
        return self._ret(out)

    def neg(self, a):
        a = np.asarray(a)
        if self.m == 1:
            return self._ret((-a) % self.p)
        p = self.p
        out = np.zeros(a.shape, dtype=np.int64)
        for i in range(self.m):
            pi = p ** i
            out += ((-(a // pi)) % p) * pi
        return self._ret(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return self._ret((a * b) % self.p)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        out = np.where((a == 0) | (b == 0), 0, out)
        return self._ret(out)

    def inv(self, a):
        if isinstance(a, np.ndarray):
            flat = [self.inv(int(x)) for x in a.ravel()]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        a = int(a)
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def pow(self, a, e: int):
        a = int(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        e %= self.q - 1
        if self.m == 1:
            return pow(a, e, self.p)
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def sum(self, arr, axis=None):
        arr = np.asarray(arr)
        if self.m == 1:
            return self._ret(arr.sum(axis=axis) % self.p)
        p = self.p
        shape = arr.sum(axis=axis).shape
        out = np.zeros(shape, dtype=np.int64)
        for i in range(self.m):
            pi = p ** i
            out += (((arr // pi) % p).sum(axis=axis) % p) * pi
        return self._ret(out)

    def dot(self, A, B):
        """Matrix/vector product with field arithmetic (matmul semantics)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.m == 1:
            return self._ret((A @ B) % self.p)
        p, m = self.p, self.m
        Ad = [(A // p ** i) % p for i in range(m)]
        Bd = [(B // p ** j) % p for j in range(m)]
        conv = [None] * (2 * m - 1)
        for i in range(m):
            for j in range(m):
                t = Ad[i] @ Bd[j]
                conv[i + j] = t if conv[i + j] is None else conv[i + j] + t
        digits = [np.zeros(conv[0].shape, dtype=np.int64) for _ in range(m)]
        for t, ct in enumerate(conv):
            red = self._alpha_pow_digits[t]
            for k, rk in enumerate(red):
                if rk:
                    digits[k] += rk * ct
        out = np.zeros(conv[0].shape, dtype=np.int64)
        for k in range(m):
            out += (digits[k] % p) * p ** k
        return self._ret(out)

    # -- roots of unity ----------------------------------------------------

    def nth_root_of_unity(self, n: int) -> int:
        """Deterministic primitive n-th root of unity: generator^((q-1)/n)."""
        if n < 1:
            raise OrderNotDividing(f"n = {n} must be positive")
        if (self.q - 1) % n != 0:
            raise OrderNotDividing(f"{n} does not divide q-1 = {self.q - 1}")
        return self.pow(self.generator, (self.q - 1) // n)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("order of zero")
        k, x = 1, a
        while x != 1:
            x = int(self.mul(x, a))
            k += 1
        return k

    def elements(self):
        return range(self.q)

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))
