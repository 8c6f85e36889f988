import itertools

import numpy as np
import pytest

from multicyclic import Field, Ring, fourier, fourier_inverse
from multicyclic.spectral import Spectrum


@pytest.fixture(scope="session")
def f3():
    return Field(3)


@pytest.fixture(scope="session")
def f5():
    return Field(5)


@pytest.fixture(scope="session")
def f8():
    return Field(2, 3)


@pytest.fixture(scope="session")
def f9():
    return Field(3, 2)


@pytest.fixture(scope="session")
def ring3(f3):
    """The reference ring: GF(3)[x,y,z] / <x^2-1, y^2-1, z^2-1>."""
    return Ring(f3, (2, 2, 2))


def brute_field_mul(field, a, b):
    """Independent oracle: polynomial multiplication mod the modulus,
    entirely from the digit representation (no tables)."""
    p, m = field.p, field.m
    if m == 1:
        return (a * b) % p
    da = [(a // p ** i) % p for i in range(m)]
    db = [(b // p ** i) % p for i in range(m)]
    res = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            res[i + j] = (res[i + j] + x * y) % p
    for k in range(len(res) - 1, m - 1, -1):
        c = res[k]
        res[k] = 0
        for i, mc in enumerate(field.modulus[:-1]):
            res[k - m + i] = (res[k - m + i] - c * mc) % p
    return sum(c * p ** i for i, c in enumerate(res[:m]))


def spectral_codewords(ring, S):
    """Independent oracle for the code defined by spectral support S:
    every inverse transform of a spectrum supported inside S."""
    S = sorted(S)
    for vals in itertools.product(range(ring.field.q), repeat=len(S)):
        tensor = np.zeros(ring.lengths, dtype=np.int64)
        for idx, v in zip(S, vals):
            tensor[idx] = v
        yield fourier_inverse(Spectrum(ring, tensor))


def spectral_min_distance(ring, S):
    best = None
    for cw in spectral_codewords(ring, S):
        w = cw.weight()
        if w and (best is None or w < best):
            best = w
    return best
