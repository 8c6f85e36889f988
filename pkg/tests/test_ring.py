import random

import numpy as np
import pytest

from multicyclic import Field, Ring, fourier
from multicyclic.errors import (
    ArityMismatch,
    AxisOutOfRange,
    CtxMismatch,
    OrderNotDividing,
)


def test_ring_new_valid(ring3):
    assert ring3.roots == (2, 2, 2)
    assert ring3.N == 8


def test_ring_new_rejects_bad_axis(f3):
    with pytest.raises(OrderNotDividing) as err:
        Ring(f3, (4,))
    assert "axis 1" in str(err.value)
    with pytest.raises(OrderNotDividing) as err:
        Ring(f3, (2, 4, 2))
    assert "axis 2" in str(err.value)


def test_ring_f5(f5):
    r = Ring(f5, (4, 2))
    assert f5.element_order(r.roots[0]) == 4
    assert r.roots[1] == 4
    assert f5.element_order(r.roots[1]) == 2


def test_monomial_order_graded_lex(ring3):
    assert ring3.monomials == [
        (0, 0, 0),
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, 0, 1), (0, 1, 1),
        (1, 1, 1),
    ]
    assert [ring3.monomial_str(m) for m in ring3.monomials] == [
        "1", "x", "y", "z", "xy", "xz", "yz", "xyz"]


def test_mul_identity(ring3):
    rng = random.Random(0)
    for _ in range(10):
        a = ring3.random_poly(rng)
        assert a * ring3.one() == a


def test_x_squared_is_one(f3):
    r = Ring(f3, (2,))
    x = r.monomial((1,))
    assert x * x == r.one()


def test_mul_commutative_associative(f3, f5):
    for ring in (Ring(f3, (2, 2, 2)), Ring(f5, (4, 2))):
        rng = random.Random(1)
        for _ in range(25):
            a, b, c = (ring.random_poly(rng) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)


def test_ctx_mismatch(f3, f5):
    a = Ring(f3, (2,)).one()
    b = Ring(f5, (2,)).one()
    with pytest.raises(CtxMismatch):
        a * b


def test_evaluate_constant(ring3):
    c = ring3.one().scale(2)
    assert c((1, 1, 1)) == 2
    assert c((2, 2, 2)) == 2


def test_evaluate_reference_idempotent(ring3):
    # e = 2x + 2y + xy + 2xz + 2yz + xyz: indicator of its defining set
    coeffs = np.zeros((2, 2, 2), dtype=np.int64)
    coeffs[1, 0, 0] = 2
    coeffs[0, 1, 0] = 2
    coeffs[1, 1, 0] = 1
    coeffs[1, 0, 1] = 2
    coeffs[0, 1, 1] = 2
    coeffs[1, 1, 1] = 1
    from multicyclic.ring import Poly
    e = Poly(ring3, coeffs)
    assert e((1, 1, 1)) == 1     # point for index (0,0,0), inside the set
    assert e((2, 2, 2)) == 0     # index (1,1,1), outside the set


def test_evaluate_arity(ring3):
    with pytest.raises(ArityMismatch):
        ring3.one()((1, 1))


def test_evaluate_is_ring_homomorphism(f5):
    ring = Ring(f5, (4, 2))
    rng = random.Random(3)
    for _ in range(20):
        a = ring.random_poly(rng)
        b = ring.random_poly(rng)
        pt = (f5.pow(ring.roots[0], rng.randrange(4)),
              f5.pow(ring.roots[1], rng.randrange(2)))
        assert (a * b)(pt) == f5.mul(a(pt), b(pt))
        assert (a + b)(pt) == f5.add(a(pt), b(pt))


def test_shift_full_cycle_is_identity(ring3, f5):
    rng = random.Random(4)
    for ring in (ring3, Ring(f5, (4, 2))):
        f = ring.random_poly(rng)
        for t in range(ring.r):
            assert f.shift(t, ring.lengths[t]) == f
            g = f
            for _ in range(ring.lengths[t]):
                g = g.shift(t, 1)
            assert g == f


def test_shift_matches_monomial_mul(ring3, f9):
    rng = random.Random(5)
    for ring in (ring3, Ring(f9, (4, 2))):
        for _ in range(50):
            f = ring.random_poly(rng)
            t = rng.randrange(ring.r)
            k = rng.randrange(ring.lengths[t])
            exps = [0] * ring.r
            exps[t] = k
            assert f.shift(t, k) == f * ring.monomial(exps)


def test_shift_axis_bounds(ring3):
    with pytest.raises(AxisOutOfRange):
        ring3.one().shift(3, 1)


def test_shift_of_reference_idempotent(ring3):
    # shifting e along x reproduces the second generator-matrix row
    from multicyclic import construct
    rec = construct(ring3, [(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    shifted = rec.idempotent.shift(0, 1)
    assert shifted.vector().tolist() == [2, 0, 1, 2, 2, 0, 1, 2]


def test_degenerate_axis(f3):
    r = Ring(f3, (2, 1))
    assert r.N == 2
    rng = random.Random(6)
    a, b = r.random_poly(rng), r.random_poly(rng)
    assert a * b == b * a
    assert a.shift(1, 1) == a  # X_2 = 1


def test_str_canonical(ring3):
    assert str(ring3.zero()) == "0"
    assert str(ring3.one()) == "1"
    f = ring3.monomial((1, 1, 0)) + ring3.monomial((1, 0, 0)).scale(2)
    assert str(f) == "2x + xy"
