import itertools
import random

import numpy as np
import pytest

from multicyclic import (
    Field,
    GfMatrix,
    Ring,
    construct,
    fourier,
    idempotent_from_set,
    in_span,
    k_profile,
    min_distance,
    rref,
    search,
    theta,
)
from multicyclic.codes import BASIS_BOX, BASIS_GREEDY, literal_monomial_sum
from multicyclic.errors import BudgetExceeded, Infeasible, ZeroIdempotent

from conftest import spectral_min_distance

REFERENCE_SEEDS_K3 = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
REFERENCE_SEEDS_K4 = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_reference_k3_record(ring3):
    rec = construct(ring3, REFERENCE_SEEDS_K3)
    assert (rec.n, rec.K, rec.d) == (8, 3, 4)
    assert str(rec.idempotent) == "2x + 2y + xy + 2xz + 2yz + xyz"
    assert rec.generator.array.tolist() == [
        [0, 2, 2, 0, 1, 2, 2, 1],
        [2, 0, 1, 2, 2, 0, 1, 2],
        [2, 1, 0, 2, 2, 1, 0, 2],
    ]
    assert rec.basis_kind == BASIS_GREEDY
    assert rec.bound_applicable is False
    assert rec.singleton_bound == 6


def test_reference_k4_record(ring3):
    rec = construct(ring3, REFERENCE_SEEDS_K4)
    assert (rec.n, rec.K, rec.d) == (8, 4, 4)


def test_full_box_is_whole_space(ring3):
    rec = construct(ring3, ring3.monomials)
    assert (rec.K, rec.d) == (8, 1)
    assert rec.basis_kind == BASIS_BOX
    assert rec.k_profile == (2, 2, 2)
    assert rec.product_bound == 1 and rec.bound_applicable
    R, rk, _ = rref(rec.generator)
    assert rk == 8
    assert np.array_equal(R.array, np.eye(8, dtype=np.int64))


def test_zero_code_degenerate(ring3):
    rec = construct(ring3, [])
    assert rec.K == 0 and rec.d is None
    assert rec.generator.rows == 0 and rec.generator.cols == 8
    assert rec.k_profile is None


def test_repetition_style_code(f3, f5):
    # S = {origin}: e has full support with equal nonzero coefficients
    for ring in (Ring(f3, (2,)), Ring(f3, (2, 2, 2)), Ring(f5, (4, 2))):
        rec = construct(ring, [(0,) * ring.r])
        assert rec.K == 1
        assert rec.d == ring.N
        assert rec.idempotent.weight() == ring.N


def test_k_profile_full_box_single_axis(f3):
    ring = Ring(f3, (2,))
    assert k_profile(ring.one()) == (2,)


def test_k_profile_theta0_single_axis(f3):
    # x * theta_0 = theta_0 (eigenvector at 1), so k = 1
    ring = Ring(f3, (2,))
    th = theta(ring, 0, 0)
    assert th.shift(0, 1) == th
    assert k_profile(th) == (1,)


def test_k_profile_reference(ring3):
    # every index of the reference set has third coordinate 0, so
    # z * e = e and the profile is (2, 2, 1)
    e = idempotent_from_set(ring3, REFERENCE_SEEDS_K3)
    assert e.shift(2, 1) == e
    assert k_profile(e) == (2, 2, 1)


def test_k_profile_zero_rejected(ring3):
    with pytest.raises(ZeroIdempotent):
        k_profile(ring3.zero())


def test_box_basis_cartesian_set(f3):
    # S = {0} x {0,1} in a (2,2) ring: k = (1,2), dimension 2, bound 2
    ring = Ring(f3, (2, 2))
    rec = construct(ring, [(0, 0), (0, 1)])
    assert rec.K == 2
    assert rec.k_profile == (1, 2)
    assert rec.basis_kind == BASIS_BOX
    assert rec.product_bound == 2 and rec.bound_applicable
    assert rec.d >= 2
    assert rec.d == spectral_min_distance(ring, rec.defining_set.sorted())


@pytest.mark.parametrize("lengths,p,m", [((2, 2, 2), 3, 1), ((4, 2), 5, 1),
                                         ((8,), 3, 2), ((7,), 2, 3)])
def test_min_distance_matches_spectral_oracle(lengths, p, m):
    ring = Ring(Field(p, m), lengths)
    rng = random.Random(30)
    for _ in range(6):
        k = rng.randrange(1, min(ring.N, 4) + 1)
        seeds = rng.sample(ring.monomials, k)
        rec = construct(ring, seeds)
        assert rec.d == spectral_min_distance(ring, rec.defining_set.sorted())


def test_min_distance_budget(ring3):
    rec = construct(ring3, REFERENCE_SEEDS_K3, budget=10)
    assert rec.d is None
    assert rec.product_bound is not None
    with pytest.raises(BudgetExceeded):
        construct(ring3, REFERENCE_SEEDS_K3, budget=10, require_d=True)
    with pytest.raises(BudgetExceeded):
        min_distance(GfMatrix(ring3.field, [[1] * 8] * 3), budget=10)


def test_dimension_identity_random(f3, f5, f9):
    rng = random.Random(31)
    for ring in (Ring(f3, (2, 2, 2)), Ring(f5, (4, 2)), Ring(f9, (4, 2))):
        for _ in range(30):
            k = rng.randrange(1, ring.N + 1)
            seeds = rng.sample(ring.monomials, k)
            rec = construct(ring, seeds, budget=0)
            assert rref(rec.generator)[1] == rec.K == len(rec.defining_set)
            # every row's spectrum stays inside S
            S = set(rec.defining_set)
            for row in rec.generator.array:
                f = ring.from_vector(row)
                assert set(fourier(f).support()) <= S


def test_idempotent_acts_as_identity(ring3):
    rng = random.Random(32)
    rec = construct(ring3, REFERENCE_SEEDS_K3)
    for _ in range(20):
        coeffs = [rng.randrange(3) for _ in range(rec.K)]
        cw = ring3.zero()
        for c, row in zip(coeffs, rec.generator.array):
            cw = cw + ring3.from_vector(row).scale(c)
        assert rec.idempotent * cw == cw


def test_ideal_closed_under_shifts(f3, f5):
    rng = random.Random(33)
    for ring in (Ring(f3, (2, 2, 2)), Ring(f5, (4, 2))):
        for _ in range(10):
            k = rng.randrange(1, ring.N + 1)
            rec = construct(ring, rng.sample(ring.monomials, k), budget=0)
            for row in rec.generator.array:
                f = ring.from_vector(row)
                for t in range(ring.r):
                    assert in_span(f.shift(t, 1).vector(), rec.generator) is not None


def test_bound_chain(f3, f5):
    rng = random.Random(34)
    for ring in (Ring(f3, (2, 2, 2)), Ring(f5, (4, 2))):
        for _ in range(20):
            k = rng.randrange(1, ring.N + 1)
            rec = construct(ring, rng.sample(ring.monomials, k))
            assert 1 <= rec.d <= rec.singleton_bound
            if rec.bound_applicable:
                assert rec.d >= rec.product_bound


def test_literal_monomial_sum_diagnostic(ring3):
    lit = literal_monomial_sum(ring3, REFERENCE_SEEDS_K3)
    assert str(lit) == "1 + x + y"
    assert lit * lit != lit  # the literal reading is not idempotent here
    # the sum over the full box IS idempotent only in trivial cases
    lit0 = literal_monomial_sum(ring3, [(0, 0, 0)])
    assert lit0 == ring3.one()


def test_search_reference_ring_k3(ring3):
    records = search(ring3, 3)
    assert len(records) == 56
    assert records[0].d == 4
    assert max(r.d for r in records) == 4
    # deterministic tie-break: lexicographically smallest defining set first
    assert records[0].defining_set.sorted() == [(0, 0, 0), (0, 0, 1), (0, 1, 0)]


def test_search_full_dimension(ring3):
    records = search(ring3, 8)
    assert len(records) == 1
    assert records[0].d == 1 and records[0].K == 8


def test_search_k7_matches_oracle(ring3):
    records = search(ring3, 7)
    assert len(records) == 8
    best = max(spectral_min_distance(ring3, [m for m in ring3.monomials if m != out])
               for out in ring3.monomials)
    assert records[0].d == best == 2


def test_search_infeasible(ring3):
    with pytest.raises(Infeasible):
        search(ring3, 9)
    with pytest.raises(Infeasible):
        search(ring3, 0)
    # with nontrivial orbits some totals are unreachable
    ring8 = Ring(Field(2, 3), (7,))
    # orbits under q=8 are singletons, so any K in [1,7] is feasible there;
    # check infeasibility through the orbit machinery instead
    from multicyclic.codes import _suffix_counts
    assert _suffix_counts([1, 3, 3], 2)[0][2] == 0


def test_search_f5_golden(f5):
    ring = Ring(f5, (4, 2))
    records = search(ring, 4)
    oracle_best = max(
        spectral_min_distance(ring, list(S))
        for S in itertools.combinations(ring.monomials, 4))
    assert records[0].d == oracle_best == 4


def test_search_sampling_deterministic(ring3):
    a = search(ring3, 4, exhaustive_limit=10, samples=20, seed=1)
    b = search(ring3, 4, exhaustive_limit=10, samples=20, seed=1)
    assert [r.defining_set.sorted() for r in a] == [r.defining_set.sorted() for r in b]
    assert all(r.K == 4 for r in a)
