"""Multicyclic code construction: generating idempotent, shift-degree
profile, polynomial basis, generator matrix, exact minimum distance and
the product bound, plus exhaustive/randomized search over orbit unions.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import orbits as orb_mod
from .errors import BudgetExceeded, Infeasible, RankDeficient, ZeroIdempotent
from .linalg import GfMatrix, RowReducer, in_span, rref
from .orbits import DefiningSet, closure
from .ring import Poly, Ring
from .spectral import fourier, idempotent_from_set

DEFAULT_BUDGET = 3_000_000

BASIS_BOX = "box"
BASIS_GREEDY = "greedy"


@dataclass
class CodeRecord:
    ring: Ring
    defining_set: DefiningSet
    idempotent: Poly
    n: int
    K: int
    k_profile: Optional[tuple]
    basis_kind: Optional[str]
    generator: GfMatrix
    d: Optional[int]
    product_bound: Optional[int]
    bound_applicable: Optional[bool]
    singleton_bound: Optional[int]

    def params(self) -> str:
        d = self.d if self.d is not None else "?"
        return f"[{self.n}, {self.K}, {d}]_{self.ring.field.q}"


def k_profile(e: Poly) -> tuple:
    """Per-axis minimal k with X_t^k e dependent on lower shifts of e."""
    if e.is_zero():
        raise ZeroIdempotent("k profile of the zero element is undefined")
    ring = e.ring
    fld = ring.field
    out = []
    for t in range(ring.r):
        red = RowReducer(fld, ring.N)
        red.add(e.vector())
        k = ring.lengths[t]
        for m in range(1, ring.lengths[t]):
            v = e.shift(t, m).vector()
            if red.contains(v):
                k = m
                break
            red.add(v)
        out.append(k)
    return tuple(out)


def build_basis(e: Poly, K: int, kp: tuple):
    """Basis polynomials for <e>.

    Box basis {X^m e : m_t < k_t} when prod(k_t) equals the dimension;
    otherwise a greedy rank-building scan of monomial multiples of e in
    the ring's monomial order.
    """
    ring = e.ring
    fld = ring.field
    if math.prod(kp) == K:
        exps = sorted(
            (tuple(m) for m in np.ndindex(*kp)),
            key=lambda m: (sum(m), tuple(-x for x in m)))
        polys = [e.translate(m) for m in exps]
        red = RowReducer(fld, ring.N)
        for p in polys:
            red.add(p.vector())
        if red.rank != K:
            raise RankDeficient(
                f"box basis has rank {red.rank}, expected {K}")
        return polys, BASIS_BOX
    polys = []
    red = RowReducer(fld, ring.N)
    for m in ring.monomials:
        cand = e.translate(m)
        if red.add(cand.vector()):
            polys.append(cand)
        if red.rank == K:
            return polys, BASIS_GREEDY
    raise RankDeficient(
        f"monomial multiples of e span rank {red.rank}, expected {K}")


def generator_matrix(basis, ring: Ring) -> GfMatrix:
    """Rows are basis-polynomial coefficient vectors in monomial order."""
    if not basis:
        return GfMatrix(ring.field, np.zeros((0, ring.N), dtype=np.int64))
    return GfMatrix(ring.field, np.stack([p.vector() for p in basis]))


def min_distance(G: GfMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum Hamming weight over all nonzero codewords, by exhaustive
    chunked enumeration of message vectors."""
    fld = G.field
    q, K = fld.q, G.rows
    total = q ** K
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed budget {budget}")
    if K == 0:
        raise ZeroIdempotent("zero code has no nonzero codewords")
    best = G.cols
    chunk = max(1, min(total, 1 << 16))
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = np.stack([(idx // q ** t) % q for t in range(K)], axis=1)
        cw = np.asarray(fld.dot(msgs, G.array))
        w = int(np.count_nonzero(cw, axis=1).min())
        best = min(best, w)
        if best == 1:
            break
    return best


def product_bound(lengths, kp) -> int:
    return math.prod(n - k + 1 for n, k in zip(lengths, kp))


def _is_cyclic_interval(values, n) -> bool:
    vals = set(values)
    if len(vals) in (0, n):
        return True
    return any(all((s + i) % n in vals for i in range(len(vals))) for s in vals)


def bound_applicable(S, lengths, kp) -> bool:
    """The product bound is guaranteed only when the defining set is a
    Cartesian product of per-axis cyclic intervals (so the code is a
    tensor product of MDS-like univariate codes).  The weaker condition
    prod(k_t) = K admits counterexamples, e.g. S = {0, 4} at length 8
    over a field with an 8th root of unity."""
    indices = set(map(tuple, S))
    proj = [sorted({idx[t] for idx in indices}) for t in range(len(lengths))]
    if any(len(a) != k for a, k in zip(proj, kp)):
        return False
    if indices != set(itertools.product(*proj)):
        return False
    return all(_is_cyclic_interval(a, n) for a, n in zip(proj, lengths))


def construct(ring: Ring, seeds, budget: int = DEFAULT_BUDGET,
              require_d: bool = False) -> CodeRecord:
    """Full pipeline: close the seeds under the Frobenius action, build
    the generating idempotent, the basis and generator matrix, and the
    exact distance when the enumeration fits the budget."""
    S = closure(seeds, ring.lengths, ring.field.q)
    K = len(S)
    e = idempotent_from_set(ring, S)
    n = ring.N
    if K == 0:
        return CodeRecord(
            ring=ring, defining_set=S, idempotent=e, n=n, K=0,
            k_profile=None, basis_kind=None,
            generator=GfMatrix(ring.field, np.zeros((0, n), dtype=np.int64)),
            d=None, product_bound=None, bound_applicable=None,
            singleton_bound=None)
    kp = k_profile(e)
    basis, kind = build_basis(e, K, kp)
    G = generator_matrix(basis, ring)
    if rref(G)[1] != K:
        raise RankDeficient("generator matrix rank disagrees with |S|")
    pb = product_bound(ring.lengths, kp)
    applicable = bound_applicable(S, ring.lengths, kp)
    sb = n - K + 1
    q = ring.field.q
    d = None
    if q ** K <= budget:
        d = min_distance(G, budget)
    elif require_d:
        raise BudgetExceeded(f"{q ** K} codewords exceed budget {budget}")
    if d is not None:
        assert d <= sb, "Singleton bound violated: internal error"
        if applicable:
            assert d >= pb, "product bound violated: internal error"
    return CodeRecord(
        ring=ring, defining_set=S, idempotent=e, n=n, K=K, k_profile=kp,
        basis_kind=kind, generator=G, d=d, product_bound=pb,
        bound_applicable=applicable, singleton_bound=sb)


def literal_monomial_sum(ring: Ring, representatives) -> Poly:
    """Diagnostic only: the sum of monomials X^i over the orbits of the
    given representatives, with coefficient 1 (a literal reading of the
    construction recipe that is generally not idempotent)."""
    acc = ring.zero()
    for rep in representatives:
        for idx in orb_mod.orbit_of(rep, ring.lengths, ring.field.q).members:
            acc = acc + ring.monomial(idx)
    return acc


# -- search over orbit selections ------------------------------------------

def _suffix_counts(sizes, K):
    # counts[i][s] = number of subsets of sizes[i:] summing to s
    n = len(sizes)
    counts = [[0] * (K + 1) for _ in range(n + 1)]
    counts[n][0] = 1
    for i in range(n - 1, -1, -1):
        for s in range(K + 1):
            c = counts[i + 1][s]
            if sizes[i] <= s:
                c += counts[i + 1][s - sizes[i]]
            counts[i][s] = c
    return counts


def _enumerate_subsets(sizes, K, counts):
    n = len(sizes)

    def rec(i, s, chosen):
        if s == 0:
            yield list(chosen)
            return
        if i >= n or counts[i][s] == 0:
            return
        if sizes[i] <= s and counts[i + 1][s - sizes[i]]:
            chosen.append(i)
            yield from rec(i + 1, s - sizes[i], chosen)
            chosen.pop()
        if counts[i + 1][s]:
            yield from rec(i + 1, s, chosen)

    yield from rec(0, K, [])


def _sample_subset(sizes, K, counts, rng):
    # uniform over all subsets summing to K, guided by the DP counts
    chosen = []
    i, s = 0, K
    while s > 0:
        with_i = counts[i + 1][s - sizes[i]] if sizes[i] <= s else 0
        total = counts[i][s]
        if rng.randrange(total) < with_i:
            chosen.append(i)
            s -= sizes[i]
        i += 1
    return chosen


def search(ring: Ring, K_target: int, budget: int = DEFAULT_BUDGET,
           seed: int = 0, exhaustive_limit: int = 100_000,
           samples: int = 10_000) -> list[CodeRecord]:
    """All (or sampled) codes whose defining set is a union of orbits of
    total size K_target, ranked by exact distance descending; ties break
    toward the lexicographically smallest defining set."""
    if not 1 <= K_target <= ring.N:
        raise Infeasible(f"K = {K_target} outside [1, {ring.N}]")
    orbs = orb_mod.all_orbits(ring.lengths, ring.field.q)
    sizes = [o.size for o in orbs]
    counts = _suffix_counts(sizes, K_target)
    total = counts[0][K_target]
    if total == 0:
        raise Infeasible(f"no union of orbits has total size {K_target}")
    if total <= exhaustive_limit:
        selections = _enumerate_subsets(sizes, K_target, counts)
    else:
        rng = random.Random(seed)
        seen = set()
        picks = []
        while len(picks) < min(samples, total):
            sel = tuple(_sample_subset(sizes, K_target, counts, rng))
            if sel not in seen:
                seen.add(sel)
                picks.append(list(sel))
        selections = picks
    records = []
    for sel in selections:
        seeds = [orbs[i].representative for i in sel]
        records.append(construct(ring, seeds, budget=budget))
    records.sort(key=lambda r: (
        -(r.d if r.d is not None else 0), r.defining_set.sorted()))
    return records
