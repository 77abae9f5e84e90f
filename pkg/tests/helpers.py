"""Shared oracles and randomized generators for the test suite.

Oracles here deliberately avoid the package's own representations: membership
is recomputed by dynamic programming, enumeration by subset brute force and
colons by direct window scans, so they stay independent of the code paths
they check.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from semigroup_trace import NumericalSemigroup, ValueIdeal, from_exponents, new_semigroup


def dp_membership(gens, bound):
    """Boolean table over [0, bound]: n is a nonnegative combination of gens."""
    table = [False] * (bound + 1)
    table[0] = True
    for n in range(1, bound + 1):
        table[n] = any(g <= n and table[n - g] for g in gens)
    return table


def brute_count_semigroups(max_genus):
    """Count numerical semigroups of genus <= max_genus by gap-set brute force.

    Every semigroup of genus g has Frobenius number below 2g, so it is
    determined by its gap set inside [1, 2*max_genus - 1].
    """
    if max_genus == 0:
        return 1
    top = 2 * max_genus - 1
    candidates = list(range(1, top + 1))
    count = 1  # the gapless semigroup
    for k in range(1, max_genus + 1):
        for gap_set in combinations(candidates, k):
            gaps = set(gap_set)
            ok = True
            for a in range(1, top + 1):
                if a in gaps:
                    continue
                for b in range(a, top + 1 - a):
                    if b not in gaps and (a + b) in gaps:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count


def brute_colon(I: ValueIdeal, J: ValueIdeal):
    """Window of the colon I : J computed by direct membership scans.

    Returns (lo, hi, members): the members within [lo, hi], where every
    integer above hi belongs to the colon and everything below lo does not.
    Checking a shift a only needs the members of J up to the point where
    a + j clears the stabilization bound of I.
    """
    lo = I.min_value - max(J.minimal_generators()) - I.ring.conductor
    hi = I.stable - J.min_value
    out = set()
    for a in range(lo, hi + 1):
        top = max(J.stable, I.stable - a) + 1
        if all((a + j) in I for j in J.members_upto(top)):
            out.add(a)
    return lo, hi, out


def random_semigroup(rng: random.Random, max_conductor: int = 30) -> NumericalSemigroup:
    while True:
        k = rng.randint(2, 4)
        gens = rng.sample(range(2, 26), k)
        if math.gcd(*gens) != 1:
            gens.append(rng.choice([g + 1 for g in gens if g + 1 <= 26]))
        if math.gcd(*gens) != 1:
            continue
        S = new_semigroup(gens)
        if 0 < S.conductor <= max_conductor:
            return S


def random_integral_ideal(rng: random.Random, S: NumericalSemigroup) -> ValueIdeal:
    """A random nonzero proper monomial ideal inside the ring."""
    pool = [n for n in S.members_upto(2 * S.conductor) if n > 0]
    exps = rng.sample(pool, rng.randint(1, min(4, len(pool))))
    return from_exponents(S, exps)


def random_fractional_ideal(rng: random.Random, S: NumericalSemigroup) -> ValueIdeal:
    c = S.conductor
    exps = [rng.randint(-c, 2 * c) for _ in range(rng.randint(1, 4))]
    return from_exponents(S, exps)


def make_pool(n: int, seed: int, fractional: bool = False):
    """n (semigroup, ideal) pairs over a small pool of distinct rings."""
    rng = random.Random(seed)
    rings = [random_semigroup(rng) for _ in range(60)]
    maker = random_fractional_ideal if fractional else random_integral_ideal
    return [(S, maker(rng, S)) for S in (rng.choice(rings) for _ in range(n))]
