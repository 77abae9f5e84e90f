"""Exact arithmetic of numerical semigroups.

A numerical semigroup is a cofinite subset of the nonnegative integers that
contains 0 and is closed under addition.  It is stored canonically as a
membership window over [0, conductor) together with the rule that everything
at or above the conductor is a member, so membership queries are O(1).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EmptyGenerators, GcdNotOne, ResourceLimit

_DEFAULT_GENUS_CEILING = 16


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup with precomputed Frobenius/conductor data.

    ``generators`` is the unique minimal generating set, sorted ascending.
    ``small_elements`` holds the members in [0, conductor); every integer at
    or above ``conductor`` is a member.
    """

    generators: tuple[int, ...]
    frobenius: int
    conductor: int
    small_elements: frozenset[int]

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return n in self.small_elements

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def genus(self) -> int:
        return self.conductor - len(self.small_elements)

    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(1, self.conductor) if n not in self.small_elements)

    def members_upto(self, hi: int) -> Iterator[int]:
        """Members of the semigroup in [0, hi], ascending."""
        for n in sorted(self.small_elements):
            if n > hi:
                return
            yield n
        yield from range(self.conductor, hi + 1)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "conductor": self.conductor,
        }

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


def _minimal_generators(contains, conductor: int, multiplicity: int) -> tuple[int, ...]:
    """Minimal generators: nonzero members not a sum of two nonzero members.

    Any member >= conductor + multiplicity is redundant, so the scan window
    [1, conductor + multiplicity) is exhaustive.
    """
    gens = []
    for e in range(1, conductor + multiplicity):
        if not contains(e):
            continue
        if any(contains(s) and contains(e - s) for s in range(1, e)):
            continue
        gens.append(e)
    return tuple(gens)


def _from_window(members: set[int], bound: int) -> NumericalSemigroup:
    """Build canonical form from a full membership set on [0, bound].

    The caller guarantees every integer above the true conductor and up to
    ``bound`` is present in ``members``.
    """
    c = bound + 1
    while c > 0 and (c - 1) in members:
        c -= 1
    if c == 0:
        return NumericalSemigroup((1,), -1, 0, frozenset())
    small = frozenset(m for m in members if m < c)

    def contains(n: int) -> bool:
        return n >= c or (0 <= n and n in small)

    mult = min(m for m in small | {c} if m > 0)
    gens = _minimal_generators(contains, c, mult)
    return NumericalSemigroup(gens, c - 1, c, small)


def new_semigroup(gens: Sequence[int]) -> NumericalSemigroup:
    """Construct the numerical semigroup generated by ``gens``.

    Raises EmptyGenerators for an empty list and GcdNotOne when the
    generators do not generate a cofinite set.
    """
    uniq = sorted(set(gens))
    if not uniq:
        raise EmptyGenerators("at least one generator is required")
    if any(g < 1 for g in uniq):
        raise GcdNotOne(f"generators must be positive integers, got {uniq}")
    if math.gcd(*uniq) != 1:
        raise GcdNotOne(f"gcd({','.join(map(str, uniq))}) != 1")
    if uniq[0] == 1:
        return NumericalSemigroup((1,), -1, 0, frozenset())

    # Dynamic programming over [0, a_min * a_max]; the Frobenius number of a
    # gcd-1 set is below this product.
    bound = uniq[0] * uniq[-1]
    member = bytearray(bound + 1)
    member[0] = 1
    for n in range(1, bound + 1):
        for g in uniq:
            if g <= n and member[n - g]:
                member[n] = 1
                break
    return _from_window({n for n in range(bound + 1) if member[n]}, bound)


def _remove_generator(S: NumericalSemigroup, g: int) -> NumericalSemigroup:
    """Remove a minimal generator g > Frobenius; yields a child of genus+1."""
    bound = g + 1
    members = {n for n in S.members_upto(bound) if n != g}
    return _from_window(members, bound)


def enumerate_semigroups(max_genus: int, *, ceiling: int | None = None) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= max_genus, exactly once.

    Depth-first walk of the standard tree rooted at the full semigroup of
    naturals: each child removes one minimal generator larger than the
    Frobenius number, taken in ascending order.
    """
    if ceiling is None:
        ceiling = int(os.environ.get("SGTRACE_MAX_GENUS", _DEFAULT_GENUS_CEILING))
    if max_genus > ceiling:
        raise ResourceLimit(f"max_genus={max_genus} exceeds ceiling {ceiling}")
    if max_genus < 0:
        return

    def walk(S: NumericalSemigroup) -> Iterator[NumericalSemigroup]:
        yield S
        if S.genus >= max_genus:
            return
        for g in S.generators:
            if g > S.frobenius:
                yield from walk(_remove_generator(S, g))

    yield from walk(new_semigroup([1]))
