"""Monomial fractional ideals represented canonically by their value sets.

A value set is a subset of the integers closed under adding semigroup
members and containing every integer from some point on.  The canonical
form stores the minimum value, the least stabilization bound b (everything
at or above b is a member) and the sporadic members below b.  Since the
shifted conductor t^{m0}C always lands inside the ideal, b <= m0 + c, which
bounds every window computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    ClosureViolation,
    EmptyGenerators,
    NotContained,
    NotIntegral,
    RingMismatch,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ValueIdeal:
    """Value set of a monomial fractional ideal over a fixed semigroup.

    ``small_members`` lies in [min_value, stable); every integer at or above
    ``stable`` is a member.  Two ideals are equal iff these data coincide.
    """

    ring: NumericalSemigroup
    min_value: int
    stable: int
    small_members: frozenset[int]

    # -- membership ----------------------------------------------------

    def __contains__(self, n: int) -> bool:
        return n >= self.stable or n in self.small_members

    def members_upto(self, hi: int) -> Iterator[int]:
        for n in sorted(self.small_members):
            if n > hi:
                return
            yield n
        yield from range(self.stable, hi + 1)

    def is_subset(self, other: "ValueIdeal") -> bool:
        _same_ring(self, other)
        hi = max(self.stable, other.stable)
        return all(n in other for n in self.members_upto(hi))

    @property
    def is_integral(self) -> bool:
        """True when the ideal is contained in the ring."""
        if self.min_value < 0:
            return False
        return all(self.ring.contains(n) for n in self.members_upto(self.ring.conductor + self.min_value))

    # -- arithmetic ----------------------------------------------------

    def shift(self, a: int) -> "ValueIdeal":
        """Multiply by t^a: translate the value set by a."""
        return ValueIdeal(
            self.ring,
            self.min_value + a,
            self.stable + a,
            frozenset(n + a for n in self.small_members),
        )

    def sum(self, other: "ValueIdeal") -> "ValueIdeal":
        _same_ring(self, other)
        m0 = min(self.min_value, other.min_value)
        hi = m0 + self.ring.conductor
        members = set(self.members_upto(hi)) | set(other.members_upto(hi))
        return _from_window(self.ring, members, hi)

    def product(self, other: "ValueIdeal") -> "ValueIdeal":
        """Minkowski sum of the value sets."""
        _same_ring(self, other)
        m0 = self.min_value + other.min_value
        hi = m0 + self.ring.conductor
        members: set[int] = set()
        for a in self.members_upto(hi - other.min_value):
            for b in other.members_upto(hi - a):
                members.add(a + b)
        return _from_window(self.ring, members, hi)

    def intersect(self, other: "ValueIdeal") -> "ValueIdeal":
        _same_ring(self, other)
        top = max(self.stable, other.stable)
        lo = max(self.min_value, other.min_value)
        members = {n for n in self.members_upto(top) if n >= lo and n in other}
        m0 = min(members)  # top is in both, so never empty
        hi = max(top, m0 + self.ring.conductor)
        members.update(range(top, hi + 1))
        return _from_window(self.ring, members, hi)

    def colon(self, other: "ValueIdeal") -> "ValueIdeal":
        """All a with a + v(other) contained in v(self).

        It suffices to test a + g for the minimal generators g of ``other``
        because value sets are closed under adding semigroup members.
        """
        _same_ring(self, other)
        gens = other.minimal_generators()
        lo = self.min_value - max(gens)
        top = self.stable - min(gens)
        members = {
            a for a in range(lo, top + 1) if all((a + g) in self for g in gens)
        }
        m0 = min(members)  # a = top is always valid
        hi = max(top, m0 + self.ring.conductor)
        members.update(range(top, hi + 1))
        return _from_window(self.ring, members, hi)

    def dual(self) -> "ValueIdeal":
        return unit_ideal(self.ring).colon(self)

    def double_dual(self) -> "ValueIdeal":
        return self.dual().dual()

    def minimal_generators(self) -> tuple[int, ...]:
        """Members not reachable as s + e with s a nonzero semigroup member."""
        S = self.ring
        gens = []
        for e in self.members_upto(self.min_value + S.conductor - 1):
            if any(
                (e - s) in self
                for s in S.members_upto(e - self.min_value)
                if s > 0
            ):
                continue
            gens.append(e)
        return tuple(gens) if gens else (self.min_value,)

    def colength(self, other: "ValueIdeal") -> int:
        """Length of self/other: the count of members of self not in other."""
        _same_ring(self, other)
        lo = min(self.min_value, other.min_value)
        hi = max(self.stable, other.stable)
        for n in other.members_upto(hi):
            if n not in self:
                raise NotContained(f"{other} is not contained in {self}")
        return sum(1 for n in self.members_upto(hi - 1) if n not in other)

    def integral_closure(self) -> "ValueIdeal":
        """All ring members at or above the minimum value."""
        if not self.is_integral:
            raise NotIntegral("integral closure requires an ideal inside the ring")
        m0 = self.min_value
        hi = m0 + self.ring.conductor
        members = {n for n in self.ring.members_upto(hi) if n >= m0}
        return _from_window(self.ring, members, hi)

    # -- reporting -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "min": self.min_value,
            "stable": self.stable,
            "members": sorted(self.small_members),
            "generators": list(self.minimal_generators()),
        }

    def __str__(self) -> str:
        tail = f"[{self.stable},oo)"
        if not self.small_members:
            return tail
        body = ",".join(str(n) for n in sorted(self.small_members))
        return "{" + body + "} + " + tail


def _same_ring(a: ValueIdeal, b: ValueIdeal) -> None:
    if a.ring != b.ring:
        raise RingMismatch("ideals live over different semigroups")


def _from_window(ring: NumericalSemigroup, members: set[int], hi: int) -> ValueIdeal:
    """Canonicalize a full membership set on [min(members), hi].

    The caller guarantees hi >= min(members) + conductor, so every integer
    above hi is a member and the stabilization bound lies inside the window.
    """
    lo = min(members)
    b = hi + 1
    while b > lo and (b - 1) in members:
        b -= 1
    return ValueIdeal(ring, lo, b, frozenset(m for m in members if m < b))


def from_exponents(S: NumericalSemigroup, exps: Sequence[int]) -> ValueIdeal:
    """The ideal generated by the monomials t^e for e in ``exps``."""
    uniq = sorted(set(exps))
    if not uniq:
        raise EmptyGenerators("an ideal needs at least one generator")
    m0 = uniq[0]
    hi = m0 + S.conductor
    members = {
        n for n in range(m0, hi + 1) if any(S.contains(n - e) for e in uniq)
    }
    return _from_window(S, members, hi)


def from_value_set(S: NumericalSemigroup, values: Iterable[int]) -> ValueIdeal:
    """Canonicalize an explicitly listed value set, validating closure.

    ``values`` must list every member of the set in the window
    [min, min + conductor]; membership above the window is implied.  Sets
    that are not closed under adding semigroup generators are rejected.
    """
    members = set(values)
    if not members:
        raise EmptyGenerators("a value set cannot be empty")
    m0 = min(members)
    hi = m0 + S.conductor
    for e in members:
        for g in S.generators:
            if e + g <= hi and (e + g) not in members:
                raise ClosureViolation(
                    f"value set not closed: {e}+{g} missing from window"
                )
    return _from_window(S, {m for m in members if m <= hi}, hi)


def unit_ideal(S: NumericalSemigroup) -> ValueIdeal:
    """The ring itself, v(R)."""
    return ValueIdeal(S, 0, S.conductor, frozenset(S.small_elements))


def maximal_ideal(S: NumericalSemigroup) -> ValueIdeal:
    """v(m): the nonzero members of the semigroup."""
    if S.conductor == 0:
        return ValueIdeal(S, 1, 1, frozenset())
    return ValueIdeal(
        S, S.multiplicity, S.conductor, frozenset(n for n in S.small_elements if n > 0)
    )


def conductor_ideal(S: NumericalSemigroup) -> ValueIdeal:
    """v(C) = [conductor, oo), the largest common ideal with the closure."""
    return ValueIdeal(S, S.conductor, S.conductor, frozenset())


def principal_ideal(S: NumericalSemigroup, a: int) -> ValueIdeal:
    """t^a R."""
    return unit_ideal(S).shift(a)


def normalization_set(S: NumericalSemigroup) -> ValueIdeal:
    """The full set of naturals: the value set of the integral closure ring."""
    return ValueIdeal(S, 0, 0, frozenset())
