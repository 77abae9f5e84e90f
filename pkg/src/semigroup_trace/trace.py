"""Trace ideals, reflexivity tests and related one-dimensional invariants.

Everything here is a pure function of immutable value sets: duals, traces,
colon ideals inside the ring, minimal multiplicity, partial-trace data,
endomorphism rings of ideals and conductors of birational extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    ClosureViolation,
    NotIntegral,
    NotMember,
    PreconditionFailed,
    RegularRing,
)
from .ideal import (
    ValueIdeal,
    conductor_ideal,
    maximal_ideal,
    principal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup


def trace_ideal(I: ValueIdeal) -> ValueIdeal:
    """(R:I) * I, the trace of a fractional ideal; invariant under shift."""
    return I.dual().product(I)


def is_reflexive(I: ValueIdeal) -> bool:
    return I == I.double_dual()


def _require_integral(I: ValueIdeal) -> None:
    if not I.is_integral:
        raise NotIntegral("operation requires an ideal contained in the ring")


def is_trace_ideal(I: ValueIdeal) -> bool:
    """True iff I equals its own trace (I must lie inside the ring)."""
    _require_integral(I)
    return I == trace_ideal(I)


def colon_in_R(x_exp: int, I: ValueIdeal) -> ValueIdeal:
    """t^x R : I, intersected with the ring."""
    if x_exp not in I:
        raise NotMember(f"{x_exp} is not in the value set of the ideal")
    S = I.ring
    return principal_ideal(S, x_exp).colon(I).intersect(unit_ideal(S))


def is_minimal_multiplicity(S: NumericalSemigroup) -> bool:
    """xR :_R m = m for the minimal reduction x = t^(multiplicity).

    Equivalent to multiplicity == embedding dimension in this setting.
    """
    if S.generators == (1,):
        raise RegularRing("minimal multiplicity is undefined for the full semigroup")
    m = maximal_ideal(S)
    return colon_in_R(S.multiplicity, m) == m


def partial_trace_criterion(I: ValueIdeal) -> bool:
    """True iff the dual of I sits inside the integral closure ring.

    When true, the minimal colength over homomorphic images of I equals the
    colength of I itself; the converse holds here because the integral
    closure is a discrete valuation ring.
    """
    _require_integral(I)
    return I.dual().min_value >= 0


def monomial_partial_trace(I: ValueIdeal) -> tuple[int, int]:
    """Best monomial image of I inside R: (shift, colength).

    Scans the shifts a with t^a I contained in R, i.e. the members of the
    dual, minimizing the colength of the image; ties break on the smaller
    shift.  This is an upper bound for the minimal colength over all
    homomorphisms, exact whenever the shifted image meets the
    partial-trace criterion.
    """
    _require_integral(I)
    D = I.dual()
    R1 = unit_ideal(I.ring)
    best: Optional[tuple[int, int]] = None
    a = D.min_value - 1
    while True:
        a += 1
        if a not in D:
            continue
        # count of ring members below the image minimum only grows with a,
        # so once it exceeds the best colength no later shift can win
        floor = sum(1 for _ in R1.members_upto(a + I.min_value - 1))
        if best is not None and floor > best[1]:
            break
        cl = R1.colength(I.shift(a))
        if best is None or cl < best[1]:
            best = (a, cl)
    return best


@dataclass(frozen=True)
class ExtensionRing:
    """A monomial birational extension: a value set containing 0 that is
    closed under addition and contains the base semigroup."""

    carrier: ValueIdeal

    def __post_init__(self) -> None:
        T = self.carrier
        if T.min_value != 0:
            raise ClosureViolation("an extension ring must contain 0 and nothing negative")
        members = list(T.members_upto(T.stable))
        for a in members:
            for b in members:
                if a + b < T.stable and (a + b) not in T:
                    raise ClosureViolation(f"{a}+{b} escapes the carrier")
        if not unit_ideal(T.ring).is_subset(T):
            raise ClosureViolation("carrier does not contain the base ring")

    @property
    def ring(self) -> NumericalSemigroup:
        return self.carrier.ring


def endomorphism_ring(I: ValueIdeal) -> ExtensionRing:
    """End(I) = I : I, always a birational extension ring."""
    return ExtensionRing(I.colon(I))


def normalization(S: NumericalSemigroup) -> ExtensionRing:
    """The integral closure ring, with value set all of the naturals."""
    return ExtensionRing(ValueIdeal(S, 0, 0, frozenset()))


def conductor_of_extension(T: ExtensionRing) -> ValueIdeal:
    """R : T, the conductor of the extension in the base ring."""
    return T.carrier.dual()


def is_stable_ideal(I: ValueIdeal) -> bool:
    """I^2 = xI for the minimal reduction x = t^(min value)."""
    return I.product(I) == I.shift(I.min_value)


def verify_chain(I: ValueIdeal) -> bool:
    """Check the conductor-to-maximal-ideal chain through colons and traces.

    Requires a proper ideal inside the ring meeting the partial-trace
    criterion; x is t^(min value of I).  Returns True iff every containment
    and equality in the chain holds:

        C <= xR:_R cl(I) = xR:_R cl(tr(I)) <= xR:_R tr(I) <= xR:_R I
          <= tr(I) <= cl(tr(I)) = cl(I) <= m
    """
    _require_integral(I)
    if 0 in I:
        raise PreconditionFailed("the chain needs a proper ideal")
    if not partial_trace_criterion(I):
        raise PreconditionFailed("partial-trace criterion does not hold")
    S = I.ring
    x = I.min_value
    C = conductor_ideal(S)
    m = maximal_ideal(S)
    Ibar = I.integral_closure()
    tr = trace_ideal(I)
    tr_bar = tr.integral_closure()
    col_Ibar = colon_in_R(x, Ibar)
    col_trbar = colon_in_R(x, tr_bar)
    col_tr = colon_in_R(x, tr)
    col_I = colon_in_R(x, I)
    return (
        C.is_subset(col_Ibar)
        and col_Ibar == col_trbar
        and col_trbar.is_subset(col_tr)
        and col_tr.is_subset(col_I)
        and col_I.is_subset(tr)
        and tr.is_subset(tr_bar)
        and tr_bar == Ibar
        and Ibar.is_subset(m)
    )


@dataclass(frozen=True)
class IdealProfile:
    """Computed report for one ideal: companions and verdicts."""

    ideal: ValueIdeal
    dual: ValueIdeal
    double_dual: ValueIdeal
    trace: ValueIdeal
    closure: Optional[ValueIdeal]
    is_reflexive: bool
    is_trace_ideal: Optional[bool]
    is_integrally_closed: Optional[bool]
    is_stable: bool
    colength_in_R: Optional[int]

    def to_dict(self) -> dict:
        out = {
            "ideal": self.ideal.to_dict(),
            "dual": self.dual.to_dict(),
            "double_dual": self.double_dual.to_dict(),
            "trace": self.trace.to_dict(),
            "closure": self.closure.to_dict() if self.closure is not None else None,
            "is_reflexive": self.is_reflexive,
            "is_trace_ideal": self.is_trace_ideal,
            "is_integrally_closed": self.is_integrally_closed,
            "is_stable": self.is_stable,
            "colength_in_R": self.colength_in_R,
        }
        return out


def build_profile(I: ValueIdeal) -> IdealProfile:
    """Compute the full report for one ideal.

    Closure-related fields are None for properly fractional ideals, where
    integral closure inside the ring is undefined.
    """
    dual = I.dual()
    ddual = dual.dual()
    tr = dual.product(I)
    integral = I.is_integral
    closure = I.integral_closure() if integral else None
    return IdealProfile(
        ideal=I,
        dual=dual,
        double_dual=ddual,
        trace=tr,
        closure=closure,
        is_reflexive=I == ddual,
        is_trace_ideal=(I == tr) if integral else None,
        is_integrally_closed=(I == closure) if integral else None,
        is_stable=is_stable_ideal(I),
        colength_in_R=unit_ideal(I.ring).colength(I) if integral else None,
    )
