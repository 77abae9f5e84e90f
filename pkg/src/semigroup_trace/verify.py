"""Theorem sweeps and counterexample search over enumerated semigroups.

All sweeps quantify over MONOMIAL ideals only.  The statements being checked
hold for arbitrary ideals, so a monomial sweep can corroborate and
regression-test them but can never refute the general statements; every
report carries this banner.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence, TextIO

from .errors import ResourceLimit, VerificationError
from .ideal import (
    ValueIdeal,
    conductor_ideal,
    from_exponents,
    from_value_set,
    maximal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup, enumerate_semigroups, new_semigroup
from .trace import is_minimal_multiplicity, is_reflexive, is_trace_ideal, trace_ideal

MONOMIAL_BANNER = (
    "checks quantify over monomial ideals only: they corroborate the general "
    "statements, they cannot refute them"
)

_DEFAULT_SUBSET_CEILING = 1 << 20


@dataclass(frozen=True)
class SearchRecord:
    """One (semigroup, ideal) pair with named check verdicts."""

    semigroup: tuple[int, ...]
    ideal: tuple[int, ...]
    verdicts: dict[str, bool]
    colength_R_mod_C: int
    minimal_multiplicity: bool
    genus: int

    def to_dict(self) -> dict:
        return {
            "semigroup": list(self.semigroup),
            "ideal": list(self.ideal),
            "verdicts": dict(self.verdicts),
            "colength_R_mod_C": self.colength_R_mod_C,
            "minimal_multiplicity": self.minimal_multiplicity,
            "genus": self.genus,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def colength_R_mod_C(S: NumericalSemigroup) -> int:
    return unit_ideal(S).colength(conductor_ideal(S))


def _record(S: NumericalSemigroup, I: ValueIdeal, verdicts: dict[str, bool]) -> SearchRecord:
    return SearchRecord(
        semigroup=S.generators,
        ideal=I.minimal_generators(),
        verdicts=verdicts,
        colength_R_mod_C=colength_R_mod_C(S),
        minimal_multiplicity=is_minimal_multiplicity(S),
        genus=S.genus,
    )


def _subset_ceiling() -> int:
    return int(os.environ.get("SGTRACE_MAX_SUBSETS", _DEFAULT_SUBSET_CEILING))


def _ideals_containing_conductor(S: NumericalSemigroup, proper: bool) -> Iterator[ValueIdeal]:
    """All monomial ideals between the conductor and the ring, ascending by
    (min value, generators).  These are genuine ideals, not shift classes."""
    c = S.conductor
    optional = sorted(n for n in S.small_elements if n > 0)
    if len(optional) >= 30 or (1 << len(optional)) > _subset_ceiling():
        raise ResourceLimit("too many candidate subsets above the conductor")
    found = []
    for k in range(len(optional) + 1):
        for chosen in combinations(optional, k):
            T = set(chosen)
            ok = all(
                (e + g) in T or e + g >= c
                for e in T
                for g in S.generators
            )
            if not ok:
                continue
            window = T | set(range(c, (min(T) if T else c) + c + 1))
            found.append(from_value_set(S, window))
    if not proper:
        found.append(unit_ideal(S))
    found.sort(key=lambda I: (I.min_value, I.minimal_generators()))
    yield from found


def _ideal_shapes(S: NumericalSemigroup) -> Iterator[ValueIdeal]:
    """One representative per shift class of nonzero monomial ideals of R.

    A class is determined by its value set translated to start at 0: the
    semigroup window plus a closed subset of the gaps, plus everything from
    the conductor on.  The representative is re-anchored at the smallest
    positive member of the ring keeping it inside the ring.
    """
    c = S.conductor
    gaps = S.gaps()
    if len(gaps) >= 30 or (1 << len(gaps)) > _subset_ceiling():
        raise ResourceLimit("too many gap subsets for ideal enumeration")
    base = sorted(S.members_upto(c - 1)) if c > 0 else [0]
    anchors = [n for n in S.members_upto(c) if n > 0] or [1]
    shapes = []
    for k in range(len(gaps) + 1):
        for chosen in combinations(gaps, k):
            window = sorted(set(base) | set(chosen))
            if any(
                d + g < c and (d + g) not in window
                for d in chosen
                for g in S.generators
            ):
                continue
            shapes.append(window)
    shapes.sort()
    for window in shapes:
        for m0 in anchors:
            if all(S.contains(m0 + d) for d in window if m0 + d < c):
                members = {m0 + d for d in window} | {m0 + c}
                yield from_value_set(S, members)
                break


def enumerate_monomial_ideals(
    S: NumericalSemigroup,
    *,
    containing_conductor: bool = False,
    proper: bool = True,
    reflexive_only: bool = False,
    trace_only: bool = False,
    integrally_closed_only: bool = False,
) -> Iterator[ValueIdeal]:
    """Monomial ideals of R matching the filters, deterministically ordered.

    With ``containing_conductor`` the stream lists every ideal between the
    conductor and the ring exactly once; otherwise it lists every nonzero
    ideal of R exactly once up to shift, anchored at the smallest positive
    ring member that keeps the value set inside the ring.
    """
    if S.generators == (1,):
        raise ResourceLimit("ideal enumeration is not defined over the full semigroup")
    if containing_conductor:
        stream = _ideals_containing_conductor(S, proper)
    else:
        stream = _ideal_shapes(S)
        if not proper:
            stream = _chain_unit(S, stream)
    for I in stream:
        if reflexive_only and not is_reflexive(I):
            continue
        if trace_only and not is_trace_ideal(I):
            continue
        if integrally_closed_only and I != I.integral_closure():
            continue
        yield I


def _chain_unit(S: NumericalSemigroup, stream: Iterator[ValueIdeal]) -> Iterator[ValueIdeal]:
    yield unit_ideal(S)
    yield from stream


def check_trace_reflexive_smallcolength(S: NumericalSemigroup) -> list[SearchRecord]:
    """Proper regular trace ideals must be reflexive for small colength.

    Asserted when the colength of the conductor is at most 3, or equals 4
    with minimal multiplicity.  Returns the failing records (expected none).
    """
    ell = colength_R_mod_C(S)
    mm = is_minimal_multiplicity(S)
    if not (ell <= 3 or (ell == 4 and mm)):
        return []
    failures = []
    for J in enumerate_monomial_ideals(S, containing_conductor=True, trace_only=True):
        if not is_reflexive(J):
            failures.append(_record(S, J, {"trace_ideal_reflexive": False}))
    return failures


def check_trace_of_reflexive(S: NumericalSemigroup) -> list[SearchRecord]:
    """Traces of reflexive ideals must be reflexive for small colength.

    Asserted when the colength of the conductor equals 4, or equals 5 with
    minimal multiplicity.  Returns the failing records (expected none).
    """
    ell = colength_R_mod_C(S)
    mm = is_minimal_multiplicity(S)
    if not (ell == 4 or (ell == 5 and mm)):
        return []
    failures = []
    for I in enumerate_monomial_ideals(S, reflexive_only=True):
        if not is_reflexive(trace_ideal(I)):
            failures.append(_record(S, I, {"trace_of_reflexive_reflexive": False}))
    return failures


def check_integrally_closed_containing_C(S: NumericalSemigroup) -> list[SearchRecord]:
    """Integrally closed ideals above the conductor are reflexive trace
    ideals; with minimal multiplicity, a proper regular trace ideal whose
    closure is the maximal ideal is the maximal ideal."""
    failures = []
    for I in enumerate_monomial_ideals(
        S, containing_conductor=True, proper=False, integrally_closed_only=True
    ):
        verdicts = {
            "integrally_closed_reflexive": is_reflexive(I),
            "integrally_closed_trace": is_trace_ideal(I),
        }
        if not all(verdicts.values()):
            failures.append(_record(S, I, verdicts))
    if is_minimal_multiplicity(S):
        m = maximal_ideal(S)
        for I in enumerate_monomial_ideals(S, containing_conductor=True, trace_only=True):
            if I.integral_closure() == m and I != m:
                failures.append(_record(S, I, {"closure_maximal_forces_maximal": False}))
    return failures


def _expect(name: str, got, want) -> None:
    if got != want:
        raise VerificationError(f"{name}: expected {want}, got {got}")


def reproduce_counterexample() -> dict:
    """Recompute the <7,8,9,11> counterexample bit-exactly.

    The ring has conductor colength 5 and is not of minimal multiplicity;
    the ideal (8,9,21) is reflexive while its trace (7,8,9) is not, the
    double dual of the trace being the whole maximal ideal.
    """
    S = new_semigroup([7, 8, 9, 11])
    R1 = unit_ideal(S)
    C = conductor_ideal(S)
    m = maximal_ideal(S)

    def V(members, stable):
        window = set(members) | set(range(stable, min(members) + S.conductor + 1))
        return from_value_set(S, window)

    _expect("v(C)", C, V([14], 14))
    _expect("colength of conductor", R1.colength(C), 5)
    _expect("valuations of R mod C", sorted(R1.members_upto(13)), [0, 7, 8, 9, 11])
    _expect("minimal multiplicity", is_minimal_multiplicity(S), False)

    J = from_exponents(S, [8, 9])
    Jdual = J.dual()
    _expect("v(J*)", Jdual, V([-1, 0], 6))
    I = J.double_dual()
    _expect("v(I) = v(J**)", I, V([8, 9], 15))
    _expect("I = (8,9,21)", I, from_exponents(S, [8, 9, 21]))
    _expect("I reflexive", is_reflexive(I), True)

    L = trace_ideal(I)
    _expect("v(tr(I))", L, V([7, 8, 9], 14))
    _expect("tr(I) generators", L.minimal_generators(), (7, 8, 9))
    _expect("11 not in tr(I)", 11 in L, False)

    Ldual = L.dual()
    _expect("v(tr(I)*)", Ldual, V([0], 7))
    Ldd = L.double_dual()
    _expect("11 in tr(I)**", 11 in Ldd, True)
    _expect("tr(I)** = v(m)", Ldd, m)
    _expect("tr(I) not reflexive", is_reflexive(L), False)

    return {
        "banner": MONOMIAL_BANNER,
        "semigroup": S.to_dict(),
        "value_sets": {
            "v(C)": str(C),
            "v(I)": str(I),
            "v(I*)": str(I.dual()),
            "v(I**)": str(I.double_dual()),
            "v(tr(I))": str(L),
            "v(tr(I)*)": str(Ldual),
            "v(tr(I)**)": str(Ldd),
        },
        "colength_R_mod_C": 5,
        "minimal_multiplicity": False,
        "ideal_reflexive": True,
        "trace_reflexive": False,
        "ok": True,
    }


def search_counterexamples(
    max_genus: int,
    *,
    min_mult: Optional[bool] = None,
    colength_max: Optional[int] = None,
    colength_exact: Optional[int] = None,
) -> Iterator[SearchRecord]:
    """All (S, I) with I reflexive and trace(I) not reflexive, up to shift.

    Deterministic order: semigroups by (genus, generators), ideals by the
    enumeration order of their shift representatives.  Records are emitted,
    never asserted: the minimal-multiplicity restriction of the question is
    open and this harness only gathers evidence.
    """
    if max_genus < 1:
        raise ResourceLimit("max_genus must be at least 1")
    sgs = sorted(enumerate_semigroups(max_genus), key=lambda S: (S.genus, S.generators))
    for S in sgs:
        if S.generators == (1,):
            continue
        ell = colength_R_mod_C(S)
        mm = is_minimal_multiplicity(S)
        if min_mult is not None and mm != min_mult:
            continue
        if colength_max is not None and ell > colength_max:
            continue
        if colength_exact is not None and ell != colength_exact:
            continue
        for I in enumerate_monomial_ideals(S, reflexive_only=True):
            if not is_reflexive(trace_ideal(I)):
                yield _record(
                    S, I, {"reflexive": True, "trace_reflexive": False}
                )


@dataclass
class SuiteResult:
    """Outcome of the asserted theorem sweeps up to a genus bound."""

    max_genus: int
    semigroups: int = 0
    failures: list[SearchRecord] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)
    banner: str = MONOMIAL_BANNER

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "banner": self.banner,
            "max_genus": self.max_genus,
            "semigroups": self.semigroups,
            "checks": dict(self.checks),
            "failures": [r.to_dict() for r in self.failures],
            "ok": self.ok,
        }


def run_all_suites(max_genus: int) -> SuiteResult:
    """Run every asserted sweep over all semigroups of genus <= max_genus."""
    result = SuiteResult(max_genus=max_genus)
    suites = (
        ("trace_ideals_reflexive_small_colength", check_trace_reflexive_smallcolength),
        ("trace_of_reflexive_reflexive", check_trace_of_reflexive),
        ("integrally_closed_above_conductor", check_integrally_closed_containing_C),
    )
    for name, _ in suites:
        result.checks[name] = 0
    for S in enumerate_semigroups(max_genus):
        if S.generators == (1,):
            continue
        result.semigroups += 1
        for name, suite in suites:
            result.checks[name] += 1
            result.failures.extend(suite(S))
    return result


def semigroup_summary(S: NumericalSemigroup) -> dict:
    """Per-semigroup statistics for the summary CSV."""
    n_ideals = n_reflexive = n_trace = n_counter = 0
    for I in enumerate_monomial_ideals(S):
        n_ideals += 1
        refl = is_reflexive(I)
        if refl:
            n_reflexive += 1
        if is_trace_ideal(I):
            n_trace += 1
        if refl and not is_reflexive(trace_ideal(I)):
            n_counter += 1
    return {
        "generators": " ".join(map(str, S.generators)),
        "genus": S.genus,
        "colength_R_mod_C": colength_R_mod_C(S),
        "min_mult": is_minimal_multiplicity(S),
        "n_ideals": n_ideals,
        "n_reflexive": n_reflexive,
        "n_trace": n_trace,
        "n_counterexamples": n_counter,
    }


CSV_COLUMNS = [
    "generators",
    "genus",
    "colength_R_mod_C",
    "min_mult",
    "n_ideals",
    "n_reflexive",
    "n_trace",
    "n_counterexamples",
]


def write_summary_csv(out: TextIO, semigroups: Sequence[NumericalSemigroup]) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for S in semigroups:
        writer.writerow(semigroup_summary(S))
