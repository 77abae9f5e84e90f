"""Command-line front end.

Subcommands: info, ideal, verify, search, reproduce-paper.  Output is a
human-readable table by default; --format json (or jsonl/csv for search)
selects machine-readable reports.  Exit code 0 iff all asserted checks pass.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import SemigroupTraceError, VerificationError
from .ideal import from_exponents, unit_ideal
from .semigroup import enumerate_semigroups, new_semigroup
from .trace import build_profile, is_minimal_multiplicity
from .verify import (
    CSV_COLUMNS,
    MONOMIAL_BANNER,
    colength_R_mod_C,
    reproduce_counterexample,
    run_all_suites,
    search_counterexamples,
    write_summary_csv,
)


def parse_exponents(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgtrace",
        description="Exact trace/reflexivity calculator for monomial ideals "
        "of numerical semigroup rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="invariants of a numerical semigroup")
    p_info.add_argument("semigroup", type=parse_exponents, help="generators, e.g. 7,8,9,11")
    p_info.add_argument("--format", choices=["text", "json"], default="text")

    p_ideal = sub.add_parser("ideal", help="full profile of one monomial ideal")
    p_ideal.add_argument("semigroup", type=parse_exponents)
    p_ideal.add_argument("--gens", type=parse_exponents, required=True,
                         help="ideal exponents, e.g. 8,9,21 (may be negative)")
    p_ideal.add_argument("--format", choices=["text", "json"], default="text")

    p_verify = sub.add_parser("verify", help="run all asserted sweeps up to a genus bound")
    p_verify.add_argument("--max-genus", type=int, default=9)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")

    p_search = sub.add_parser("search", help="stream reflexive ideals with non-reflexive trace")
    p_search.add_argument("--max-genus", type=int, default=9)
    p_search.add_argument("--min-mult", action="store_true",
                          help="restrict to rings of minimal multiplicity")
    p_search.add_argument("--colength", type=int, default=None,
                          help="bound the colength of the conductor")
    p_search.add_argument("--colength-exact", type=int, default=None,
                          help="require an exact conductor colength")
    p_search.add_argument("--format", choices=["text", "jsonl", "csv"], default="text")
    p_search.add_argument("--output", default=None, help="write the report to a file")

    p_repro = sub.add_parser("reproduce-paper",
                             help="recompute the documented <7,8,9,11> counterexample")
    p_repro.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _semigroup_report(gens: list[int]) -> dict:
    S = new_semigroup(gens)
    report = S.to_dict()
    report["colength_R_mod_C"] = colength_R_mod_C(S)
    report["multiplicity"] = S.multiplicity
    report["embedding_dimension"] = S.embedding_dimension
    if S.generators == (1,):
        report["minimal_multiplicity"] = None
    else:
        report["minimal_multiplicity"] = is_minimal_multiplicity(S)
    return report


def _cmd_info(args) -> int:
    report = _semigroup_report(args.semigroup)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
        return 0
    print(f"semigroup      <{','.join(map(str, report['generators']))}>")
    print(f"frobenius      {report['frobenius']}")
    print(f"conductor      {report['conductor']}")
    print(f"genus          {report['genus']}")
    print(f"colength R/C   {report['colength_R_mod_C']}")
    print(f"multiplicity   {report['multiplicity']}")
    print(f"embedding dim  {report['embedding_dimension']}")
    mm = report["minimal_multiplicity"]
    print(f"min mult       {'n/a (regular)' if mm is None else mm}")
    return 0


def _cmd_ideal(args) -> int:
    S = new_semigroup(args.semigroup)
    I = from_exponents(S, args.gens)
    profile = build_profile(I)
    if args.format == "json":
        report = profile.to_dict()
        report["semigroup"] = S.to_dict()
        print(json.dumps(report, sort_keys=True))
        return 0
    print(f"semigroup        {S}")
    print(f"v(I)             {I}")
    print(f"generators       {','.join(map(str, profile.ideal.minimal_generators()))}")
    print(f"v(I*)            {profile.dual}")
    print(f"v(I**)           {profile.double_dual}")
    print(f"v(tr(I))         {profile.trace}")
    if profile.closure is not None:
        print(f"v(closure)       {profile.closure}")
    print(f"is_reflexive     {profile.is_reflexive}")
    print(f"is_trace_ideal   {profile.is_trace_ideal}")
    print(f"is_int_closed    {profile.is_integrally_closed}")
    print(f"is_stable        {profile.is_stable}")
    print(f"colength_in_R    {profile.colength_in_R}")
    return 0


def _cmd_verify(args) -> int:
    result = run_all_suites(args.max_genus)
    if args.format == "json":
        print(json.dumps(result.to_dict(), sort_keys=True))
    else:
        print(f"note: {result.banner}")
        print(f"semigroups swept (genus <= {result.max_genus}): {result.semigroups}")
        for name, count in result.checks.items():
            print(f"  {name}: {count} semigroups checked")
        if result.ok:
            print("PASS: no failures")
        else:
            for rec in result.failures:
                failing = ",".join(k for k, v in rec.verdicts.items() if not v)
                print(f"FAIL {failing}: semigroup {rec.semigroup} ideal {rec.ideal}")
    return 0 if result.ok else 1


def _cmd_search(args) -> int:
    stream = search_counterexamples(
        args.max_genus,
        min_mult=True if args.min_mult else None,
        colength_max=args.colength,
        colength_exact=args.colength_exact,
    )
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.format == "csv":
            sgs = [
                S
                for S in sorted(
                    enumerate_semigroups(args.max_genus),
                    key=lambda S: (S.genus, S.generators),
                )
                if S.generators != (1,)
                and (not args.min_mult or is_minimal_multiplicity(S))
                and (args.colength is None or colength_R_mod_C(S) <= args.colength)
                and (args.colength_exact is None or colength_R_mod_C(S) == args.colength_exact)
            ]
            write_summary_csv(out, sgs)
            return 0
        n = 0
        for rec in stream:
            n += 1
            if args.format == "jsonl":
                out.write(rec.to_json() + "\n")
            else:
                out.write(
                    f"semigroup <{','.join(map(str, rec.semigroup))}> "
                    f"ideal ({','.join(map(str, rec.ideal))}) "
                    f"genus={rec.genus} l(R/C)={rec.colength_R_mod_C} "
                    f"min_mult={rec.minimal_multiplicity}\n"
                )
        if args.format == "text":
            out.write(f"{n} record(s); evidence only, nothing asserted\n")
        return 0
    finally:
        if args.output:
            out.close()


def _cmd_reproduce(args) -> int:
    try:
        report = reproduce_counterexample()
    except VerificationError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
        return 0
    print("counterexample ring <7,8,9,11>")
    for name, value in report["value_sets"].items():
        print(f"  {name:<11} = {value}")
    print(f"  l(R/C)      = {report['colength_R_mod_C']}")
    print(f"  min mult    = {report['minimal_multiplicity']}")
    print(f"  I reflexive = {report['ideal_reflexive']}")
    print(f"  tr(I) refl. = {report['trace_reflexive']}")
    print("PASS")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "info": _cmd_info,
        "ideal": _cmd_ideal,
        "verify": _cmd_verify,
        "search": _cmd_search,
        "reproduce-paper": _cmd_reproduce,
    }
    try:
        return handlers[args.command](args)
    except SemigroupTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
