"""Command-line front end.

Subcommands: classify-list, strict-check, verify, picard.  Exit codes are a
stable contract: 0 run completed and decided (either way), 1 a verification
check failed, 2 bad input.  All output is deterministic; the Jacobian
sampling seed is echoed in the reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q

from . import picard, report, strict
from .classify import TableValidationError, load_table, non_strict_entries
from .descriptor import load_descriptor, validate
from .picard import LineBundle, UnboundedSectionEnumeration
from .rootsys import Weight

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _weight_str(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w.coords) + ")"


def _load_table_or_die(path):
    try:
        return load_table(path)
    except (TableValidationError, OSError, ValueError) as exc:
        print("classification table error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _load_descriptor_or_die(path):
    try:
        d = load_descriptor(path)
    except (OSError, ValueError, KeyError) as exc:
        print("descriptor error: %s" % exc, file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    problems = validate(d)
    if problems:
        for p in problems:
            print("descriptor invalid - %s" % p, file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    return d


def cmd_classify_list(args) -> int:
    table = _load_table_or_die(args.table)
    entries = table.entries
    if args.family:
        fam = args.family.upper()
        entries = [e for e in entries if e.family.upper().startswith(fam)]
    if args.non_strict:
        keep = {e.label for e in non_strict_entries(table)}
        entries = [e for e in entries if e.label in keep]
    rows = []
    for e in entries:
        inst = e.instantiate()
        rows.append({
            "label": e.label,
            "family": e.family,
            "rank": "%d%s" % (e.rank_min, "+" if e.rank_max is None else
                              ("" if e.rank_max == e.rank_min else "..%d" % e.rank_max)),
            "gamma": _weight_str(inst.gamma),
            "sp": sorted(inst.sp),
            "strict": e.self_normalizing,
            "adjoint": e.adjoint_action,
        })
    if args.json:
        print(json.dumps({"entries": rows}, indent=2))
    else:
        for r in rows:
            print("%-9s %-6s rank %-5s gamma%s  sp=%s  %s%s"
                  % (r["label"], r["family"], r["rank"], r["gamma"], r["sp"],
                     "strict" if r["strict"] else "non-strict",
                     "" if r["adjoint"] else " (centre acts)"))
    return EXIT_OK


def cmd_strict_check(args) -> int:
    table = _load_table_or_die(args.table)
    d = _load_descriptor_or_die(args.descriptor)
    verdict = strict.is_simply_immersible(d, table)
    payload = {
        "admissible": verdict.admissible,
        "adjoint_action": verdict.adjoint,
        "roots": [
            {"index": r.index, "gamma": _weight_str(r.gamma),
             "passed": r.passed, "witnesses": list(r.witnesses)}
            for r in verdict.roots
        ],
    }
    if verdict.admissible and args.coeff_bound:
        weights = strict.admissible_module_weights(d, table, args.coeff_bound)
        payload["admissible_weights"] = sorted(_weight_str(w) for w in weights)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("simple immersion: %s" % ("YES" if verdict.admissible else "NO"))
        if not verdict.adjoint:
            print("  the centre does not act trivially")
        for r in payload["roots"]:
            mark = "pass" if r["passed"] else "FAIL, witness %s" % "/".join(r["witnesses"])
            print("  root %d %s: %s" % (r["index"], r["gamma"], mark))
        for w in payload.get("admissible_weights", ()):
            print("  admissible module weight %s" % w)
    return EXIT_OK


def cmd_verify(args) -> int:
    labels = ["1A2", "9B", "9C", "15"] if args.case == "all" else [args.case]
    reports = []
    for label in labels:
        try:
            rep = report.run_case(label, args.rank, grid=args.grid,
                                  seed=args.seed, trials=args.trials)
        except KeyError:
            print("unknown case label %r (known: 1A2, 9B, 9C, 15, all)" % label,
                  file=sys.stderr)
            return EXIT_INPUT
        except ValueError as exc:
            print("case error: %s" % exc, file=sys.stderr)
            return EXIT_INPUT
        reports.append(rep)
    if args.json:
        print(json.dumps(reports if len(reports) > 1 else reports[0], indent=2))
    else:
        for rep in reports:
            print(report.render_report(rep))
    return EXIT_OK if all(r["passed"] for r in reports) else EXIT_FAIL


def cmd_picard(args) -> int:
    table = _load_table_or_die(args.table)
    if args.entry:
        try:
            entry = table.by_label(args.entry)
            inst = entry.instantiate(args.rank) if args.rank else entry.instantiate()
        except (KeyError, ValueError) as exc:
            print("entry error: %s" % exc, file=sys.stderr)
            return EXIT_INPUT
        d = inst.as_descriptor()
    else:
        if not args.descriptor:
            print("either a descriptor path or --entry is required", file=sys.stderr)
            return EXIT_INPUT
        inst = None
        d = _load_descriptor_or_die(args.descriptor)
    ids = [c.id for c in d.colours]
    try:
        values = [int(v) for v in args.coeffs.split(",")] if args.coeffs else [1] * len(ids)
    except ValueError:
        print("cannot parse --coeffs %r" % args.coeffs, file=sys.stderr)
        return EXIT_INPUT
    if len(values) != len(ids):
        print("expected %d coefficients for colours %s" % (len(ids), ids), file=sys.stderr)
        return EXIT_INPUT
    bundle = LineBundle(dict(zip(ids, values)))
    payload = {"colours": ids, "coefficients": values}
    payload["class"] = picard.classify_bundle(d, bundle)
    if payload["class"] != "neither":
        payload["canonical_weight"] = _weight_str(picard.canonical_weight(d, bundle))
        try:
            weights = picard.section_weights(d, bundle)
            payload["section_weights"] = sorted(_weight_str(w) for w in weights)
        except UnboundedSectionEnumeration as exc:
            payload["section_weights_error"] = str(exc)
    if inst is not None and inst.entry.normalizer_quotient > 1 \
            and payload["class"] == "ample":
        payload["very_ample_witness"] = picard.very_ample_witness(inst, bundle)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("bundle %s on colours %s: %s" % (values, ids, payload["class"]))
        if "canonical_weight" in payload:
            print("  canonical weight %s" % payload["canonical_weight"])
        for w in payload.get("section_weights", ()):
            print("  section weight %s" % w)
        if "section_weights_error" in payload:
            print("  section weights: %s" % payload["section_weights_error"])
        if "very_ample_witness" in payload:
            print("  very ample witness: %s" % payload["very_ample_witness"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wonderful",
                                description="strictness, simple immersions and "
                                            "rank-one case verification")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify-list", help="print the rank-one classification table")
    c.add_argument("--table", default=None, help="path to a classification JSON file")
    c.add_argument("--family", default=None, help="filter by family letter")
    c.add_argument("--non-strict", action="store_true",
                   help="only the non-strict entries with adjoint action")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify_list)

    s = sub.add_parser("strict-check", help="decide simple immersibility of a descriptor")
    s.add_argument("descriptor", help="path to a descriptor JSON file")
    s.add_argument("--table", default=None)
    s.add_argument("--coeff-bound", type=int, default=0,
                   help="also list admissible module weights up to this bound")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_strict_check)

    v = sub.add_parser("verify", help="run a rank-one case verification suite")
    v.add_argument("case", help="1A2, 9B, 9C, 15 or all")
    v.add_argument("--rank", type=int, default=None, help="rank for the parametric cases")
    v.add_argument("--grid", type=int, default=3,
                   help="bundle-coefficient (or multiplicity) grid bound")
    v.add_argument("--seed", type=int, default=0, help="seed for Jacobian sampling")
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("picard", help="line-bundle calculus on a descriptor or table entry")
    q.add_argument("descriptor", nargs="?", default=None)
    q.add_argument("--entry", default=None, help="classification label instead of a descriptor")
    q.add_argument("--rank", type=int, default=None)
    q.add_argument("--coeffs", default=None, help="comma-separated colour coefficients")
    q.add_argument("--table", default=None)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_picard)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
