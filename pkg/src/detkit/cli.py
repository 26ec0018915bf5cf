"""Command-line front end.

Exit codes: 0 when every requested check passes or is skipped, 1 when any
check reports NOT_EQUAL (or a symmetric generator comparison fails), 2 for
usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .harness import (
    CaseError,
    CaseSpec,
    Report,
    load_suite_config,
    run_case,
    run_suite,
    suite_document,
)

KIND_BY_NAME = {"minors": "generic", "symmetric": "symmetric", "pfaffian": "skew"}


def _int_list(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _add_shape_args(p: argparse.ArgumentParser, with_cols: bool):
    p.add_argument("--m", type=int, help="rows (generic only)")
    p.add_argument("--n", type=int, required=True, help="columns, or size when square")
    p.add_argument("--t", type=int, required=True,
                   help="minor size, or even Pfaffian size")
    p.add_argument("--R", type=_int_list, default=(),
                   help="row block cutoffs, comma-separated")
    p.add_argument("--r", type=_int_list, default=(),
                   help="row block counts, comma-separated")
    if with_cols:
        p.add_argument("--C", type=_int_list, default=(),
                       help="column block cutoffs (generic only)")
        p.add_argument("--c", type=_int_list, default=(),
                       help="column block counts (generic only)")


def _add_common_args(p: argparse.ArgumentParser):
    p.add_argument("--field", default="fp:32003",
                   help="coefficient field: fp:<prime> or qq")
    p.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    p.add_argument("--budget-sec", type=float, default=60.0,
                   help="per-case time budget in seconds")
    p.add_argument("--json", action="store_true", dest="as_json",
                   help="print the full report as JSON")
    p.add_argument("--case", help="override the generated case id")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="detkit",
        description="exact checks for ideals of block-constrained minors and Pfaffians",
    )
    sub = top.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="constrained ideal vs component intersection")
    vsub = verify.add_subparsers(dest="family", required=True)
    for fam in ("minors", "symmetric", "pfaffian"):
        p = vsub.add_parser(fam)
        _add_shape_args(p, with_cols=(fam == "minors"))
        _add_common_args(p)

    trunc = sub.add_parser("truncation", help="degree truncation vs extra component")
    trunc.add_argument("--kind", default="generic", choices=["generic", "skew"])
    _add_shape_args(trunc, with_cols=True)
    trunc.add_argument("--p", type=int, required=True, help="light weight")
    trunc.add_argument("--q", type=int, required=True, help="heavy weight")
    trunc.add_argument("--d", type=int, required=True, help="degree bound")
    _add_common_args(trunc)

    irr = sub.add_parser("irredundancy", help="no intersection component can be dropped")
    irr.add_argument("--kind", default="minors",
                     choices=["minors", "symmetric", "pfaffian"])
    _add_shape_args(irr, with_cols=True)
    _add_common_args(irr)

    heights = sub.add_parser("heights", help="codimension of a Pfaffian ideal")
    heights.add_argument("--n", type=int, required=True)
    heights.add_argument("--t", type=int, required=True, help="even Pfaffian size")
    _add_common_args(heights)

    asl = sub.add_parser("asl-check", help="chain products form a low-degree basis")
    asl.add_argument("--m", type=int, required=True)
    asl.add_argument("--n", type=int, required=True)
    asl.add_argument("--d", type=int, required=True, help="degree bound")
    _add_common_args(asl)

    suite = sub.add_parser("suite", help="run a JSON suite configuration")
    suite.add_argument("config", help="path to a JSON file with a 'cases' list")
    suite.add_argument("--out", help="write the JSON report here instead of stdout")
    suite.add_argument("--no-timing", action="store_true",
                       help="omit wall-clock fields for byte-stable output")
    suite.add_argument("--budget-sec", type=float, default=None,
                       help="override the per-case budget")

    return top


def _default_case_id(prefix: str, args) -> str:
    bits = [prefix]
    if getattr(args, "m", None):
        bits.append(f"m{args.m}")
    if getattr(args, "n", None):
        bits.append(f"n{args.n}")
    if getattr(args, "t", None):
        bits.append(f"t{args.t}")
    for name in ("R", "r", "C", "c"):
        vals = getattr(args, name, ())
        if vals:
            bits.append(name + "_".join(str(v) for v in vals))
    for name in ("p", "q", "d"):
        v = getattr(args, name, None)
        if v is not None:
            bits.append(f"{name}{v}")
    return "-".join(bits)


def _spec_from_args(args) -> CaseSpec:
    if args.command == "verify":
        kind = KIND_BY_NAME[args.family]
        check = "decomposition"
        prefix = args.family
    elif args.command == "truncation":
        kind = args.kind
        check = "truncation"
        prefix = f"truncation-{args.kind}"
    elif args.command == "irredundancy":
        kind = KIND_BY_NAME[args.kind]
        check = "irredundancy"
        prefix = f"irredundancy-{args.kind}"
    elif args.command == "heights":
        kind = "skew"
        check = "heights"
        prefix = "heights"
    else:
        kind = "generic"
        check = "asl"
        prefix = "asl"
    spec = CaseSpec(
        case=args.case or _default_case_id(prefix, args),
        check=check,
        kind=kind,
        m=getattr(args, "m", None),
        n=getattr(args, "n", None),
        t=getattr(args, "t", None),
        R=getattr(args, "R", ()),
        r=getattr(args, "r", ()),
        C=getattr(args, "C", ()),
        c=getattr(args, "c", ()),
        p=getattr(args, "p", None),
        q=getattr(args, "q", None),
        d=getattr(args, "d", None),
        field=args.field,
        order=args.order,
        budget_sec=args.budget_sec,
    )
    spec.validate(spec.case)
    return spec


def _print_human(report: Report) -> None:
    line = f"{report.case}: {report.verdict}"
    if report.reason:
        line += f" ({report.reason})"
    line += f" [{report.millis} ms]"
    print(line)
    for comp in report.components:
        flag = comp["irredundant"]
        if flag is None:
            print(f"  component {comp['name']}")
        else:
            word = "irredundant" if flag else "REDUNDANT"
            print(f"  component {comp['name']}: {word}")
    for w in report.witnesses:
        inside = [k for k, v in w["memberships"].items() if v]
        outside = [k for k, v in w["memberships"].items() if not v]
        print(f"  witness {w['element']}: in {inside}, not in {outside}")
    if report.height is not None:
        print(f"  height {report.height}")
    if report.doset_generators_equal is not None:
        print(f"  doset generators equal: {report.doset_generators_equal}")


def _report_failed(report: Report) -> bool:
    return report.verdict == "NOT_EQUAL" or report.doset_generators_equal is False


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "suite":
            specs = load_suite_config(args.config)
            if args.budget_sec is not None:
                for s in specs:
                    s.budget_sec = args.budget_sec
            reports, ok = run_suite(specs)
            doc = suite_document(reports, include_timing=not args.no_timing)
            text = json.dumps(doc, indent=2)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
                summary = doc["summary"]
                print(
                    "suite: {total} cases, {equal} equal, {not_equal} not equal, "
                    "{skipped} skipped".format(**summary)
                )
            else:
                print(text)
            return 0 if ok else 1

        spec = _spec_from_args(args)
        report = run_case(spec)
        if args.as_json:
            print(json.dumps(report.to_dict(), indent=2))
        else:
            _print_human(report)
        return 1 if _report_failed(report) else 0
    except CaseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
