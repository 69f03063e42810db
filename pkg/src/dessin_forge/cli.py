"""Command-line front end.

Exit codes: 2 for flag/parameter errors, 1 for verification failures,
0 otherwise. All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algebra import load_poly, poly_to_json
from .dessins import (
    ALL_FAMILIES,
    SPORADIC_PASSPORTS,
    Dessin,
    DessinError,
    EnumerationLimitError,
    Passport,
    check_params,
    enumerate_trees,
    family_passport,
)
from .families import ConstructionError, build
from .monodromy import family_dessin, structure_check
from .render import render_svg
from .verify import ExtensionRequired, is_shabat, passport_from_poly

# parameters used by `report --all` for the infinite families
REPORT_PARAMS = {
    "F1": (1, 2, 3),
    "F2": (1, 2),
    "F3": (3, 5),
    "F4": (2, 3),
    "F5": (2,),
    "F6": (2,),
}


class UsageError(Exception):
    pass


def _params(args) -> tuple:
    vals = tuple(v for v in (args.r, args.s, args.t) if v is not None)
    return vals


def _checked_family(args) -> tuple[str, tuple]:
    family = args.family.upper()
    if family not in ALL_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(ALL_FAMILIES)}")
    params = _params(args)
    if family in SPORADIC_PASSPORTS:
        if params:
            raise UsageError(f"{family} takes no parameters")
        return family, ()
    try:
        check_params(family, *params)
    except DessinError as exc:
        raise UsageError(str(exc)) from exc
    return family, params


def _add_family_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", required=required, help="family id F1..F12")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)


def _param_tag(params: tuple) -> str:
    return "_".join(map(str, params))


# subcommands --------------------------------------------------------------


def cmd_family(args, out) -> int:
    args.family = args.family_id
    family, params = _checked_family(args)
    if family in ("F7", "F8"):
        raise UsageError(f"{family} has no polynomial constructor; use `monodromy --family {family}`")
    pair = build(family, *params)
    rep = pair.report()
    ok = all(t["shabat"] and len(t["critical_values"]) == 2 and t["passport_matches"] for t in rep["trees"])
    text = json.dumps(rep, indent=2, sort_keys=True) + "\n"
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        stem = family + (f"_{_param_tag(params)}" if params else "")
        (outdir / f"{stem}.json").write_text(text)
        for i, poly in enumerate(pair.polys, 1):
            (outdir / f"{stem}_tree{i}.json").write_text(json.dumps(poly_to_json(poly)) + "\n")
        print(f"wrote {outdir / (stem + '.json')}", file=out)
    if args.json or not args.out:
        if args.json:
            out.write(text)
        else:
            _family_summary(rep, out)
    if not ok:
        print("verification failed", file=sys.stderr)
    return 0 if ok else 1


def _family_summary(rep: dict, out) -> None:
    params = ",".join(map(str, rep["params"]))
    print(f"family: {rep['family']}" + (f" ({params})" if params else ""), file=out)
    print(f"passport: {rep['passport']}", file=out)
    print(f"field: {rep['field']} ({rep['relation']})", file=out)
    for t in rep["trees"]:
        vals = t["critical_values"]
        vals = ", ".join(vals) if isinstance(vals, list) else vals
        print(
            f"{t['label']}: degree {t['degree']}, shabat: {str(t['shabat']).lower()}, "
            f"values: [{vals}], passport: {t['passport']}",
            file=out,
        )
    for r in rep["repairs"]:
        print(f"repair: {r}", file=out)


def cmd_verify(args, out) -> int:
    p = load_poly(args.inp)
    rep = is_shabat(p)
    if args.json:
        out.write(rep.dumps() + "\n")
    else:
        print(f"shabat: {str(rep.is_shabat).lower()}, values: {rep.count}", file=out)
        cv = rep.critical_values
        if isinstance(cv, ExtensionRequired):
            print(f"critical values: {cv}", file=out)
        else:
            print(f"critical values: [{', '.join(str(v) for v in cv)}]", file=out)
        if rep.is_shabat and rep.count == 2:
            print(f"passport: {passport_from_poly(p)}", file=out)
    return 0 if rep.is_shabat else 1


def cmd_passport(args, out) -> int:
    if args.inp:
        p = load_poly(args.inp)
        try:
            print(passport_from_poly(p), file=out)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return 0
    if not args.family:
        raise UsageError("passport needs --in or --family")
    family, params = _checked_family(args)
    print(family_passport(family, *params), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    if args.passport:
        try:
            pp = Passport.parse(args.passport)
        except (DessinError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    elif args.family:
        family, params = _checked_family(args)
        pp = family_passport(family, *params)
    else:
        raise UsageError("enumerate needs --passport or --family")
    try:
        trees = enumerate_trees(pp, force=args.force)
    except EnumerationLimitError as exc:
        raise UsageError(f"{exc} (use --force to override)") from exc
    if args.json:
        doc = {"passport": str(pp), "count": len(trees), "trees": [t.to_json() for t in trees]}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        print(f"passport: {pp}", file=out)
        print(f"count: {len(trees)}", file=out)
        for i, t in enumerate(trees, 1):
            print(f"tree {i}: {t}", file=out)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(trees, 1):
            (outdir / f"tree{i}.json").write_text(json.dumps(t.to_json()) + "\n")
    return 0


def cmd_monodromy(args, out) -> int:
    reports = []
    if args.dessin:
        reports.append(structure_check(Dessin.load(args.dessin)))
    elif args.family:
        family, params = _checked_family(args)
        trees = [args.tree] if args.tree else [1, 2]
        for i in trees:
            d = family_dessin(family, i, *params)
            reports.append(structure_check(d, family, i, *params))
    else:
        raise UsageError("monodromy needs --family or --dessin")
    if args.json:
        doc = [r.to_json() for r in reports]
        out.write(json.dumps(doc if len(doc) > 1 else doc[0], indent=2, sort_keys=True) + "\n")
    else:
        print("\n\n".join(r.text() for r in reports), file=out)
    return 0


def _report_rows() -> tuple[list[dict], list[str], bool]:
    rows, problems, failed = [], [], False
    for family in ALL_FAMILIES:
        params = REPORT_PARAMS.get(family, ())
        row: dict = {"family": family, "params": list(params), "passport": str(family_passport(family, *params))}
        if family in ("F7", "F8"):
            row.update(field=None, relation=None, table_field=None, shabat=None)
        else:
            try:
                rep = build(family, *params).report()
            except (ConstructionError, ValueError) as exc:
                rep = None
                failed = True
                problems.append(f"{family}: construction failed: {exc}")
            if rep is not None:
                row.update(field=rep["field"], relation=rep["relation"], table_field=rep["table_field"])
                ok = all(t["shabat"] and len(t["critical_values"]) == 2 and t["passport_matches"] for t in rep["trees"])
                row["shabat"] = ok
                if not ok:
                    failed = True
                    problems.append(f"{family}: Shabat/passport check failed")
                if rep["field_consistent"] is False:
                    problems.append(f"{family}: field note: {rep['field_note']}")
                for r in rep["repairs"]:
                    problems.append(f"{family}: repair applied: {r}")
        orders = []
        for i in (1, 2):
            g = structure_check(family_dessin(family, i, *params), family, i, *params)
            orders.append({
                "tree": i,
                "order": str(g.order),
                "expected": None if g.expected_order is None else str(g.expected_order),
                "primitive": g.primitive,
                "label": g.structure_label,
            })
            if g.matches is False:
                failed = True
                problems.append(f"{family} tree {i}: group order {g.order}, claimed {g.expected_order}")
        row["groups"] = orders
        row["different_groups"] = orders[0]["order"] != orders[1]["order"]
        rows.append(row)
    return rows, problems, failed


def cmd_report(args, out) -> int:
    if not args.all:
        raise UsageError("report currently supports only --all")
    rows, problems, failed = _report_rows()
    if args.json:
        doc = {"families": rows, "discrepancies": problems, "ok": not failed}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        head = f"{'family':<7}{'params':<9}{'passport':<28}{'field':<16}{'relation':<18}{'order 1':>22}{'order 2':>22}  diff"
        print(head, file=out)
        for row in rows:
            g1, g2 = row["groups"]
            print(
                f"{row['family']:<7}{','.join(map(str, row['params'])) or '-':<9}{row['passport']:<28}"
                f"{row['field'] or '-':<16}{row['relation'] or '-':<18}{g1['order']:>22}{g2['order']:>22}"
                f"  {'yes' if row['different_groups'] else 'no'}",
                file=out,
            )
        print("", file=out)
        print(f"discrepancies: {len(problems)}", file=out)
        for p in problems:
            print(f"  {p}", file=out)
    return 1 if failed else 0


def cmd_render(args, out) -> int:
    if args.dessin:
        d = Dessin.load(args.dessin)
        title = Path(args.dessin).stem
    elif args.family:
        family, params = _checked_family(args)
        d = family_dessin(family, args.tree or 1, *params)
        title = f"{family} tree {args.tree or 1}"
    else:
        raise UsageError("render needs --dessin or --family")
    svg = render_svg(d, title=title, labels=args.labels)
    if args.out:
        Path(args.out).write_text(svg)
        print(f"wrote {args.out}", file=out)
    else:
        out.write(svg)
    return 0


# parser -------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dessin-forge", description="Shabat polynomials and monodromy of two-tree families.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="construct a family's Shabat pair")
    fsub = p.add_subparsers(dest="action", required=True)
    b = fsub.add_parser("build", help="build and verify both polynomials")
    b.add_argument("family_id", metavar="FAMILY")
    b.add_argument("--r", type=int)
    b.add_argument("--s", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("-o", "--out", help="directory for the JSON report and polynomials")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check a polynomial file for the Shabat property")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("passport", help="passport of a polynomial file or a family")
    p.add_argument("--in", dest="inp")
    _add_family_flags(p, required=False)
    p.set_defaults(func=cmd_passport)

    p = sub.add_parser("enumerate", help="enumerate plane trees with a passport")
    p.add_argument("--passport")
    _add_family_flags(p, required=False)
    p.add_argument("--force", action="store_true", help="ignore the DESSIN_FORGE_MAX_N guard")
    p.add_argument("-o", "--out", help="directory for one JSON file per tree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("monodromy", help="monodromy group report")
    _add_family_flags(p, required=False)
    p.add_argument("--tree", type=int, choices=(1, 2))
    p.add_argument("--dessin", help="dessin JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("report", help="summary table of all families")
    p.add_argument("--all", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("render", help="draw a tree as SVG")
    p.add_argument("--dessin", help="dessin JSON file")
    _add_family_flags(p, required=False)
    p.add_argument("--tree", type=int, choices=(1, 2))
    p.add_argument("--labels", action="store_true", help="label edges")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_render)
    return ap


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"dessin-forge: error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"dessin-forge: verification failed: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        # unreadable or malformed input files
        print(f"dessin-forge: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
