"""Command-line interface: ``nsk <command> ...``.

Exit codes: 0 success, 1 computation error or regression mismatch, 2 usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from nsk import kernels
from nsk.errors import NskError
from nsk.invariants import canonical_normal_degree, monomial_curve_invariants
from nsk.scroll import (
    ScrollModel,
    ci_projective_stability,
    enumerate_tetragonal,
    intersection_number,
    parse_class,
    tetragonal_invariants,
)
from nsk.semigroup import (
    enumerate_by_genus,
    from_generators,
    is_symmetric,
    lambda_invariant,
)
from nsk.tjurina import tjurina
from nsk.toric import minimal_relations


def load_table1() -> dict:
    text = resources.files("nsk").joinpath("data/table1.json").read_text()
    return json.loads(text)


def load_schema() -> dict:
    text = resources.files("nsk").joinpath("data/schema.json").read_text()
    return json.loads(text)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _generators(text: str) -> list[int]:
    values = _int_list(text)
    if any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"generators must be positive, got {text!r}")
    return values


def _gens_str(gens) -> str:
    return "<" + ",".join(map(str, gens)) + ">"


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    # first column left-aligned, the rest right-aligned
    lines = [
        "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))).rstrip()
        for row in cells
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


class Output:
    """Accumulates the one payload a command produces and renders it."""

    def __init__(self, args):
        self.args = args
        self.fmt = "json" if args.json else "csv" if args.csv else "human"

    def emit(self, command, inputs, result, human, headers, rows):
        if self.fmt == "json":
            record = {"command": command, "input": inputs, "result": result}
            text = json.dumps(record, indent=2)
        elif self.fmt == "csv":
            text = _csv(headers, rows)
        else:
            text = human
        print(text)


def cmd_semigroup_info(args, out: Output) -> int:
    S = from_generators(args.generators)
    sym = is_symmetric(S)
    payload = S.to_dict()
    payload["conductor"] = S.conductor
    payload["hyperelliptic"] = S.is_hyperelliptic
    payload["lambda"] = lambda_invariant(S)
    payload["lambda_convention"] = "cardinality of End(S) minus S"
    lam_note = "" if sym else "  (|End(S) \\ S| convention)"
    human = "\n".join([
        f"generators: {', '.join(map(str, S.generators))}",
        f"gaps: [{', '.join(map(str, S.gaps))}]",
        f"genus: {S.genus}",
        f"frobenius: {S.frobenius}",
        f"conductor: {S.conductor}",
        f"symmetric: {'yes' if sym else 'no'}",
        f"hyperelliptic: {'yes' if S.is_hyperelliptic else 'no'}",
        f"lambda: {payload['lambda']}{lam_note}",
    ])
    headers = ["generators", "gaps", "genus", "frobenius", "symmetric", "lambda"]
    rows = [[" ".join(map(str, S.generators)), " ".join(map(str, S.gaps)), S.genus,
             S.frobenius, sym, payload["lambda"]]]
    out.emit("semigroup info", {"generators": args.generators}, payload, human, headers, rows)
    return 0


def cmd_semigroup_enumerate(args, out: Output) -> int:
    found = enumerate_by_genus(args.genus, symmetric=args.symmetric,
                               non_hyperelliptic=args.non_hyperelliptic)
    result = [S.to_dict() for S in found]
    human = "\n".join(
        [f"{len(found)} semigroup(s) of genus {args.genus}"]
        + [f"{S}  gaps [{', '.join(map(str, S.gaps))}]  F={S.frobenius}" for S in found]
    )
    headers = ["generators", "gaps", "genus", "frobenius", "symmetric"]
    rows = [[" ".join(map(str, S.generators)), " ".join(map(str, S.gaps)), S.genus,
             S.frobenius, is_symmetric(S)] for S in found]
    inputs = {"genus": args.genus, "symmetric": args.symmetric,
              "non_hyperelliptic": args.non_hyperelliptic}
    out.emit("semigroup enumerate", inputs, result, human, headers, rows)
    return 0


def cmd_relations(args, out: Output) -> int:
    S = from_generators(args.generators)
    rels = minimal_relations(S, bound=args.bound)
    result = {"generators": list(S.generators), "relations": [r.to_dict() for r in rels]}
    human = "\n".join(r.format() for r in rels)
    headers = ["alpha", "beta", "weight", "vector"]
    rows = [[" ".join(map(str, r.alpha)), " ".join(map(str, r.beta)), r.weight,
             " ".join(map(str, r.vector))] for r in rels]
    out.emit("relations", {"generators": args.generators, "bound": args.bound},
             result, human, headers, rows)
    return 0


def cmd_tjurina(args, out: Output) -> int:
    S = from_generators(args.generators)
    report = tjurina(S, minimal_relations(S, bound=args.bound))
    lines = []
    if args.graded:
        lines = [f"T1[{ell}] = {dim}" for ell, dim in sorted(report.support.items())]
    lines.append(f"tau = {report.tjurina}")
    if args.graded:
        headers = ["degree", "dim"]
        rows = [[ell, dim] for ell, dim in sorted(report.support.items())]
    else:
        headers = ["generators", "tau"]
        rows = [[" ".join(map(str, S.generators)), report.tjurina]]
    out.emit("tjurina", {"generators": args.generators, "graded": args.graded},
             report.to_dict(), "\n".join(lines), headers, rows)
    return 0


_INV_COLUMNS = ["genus", "delta", "theta", "lambda", "deligne", "tjurina", "ambient_dim",
                "curve_degree", "normal_degree", "normal_rank", "slope"]


def cmd_normal_degree(args, out: Output) -> int:
    S = from_generators(args.generators)
    inv = monomial_curve_invariants(S, minimal_relations(S, bound=args.bound))
    payload = inv.to_dict()
    human = "\n".join(f"{k}: {payload[k]}" for k in _INV_COLUMNS)
    out.emit("normal-degree", {"generators": args.generators}, payload, human,
             ["generators"] + _INV_COLUMNS,
             [[" ".join(map(str, S.generators))] + [payload[k] for k in _INV_COLUMNS]])
    return 0


def table1_rows():
    """Recompute every reference row; returns dicts with expected and computed values."""
    rows = []
    for ref in load_table1()["rows"]:
        S = from_generators(ref["generators"])
        inv = monomial_curve_invariants(S)
        rows.append({
            "generators": ref["generators"],
            "genus": inv.genus,
            "tjurina": inv.tjurina,
            "normal_degree": inv.normal_degree,
            "expected": {k: ref[k] for k in ("genus", "tjurina", "normal_degree")},
            "match": (inv.genus, inv.tjurina, inv.normal_degree)
                     == (ref["genus"], ref["tjurina"], ref["normal_degree"]),
        })
    return rows


def regenerate_table1(genera=range(4, 8)):
    listed = {tuple(r["generators"]) for r in load_table1()["rows"]}
    out = []
    for g in genera:
        for S in enumerate_by_genus(g, symmetric=True, non_hyperelliptic=True):
            tau = tjurina(S).tjurina
            out.append({
                "generators": list(S.generators),
                "genus": g,
                "tjurina": tau,
                "normal_degree": canonical_normal_degree(g, tau),
                "listed": tuple(S.generators) in listed,
            })
    return out


def cmd_table1(args, out: Output) -> int:
    rows = table1_rows()
    ok = all(r["match"] for r in rows)
    result = {"rows": rows, "matched": sum(r["match"] for r in rows), "total": len(rows)}
    headers = ["semigroup", "g", "tau", "deg", "status"]
    table = [[_gens_str(r["generators"]), r["genus"], r["tjurina"], r["normal_degree"],
              "ok" if r["match"] else "MISMATCH"] for r in rows]
    human = _table(headers, table) + f"\n{result['matched']}/{result['total']} rows match"
    csv_rows = table
    if args.regenerate:
        regen = regenerate_table1()
        result["regenerated"] = regen
        extra = [r for r in regen if not r["listed"]]
        human += "\n\nsymmetric non-hyperelliptic semigroups, genus 4..7:\n"
        human += _table(["semigroup", "g", "tau", "deg", "listed"],
                        [[_gens_str(r["generators"]), r["genus"], r["tjurina"],
                          r["normal_degree"], "yes" if r["listed"] else "no"] for r in regen])
        human += f"\n{len(extra)} not among the reference rows"
        headers = headers + ["source"]
        csv_rows = [row + ["reference"] for row in table] + [
            [_gens_str(r["generators"]), r["genus"], r["tjurina"], r["normal_degree"],
             "listed" if r["listed"] else "unlisted", "regenerated"] for r in regen]
    out.emit("table1", {"regenerate": args.regenerate}, result, human, headers, csv_rows)
    if not ok:
        for r in rows:
            if not r["match"]:
                exp = r["expected"]
                print(f"{_gens_str(r['generators'])}: expected g={exp['genus']} "
                      f"tau={exp['tjurina']} deg={exp['normal_degree']}, got "
                      f"g={r['genus']} tau={r['tjurina']} deg={r['normal_degree']}",
                      file=sys.stderr)
        return 1
    return 0


def cmd_scroll_intersect(args, out: Output) -> int:
    scroll = ScrollModel(tuple(args.scroll))
    try:
        classes = [parse_class(c) for c in args.classes.split(";") if c.strip()]
    except NskError as exc:
        raise _UsageError(str(exc))
    value = intersection_number(scroll, classes)
    result = {"scroll": scroll.to_dict(), "classes": [str(c) for c in classes],
              "intersection": value}
    human = f"{' . '.join(str(c) for c in classes)} = {value}  on S({','.join(map(str, scroll.e_list))})"
    out.emit("scroll intersect", {"scroll": args.scroll, "classes": args.classes}, result,
             human, ["scroll", "classes", "intersection"],
             [[" ".join(map(str, scroll.e_list)), ";".join(str(c) for c in classes), value]])
    return 0


_TET_COLUMNS = ["scroll", "b1", "b2", "admissible", "smooth", "bielliptic", "has_g25",
                "HC", "RC", "degN_in_scroll", "mu_scroll", "degN_projective",
                "mu_projective", "unstable_in_P"]


def cmd_scroll_tetragonal(args, out: Output) -> int:
    models = enumerate_tetragonal(args.genus)
    if args.filter == "general":
        models = [m for m in models if m.general]
    result = []
    for m in models:
        entry = m.to_dict()
        entry.update(tetragonal_invariants(m).to_dict())
        result.append(entry)

    def cell(entry, k):
        v = entry[k]
        return " ".join(map(str, v)) if isinstance(v, list) else v

    rows = [[cell(e, k) for k in _TET_COLUMNS] for e in result]
    human_rows = [[f"S({','.join(map(str, e['scroll']))})"] + r[1:] for e, r in zip(result, rows)]
    human = _table(_TET_COLUMNS, human_rows)
    out.emit("scroll tetragonal", {"genus": args.genus, "filter": args.filter}, result,
             human, _TET_COLUMNS, rows)
    return 0


def cmd_stability(args, out: Output) -> int:
    rep = ci_projective_stability(args.ambient, args.ci)
    payload = rep.to_dict()
    human = "\n".join([
        f"curve degree: {rep.curve_degree}",
        f"genus: {rep.genus}",
        f"deg N: {rep.deg_n}",
        f"summand slopes: {', '.join(map(str, rep.summand_slopes))}",
        f"mu = {rep.mu}",
        f"verdict: {rep.verdict}",
    ])
    out.emit("stability", {"ci": args.ci, "ambient": args.ambient}, payload, human,
             ["curve_degree", "genus", "degN", "summand_slopes", "mu", "verdict"],
             [[rep.curve_degree, rep.genus, rep.deg_n, " ".join(map(str, rep.summand_slopes)),
               str(rep.mu), rep.verdict]])
    return 0


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    group.add_argument("--csv", action="store_true", help="emit CSV")

    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--bound", type=int, default=None, metavar="B",
                       help="weight bound for the relation search")

    parser = argparse.ArgumentParser(prog="nsk", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    sg = sub.add_parser("semigroup", help="numerical semigroup tools")
    sgsub = sg.add_subparsers(dest="subcommand", required=True)
    p = sgsub.add_parser("info", parents=[fmt], help="gaps, genus, Frobenius number, symmetry")
    p.add_argument("generators", type=_generators)
    p.set_defaults(func=cmd_semigroup_info)
    p = sgsub.add_parser("enumerate", parents=[fmt], help="all semigroups of a given genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--non-hyperelliptic", action="store_true")
    p.set_defaults(func=cmd_semigroup_enumerate)

    p = sub.add_parser("relations", parents=[fmt, bound], help="minimal binomial relations")
    p.add_argument("generators", type=_generators)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("tjurina", parents=[fmt, bound], help="Tjurina number")
    p.add_argument("generators", type=_generators)
    p.add_argument("--graded", action="store_true", help="list nonzero graded pieces")
    p.set_defaults(func=cmd_tjurina)

    p = sub.add_parser("normal-degree", parents=[fmt, bound],
                       help="invariants of the canonical monomial curve")
    p.add_argument("generators", type=_generators)
    p.set_defaults(func=cmd_normal_degree)

    p = sub.add_parser("table1", parents=[fmt], help="reference table regression")
    p.add_argument("--regenerate", action="store_true",
                   help="also enumerate symmetric non-hyperelliptic semigroups of genus 4..7")
    p.set_defaults(func=cmd_table1)

    sc = sub.add_parser("scroll", help="rational normal scroll calculus")
    scsub = sc.add_subparsers(dest="subcommand", required=True)
    p = scsub.add_parser("intersect", parents=[fmt], help="top intersection number")
    p.add_argument("--scroll", type=_int_list, required=True, help="e_1,...,e_d")
    p.add_argument("--classes", required=True, help='";"-separated classes like "2H-1R"')
    p.set_defaults(func=cmd_scroll_intersect)
    p = scsub.add_parser("tetragonal", parents=[fmt], help="tetragonal models of a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--filter", choices=["general"], default=None)
    p.set_defaults(func=cmd_scroll_tetragonal)

    p = sub.add_parser("stability", parents=[fmt], help="complete-intersection curve in P^n")
    p.add_argument("--ci", type=_int_list, required=True, help="hypersurface degrees")
    p.add_argument("--ambient", type=int, required=True, help="n for P^n")
    p.set_defaults(func=cmd_stability)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, Output(args))
    except _UsageError as exc:
        parser.error(str(exc))
    except NskError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
