"""Command-line interface.

Subcommands map one-to-one onto the library layers: count and
enumeration (count), closed forms (formula), formula-vs-enumeration
ledgers with exception-set identities (verify), the geometric oracle
(ehrhart), single triangle extensions (recurrence), and the exhaustive
small-graph sweep (search).

Output is JSON by default (sorted keys, so identical inputs give
byte-identical bytes); --table renders the same data for reading.
Exit codes: 0 success, 1 a must-hold identity failed, 2 bad input or
out-of-range parameters, 3 an enumeration cap was exceeded.  Rows that
merely document a formula discrepancy do not fail a run; that
documentation is the point of the verify command.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import formulas, lost_sequences
from .draconian import ENGINES, EnumerationCapExceeded, count_draconian, enumerate_draconian
from .ehrhart import ehrhart_nvol
from .graphs import (
    Graph,
    GraphFormatError,
    canonical_matching,
    complete_graph,
    connected_components,
    delete_cycle,
    delete_path,
    doubling,
    load_graph,
    triangle_extend_set,
)
from .tripling import recurrence_hypotheses, search_triple_recurrence, verify_partition

FAMILIES = ("complete", "matching-triangles", "path-deleted", "cycle-deleted")
DEFAULT_COUNT_CAP = 10
SEARCH_MAX = 8


class UsageError(ValueError):
    """Bad family spec, range, or precondition; maps to exit code 2."""


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    name, _, tail = spec.partition(":")
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}, expected one of {FAMILIES}")
    if not tail:
        raise UsageError(f"family {name} needs parameters, e.g. {name}:5" +
                         (",2" if name != "complete" else ""))
    try:
        params = tuple(int(p) for p in tail.split(","))
    except ValueError:
        raise UsageError(f"family parameters must be integers, got {tail!r}")
    want = 1 if name == "complete" else 2
    if len(params) != want:
        raise UsageError(f"family {name} takes {want} parameter(s), got {len(params)}")
    return name, params


def family_graph(name: str, params: tuple[int, ...]) -> Graph:
    try:
        if name == "complete":
            return complete_graph(params[0])
        if name == "matching-triangles":
            n, m = params
            base = complete_graph(n)
            return triangle_extend_set(base, canonical_matching(n, m).edges)
        if name == "path-deleted":
            return delete_path(*params)
        return delete_cycle(*params)
    except ValueError as exc:
        raise UsageError(str(exc))


def family_formula_values(name: str, params: tuple[int, ...]) -> dict:
    try:
        if name == "complete":
            return {"value": str(formulas.nvol_complete(params[0]))}
        if name == "matching-triangles":
            return {"value": str(formulas.nvol_matching_triangles(*params))}
        if name == "path-deleted":
            readings = formulas.nvol_path_deleted(*params)
            return {"as_printed": str(readings.as_printed), "grouped": str(readings.grouped)}
        return {"value": str(formulas.nvol_cycle_deleted(*params))}
    except ValueError as exc:
        raise UsageError(str(exc))


def parse_range(text: str, lo_default: int, hi_default: int) -> list[int]:
    """A value 'k' or an inclusive range 'a..b'; either end may be omitted."""
    text = text.strip()
    try:
        if ".." not in text:
            k = int(text)
            return [k]
        lo_s, hi_s = text.split("..", 1)
        lo = int(lo_s) if lo_s else lo_default
        hi = int(hi_s) if hi_s else hi_default
    except ValueError:
        raise UsageError(f"expected an integer or a range a..b, got {text!r}")
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def load_input_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return load_graph(args.graph)
    if getattr(args, "family", None):
        return family_graph(*parse_family(args.family))
    raise UsageError("give a graph with --graph FILE or --family SPEC")


def emit(args, payload: dict, table_lines) -> None:
    if getattr(args, "table", False):
        for line in table_lines:
            print(line)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_count(args) -> int:
    g = load_input_graph(args)
    biggest = max(part.graph.n for part in connected_components(g))
    if biggest > args.cap_n:
        raise EnumerationCapExceeded(
            f"largest component has {biggest} vertices, over the cap {args.cap_n}; "
            f"raise --cap-n to force this"
        )
    if args.list:
        if len(connected_components(g)) != 1:
            raise UsageError(
                "--list needs a connected graph: for disconnected input the volume "
                "is a product over components, not the size of one sequence set"
            )
        for c in enumerate_draconian(doubling(g), args.engine if args.engine != "auto" else "subset"):
            print(" ".join(str(x) for x in c))
        return 0
    report = count_draconian(g, engine=args.engine)
    payload = report.to_dict()
    if not args.timing:
        del payload["elapsed_ms"]
    lines = [
        f"graph    {report.graph}",
        f"count    {report.count}",
        f"method   {report.method}",
    ] + [f"note     {note}" for note in report.notes]
    emit(args, payload, lines)
    return 0


def cmd_formula(args) -> int:
    name, params = parse_family(args.family)
    values = family_formula_values(name, params)
    payload = {"family": name, "params": list(params), "values": values}
    lines = [f"{k:<11} {v}" for k, v in sorted(values.items())]
    emit(args, payload, lines)
    return 0


def _verify_matching_rows(args, n_values, m_text):
    rows = []
    for n in n_values:
        for m in parse_range(m_text, 0, n // 2):
            if not 0 <= m <= n // 2:
                raise UsageError(f"matching size {m} does not fit in {n} vertices")
            g = family_graph("matching-triangles", (n, m))
            enum = count_draconian(g).count
            formula = formulas.nvol_matching_triangles(n, m)
            partition_holds = None
            if m >= 1:
                prev = family_graph("matching-triangles", (n, m - 1))
                step = verify_partition(prev, (2 * m - 1, 2 * m), matching_mode=True)
                partition_holds = step.partition_holds
            rows.append({
                "n": n,
                "m": m,
                "enumeration": str(enum),
                "formula": str(formula),
                "formula_matches": enum == formula,
                "partition_holds": partition_holds,
                "must_hold": enum == formula and partition_holds in (None, True),
            })
    return rows


def _verify_path_rows(args, n_values, m_text):
    rows = []
    for n in n_values:
        for m in parse_range(m_text, 2, n - 1):
            if not 2 <= m < n:
                raise UsageError(f"path rows need 2 <= m < n, got n = {n}, m = {m}")
            report = lost_sequences.verify_path_identity(n, m, cap_n=args.cap_n)
            readings = formulas.nvol_path_deleted(n, m)
            enum = report.cardinalities["actual"]["deleted_count"]
            complete = report.cardinalities["actual"]["complete_count"]
            union = report.cardinalities["actual"]["union"]
            which = {
                (True, True): "both",
                (True, False): "as_printed",
                (False, True): "grouped",
                (False, False): "neither",
            }[(readings.as_printed == enum, readings.grouped == enum)]
            rows.append({
                "n": n,
                "m": m,
                "enumeration": str(enum),
                "formula_as_printed": str(readings.as_printed),
                "formula_grouped": str(readings.grouped),
                "matching_reading": which,
                "identity": report.to_dict(),
                "must_hold": report.identity_holds and enum == complete - union,
            })
    return rows


def _verify_cycle_rows(args, n_values, m_text):
    rows = []
    for n in n_values:
        for m in parse_range(m_text, 3, n):
            if not 3 <= m <= n:
                raise UsageError(f"cycle rows need 3 <= m <= n, got n = {n}, m = {m}")
            report = lost_sequences.verify_cycle_identity(n, m, cap_n=args.cap_n)
            formula = formulas.nvol_cycle_deleted(n, m)
            enum = report.cardinalities["actual"]["deleted_count"]
            rows.append({
                "n": n,
                "m": m,
                "enumeration": str(enum),
                "formula": str(formula),
                "formula_matches": formula == enum,
                "identity": report.to_dict(),
                "must_hold": report.identity_holds and bool(report.pairwise_disjoint),
            })
    return rows


def cmd_verify(args) -> int:
    if args.family not in ("matching-triangles", "path-deleted", "cycle-deleted"):
        raise UsageError(
            f"verify knows matching-triangles, path-deleted, cycle-deleted; got {args.family!r}"
        )
    n_values = parse_range(args.n, 2, args.cap_n)
    build = {
        "matching-triangles": _verify_matching_rows,
        "path-deleted": _verify_path_rows,
        "cycle-deleted": _verify_cycle_rows,
    }[args.family]
    rows = build(args, n_values, args.m)
    ok = all(row["must_hold"] for row in rows)
    payload = {"family": args.family, "rows": rows, "all_must_hold": ok}
    lines = []
    for row in rows:
        bits = [f"n={row['n']}", f"m={row['m']}", f"enum={row['enumeration']}"]
        if "formula" in row:
            bits.append(f"formula={row['formula']}")
            bits.append("match" if row["formula_matches"] else "MISMATCH")
        else:
            bits.append(f"as_printed={row['formula_as_printed']}")
            bits.append(f"grouped={row['formula_grouped']}")
            bits.append(f"reading={row['matching_reading']}")
        if "identity" in row:
            bits.append("identity=ok" if row["identity"]["identity_holds"] else "identity=FAIL")
        if row.get("partition_holds") is not None:
            bits.append("partition=ok" if row["partition_holds"] else "partition=FAIL")
        bits.append("must_hold=yes" if row["must_hold"] else "MUST-HOLD FAILED")
        lines.append("  ".join(bits))
    emit(args, payload, lines)
    return 0 if ok else 1


def cmd_ehrhart(args) -> int:
    g = load_input_graph(args)
    table = ehrhart_nvol(g, cap_n=args.cap_n, jobs=args.jobs)
    payload = {"graph": g.descriptor(), **table.to_dict()}
    lines = [
        f"graph      {g.descriptor()}",
        f"dimension  {table.dimension}",
        f"counts     {' '.join(str(c) for c in table.counts)}",
        f"nvol       {table.nvol}",
    ]
    emit(args, payload, lines)
    return 0


def cmd_recurrence(args) -> int:
    g = load_input_graph(args)
    try:
        u, v = (int(x) for x in args.edge.split(","))
    except ValueError:
        raise UsageError(f"--edge wants 'u,v', got {args.edge!r}")
    try:
        report = verify_partition(g, (u, v))
        hyp = recurrence_hypotheses(g, (u, v))
    except ValueError as exc:
        raise UsageError(str(exc))
    ratio = Fraction(report.extended_count, report.base_count) if report.base_count else None
    payload = report.to_dict()
    payload["hypotheses_hold"] = hyp
    payload["ratio"] = str(ratio) if ratio is not None else None
    lines = [
        f"graph       {report.graph}",
        f"edge        {report.edge[0]},{report.edge[1]}",
        f"base        {report.base_count}",
        f"extended    {report.extended_count}",
        f"ratio       {ratio}",
        f"triples     {report.triples}",
        f"hypotheses  {hyp}",
        f"partition   {report.partition_holds}",
    ]
    emit(args, payload, lines)
    return 0 if (not hyp or report.triples) else 1


def cmd_search(args) -> int:
    if args.n_max > SEARCH_MAX:
        raise UsageError(f"search is exhaustive; --n-max is capped at {SEARCH_MAX}")
    records = search_triple_recurrence(args.n_max, jobs=args.jobs)
    forbidden = [r for r in records if r["hypotheses_hold"] and not r["triples"]]
    if args.table:
        for r in records:
            print(f"{r['category']:<24} {r['graph_encoding']:<40} "
                  f"edge={r['edge'][0]},{r['edge'][1]} "
                  f"{r['counts']['base']} -> {r['counts']['extended']}")
    else:
        for r in records:
            print(json.dumps(r, sort_keys=True))
    if forbidden:
        print(
            f"ALARM: {len(forbidden)} record(s) satisfy the degree hypotheses "
            f"but do not triple; this contradicts a proved identity",
            file=sys.stderr,
        )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqvol",
        description="Normalized volumes of adjacency polytopes of ordered pairs, "
                    "by draconian sequence enumeration",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_source(p):
        p.add_argument("--graph", help="path to a graph file (line 1: n; then 'u v' lines)")
        p.add_argument("--family", help="family spec, e.g. complete:5 or path-deleted:5,2")

    def add_render(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (the default)")
        fmt.add_argument("--table", action="store_true", help="human-readable output")

    p = sub.add_parser("count", help="count draconian sequences / normalized volume")
    add_graph_source(p)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--list", action="store_true", help="print the sequences, one per line")
    p.add_argument("--cap-n", type=int, default=DEFAULT_COUNT_CAP, metavar="N",
                   help=f"refuse components larger than N (default {DEFAULT_COUNT_CAP})")
    p.add_argument("--timing", action="store_true",
                   help="include elapsed_ms (off by default so outputs are reproducible)")
    add_render(p)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("formula", help="closed-form values for a family")
    p.add_argument("--family", required=True)
    add_render(p)
    p.set_defaults(run=cmd_formula)

    p = sub.add_parser("verify", help="formula and set-identity ledger over parameter ranges")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="value or range a..b")
    p.add_argument("--m", default="..", help="value or range a..b (default: all valid)")
    p.add_argument("--cap-n", type=int, default=9, metavar="N",
                   help="enumeration cap (default 9)")
    add_render(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("ehrhart", help="geometric volume via lattice-point counting")
    add_graph_source(p)
    p.add_argument("--cap-n", type=int, default=4, metavar="N",
                   help="dilate-counting cap (default 4)")
    p.add_argument("--jobs", type=int, default=1)
    add_render(p)
    p.set_defaults(run=cmd_ehrhart)

    p = sub.add_parser("recurrence", help="measure one triangle extension")
    add_graph_source(p)
    p.add_argument("--edge", required=True, metavar="U,V")
    add_render(p)
    p.set_defaults(run=cmd_recurrence)

    p = sub.add_parser("search", help="sweep small graphs for the tripling boundary")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_render(p)
    p.set_defaults(run=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
