"""Command line front end.

    layerspan span --graph mc:6:3 --rule all
    layerspan table --n 3..10 --k 2..5 --jobs 4
    layerspan strategy --n 6 --k 3 --rule lazy --out pair.json --trace pair.csv
    layerspan verify pair.json

Graph specs: ``mc:N:K``, ``cycle:N``, ``path:N``, ``complete:N``,
``file:PATH`` (edge list) and ``ml:PATH:K`` (edge list stacked K times).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import graph as gr
from .engine import ORACLE_CAP, SpanReport, TrackWitness, span_by_components, span_oracle_value, witness_tracks
from .errors import GraphParseError, GraphPreconditionError, LayerspanError, OracleCapExceeded, TrackLengthError
from .strategies import strategy_for_rule, trace_csv
from .tracks import (
    RULES,
    MovementRule,
    near_layer_index,
    same_layer_index,
    track_distance,
    tracks_from_json,
    tracks_to_json,
    validate_for_rule,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GRAPH = 3
EXIT_CAP = 4
EXIT_VERIFY = 5
EXIT_THEOREM = 6

TABLE_HEADER = ["n", "k", "strong", "direct", "cartesian"]
DEFAULT_MAX_VERTICES = 400


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise GraphParseError(f"{what} must be an integer, got {text!r}") from None


def parse_graph_spec(spec: str) -> gr.Graph:
    kind, _, rest = spec.partition(":")
    if kind == "mc":
        parts = rest.split(":")
        if len(parts) != 2:
            raise GraphParseError(f"expected mc:N:K, got {spec!r}")
        return gr.multilayered_cycle(_int(parts[0], "N"), _int(parts[1], "K"))
    if kind in ("cycle", "path", "complete"):
        make = {"cycle": gr.cycle, "path": gr.path, "complete": gr.complete}[kind]
        return make(_int(rest, "N"))
    if kind == "file":
        return _read_edge_list(rest)
    if kind == "ml":
        file, sep, k = rest.rpartition(":")
        if not sep:
            raise GraphParseError(f"expected ml:PATH:K, got {spec!r}")
        return gr.multilayer(_read_edge_list(file), _int(k, "K"))
    raise GraphParseError(f"unknown graph spec {spec!r}")


def _read_edge_list(path: str) -> gr.Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from exc
    g = gr.from_edge_list(text)
    g.name = Path(path).stem
    return g


def parse_range(text: str) -> range:
    """``"3..10"`` is inclusive on both ends; a single number is a one-element range."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise GraphParseError(f"bad range {text!r}, expected A..B") from None
    return range(start, stop + 1)


def _rules(selector: str) -> tuple[MovementRule, ...]:
    if selector == "all":
        return RULES
    try:
        return (MovementRule.parse(selector),)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


# commands ------------------------------------------------------------------


def cmd_span(args) -> int:
    g = parse_graph_spec(args.graph)
    g.require_connected()
    reports: list[SpanReport] = []
    for rule in _rules(args.rule):
        if args.method == "oracle":
            report = span_oracle_value(g, rule, cap=args.cap)
        else:
            report = span_by_components(g, rule)
            if args.witness == "tracks":
                f, h = witness_tracks(g, rule, report.value)
                report = SpanReport(rule, report.value, report.method, TrackWitness(tuple(f), tuple(h)))
        if args.witness == "none":
            report = SpanReport(rule, report.value, report.method)
        reports.append(report)
    doc = {"graph": g.name or args.graph, "vertices": g.vertex_count, "reports": [r.to_json() for r in reports]}
    _emit(json.dumps(doc, indent=None if args.compact else 2), args.out)
    return EXIT_OK


def table_cell(cell: tuple[int, int]) -> tuple[int, int, int, int, int]:
    n, k = cell
    g = gr.multilayered_cycle(n, k)
    strong, direct, cartesian = (span_by_components(g, rule).value for rule in RULES)
    return n, k, strong, direct, cartesian


def table_rows(ns: range, ks: range, jobs: int = 1) -> list[tuple[int, int, int, int, int]]:
    cells = [(n, k) for n in ns for k in ks]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(table_cell, cells))
    return [table_cell(c) for c in cells]


def theorem_violations(rows) -> list[tuple[int, int, int, int, int]]:
    return [row for row in rows if row[2:] != (row[0] // 2 + 1, row[0] // 2 + 1, row[0] // 2)]


def cmd_table(args) -> int:
    ns, ks = parse_range(args.n), parse_range(args.k)
    if ns and ks:
        if ns[0] < 3 or ks[0] < 2:
            raise GraphPreconditionError("table needs n >= 3 and k >= 2")
        if ns[-1] * ks[-1] > args.max_vertices:
            raise CliError(f"MC_{ns[-1]}^{ks[-1]} exceeds the {args.max_vertices}-vertex table limit", EXIT_CAP)
    rows = table_rows(ns, ks, args.jobs)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    writer.writerows(rows)
    _emit(out.getvalue(), args.out, newline=False)
    bad = theorem_violations(rows)
    for row in bad:
        print(f"THEOREM VIOLATION n={row[0]} k={row[1]}: got {row[2:]}", file=sys.stderr)
    return EXIT_THEOREM if bad else EXIT_OK


def cmd_strategy(args) -> int:
    rule = _rules(args.rule)[0] if args.rule != "all" else None
    if rule is None:
        raise GraphParseError("strategy needs a single rule")
    f, h = strategy_for_rule(args.n, args.k, rule)
    g = gr.multilayered_cycle(args.n, args.k)
    claim = args.n // 2 if rule is MovementRule.LAZY else args.n // 2 + 1
    _emit(json.dumps(tracks_to_json(g, f, h, rule, claim=claim)), args.out)
    if args.trace:
        Path(args.trace).write_text(trace_csv(g, f, h))
    return EXIT_OK


def verify_document(text: str) -> tuple[bool, list[str]]:
    """Check a track JSON document; returns the verdict and one line per check."""
    g, f, h, rule, claim = tracks_from_json(text)
    lines = []
    ok = True
    try:
        verdict = validate_for_rule(g, rule, f, h)
    except TrackLengthError as exc:
        return False, [f"FAIL length: {exc}"]
    lines.append(f"{'PASS' if verdict else 'FAIL'} kind ({rule.value}): {verdict}")
    ok &= verdict.ok
    try:
        m = track_distance(g, f, h)
    except LayerspanError as exc:
        return False, lines + [f"FAIL distance: {exc}"]
    if claim is not None and m < claim:
        lines.append(f"FAIL distance: m_G={m} below claimed {claim}")
        ok = False
    else:
        lines.append(f"PASS distance: m_G={m}")
    lay = g.layering
    if lay is not None and lay.base_count >= 3 and g == gr.multilayered_cycle(lay.base_count, lay.layers):
        near = near_layer_index(lay, f, h)
        lines.append(f"{'PASS' if near else 'FAIL'} adjacent-layer position: {near}")
        ok &= near is not None
        if rule is MovementRule.LAZY:
            same = same_layer_index(lay, f, h)
            lines.append(f"{'PASS' if same else 'FAIL'} same-layer position: {same}")
            ok &= same is not None
    return ok, lines


def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {args.path}: {exc}") from exc
    ok, lines = verify_document(text)
    for line in lines:
        print(line)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


def _emit(text: str, out: str | None, newline: bool = True) -> None:
    if newline:
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="layerspan", description="Exact vertex spans of graphs and multilayered cycles.")
    sub = parser.add_subparsers(dest="command", required=True)
    rule_help = "traditional|active|lazy|all (strong|direct|cartesian also accepted)"

    p = sub.add_parser("span", help="compute spans of one graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rule", default="all", help=rule_help)
    p.add_argument("--method", choices=["components", "oracle"], default="components")
    p.add_argument("--witness", choices=["component", "tracks", "none"], default="component")
    p.add_argument("--cap", type=int, default=ORACLE_CAP, help="oracle vertex cap")
    p.add_argument("--compact", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("table", help="span table for MC_n^k over ranges of n and k")
    p.add_argument("--n", required=True, help="A..B")
    p.add_argument("--k", required=True, help="A..B")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("strategy", help="emit an explicit track pair on MC_n^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rule", default="lazy", help=rule_help)
    p.add_argument("--out")
    p.add_argument("--trace", help="write a per-step CSV trace here")
    p.set_defaults(func=cmd_strategy)

    p = sub.add_parser("verify", help="check a track JSON file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAPH


if __name__ == "__main__":
    sys.exit(main())
