"""Command-line front end.

Subcommands:
  compute   read graphs (graph6 lines or one edge-list), print the
            selected formula values per graph
  verify    run a verification campaign (exhaustive / random / file) and
            flag any disagreement between the formulas
  selftest  golden values plus the dyadic-arithmetic oracle

stdout carries only data rows; diagnostics and warnings go to stderr.
Exit codes: 0 success / no mismatch, 1 mismatch or failed selftest,
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import TextIO

from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .invariants import (
    DEFAULT_EDGE_BUDGET,
    DEFAULT_VERTEX_BUDGET,
    BudgetExceededError,
    DyadicRational,
    phi_definition,
    phi_eulerian,
    psi_corank,
)
from .verify import RunConfig, RunSummary, VerificationReport, iter_reports, splitmix64

_FIELD_BY_TAG = {"definition": "phi_definition", "eulerian": "phi_eulerian", "corank": "psi"}
_TAGS = ("definition", "eulerian", "corank")

_CSV_HEADER_COMPUTE = (
    "graph6,n,m,phi_definition,phi_eulerian,psi,equal,"
    "elapsed_definition_ms,elapsed_eulerian_ms,elapsed_corank_ms"
)
_CSV_HEADER_VERIFY = "graph6,n,m,phi_definition,phi_eulerian,psi,equal,claim_checked,parity_checked"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphweight",
        description="Exact graph invariant by three formulas, with cross-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--edge-budget", type=int, default=DEFAULT_EDGE_BUDGET,
                       help="max |E| for the edge-subset formula")
        p.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET,
                       help="max n for the vertex-subset formulas")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                       help="worker processes")
        p.add_argument("--output", choices=("plain", "csv", "jsonl"), default="plain")

    pc = sub.add_parser("compute", help="compute invariant values for input graphs")
    pc.add_argument("file", nargs="?", help="input file (default: stdin)")
    pc.add_argument("--format", choices=("g6", "edges"), default="g6",
                    help="g6: one graph6 line per graph; edges: whole input is one edge list")
    pc.add_argument("--formula", choices=("definition", "eulerian", "corank", "all"),
                    default="all")
    common(pc)

    pv = sub.add_parser("verify", help="cross-verify the formulas on a corpus")
    src = pv.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N",
                     help="all labeled graphs on N vertices")
    src.add_argument("--random", nargs=3, metavar=("N", "P", "COUNT"),
                     help="COUNT random graphs on N vertices with edge probability P")
    src.add_argument("--input", metavar="FILE", help="graphs from a file")
    pv.add_argument("--format", choices=("g6", "edges"), default="g6")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--check-identities", action="store_true",
                    help="also test the kernel-count and parity identities per subset")
    common(pv)

    sub.add_parser("selftest", help="golden examples and dyadic arithmetic oracle")
    return parser


# ---------------------------------------------------------------------------
# Row formatting
# ---------------------------------------------------------------------------


def _exact_or_none(report: VerificationReport, tag: str):
    iv = report.values.get(tag)
    return iv.value.exact_str() if iv else None


def _approx_or_none(report: VerificationReport, tag: str):
    iv = report.values.get(tag)
    return iv.value.approx() if iv else None


def _plain_row(report: VerificationReport) -> str:
    parts = [report.graph_id, f"n={report.n}", f"m={report.m}"]
    for tag in _TAGS:
        if tag in report.values:
            parts.append(f"{_FIELD_BY_TAG[tag]}={report.values[tag].value.exact_str()}")
        elif tag in report.skipped:
            parts.append(f"{_FIELD_BY_TAG[tag]}=skipped:budget")
    parts.append(f"equal={'yes' if report.all_equal else 'NO'}")
    return " ".join(parts)


def _csv_cell(value) -> str:
    return "" if value is None else str(value)


def _csv_row(report: VerificationReport, include_elapsed: bool) -> str:
    cells = [report.graph_id, str(report.n), str(report.m)]
    for tag in _TAGS:
        cells.append(_csv_cell(_exact_or_none(report, tag)))
    cells.append("true" if report.all_equal else "false")
    if include_elapsed:
        for tag in _TAGS:
            sec = report.elapsed.get(tag)
            cells.append("" if sec is None else f"{sec * 1000:.3f}")
    else:
        cells.append(str(report.claim_checked))
        cells.append(str(report.parity_checked))
    return ",".join(cells)


def _jsonl_row(report: VerificationReport, include_elapsed: bool) -> str:
    rec: dict = {"graph6": report.graph_id, "n": report.n, "m": report.m}
    for tag in _TAGS:
        rec[_FIELD_BY_TAG[tag]] = _exact_or_none(report, tag)
        rec[_FIELD_BY_TAG[tag] + "_approx"] = _approx_or_none(report, tag)
    rec["equal"] = report.all_equal
    rec["skipped"] = report.skipped
    rec["claim_checked"] = report.claim_checked
    rec["parity_checked"] = report.parity_checked
    if include_elapsed:
        rec["elapsed_ms"] = {
            tag: round(report.elapsed[tag] * 1000, 3)
            for tag in _TAGS
            if tag in report.elapsed
        }
    return json.dumps(rec)


def _emit(report: VerificationReport, output: str, include_elapsed: bool, out: TextIO):
    if output == "plain":
        out.write(_plain_row(report) + "\n")
    elif output == "csv":
        out.write(_csv_row(report, include_elapsed) + "\n")
    else:
        out.write(_jsonl_row(report, include_elapsed) + "\n")


def _emit_header(output: str, include_elapsed: bool, out: TextIO):
    if output == "csv":
        out.write((_CSV_HEADER_COMPUTE if include_elapsed else _CSV_HEADER_VERIFY) + "\n")


def _warn_skips(report: VerificationReport):
    for tag, reason in report.skipped.items():
        print(
            f"graphweight: warning: {report.graph_id}: {_FIELD_BY_TAG[tag]} skipped ({reason})",
            file=sys.stderr,
        )


# ---------------------------------------------------------------------------
# Input parsing
# ---------------------------------------------------------------------------


def _read_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edges":
        return [parse_edge_list(text)]
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


def _load_input(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_compute(args) -> int:
    try:
        graphs = _read_graphs(_load_input(args.file), args.format)
    except (GraphFormatError, OSError, UnicodeError) as exc:
        print(f"graphweight: error: {exc}", file=sys.stderr)
        return 2
    formulas = _TAGS if args.formula == "all" else (args.formula,)
    cfg = RunConfig(
        mode="file",
        edge_budget=args.edge_budget,
        vertex_budget=args.vertex_budget,
        formulas=tuple(formulas),
        threads=args.threads,
    )
    runnable = []
    for g in graphs:
        computable = any(
            (tag == "definition" and len(g.edges) <= cfg.edge_budget)
            or (tag in ("eulerian", "corank") and g.n <= cfg.vertex_budget)
            for tag in formulas
        )
        if computable:
            runnable.append(g)
        else:
            print(
                f"graphweight: warning: graph n={g.n} m={len(g.edges)} skipped entirely "
                f"(every selected formula over budget)",
                file=sys.stderr,
            )
    _emit_header(args.output, True, sys.stdout)
    for report in iter_reports(cfg, runnable):
        _warn_skips(report)
        _emit(report, args.output, True, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    graphs = None
    try:
        if args.exhaustive is not None:
            cfg_kw = dict(mode="exhaustive", n=args.exhaustive)
        elif args.random is not None:
            n_str, p_str, count_str = args.random
            cfg_kw = dict(
                mode="random",
                n=int(n_str),
                p=Fraction(p_str),
                count=int(count_str),
            )
        else:
            graphs = _read_graphs(_load_input(args.input), args.format)
            cfg_kw = dict(mode="file")
        cfg = RunConfig(
            seed=args.seed,
            edge_budget=args.edge_budget,
            vertex_budget=args.vertex_budget,
            check_identities=args.check_identities,
            threads=args.threads,
            **cfg_kw,
        )
    except (GraphFormatError, OSError, UnicodeError, ValueError, ZeroDivisionError) as exc:
        print(f"graphweight: error: {exc}", file=sys.stderr)
        return 2
    summary = RunSummary()
    _emit_header(args.output, False, sys.stdout)
    try:
        for report in iter_reports(cfg, graphs):
            summary.update(report)
            _warn_skips(report)
            _emit(report, args.output, False, sys.stdout)
    except BudgetExceededError as exc:
        print(f"graphweight: error: {exc}", file=sys.stderr)
        return 2
    summary_line = f"{summary.graphs_checked} graphs, {summary.mismatches} mismatches"
    if args.check_identities:
        summary_line += (
            f", {summary.identities_checked} identities checked,"
            f" {summary.identity_violations} violations"
        )
    if args.output == "plain":
        print(summary_line)
    else:
        print(summary_line, file=sys.stderr)
    print(f"graphweight: total {summary.elapsed_total:.2f}s", file=sys.stderr)
    return 1 if summary.failed else 0


def _selftest_graphs() -> list[tuple[str, Graph, DyadicRational]]:
    return [
        ("K1", Graph.from_edges(1, []), DyadicRational(3, 3)),
        ("K2", Graph.from_edges(2, [(0, 1)]), DyadicRational(-3, 6)),
        ("K3", Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]), DyadicRational(15, 9)),
        ("C4", Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), DyadicRational(33, 12)),
        ("C5", Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), DyadicRational(63, 15)),
    ]


def _cmd_selftest(_args) -> int:
    failures = 0

    def check(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        if ok:
            print(f"ok   {name}" + (f" {detail}" if detail else ""))
        else:
            failures += 1
            print(f"FAIL {name}" + (f" {detail}" if detail else ""))

    for name, g, expected in _selftest_graphs():
        got = {
            "definition": phi_definition(g).value,
            "eulerian": phi_eulerian(g).value,
            "corank": psi_corank(g).value,
        }
        agree = all(v == expected for v in got.values())
        check(
            f"golden {name}",
            agree,
            f"expected {expected.exact_str()}, got "
            + ", ".join(f"{t}={v.exact_str()}" for t, v in got.items()),
        )

    ok = True
    for i in range(200):
        a_num = splitmix64(101, 2 * i) % 2001 - 1000
        b_num = splitmix64(101, 2 * i + 1) % 2001 - 1000
        a_k = splitmix64(202, i) % 8
        b_k = splitmix64(303, i) % 8
        a = DyadicRational(a_num, a_k)
        b = DyadicRational(b_num, b_k)
        fa = Fraction(a_num, 1 << a_k)
        fb = Fraction(b_num, 1 << b_k)
        if (a + b).as_fraction() != fa + fb or (a * b).as_fraction() != fa * fb:
            ok = False
        if (-a).as_fraction() != -fa or (a - b).as_fraction() != fa - fb:
            ok = False
        if a.num != 0 and a.num % 2 == 0 and a.k != 0:
            ok = False
        if a.num == 0 and a.k != 0:
            ok = False
    check("dyadic arithmetic oracle (200 cases vs Fraction)", ok)

    print(f"{'PASS' if failures == 0 else 'FAIL'}: selftest, {failures} failures")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_selftest(args)


if __name__ == "__main__":
    sys.exit(main())
