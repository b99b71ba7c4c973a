"""Command-line interface: per-graph certificates, corpus scans, bound tables,
and the k = 5 relaxation experiment.

Exit codes: 0 success, 1 a verified check failed, 2 input error,
3 precondition or girth violation, 4 internal numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .bounds import (
    CertificateReport,
    certify,
    csikvari_bound,
    cycle_lower_bound,
    gamma5_prime_value,
    main_bound,
    reports_to_csv,
)
from .errors import (
    ConvergenceError,
    Graph6ParseError,
    GirthViolationError,
    InfeasibleError,
    UnsupportedSizeError,
)
from .gamma5prime import (
    check_relaxed_constraints,
    extremal_sequence,
    maximize_objective,
    n_epsilon,
)
from .graph_core import (
    Graph,
    enumerate_labeled_graphs,
    parse_graph6,
    read_graph6_lines,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_NUMERICAL = 4


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _require_odd_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be an odd integer >= 3, got {k}")


# ----------------------------- analyze ------------------------------------


def _render_report_text(report: CertificateReport) -> str:
    lines = [
        f"graph {report.graph_id}  n={report.n}  "
        f"odd_girth={'inf' if math.isinf(report.odd_girth) else int(report.odd_girth)}  "
        f"k={report.k}",
        f"  lambda1={report.lambda1:.10g}  lambda_n={report.lambda_n:.10g}  "
        f"measure={report.measure:.10g}",
        f"  case={report.case if report.case is not None else 'n/a'}  "
        f"trivial={'yes' if report.trivial else 'no'}",
    ]
    for b in report.bounds:
        status = "OK" if b.satisfied else "VIOLATED"
        lines.append(
            f"  bound {b.name:<16} {b.value:.10g}  {status}  slack {b.slack:.10g}"
        )
    for c in report.chain_checks:
        if c.satisfied is None:
            lines.append(f"  chain [skipped] {c.description}")
        else:
            status = "OK" if c.satisfied else "VIOLATED"
            lines.append(
                f"  chain {c.description}: {c.left:.10g} {c.relation} "
                f"{c.right:.10g}  {status}"
            )
    lines.append(f"  result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        _require_odd_k(args.k)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)

    path = Path(args.source)
    try:
        if path.is_file():
            graphs = []
            for lineno, item in read_graph6_lines(
                path.read_text().splitlines()
            ):
                if isinstance(item, Graph6ParseError):
                    return _fail(f"line {lineno}: {item}", EXIT_INPUT)
                graphs.append(item)
            if not graphs:
                return _fail(f"no graphs in {path}", EXIT_INPUT)
        else:
            graphs = [parse_graph6(args.source)]
    except Graph6ParseError as exc:
        return _fail(str(exc), EXIT_INPUT)

    reports = []
    try:
        for g in graphs:
            reports.append(certify(g, args.k))
    except GirthViolationError as exc:
        return _fail(str(exc), EXIT_PRECONDITION)
    except ConvergenceError as exc:
        return _fail(str(exc), EXIT_NUMERICAL)

    if args.format == "json":
        for report in reports:
            print(report.to_json())
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        for report in reports:
            print(_render_report_text(report))

    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


# ------------------------------- scan --------------------------------------


@dataclass(frozen=True)
class ScanRow:
    """Aggregate over all scanned graphs with a common vertex count."""

    n: int
    k: int
    count: int
    max_measure: float | None
    argmax_graph: str | None
    tightest_bound: str | None
    tightest_bound_value: float | None
    min_slack: float | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "count": self.count,
            "max_measure": self.max_measure,
            "argmax_graph": self.argmax_graph,
            "tightest_bound": self.tightest_bound,
            "tightest_bound_value": self.tightest_bound_value,
            "min_slack": self.min_slack,
        }


@dataclass(frozen=True)
class ScanSummary:
    rows: tuple[ScanRow, ...]
    scanned: int
    qualifying: int
    skipped_girth: int
    malformed_lines: int
    violations: int

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "scanned": self.scanned,
            "qualifying": self.qualifying,
            "skipped_girth": self.skipped_girth,
            "malformed_lines": self.malformed_lines,
            "violations": self.violations,
        }


def _scan_one(task: tuple[int, Graph], k: int):
    index, g = task
    if g.n == 0:
        return index, None
    try:
        report = certify(g, k)
    except GirthViolationError:
        return index, None
    tight = report.tightest_bound()
    return index, (
        g.n,
        report.graph_id,
        report.measure,
        tight.name if tight else None,
        tight.value if tight else None,
        tight.slack if tight else None,
        report.passed,
    )


def _chunked(items, size: int):
    for i in range(0, len(items), size):
        yield items[i : i + size]


def scan_graphs(tasks: list[tuple[int, Graph]], k: int, jobs: int):
    """Certify every task, preserving input order regardless of job count."""
    if jobs <= 1 or len(tasks) < 2:
        return [_scan_one(t, k) for t in tasks]
    chunk_size = max(1, len(tasks) // (jobs * 8))
    results: list = []
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for chunk_result in pool.map(
            lambda chunk: [_scan_one(t, k) for t in chunk],
            list(_chunked(tasks, chunk_size)),
        ):
            results.extend(chunk_result)
    return results


def build_scan_summary(
    tasks: list[tuple[int, Graph]], k: int, jobs: int, malformed: int
) -> ScanSummary:
    results = scan_graphs(tasks, k, jobs)
    per_n: dict[int, dict] = {}
    qualifying = 0
    violations = 0
    for index, payload in results:
        if payload is None:
            continue
        qualifying += 1
        n, graph_id, measure, bound_name, bound_value, slack, passed = payload
        if not passed:
            violations += 1
        agg = per_n.setdefault(
            n,
            {
                "count": 0,
                "max_measure": None,
                "argmax_graph": None,
                "tight_name": None,
                "tight_value": None,
                "min_slack": None,
            },
        )
        agg["count"] += 1
        if agg["max_measure"] is None or measure > agg["max_measure"]:
            agg["max_measure"] = measure
            agg["argmax_graph"] = graph_id
            agg["tight_name"] = bound_name
            agg["tight_value"] = bound_value
        if slack is not None and (agg["min_slack"] is None or slack < agg["min_slack"]):
            agg["min_slack"] = slack

    rows = tuple(
        ScanRow(
            n=n,
            k=k,
            count=agg["count"],
            max_measure=agg["max_measure"],
            argmax_graph=agg["argmax_graph"],
            tightest_bound=agg["tight_name"],
            tightest_bound_value=agg["tight_value"],
            min_slack=agg["min_slack"],
        )
        for n, agg in sorted(per_n.items())
    )
    return ScanSummary(
        rows=rows,
        scanned=len(tasks),
        qualifying=qualifying,
        skipped_girth=len(tasks) - qualifying,
        malformed_lines=malformed,
        violations=violations,
    )


def _render_scan_text(summary: ScanSummary) -> str:
    lines = [
        f"scanned={summary.scanned}  qualifying={summary.qualifying}  "
        f"skipped_girth={summary.skipped_girth}  "
        f"malformed={summary.malformed_lines}  violations={summary.violations}"
    ]
    for row in summary.rows:
        measure = "-" if row.max_measure is None else f"{row.max_measure:.10g}"
        slack = "-" if row.min_slack is None else f"{row.min_slack:.10g}"
        lines.append(
            f"n={row.n} k={row.k} count={row.count} max_measure={measure} "
            f"argmax={row.argmax_graph or '-'} "
            f"tightest={row.tightest_bound or '-'} min_slack={slack}"
        )
    return "\n".join(lines)


def _render_scan_csv(summary: ScanSummary) -> str:
    lines = [
        "n,k,count,max_measure,argmax_graph,tightest_bound,"
        "tightest_bound_value,min_slack"
    ]
    for row in summary.rows:
        lines.append(
            ",".join(
                [
                    str(row.n),
                    str(row.k),
                    str(row.count),
                    "" if row.max_measure is None else repr(row.max_measure),
                    row.argmax_graph or "",
                    row.tightest_bound or "",
                    ""
                    if row.tightest_bound_value is None
                    else repr(row.tightest_bound_value),
                    "" if row.min_slack is None else repr(row.min_slack),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    try:
        _require_odd_k(args.k)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    if args.jobs < 1:
        return _fail(f"jobs must be at least 1, got {args.jobs}", EXIT_INPUT)

    malformed = 0
    tasks: list[tuple[int, Graph]] = []
    if args.enumerate is not None:
        try:
            graphs = enumerate_labeled_graphs(args.enumerate)
            tasks = list(enumerate(graphs))
        except (UnsupportedSizeError, ValueError) as exc:
            return _fail(str(exc), EXIT_INPUT)
    else:
        path = Path(args.source)
        if not path.is_file():
            return _fail(f"no such file: {path}", EXIT_INPUT)
        for lineno, item in read_graph6_lines(path.read_text().splitlines()):
            if isinstance(item, Graph6ParseError):
                malformed += 1
            else:
                tasks.append((lineno, item))

    try:
        summary = build_scan_summary(tasks, args.k, args.jobs, malformed)
    except ConvergenceError as exc:
        return _fail(str(exc), EXIT_NUMERICAL)

    if args.format == "json":
        print(json.dumps(summary.to_dict()))
    elif args.format == "csv":
        print(_render_scan_csv(summary), end="")
    else:
        print(_render_scan_text(summary))
    return EXIT_OK if summary.violations == 0 else EXIT_CHECK_FAILED


# ------------------------------ bounds -------------------------------------


def cmd_bounds(args) -> int:
    k_min, k_max = args.k_min, args.k_max
    if k_min % 2 == 0 or k_max % 2 == 0 or k_min < 3:
        return _fail("k-min and k-max must be odd integers >= 3", EXIT_INPUT)
    if k_min > k_max:
        return _fail("k-min must not exceed k-max", EXIT_INPUT)

    rows = []
    for k in range(k_min, k_max + 1, 2):
        lower = cycle_lower_bound(k)
        upper = main_bound(k) if k >= 100 else None
        ratio = upper / lower if upper is not None else None
        rows.append({"k": k, "cycle_lower_bound": lower, "main_bound": upper, "ratio": ratio})

    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print("k,cycle_lower_bound,main_bound,ratio")
        for row in rows:
            upper = "" if row["main_bound"] is None else repr(row["main_bound"])
            ratio = "" if row["ratio"] is None else repr(row["ratio"])
            print(f"{row['k']},{row['cycle_lower_bound']!r},{upper},{ratio}")
    else:
        for row in rows:
            upper = "n/a" if row["main_bound"] is None else f"{row['main_bound']:.10g}"
            ratio = "n/a" if row["ratio"] is None else f"{row['ratio']:.6g}"
            print(
                f"k={row['k']:>5}  lower={row['cycle_lower_bound']:.10g}  "
                f"upper={upper}  ratio={ratio}"
            )
    return EXIT_OK


# ------------------------------ gamma5 -------------------------------------


def cmd_gamma5(args) -> int:
    try:
        epsilons = [float(x) for x in args.eps.split(",") if x.strip()]
    except ValueError:
        return _fail(f"could not parse epsilon list {args.eps!r}", EXIT_INPUT)
    if not epsilons or any(not 0 < e < 1 for e in epsilons):
        return _fail("every epsilon must lie in (0, 1)", EXIT_INPUT)
    if args.s_max < 15:
        return _fail(f"s-max must be at least 15, got {args.s_max}", EXIT_INPUT)
    if args.samples < 100:
        return _fail(f"samples must be at least 100, got {args.samples}", EXIT_INPUT)

    s_star, upper = maximize_objective(args.s_max, args.samples)
    exact = gamma5_prime_value()
    print(f"upper-bound search over [1, {args.s_max:g}]:")
    print(f"  s_star = {s_star:.12g}")
    print(f"  value  = {upper:.15g}")
    print(f"exact value      = {exact:.15g}")
    print(f"csikvari bound   = {csikvari_bound():.15g}")
    print(f"improvement      = {csikvari_bound() - exact:.6g}")
    print()
    for eps in epsilons:
        n = math.ceil(n_epsilon(eps))
        try:
            seq = extremal_sequence(eps, n)
        except InfeasibleError as exc:
            return _fail(str(exc), EXIT_PRECONDITION)
        check = check_relaxed_constraints(seq, 5)
        print(f"epsilon = {eps:g}  (n = {n})")
        print(f"  measure     = {seq.measure:.15g}")
        print(f"  gap         = {exact - seq.measure:.6g}")
        print(f"  sum1        = {check.sum1:.6g}")
        print(f"  sum3        = {check.sum3:.6g}")
        print(f"  sum2 budget = {check.sum2:.6g} <= {check.n_lambda1:.6g}")
        print(f"  satisfied   = {check.satisfied}")
    return EXIT_OK


# ------------------------------- main --------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddspectrum",
        description=(
            "Spectral bipartiteness measure vs odd girth: certificates, "
            "corpus scans, bound tables, and the k = 5 relaxation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="certify one graph6 literal or file")
    p.add_argument("source", help="graph6 string or path to a graph6 file")
    p.add_argument("--k", type=int, required=True, help="odd girth level to certify at")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="scan a corpus for measures and bound slack")
    p.add_argument("source", nargs="?", help="path to a graph6 file")
    p.add_argument(
        "--enumerate",
        type=int,
        default=None,
        metavar="N",
        help="scan all labeled graphs on N vertices instead of a file (N <= 8)",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bounds", help="tabulate the bound formulas over odd k")
    p.add_argument("--k-min", type=int, required=True, dest="k_min")
    p.add_argument("--k-max", type=int, required=True, dest="k_max")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gamma5", help="run the k = 5 relaxation experiment")
    p.add_argument("--eps", default="0.1,0.01,0.001", help="comma-separated epsilons")
    p.add_argument("--s-max", type=float, default=100.0, dest="s_max")
    p.add_argument("--samples", type=int, default=1000, help="grid samples per unit interval")
    p.set_defaults(func=cmd_gamma5)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "scan" and (args.source is None) == (args.enumerate is None):
        return _fail("scan needs exactly one of a file path or --enumerate N", EXIT_INPUT)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
