"""Command-line interface.

Subcommands::

    engel report --group <spec> [--json <path>] [--dot <path>]
    engel survey --max-order <N> [--jobs <k>] [--out <dir>]
    engel verify --max-order <N>

Exit codes: 0 on success, 1 when any theorem-style check failed, 2 for
usage or parse errors.  ENGEL_CLOSURE_CAP bounds element enumeration for
``@file`` specs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import EngelGraphError, ParseError
from .io import parse_group_spec, write_dot, write_report
from .survey import (
    SurveyResult,
    TheoremVerdict,
    evaluate_group,
    summary_json,
    survey,
    verify_theorems,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="engel",
        description="Engel graphs of finite groups: reports, surveys, theorem checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="full report for one group")
    p_report.add_argument("--group", required=True, help="group spec, e.g. S4, D12, Dic3, S3xC2, @gens.txt")
    p_report.add_argument("--json", type=Path, help="also write the JSON report to this path")
    p_report.add_argument("--dot", type=Path, help="write the Engel graph in DOT format to this path")

    p_survey = sub.add_parser("survey", help="survey all catalog groups up to an order bound")
    p_survey.add_argument("--max-order", type=int, required=True)
    p_survey.add_argument("--jobs", type=int, default=1, help="parallel group evaluations")
    p_survey.add_argument("--out", type=Path, help="directory for per-group JSON reports and summary.json")

    p_verify = sub.add_parser("verify", help="run the theorem checks over the catalog")
    p_verify.add_argument("--max-order", type=int, required=True)
    return parser


def _run_report(args: argparse.Namespace) -> int:
    spec = parse_group_spec(args.group)
    evaluation = evaluate_group(spec)
    text = write_report(evaluation.report)
    sys.stdout.write(text)
    if args.json:
        args.json.write_text(text)
    if args.dot:
        if evaluation.graph is None:
            print(f"note: {evaluation.report.name} is an Engel group; writing an empty graph", file=sys.stderr)
            from .graphs import SimpleGraph

            graph = SimpleGraph(0, [])
            labels: tuple[str, ...] = ()
        else:
            graph = evaluation.graph
            labels = tuple(str(evaluation.group.perm(x)) for x in graph.labels)
        args.dot.write_text(write_dot(graph, labels))
    failed = [name for name, c in evaluation.report.checks.items() if not c.passed]
    if failed:
        print(f"FAILED checks: {', '.join(sorted(failed))}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def _print_survey(result: SurveyResult) -> None:
    print(f"surveyed {len(result.plans_checked)} catalog plans up to order {result.max_order}")
    print(f"(coverage is the catalog only, not all isomorphism classes <= {result.max_order})")
    print(f"non-nilpotent groups reported: {len(result.reports)}")
    print(f"diameter histogram: {result.diameter_histogram}")
    print(f"planar Engel graphs: {', '.join(result.planar_groups) or 'none'}")
    if result.disconnected_groups:
        print(
            "*** DISCONNECTED ENGEL GRAPHS FOUND (a research-level finding): "
            + ", ".join(result.disconnected_groups)
        )
    for group, check, detail in result.failed_checks:
        print(f"FAILED {group} {check}: {detail}")


def _run_survey(args: argparse.Namespace) -> int:
    result = survey(args.max_order, jobs=args.jobs)
    _print_survey(result)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        for report in result.reports:
            safe = report.name.replace("/", "_")
            (args.out / f"{safe}.json").write_text(write_report(report))
        (args.out / "summary.json").write_text(summary_json(result))
    return CHECK_FAILED if result.failed_checks else 0


def exit_code_for_verdicts(verdicts: list[TheoremVerdict]) -> int:
    return CHECK_FAILED if any(not v.passed for v in verdicts) else 0


def _run_verify(args: argparse.Namespace) -> int:
    verdicts = verify_theorems(args.max_order)
    for v in verdicts:
        status = "PASS" if v.passed else "FAIL"
        suffix = f": {v.detail}" if v.detail else ""
        print(f"{status} {v.name}{suffix}")
    return exit_code_for_verdicts(verdicts)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if err.code is not None else USAGE_ERROR
    try:
        if args.command == "report":
            return _run_report(args)
        if args.command == "survey":
            return _run_survey(args)
        return _run_verify(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except EngelGraphError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
