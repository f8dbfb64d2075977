"""Command-line surface for auditor workflows.

Exit codes: 0 success, 1 the audit has validation errors, 2 usage, I/O, or
parse failure. Diagnostics go to stderr; artifacts go to files or stdout.
Output is byte-deterministic for fixed argv and inputs (``init`` stamps
today's date unless --date is given).
"""
from __future__ import annotations

import argparse
import datetime
import sys
from pathlib import Path

from . import __version__
from .audit import OutcomeScale, parse_audit, scaffold_audit, serialize_audit
from .benchmark import Benchmark, canonical_benchmark, load_benchmark, serialize_benchmark
from .errors import InvalidDocumentError, SyscardError
from .layout import layout
from .report import REPORT_FORMATS, diff, render_diff, render_summary, summarize
from .svg import render_svg
from .validation import ValidationReport, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILURE = 2


def _write(path: str, data: str) -> None:
    Path(path).write_text(data, encoding="utf-8", newline="")


def _load_benchmark_arg(path: str | None) -> Benchmark:
    if path is None:
        return canonical_benchmark()
    return load_benchmark(Path(path).read_text(encoding="utf-8"))


def _load_audit_arg(path: str):
    return parse_audit(Path(path).read_text(encoding="utf-8"))


def _print_findings(report: ValidationReport) -> None:
    for finding in report.findings:
        print(f"{finding.severity.value}: {finding.message} [{finding.code}]", file=sys.stderr)
    print(
        f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)",
        file=sys.stderr,
    )


def _cmd_init(args) -> int:
    benchmark = _load_benchmark_arg(args.benchmark)
    date = datetime.date.fromisoformat(args.date) if args.date else None
    doc = scaffold_audit(benchmark, args.system, OutcomeScale(args.scale), date=date)
    _write(args.out, serialize_audit(doc))
    print(f"wrote scaffold audit to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    benchmark = _load_benchmark_arg(args.benchmark)
    doc = _load_audit_arg(args.audit)
    report = validate(doc, benchmark, strict=args.strict)
    _print_findings(report)
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _cmd_render(args) -> int:
    benchmark = _load_benchmark_arg(args.benchmark)
    doc = _load_audit_arg(args.audit)
    _write(args.out, render_svg(layout(benchmark, doc)))
    print(f"wrote card to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_report(args) -> int:
    benchmark = _load_benchmark_arg(args.benchmark)
    doc = _load_audit_arg(args.audit)
    sys.stdout.write(render_summary(summarize(doc, benchmark), args.format))
    return EXIT_OK


def _cmd_diff(args) -> int:
    old = _load_audit_arg(args.old)
    new = _load_audit_arg(args.new)
    sys.stdout.write(render_diff(diff(old, new), args.format))
    return EXIT_OK


def _cmd_benchmark(args) -> int:
    benchmark = _load_benchmark_arg(args.benchmark)
    if args.action == "show":
        lines = [f"{benchmark.id}@{benchmark.version}: {len(benchmark.criteria)} criteria"]
        for category in benchmark.categories:
            lines.append(f"\n{category.name}")
            for aspect in benchmark.aspects:
                for criterion in benchmark.criteria:
                    if criterion.category == category and criterion.aspect == aspect:
                        lines.append(f"  {criterion.code}  {aspect.name:<8} {criterion.name}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:  # export
        text = serialize_benchmark(benchmark)
        if args.out:
            _write(args.out, text)
            print(f"wrote benchmark to {args.out}", file=sys.stderr)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syscard",
        description="Create, validate, summarize, and render system-card audits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_benchmark_flag(p):
        p.add_argument(
            "--benchmark",
            metavar="FILE",
            help="benchmark JSON file (default: the built-in benchmark)",
        )

    p = sub.add_parser("init", help="write a blank audit with one entry per criterion")
    p.add_argument("--out", required=True, metavar="FILE", help="audit file to write")
    p.add_argument("--system", default="unnamed", help="name of the audited system")
    p.add_argument("--scale", choices=[s.value for s in OutcomeScale], default="binary")
    p.add_argument("--date", metavar="YYYY-MM-DD", help="audit date (default: today)")
    add_benchmark_flag(p)
    p.set_defaults(func=_cmd_init)

    p = sub.add_parser("validate", help="check an audit against its benchmark")
    p.add_argument("audit", metavar="AUDIT")
    p.add_argument("--strict", action="store_true", help="treat incomplete entries as errors")
    add_benchmark_flag(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("render", help="render an audit as an SVG system card")
    p.add_argument("audit", metavar="AUDIT")
    p.add_argument("--out", required=True, metavar="FILE", help="SVG file to write")
    add_benchmark_flag(p)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("report", help="print an outcome summary")
    p.add_argument("audit", metavar="AUDIT")
    p.add_argument("--format", choices=REPORT_FORMATS, default="text")
    add_benchmark_flag(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("diff", help="compare two audits of the same benchmark")
    p.add_argument("old", metavar="OLD_AUDIT")
    p.add_argument("new", metavar="NEW_AUDIT")
    p.add_argument("--format", choices=REPORT_FORMATS, default="text")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("benchmark", help="show or export a benchmark")
    p.add_argument("action", choices=("show", "export"))
    p.add_argument("--out", metavar="FILE", help="export target (default: stdout)")
    add_benchmark_flag(p)
    p.set_defaults(func=_cmd_benchmark)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _print_findings(exc.report)
        return EXIT_INVALID
    except (SyscardError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
