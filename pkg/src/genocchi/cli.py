"""Command-line front end.

Three subcommands: `bernoulli` and `genocchi` emit number tables,
`verify` runs grid checks. Data goes to stdout as CSV or JSON,
diagnostics go to stderr. In JSON output every number that can grow
without bound is a decimal string, never a native number, so output
survives parsers with 53-bit integers. Exit codes: 0 success, 1 at
least one verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .cache import CacheCorruptionError, get_or_build
from .special import BernoulliTable, gen_genocchi_table
from .verify import TheoremId, VerificationReport, _NEEDS_BERNOULLI, run_grid

VERIFY_CSV_COLUMNS = [
    "kind", "theorem", "n_min", "n_max", "a_min", "a_max",
    "checked", "failure_count", "elapsed_s", "notes",
    "n", "a", "observed", "expected",
]


def default_cache_path() -> Path:
    env = os.environ.get("GENOCCHI_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "genocchi" / "bernoulli.json"


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_bernoulli_csv(table: BernoulliTable, n_max: int) -> str:
    rows = [["index", "numerator", "denominator"]]
    for i in range(n_max + 1):
        v = table.values[i]
        rows.append([str(i), str(v.numerator), str(v.denominator)])
    return _csv_text(rows)


def render_bernoulli_json(table: BernoulliTable, n_max: int) -> str:
    payload = {
        "max_index": n_max,
        "values": [
            {"num": str(table.values[i].numerator), "den": str(table.values[i].denominator)}
            for i in range(n_max + 1)
        ],
    }
    return json.dumps(payload, indent=1) + "\n"


def render_genocchi_csv(a: int, values: list[int]) -> str:
    rows = [["n", "value"]]
    rows.extend([str(n), str(v)] for n, v in enumerate(values))
    return _csv_text(rows)


def render_genocchi_json(a: int, values: list[int]) -> str:
    payload = {
        "a": a,
        "n_max": len(values) - 1,
        "values": [str(v) for v in values],
    }
    return json.dumps(payload, indent=1) + "\n"


def render_reports_csv(reports: list[VerificationReport]) -> str:
    rows = [VERIFY_CSV_COLUMNS]
    for r in reports:
        a_min = "" if r.a_range is None else str(r.a_range[0])
        a_max = "" if r.a_range is None else str(r.a_range[1])
        rows.append([
            "report", r.theorem.value, str(r.n_range[0]), str(r.n_range[1]),
            a_min, a_max, str(r.checked), str(len(r.failures)),
            str(r.elapsed_s), json.dumps(list(r.notes)),
            "", "", "", "",
        ])
        for f in r.failures:
            rows.append([
                "failure", r.theorem.value, "", "", "", "", "", "", "", "",
                str(f.n), "" if f.a is None else str(f.a), f.observed, f.expected,
            ])
    return _csv_text(rows)


def render_reports_json(reports: list[VerificationReport]) -> str:
    payload = []
    for r in reports:
        payload.append({
            "theorem": r.theorem.value,
            "n_range": list(r.n_range),
            "a_range": None if r.a_range is None else list(r.a_range),
            "checked": r.checked,
            "failure_count": len(r.failures),
            "elapsed_s": r.elapsed_s,
            "notes": list(r.notes),
            "failures": [
                {"n": f.n, "a": f.a, "observed": f.observed, "expected": f.expected}
                for f in r.failures
            ],
        })
    return json.dumps(payload, indent=1) + "\n"


def _mutate_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected N,A, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected two integers, got {text!r}") from exc


def cmd_bernoulli(args) -> int:
    if args.n_max < 0:
        raise ValueError(f"--n-max must be nonnegative, got {args.n_max}")
    cache_path = args.cache_path or default_cache_path()
    table = get_or_build(cache_path, args.n_max)
    if args.format == "csv":
        sys.stdout.write(render_bernoulli_csv(table, args.n_max))
    else:
        sys.stdout.write(render_bernoulli_json(table, args.n_max))
    return 0


def cmd_genocchi(args) -> int:
    if args.n_max < 0:
        raise ValueError(f"--n-max must be nonnegative, got {args.n_max}")
    if args.a < 2:
        raise ValueError(f"--a must be at least 2, got {args.a}")
    values = gen_genocchi_table(args.a, args.n_max, args.order)
    if args.format == "csv":
        sys.stdout.write(render_genocchi_csv(args.a, values))
    else:
        sys.stdout.write(render_genocchi_json(args.a, values))
    return 0


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise ValueError(f"--n-max must be at least 1, got {args.n_max}")
    if args.a_max < 2:
        raise ValueError(f"--a-max must be at least 2, got {args.a_max}")
    if args.jobs < 1:
        raise ValueError(f"--jobs must be at least 1, got {args.jobs}")
    if args.theorem == "all":
        if args.mutate is not None:
            raise ValueError("--mutate needs a single statement, not 'all'")
        theorems = list(TheoremId)
    else:
        theorems = [TheoremId(args.theorem)]

    bernoulli = None
    if any(t in _NEEDS_BERNOULLI for t in theorems):
        cache_path = args.cache_path or default_cache_path()
        bernoulli = get_or_build(cache_path, args.n_max)

    reports = []
    for theorem in theorems:
        report = run_grid(
            theorem,
            (1, args.n_max),
            (2, args.a_max),
            order=args.order,
            jobs=args.jobs,
            mutate=args.mutate,
            bernoulli=bernoulli,
        )
        reports.append(report)
        print(
            f"{theorem.value}: checked {report.checked} points, "
            f"{len(report.failures)} failures ({report.elapsed_s:.2f}s)",
            file=sys.stderr,
        )
        for f in report.failures:
            where = f"n={f.n}" if f.a is None else f"n={f.n} a={f.a}"
            print(
                f"FAIL {theorem.value} {where}: observed {f.observed}; "
                f"expected {f.expected}",
                file=sys.stderr,
            )

    if args.format == "csv":
        sys.stdout.write(render_reports_csv(reports))
    else:
        sys.stdout.write(render_reports_json(reports))
    return 1 if any(r.failures for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genocchi",
        description=(
            "Exact Bernoulli and generalized Genocchi numbers, and grid "
            "verification of their divisibility and congruence properties."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bern = sub.add_parser("bernoulli", help="emit B_0..B_n as exact rationals")
    p_bern.add_argument("--n-max", type=int, required=True, help="largest index to emit")
    p_bern.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bern.add_argument(
        "--cache-path",
        type=Path,
        default=None,
        help="Bernoulli cache file (default: $GENOCCHI_CACHE or ~/.cache/genocchi/bernoulli.json)",
    )
    p_bern.set_defaults(func=cmd_bernoulli)

    p_gen = sub.add_parser("genocchi", help="emit G_{n,a} for n = 0..n-max")
    p_gen.add_argument("--n-max", type=int, required=True, help="largest index to emit")
    p_gen.add_argument("--a", type=int, default=2, help="base (default 2, the classical numbers)")
    p_gen.add_argument("--order", type=int, default=None, help="series truncation override")
    p_gen.add_argument("--format", choices=("csv", "json"), default="csv")
    p_gen.set_defaults(func=cmd_genocchi)

    p_ver = sub.add_parser("verify", help="check statements over an (n, a) grid")
    p_ver.add_argument(
        "theorem",
        choices=[t.value for t in TheoremId] + ["all"],
        help="which statement to check",
    )
    p_ver.add_argument("--n-max", type=int, default=200, help="grid runs n = 1..n-max")
    p_ver.add_argument("--a-max", type=int, default=20, help="grid runs a = 2..a-max")
    p_ver.add_argument("--order", type=int, default=None, help="series truncation override")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes for a-columns")
    p_ver.add_argument(
        "--mutate",
        type=_mutate_pair,
        default=None,
        metavar="N,A",
        help="self-test: bump one table value and expect a failure",
    )
    p_ver.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ver.add_argument(
        "--cache-path",
        type=Path,
        default=None,
        help="Bernoulli cache file (default: $GENOCCHI_CACHE or ~/.cache/genocchi/bernoulli.json)",
    )
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CacheCorruptionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
