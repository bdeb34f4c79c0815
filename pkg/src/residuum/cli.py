"""Command-line front end: ``residuum {analyze,route,render,catalog,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

from . import metrics
from .designgraph import build_design, route, string_count
from .metrics import net_length
from .numtheory import (
    DesignParams,
    doubled_subgroup,
    enumerate_H,
    gcd,
    is_prime,
    is_primitive_root,
)
from .oracle import brute_H, brute_gross, brute_net
from .render import RenderStyle, to_svg

CSV_HEADER = [
    "n", "a", "r", "gross", "net", "approx", "m", "generator", "g1", "g2",
    "doubled_count", "degenerate_count", "string_count", "is_prime", "is_primitive_root",
]
_CSV_FIELD = {"is_prime": "is_prime_n", "is_primitive_root": "is_primitive_root_a"}
SIG_DIGITS = 9
THREADS_ENV = "RESIDUUM_THREADS"
# grids smaller than this are not worth a process pool
_PARALLEL_MIN_CELLS = 2000


@dataclass(frozen=True)
class AnalysisRecord:
    n: int
    a: int
    r: float
    gross: float
    net: float
    approx: float
    m: int
    generator: int
    g1: int
    g2: int
    doubled_count: int
    degenerate_count: int
    string_count: int
    is_prime_n: bool
    is_primitive_root_a: bool | None

    def serializable(self) -> dict:
        out = {}
        for key, value in asdict(self).items():
            out[key] = _round(value) if isinstance(value, float) else value
        return out


def _round(x: float) -> float:
    return float(f"{x:.{SIG_DIGITS}g}")


def analyze(params: DesignParams) -> AnalysisRecord:
    report = net_length(params)
    info = doubled_subgroup(params)
    prime = is_prime(params.n)
    primitive = None
    if prime and gcd(params.a % params.n, params.n) == 1:
        primitive = is_primitive_root(params.a, params.n)
    return AnalysisRecord(
        n=params.n,
        a=params.a,
        r=params.r,
        gross=report.gross,
        net=report.net,
        approx=report.approx,
        m=info.m,
        generator=info.generator,
        g1=info.g1,
        g2=info.g2,
        doubled_count=report.doubled_segment_count,
        degenerate_count=report.degenerate_count,
        string_count=string_count(build_design(params)),
        is_prime_n=prime,
        is_primitive_root_a=primitive,
    )


def record_to_csv_row(record: AnalysisRecord) -> list[str]:
    data = record.serializable()
    row = []
    for col in CSV_HEADER:
        value = data[_CSV_FIELD.get(col, col)]
        if isinstance(value, float):
            row.append(f"{value:.{SIG_DIGITS}g}")
        elif value is None:
            row.append("")
        else:
            row.append(str(value).lower() if isinstance(value, bool) else str(value))
    return row


def record_from_csv_row(row: dict[str, str]) -> AnalysisRecord:
    """Inverse of :func:`record_to_csv_row` for a ``csv.DictReader`` row."""
    kwargs = {}
    for f in fields(AnalysisRecord):
        col = next((c for c, name in _CSV_FIELD.items() if name == f.name), f.name)
        raw = row[col]
        if f.name in ("r", "gross", "net", "approx"):
            kwargs[f.name] = float(raw)
        elif f.name in ("is_prime_n", "is_primitive_root_a"):
            kwargs[f.name] = None if raw == "" else raw == "true"
        else:
            kwargs[f.name] = int(raw)
    return AnalysisRecord(**kwargs)


def format_text(record: AnalysisRecord) -> str:
    data = record.serializable()
    width = max(len(k) for k in data)
    lines = []
    for key, value in data.items():
        if isinstance(value, float):
            value = f"{value:.{SIG_DIGITS}g}"
        elif value is None:
            value = "n/a"
        lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        requested = int(raw)
    except ValueError:
        raise SystemExit(f"error: {THREADS_ENV} must be an integer, got {raw!r}")
    if requested < 0:
        raise SystemExit(f"error: {THREADS_ENV} must be >= 0")
    return requested or (os.cpu_count() or 1)


def _grid_map(func, cells: list, workers: int | None = None) -> list:
    """``list(map(func, cells))``, spread over processes for large grids; order is kept."""
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(cells) < _PARALLEL_MIN_CELLS:
        return [func(c) for c in cells]
    chunk = max(1, len(cells) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, cells, chunksize=chunk))


def _analyze_cell(cell: tuple[int, int, float]) -> AnalysisRecord:
    return analyze(DesignParams(*cell))


def catalog(n_min: int, n_max: int, a_min: int, a_max: int, r: float = 1.0,
            primes_only: bool = False) -> list[AnalysisRecord]:
    if n_min < 1 or a_min < 2 or n_max < n_min or a_max < a_min:
        raise ValueError("catalog ranges must be nonempty with n >= 1 and a >= 2")
    cells = [
        (n, a, r)
        for n in range(n_min, n_max + 1)
        if not primes_only or is_prime(n)
        for a in range(a_min, a_max + 1)
    ]
    return _grid_map(_analyze_cell, cells)


def _parse_where(clauses: list[str]) -> list[tuple[str, str]]:
    out = []
    for clause in clauses:
        key, sep, value = clause.partition("=")
        if not sep or key not in CSV_HEADER:
            raise ValueError(f"bad --where clause {clause!r}; expected COLUMN=VALUE")
        out.append((key, value))
    return out


def write_catalog(records: list[AnalysisRecord], stream, where: list[tuple[str, str]] = ()) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    written = 0
    for rec in records:
        row = record_to_csv_row(rec)
        if all(row[CSV_HEADER.index(k)] == v for k, v in where):
            writer.writerow(row)
            written += 1
    return written


def _verify_cell(cell: tuple[int, int, float]) -> tuple[int, int, float, float, bool]:
    params = DesignParams(*cell)
    report = net_length(params)
    return (
        params.n,
        params.a,
        abs(report.gross - brute_gross(params)),
        abs(report.net - brute_net(params)),
        enumerate_H(params) == brute_H(params),
    )


@dataclass
class VerifyResult:
    cells: int
    max_gross_error: float
    max_net_error: float
    h_mismatches: int
    failures: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify(n_max: int, a_factor_max: int = 2, r: float = 1.0, tol: float = 1e-9,
           fault: float = 0.0) -> VerifyResult:
    """Compare the closed forms with the brute-force oracle over a grid.

    Covers ``1 <= n <= n_max`` and ``2 <= a <= max(2, a_factor_max * n)``;
    a cell fails when a length differs by more than ``tol * n * r`` or the
    two H enumerations disagree.
    """
    if n_max < 1 or a_factor_max < 1:
        raise ValueError("n_max and a_factor_max must be >= 1")
    cells = [(n, a, r) for n in range(1, n_max + 1)
             for a in range(2, max(2, a_factor_max * n) + 1)]
    if fault:
        with metrics._perturbed_cot(fault):
            results = [_verify_cell(c) for c in cells]
    else:
        results = _grid_map(_verify_cell, cells)
    failures = []
    max_g = max_n = 0.0
    mismatches = 0
    for n, a, eg, en, h_ok in results:
        max_g, max_n = max(max_g, eg), max(max_n, en)
        mismatches += not h_ok
        bound = tol * n * r
        if eg > bound or en > bound or not h_ok:
            failures.append((n, a))
    return VerifyResult(len(cells), max_g, max_n, mismatches, failures)


def _params(args) -> DesignParams:
    try:
        return DesignParams(args.n, args.a, getattr(args, "r", 1.0))
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def cmd_analyze(args) -> int:
    record = analyze(_params(args))
    if args.format == "json":
        print(json.dumps(record.serializable(), indent=2))
    elif args.format == "csv":
        write_catalog([record], sys.stdout)
    else:
        print(format_text(record))
    return 0


def cmd_route(args) -> int:
    params = _params(args)
    plan = route(build_design(params), params.r)
    for s in plan.strings:
        print(",".join(map(str, s)))
    return 0


def cmd_render(args) -> int:
    params = _params(args)
    style = RenderStyle(
        canvas_size=args.size,
        margin=args.margin,
        stroke_width=args.stroke_width,
        highlight_doubled=args.highlight_doubled,
        show_labels=args.labels,
        label_every=args.label_every,
    )
    try:
        svg = to_svg(build_design(params), style)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    path = args.out or f"design_n{params.n}_a{params.a}.svg"
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


def cmd_catalog(args) -> int:
    a_max = args.a_max if args.a_max is not None else args.a_min
    try:
        where = _parse_where(args.where)
        records = catalog(args.n_min, args.n_max, args.a_min, a_max, args.r, args.primes_only)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    if args.out:
        buf = io.StringIO()
        write_catalog(records, buf, where)
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(args.out)
    else:
        write_catalog(records, sys.stdout, where)
    return 0


def cmd_verify(args) -> int:
    try:
        result = verify(args.n_max, args.a_factor_max, args.r, fault=args.inject_fault)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    print(f"cells checked      {result.cells}")
    print(f"max |gross error|  {result.max_gross_error:.3e}")
    print(f"max |net error|    {result.max_net_error:.3e}")
    print(f"H mismatches       {result.h_mismatches}")
    if result.passed:
        print("PASS")
        return 0
    print(f"FAIL: {len(result.failures)} cells out of tolerance; first failures:")
    for n, a in result.failures[:10]:
        print(f"  n={n} a={a}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residuum",
        description="Analyze string-art residue designs (nail k joined to a*k mod n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def design_args(p, with_r=True):
        p.add_argument("--n", type=int, required=True, help="number of nails")
        p.add_argument("--a", type=int, required=True, help="multiplicative factor (>= 2)")
        if with_r:
            p.add_argument("--r", type=float, default=1.0, help="circle radius (default 1)")

    p = sub.add_parser("analyze", help="lengths, subgroup structure and string count")
    design_args(p)
    p.add_argument("--format", choices=["json", "text", "csv"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("route", help="nail sequence for every string, one per line")
    design_args(p, with_r=False)
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("render", help="write the design as SVG")
    design_args(p, with_r=False)
    p.add_argument("-o", "--out", help="output path (default design_n{n}_a{a}.svg)")
    p.add_argument("--size", type=float, default=600.0)
    p.add_argument("--margin", type=float, default=24.0)
    p.add_argument("--stroke-width", type=float, default=0.6)
    p.add_argument("--highlight-doubled", action="store_true",
                   help="mark doubled segments and degenerate nails")
    p.add_argument("--labels", action="store_true", help="number the nails")
    p.add_argument("--label-every", type=int, default=1)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("catalog", help="CSV table over a grid of (n, a)")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--a-min", type=int, default=2)
    p.add_argument("--a-max", type=int, help="default: same as --a-min")
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--primes-only", action="store_true", help="only prime n")
    p.add_argument("--where", action="append", default=[], metavar="COLUMN=VALUE",
                   help="keep rows whose CSV cell equals VALUE (repeatable)")
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="check closed forms against brute force")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--a-factor-max", type=int, default=2,
                   help="a ranges over 2..factor*n (default 2)")
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--inject-fault", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
