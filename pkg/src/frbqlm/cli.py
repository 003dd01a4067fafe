"""Command-line front end.

Subcommands::

    frbqlm solve        solve once, print a summary; --out persists the solution JSON
    frbqlm table        y(x) or y'(x) at a list of abscissas
    frbqlm convergence  (N, iteration) lattice of y or y' values
    frbqlm residual     |y'' - y^(3/2)/sqrt(x)| on a log-spaced probe
    frbqlm grid         the collocation abscissas

Every number is written as a decimal string at the working precision.
Exit status: 0 success, 2 singular collocation system, 3 inadmissible
iterate, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from .basis import DomainError, FrbBasis
from .bigreal import PrecisionContext, SingularMatrix, to_decimal_string, to_real
from .grid import build_grid, grid_to_csv
from .qlm import DEFAULT_ITERATIONS, NonFiniteCoefficient
from .thomas_fermi import (
    TABLE_ABSCISSAS,
    default_digits,
    energy,
    residual_profile,
    solution_at,
    solution_from_json,
    solution_to_json,
    solve,
)

log = logging.getLogger("frbqlm")

EXIT_SINGULAR = 2
EXIT_INADMISSIBLE = 3
EXIT_USAGE = 64

CONVERGENCE_X = ["0", "10", "100", "200", "300", "400", "500"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for SingularMatrix
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    N: int = 50
    alpha: Fraction = Fraction(1, 2)
    L: Fraction = Fraction(1)
    iterations: int = DEFAULT_ITERATIONS
    digits: int | None = None
    format: str = "csv"
    out: str | None = None
    warm_start: int | None = None
    clamp: bool = True

    def context(self, N: int | None = None) -> PrecisionContext:
        return PrecisionContext(self.digits or default_digits(self.N if N is None else N))


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _x_list(text: str) -> list[str]:
    if text.strip().lower() == "standard":
        return list(TABLE_ABSCISSAS)
    items = [t.strip() for t in text.split(",") if t.strip()]
    for t in items:
        try:
            Fraction(t)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad abscissa {t!r}") from exc
    return items


def _log_range(text: str) -> tuple[str, str]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected LO,HI")
    for t in parts:
        try:
            Fraction(t)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad bound {t!r}") from exc
    return parts[0], parts[1]


def _add_common(p: argparse.ArgumentParser, multi_n: bool = False):
    if multi_n:
        p.add_argument("--n", type=int, nargs="+", default=[50], help="truncation orders N")
    else:
        p.add_argument("--n", type=int, default=50, help="truncation order N (basis size N+1)")
    p.add_argument("--alpha", type=_fraction, default=Fraction(1, 2), help="map exponent (e.g. 1/2)")
    p.add_argument("--scale", type=_fraction, default=Fraction(1), help="map scale L")
    p.add_argument("--digits", type=int, default=None,
                   help="significant decimal digits (default: 50, raised with N)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--warm-start", type=int, default=None, metavar="N0",
                   help="start from an N0-member solution instead of y0 = 1")
    p.add_argument("--no-clamp", action="store_true",
                   help="fail on negative iterate values instead of clamping them to 0")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frbqlm", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve and print a summary")
    _add_common(p)
    p.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--trace", default=None, help="write the iteration trace as JSON here")

    p = sub.add_parser("table", help="tabulate y or y'")
    _add_common(p)
    p.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--which", choices=["y", "dy"], default="y")
    p.add_argument("--x-list", type=_x_list, default=list(TABLE_ABSCISSAS),
                   help="comma-separated abscissas, or 'standard' for the usual 52")
    p.add_argument("--solution", default=None, help="evaluate a persisted solution instead of solving")

    p = sub.add_parser("convergence", help="values across N and iteration counts")
    _add_common(p, multi_n=True)
    p.add_argument("--iterations", type=int, nargs="+", default=[15, 30, 45])
    p.add_argument("--which", choices=["y", "dy"], default="dy")
    p.add_argument("--x-list", type=_x_list, default=list(CONVERGENCE_X))

    p = sub.add_parser("residual", help="nonlinear residual on a log-spaced probe")
    _add_common(p, multi_n=True)
    p.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--probe-log-range", type=_log_range, default=("0.01", "100"), metavar="LO,HI")
    p.add_argument("--probe-count", type=int, default=100)

    p = sub.add_parser("grid", help="dump collocation abscissas")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--digits", type=int, default=None)
    p.add_argument("--out", default=None)
    return parser


def _config(args, N=None) -> RunConfig:
    return RunConfig(
        N=args.n if N is None else N,
        alpha=args.alpha,
        L=args.scale,
        iterations=getattr(args, "iterations", DEFAULT_ITERATIONS),
        digits=args.digits,
        format=args.format,
        out=args.out,
        warm_start=args.warm_start,
        clamp=not args.no_clamp,
    )


def _run_solve(cfg: RunConfig, iterations: int | None = None):
    ctx = cfg.context()
    t0 = time.perf_counter()
    sol, trace = solve(
        cfg.N, cfg.alpha, cfg.L, iterations or cfg.iterations, ctx,
        warm_start=cfg.warm_start, clamp=cfg.clamp,
    )
    log.info("N=%d solved in %.2f s", cfg.N, time.perf_counter() - t0)
    return ctx, sol, trace


def render_rows(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    cfg = _config(args)
    t0 = time.perf_counter()
    ctx, sol, trace = _run_solve(cfg)
    wall = time.perf_counter() - t0
    d = ctx.digits
    last = trace[-1]
    summary = [
        ["N", str(cfg.N)],
        ["alpha", str(cfg.alpha)],
        ["L", str(cfg.L)],
        ["digits", str(d)],
        ["iterations", str(last.r)],
        ["slope", to_decimal_string(last.slope, d)],
        ["energy_Z1", to_decimal_string(energy(1, last.slope, ctx), d)],
        ["delta_sup", to_decimal_string(last.delta_sup, d)],
        ["max_node_residual", to_decimal_string(max(r.max_residual for r in trace), d)],
        ["clamped", str(sum(r.clamped for r in trace))],
    ]
    if cfg.out:
        _emit(solution_to_json(sol), cfg.out)
    if args.trace:
        _emit(trace.to_json(d), args.trace)
    sys.stdout.write(render_rows(["key", "value"], summary, cfg.format))
    print(f"wall time: {wall:.3f} s", file=sys.stderr)
    return 0


def cmd_table(args) -> int:
    if args.solution:
        with open(args.solution, encoding="utf-8") as fh:
            sol = solution_from_json(fh.read())
        ctx = sol.ctx
    else:
        ctx, sol, _ = _run_solve(_config(args))
    order = 0 if args.which == "y" else 1
    rows = []
    with ctx.local():
        for text in args.x_list:
            x = to_real(text)
            if x < 0:
                raise UsageError(f"abscissa must be >= 0, got {text}")
            v = sol(x) if order == 0 else sol.derivative(x)
            rows.append([text, to_decimal_string(v, ctx.digits)])
    _emit(render_rows(["x", args.which], rows, args.format), args.out)
    return 0


def cmd_convergence(args) -> int:
    checkpoints = sorted(set(args.iterations))
    if checkpoints[0] < 1:
        raise UsageError("iteration counts must be >= 1")
    rows = []
    for N in args.n:
        cfg = _config(args, N)
        ctx, _, trace = _run_solve(cfg, checkpoints[-1])
        basis = FrbBasis(N, cfg.alpha, cfg.L)
        for r in checkpoints:
            sol = solution_at(trace, r, basis, ctx)
            with ctx.local():
                for text in args.x_list:
                    x = to_real(text)
                    v = sol(x) if args.which == "y" else sol.derivative(x)
                    rows.append([str(N), str(r), text, to_decimal_string(v, ctx.digits)])
    _emit(render_rows(["N", "iteration", "x", args.which], rows, args.format), args.out)
    return 0


def probe_points(lo: str, hi: str, count: int, ctx: PrecisionContext):
    """``count`` points spaced evenly in log10 between ``lo`` and ``hi``."""
    if count < 0:
        raise UsageError("probe count must be >= 0")
    with ctx.local():
        a, b = to_real(lo), to_real(hi)
        if a <= 0 or b <= 0:
            raise UsageError("probe range must be > 0")
        if count == 0:
            return []
        if count == 1:
            return [a]
        la, lb = gmpy2.log10(a), gmpy2.log10(b)
        inner = [gmpy2.exp10(la + (lb - la) * k / (count - 1)) for k in range(1, count - 1)]
        # endpoints exactly as given, not via exp10(log10(.))
        return [a, *inner, b]


def cmd_residual(args) -> int:
    lo, hi = args.probe_log_range
    rows = []
    # validate the probe before any solve
    probe_points(lo, hi, args.probe_count, PrecisionContext(50))
    if args.probe_count > 0:
        for N in args.n:
            cfg = _config(args, N)
            ctx, sol, _ = _run_solve(cfg)
            probe = probe_points(lo, hi, args.probe_count, ctx)
            for x, r in zip(probe, residual_profile(sol, probe)):
                rows.append([str(N), to_decimal_string(x, ctx.digits), to_decimal_string(r, ctx.digits)])
    _emit(render_rows(["N", "x", "residual"], rows, args.format), args.out)
    return 0


def cmd_grid(args) -> int:
    ctx = PrecisionContext(args.digits or default_digits(args.n))
    _emit(grid_to_csv(build_grid(args.n, ctx), ctx.digits), args.out)
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "table": cmd_table,
    "convergence": cmd_convergence,
    "residual": cmd_residual,
    "grid": cmd_grid,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except SingularMatrix as exc:
        print(f"frbqlm: singular collocation system: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except NonFiniteCoefficient as exc:
        print(f"frbqlm: inadmissible iterate: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (UsageError, DomainError, ValueError) as exc:
        print(f"frbqlm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
