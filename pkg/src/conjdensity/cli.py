"""Command-line front end.

Subcommands: enumerate, density, integrate, verify, lattice, oracle,
reducible.  JSON goes to stdout or --out; verify also writes CSV via --csv;
lattice emits CSV.  Exit codes: 0 success, 2 usage error, 3 numerical
failure.  Worker count comes from --threads or CONJ_DENSITY_THREADS.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .boxes import Box
from .counting import EnumerationTask, count_conjugate_tuples, reducible_breakdown
from .density import (METHOD_BAND, METHOD_MC, METHOD_TOP, DensityEstimate,
                      band_density, density_mc, integrate_density, top_order_density)
from .lattice import DilatableRegion, asymptotic_table
from .parallel import resolve_workers
from .randpoly import expected_tuple_count, tuple_count_distribution
from .report import build_verification_report


class UsageError(Exception):
    pass


def _parse_box(text: str, k: int) -> Box:
    try:
        box = Box.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if box.dimension != k:
        raise UsageError(f"box has {box.dimension} intervals, expected {k}")
    return box


def _parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(piece.strip()) for piece in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed point: {text!r}") from exc


def _parse_q_list(text: str) -> list[int]:
    try:
        qs = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed Q list: {text!r}") from exc
    if not qs:
        raise UsageError("empty Q list")
    return qs


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_lines(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args) -> None:
    workers = resolve_workers(args.threads)
    box = _parse_box(args.box, args.k) if args.box else None
    try:
        task = EnumerationTask(args.n, args.Q, args.k, box)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = count_conjugate_tuples(task, workers)
    _emit(result.to_json(), args.out)


def _cmd_density(args) -> None:
    workers = resolve_workers(args.threads)
    point = _parse_point(args.point)
    k = len(point)
    if not 1 <= k <= args.n:
        raise UsageError("need 1 <= len(point) <= n")
    method = args.method
    if method == "auto":
        if k == args.n:
            method = "closed"
        elif k == 1:
            try:
                band_density(args.n, point[0])
                method = "closed"
            except ValueError:
                method = "mc"
        else:
            method = "mc"
    if method == "closed":
        if k == args.n:
            est = DensityEstimate(float(top_order_density(args.n, point)), 0.0, 1, METHOD_TOP)
        elif k == 1:
            try:
                est = DensityEstimate(float(band_density(args.n, point[0])), 0.0, 1, METHOD_BAND)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            raise UsageError("no closed form for 1 < k < n; use --method mc")
    else:
        est = density_mc(args.n, [float(v) for v in point], args.samples,
                         args.seed, workers)
    _emit({
        "x": [float(v) for v in point],
        "n": args.n,
        "k": k,
        "method": est.method,
        "value": est.value,
        "std_error": est.std_error,
        "samples": est.samples,
        "seed": args.seed,
    }, args.out)


def _cmd_integrate(args) -> None:
    workers = resolve_workers(args.threads)
    box = _parse_box(args.box, args.k)
    est = integrate_density(args.n, args.k, box, args.samples, args.seed, workers)
    _emit({
        "box": box.as_strings(),
        "n": args.n,
        "k": args.k,
        "method": est.method,
        "value": est.value,
        "std_error": est.std_error,
        "samples": est.samples,
        "seed": args.seed,
    }, args.out)


def _cmd_verify(args) -> None:
    workers = resolve_workers(args.threads)
    box = _parse_box(args.box, args.k)
    q_list = _parse_q_list(args.Q_list)
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    report = build_verification_report(args.n, args.k, box, q_list,
                                       args.samples, args.seed, workers)
    _emit(report.to_json(), args.out)
    if args.csv:
        _emit_lines(report.csv_lines(), args.csv)


def _cmd_lattice(args) -> None:
    workers = resolve_workers(args.threads)
    if args.region == "cube":
        region = DilatableRegion.cube(args.d)
    elif args.region == "ball":
        try:
            region = DilatableRegion.ball(args.d, Fraction(args.radius))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError(f"unknown region {args.region!r}")
    if args.Q is None and args.Q_list is None:
        raise UsageError("lattice needs --Q or --Q-list")
    q_list = _parse_q_list(args.Q_list) if args.Q_list else [args.Q]
    if any(q < 1 for q in q_list):
        raise UsageError("Q values must be >= 1")
    rows = asymptotic_table(region, sorted(q_list), workers)
    lines = ["Q,count,prediction,ratio,residual"]
    for r in rows:
        lines.append(f"{r.q},{r.count},{r.prediction!r},{r.ratio!r},{r.residual!r}")
    _emit_lines(lines, args.out)


def _cmd_oracle(args) -> None:
    workers = resolve_workers(args.threads)
    box = _parse_box(args.box, args.k) if args.box else None
    est = expected_tuple_count(args.n, args.k, box, args.trials, args.seed, workers)
    dist = tuple_count_distribution(args.n, args.k, box, args.trials, args.seed, workers)
    _emit({
        "n": args.n,
        "k": args.k,
        "box": box.as_strings() if box else None,
        "trials": args.trials,
        "mean": est.value,
        "std_error": est.std_error,
        "distribution": {str(m): p for m, p in sorted(dist.items())},
    }, args.out)


def _cmd_reducible(args) -> None:
    workers = resolve_workers(args.threads)
    if args.n < 1 or args.Q < 1:
        raise UsageError("need n >= 1 and Q >= 1")
    breakdown = reducible_breakdown(args.n, args.Q, workers)
    _emit({
        "n": args.n,
        "Q": args.Q,
        "reducible": breakdown["reducible"],
        "imprimitive_irreducible": breakdown["imprimitive_irreducible"],
    }, args.out)


def _add_common(sp, *, threads=True, out=True):
    if threads:
        sp.add_argument("--threads", type=int, default=None,
                        help="worker cap (results do not depend on it)")
    if out:
        sp.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="conjdensity",
        description="Exact counts and limiting densities of ordered tuples "
                    "of real conjugate algebraic numbers.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="exact tuple count over a height cube")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--Q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--box", default=None,
                    help='"a1,b1;a2,b2;..." (omitted: full-space proxy box)')
    _add_common(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("density", help="density at a point")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None, help="inferred from --point")
    sp.add_argument("--point", required=True, help='"x1,x2,..."')
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--method", choices=["auto", "mc", "closed"], default="auto")
    _add_common(sp)
    sp.set_defaults(func=_cmd_density)

    sp = sub.add_parser("integrate", help="density integral over a box")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--box", required=True)
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=1)
    _add_common(sp)
    sp.set_defaults(func=_cmd_integrate)

    sp = sub.add_parser("verify", help="exact counts vs predictions over a Q grid")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--box", required=True)
    sp.add_argument("--Q-list", dest="Q_list", required=True, help='"10,20,..."')
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--csv", default=None, help="also write the table as CSV")
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("lattice", help="primitive lattice point density table")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--region", choices=["cube", "ball"], default="cube")
    sp.add_argument("--radius", default="1", help="ball radius (rational)")
    sp.add_argument("--Q", type=int, default=None)
    sp.add_argument("--Q-list", dest="Q_list", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_lattice)

    sp = sub.add_parser("oracle", help="random-polynomial tuple-count oracle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--box", default=None)
    sp.add_argument("--trials", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=1)
    _add_common(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("reducible", help="reducible polynomial count")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--Q", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_reducible)

    return ap


#: flags whose values may start with a minus sign; merged to flag=value so
#: argparse does not mistake them for options
_VALUE_FLAGS = {"--box", "--point", "--Q-list", "--radius"}


def _normalize_argv(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    ap = build_parser()
    args = ap.parse_args(_normalize_argv(list(argv)))
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # numerical / internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
