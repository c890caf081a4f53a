"""Command-line interface.

Every subcommand prints one JSON object ``{"command", "inputs", "output",
"elapsed_ms"}`` (or CSV with ``--csv`` where offered). Exit status is 0 on
success, 2 on a domain error and 3 on a parse or argument error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import Any, Optional, Sequence

import numpy as np

from . import content_ratio as cr
from . import haar_mc, moments
from .errors import DomainError
from .gaussian import parse_number, parse_vector
from .partitions import as_partition
from .symgroup import orbit_stabilizer, parse_cycles

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 2, 3


class ParseError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _round(value: Any) -> Any:
    """Round every float to 12 significant digits, recursively."""
    if isinstance(value, float):
        return float(f"{value:.12g}") if math.isfinite(value) else value
    if isinstance(value, complex):
        return [_round(value.real), _round(value.imag)]
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def _complex_json(z: complex) -> Any:
    z = complex(z)
    return z.real if z.imag == 0 else [z.real, z.imag]


def _vector(text: str, exact: bool) -> tuple:
    values = parse_vector(text)
    return values if exact else tuple(complex(v) if v.im else float(v.re) for v in values)


def _check_g(args, x: Sequence) -> None:
    if getattr(args, "g", None) is not None and args.g != len(x):
        raise ParseError(f"--g {args.g} does not match {len(x)} coordinates in --x")


def _load_matrices(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read matrix tuple from {path}: {exc}") from exc
    try:
        return moments.matrix_tuple_from_json(payload)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _partition(text: str) -> tuple[int, ...]:
    try:
        return as_partition(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ParseError(f"malformed partition {text!r}: {exc}") from exc


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"malformed integer list {text!r}") from exc


def cmd_exact_scalar(args) -> dict:
    x = _vector(args.x, args.exact)
    y = _vector(args.y, args.exact) if args.y else x
    _check_g(args, x)
    return moments.exact_scalar_moment(args.d, x, y, method=args.method).to_json()


def cmd_exact_moment(args) -> dict:
    x = _vector(args.x, args.exact)
    _check_g(args, x)
    return moments.exact_identity_moment(
        args.d, args.k, x, n_max=args.n_max, tail_scale=args.tail_scale
    ).to_json()


def cmd_limit(args) -> dict:
    if args.matrices:
        xs = _load_matrices(args.matrices)
        ys = _load_matrices(args.matrices_y) if args.matrices_y else xs
        return {"float": _complex_json(moments.matrix_limit(xs, ys))}
    if not args.x:
        raise ParseError("limit needs --x or --matrices")
    x = _vector(args.x, False)
    y = _vector(args.y, False) if args.y else x
    return {"float": _complex_json(moments.scalar_limit(x, y))}


def _rows(text: str) -> list[tuple]:
    return [_vector(part, False) for part in text.split(";")]


def cmd_diagonal_limit(args) -> dict:
    xs = _rows(args.xs)
    ys = _rows(args.ys) if args.ys else xs
    return {"float": _complex_json(moments.diagonal_limit(xs, ys))}


def _pencil_tuple(args, vector: Optional[str], path: Optional[str]) -> np.ndarray:
    if path:
        return _load_matrices(path)
    if not vector:
        raise ParseError("need scalar coordinates or a matrix file")
    x = _vector(vector, False)
    _check_g(args, x)
    return np.array([complex(v) * np.eye(args.k) for v in x])


def cmd_mc(args) -> dict:
    xs = _pencil_tuple(args, args.x, args.matrices)
    ys = _pencil_tuple(args, args.y, args.matrices_y) if (args.y or args.matrices_y) else xs
    est = haar_mc.estimate_moment(
        xs, ys, args.d, args.samples, args.seed, chunk=args.chunk, threads=args.threads
    )
    return est.to_json()


def cmd_orthogonality(args) -> dict:
    alpha = _ints(args.alpha)
    beta = _ints(args.beta) if args.beta else alpha
    n = sum(alpha)
    try:
        sigma = parse_cycles(args.sigma, n)
        tau = parse_cycles(args.tau, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    est = haar_mc.estimate_trace_pair(
        sigma, tau, alpha, args.d, args.samples, args.seed,
        beta=beta, chunk=args.chunk, threads=args.threads,
    )
    if beta == alpha:
        orbit, stab = orbit_stabilizer(sigma, alpha)
        predicted = stab if tau in orbit else 0
    else:
        predicted = 0
    out = est.to_json()
    out["limit"] = predicted
    out["z_score"] = abs(est.mean - predicted) / est.stderr if est.stderr else 0.0
    return out


def cmd_verify_bounds(args) -> Any:
    if args.g and args.g > 2:
        reports = cr.verify_chain_bound(args.n, args.k, args.d, args.g)
        if args.csv:
            return "\n".join([cr.CHAIN_CSV_HEADER] + [r.csv_row() for r in reports])
    else:
        reports = cr.verify_bound(args.n, args.k, args.d)
        if args.csv:
            return "\n".join([cr.CSV_HEADER] + [r.csv_row() for r in reports])
    worst = max(reports, key=lambda r: r.ratio, default=None)
    return {
        "checked": len(reports),
        "all_ok": all(r.satisfies for r in reports),
        "bound": worst.bound if worst else None,
        "max_ratio": str(worst.ratio) if worst else None,
    }


def _report_json(r: cr.RatioReport) -> dict:
    return {
        "lambda": list(r.lam),
        "mu": list(r.mu),
        "nu": list(r.nu),
        "d": r.d,
        "ratio": str(r.ratio),
        "bound": r.bound,
        "satisfies": r.satisfies,
        "is_special_form": r.is_special_form,
    }


def cmd_max_ratio(args) -> dict:
    lam = _partition(args.lam)
    best = cr.max_ratio_search(lam, args.d, k=args.k, a1=args.a1)
    ties = cr.maximizers(lam, args.d, k=args.k, a1=args.a1)
    out = _report_json(best)
    out["maximizers"] = [[list(r.mu), list(r.nu)] for r in ties]
    return out


def cmd_conic(args) -> Any:
    x0 = parse_number(args.x0)
    x = parse_vector(args.x)
    c0, c1 = moments.conic_constants(complex(x0), [complex(v) for v in x], args.k)
    scaled = [v / x0 for v in x]
    rows = []
    for d in _ints(args.d_values):
        if args.k == 1:
            value = moments.exact_scalar_moment(d, scaled, scaled)
        else:
            n_max = args.n_max
            if n_max is None and d > moments.FULL_SUM_MAX_D:
                n_max = moments.choose_n_max(d, args.k, [complex(v) for v in scaled])
            value = moments.exact_identity_moment(d, args.k, scaled, n_max=n_max)
        reduced = math.log(value.real)
        rows.append({
            "d": d,
            "log_moment": d * args.k * c0 + reduced,
            "reduced": reduced,
            "target": args.k**2 * c1,
            "gap": reduced - args.k**2 * c1,
            "trunc_bound": value.truncation_error_bound,
        })
    if args.csv:
        lines = ["d;log_moment;reduced;target;gap;trunc_bound"]
        lines += [
            ";".join(
                f"{v:.12g}" if isinstance(v, float) else ("" if v is None else str(v))
                for v in row.values()
            )
            for row in rows
        ]
        return "\n".join(lines)
    return {"c0": c0, "c1": c1, "rows": rows}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unitary-pencils", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact-scalar", help="exact scalar-coefficient moment at size d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.add_argument("--exact", action="store_true", help="report the exact rational value")
    p.add_argument("--method", choices=["series", "direct"], default="series")
    p.set_defaults(func=cmd_exact_scalar)

    p = sub.add_parser("exact-moment", help="exact 2k-th absolute moment with identity-multiple coefficients")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--tail-scale", type=float, default=1.0)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_exact_moment)

    p = sub.add_parser("limit", help="large-d limit for scalar or matrix coefficients")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--matrices")
    p.add_argument("--matrices-y")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("diagonal-limit", help="product kernel for diagonal coefficients")
    p.add_argument("--xs", required=True, help="rows separated by ';', coordinates by ','")
    p.add_argument("--ys")
    p.set_defaults(func=cmd_diagonal_limit)

    def add_mc_flags(p):
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--samples", type=int, default=100_000)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--chunk", type=int, default=haar_mc.DEFAULT_CHUNK)
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("mc", help="Monte Carlo pencil moment")
    add_mc_flags(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--g", type=int)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--matrices")
    p.add_argument("--matrices-y")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("orthogonality", help="Monte Carlo trace-monomial pair")
    add_mc_flags(p)
    p.add_argument("--sigma", required=True, help='cycle notation, e.g. "(1 2)"')
    p.add_argument("--tau", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta")
    p.set_defaults(func=cmd_orthogonality)

    p = sub.add_parser("verify-bounds", help="exhaustive content-ratio bound check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, default=2, help="g > 2 checks nested chains")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("max-ratio", help="exhaustive maximum content ratio for one partition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--a1", type=int)
    p.set_defaults(func=cmd_max_ratio)

    p = sub.add_parser("conic", help="sweep d for a conic pencil")
    p.add_argument("--x0", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--d-values", default="10,20,50,100")
    p.add_argument("--n-max", type=int)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_conic)
    return parser


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "command")}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, execute the subcommand and print its result; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        payload = args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return EXIT_DOMAIN
    except (ParseError, ValueError) as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    if isinstance(payload, str):
        print(payload, file=out)
        return EXIT_OK
    result = {
        "command": args.command,
        "inputs": _inputs(args),
        "output": _round(payload),
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
    print(json.dumps(result), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
