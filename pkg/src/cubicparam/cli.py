"""Command line driver.

Exit status: 0 success, 2 verification failure, 3 invalid input,
4 parse error.  Errors are written to stderr as ``{"error": {...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .errors import CubicParamError, InputError
from .fforacle import MAX_PRIME, good_primes, oracle_report
from .parametrizer import parametrize, verify
from .polynomials import render
from .surface import LineTriple, cubic_space, smoothness_screen


def _emit(text: str, out: str | None) -> None:
    if out:
        io.write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_parametrize(args) -> int:
    prob = io.load_problem(args.file)
    plane = io.parse_plane(args.plane, prob.field) if args.plane else None
    result = parametrize(prob.param_input(plane), check=False)
    result.verification = verify(result)
    _emit(io.dump_json(io.result_to_dict(result, prob.field)), args.out)
    return 0 if result.verification["ok"] else 2


def cmd_verify(args) -> int:
    prob = io.load_problem(args.surface_file)
    if prob.surface is None:
        raise InputError("surface file has no surface")
    with open(args.param_file, encoding="utf-8") as fh:
        data = json.load(fh)
    result = io.result_from_dict(data, prob.surface)
    report = verify(result, prob.surface)
    sys.stdout.write(io.dump_json(io._jsonable(report)))
    return 0 if report["ok"] else 2


def cmd_cubic_space(args) -> int:
    prob = io.load_problem(args.file)
    triple = LineTriple(prob.line("l1"), prob.line("l2"), prob.line("m"))
    V = cubic_space(triple)
    out = {"dimension": V.dimension, "rank": V.rank, "field": V.field,
           "basis": [render(b.form) for b in V.basis]}
    sys.stdout.write(io.dump_json(out))
    return 0


def cmd_lines_ff(args) -> int:
    prob = io.load_problem(args.file)
    if prob.surface is None:
        raise InputError("problem file has no surface")
    report = oracle_report(prob.surface, prob.lines, args.prime, args.root)
    if args.json:
        sys.stdout.write(io.dump_json(report))
    else:
        parts = [f"lines: {report['lines']}"]
        for pair, n in report["transversals"].items():
            parts.append(f"transversals({pair}): {n}")
        sys.stdout.write(", ".join(parts) + "\n")
    return 0


def cmd_sample(args) -> int:
    with open(args.param_file, encoding="utf-8") as fh:
        data = json.load(fh)
    result = io.result_from_dict(data)
    rows = io.sample_grid(result, args.grid)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            io.write_samples_csv(rows, fh)
    else:
        io.write_samples_csv(rows, sys.stdout)
    return 0


def cmd_screen(args) -> int:
    prob = io.load_problem(args.file)
    if prob.surface is None:
        raise InputError("problem file has no surface")
    primes = args.primes or prob.primes or good_primes(prob.surface, count=2)
    report = smoothness_screen(prob.surface, primes)
    sys.stdout.write(io.dump_json(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicparam",
                                 description="Exact rational parametrization of cubic surfaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parametrize", help="build and verify a parametrization")
    p.add_argument("file")
    p.add_argument("--plane", help="linear form in x0..x3 overriding the file's plane")
    p.add_argument("--out", help="write the result here instead of stdout")
    p.set_defaults(func=cmd_parametrize)

    p = sub.add_parser("verify", help="re-check a saved parametrization")
    p.add_argument("param_file")
    p.add_argument("surface_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cubic-space", help="cubics containing l1, l2 and m")
    p.add_argument("file")
    p.set_defaults(func=cmd_cubic_space)

    p = sub.add_parser("lines-ff", help="count lines of the surface over F_p")
    p.add_argument("file")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--root", type=int, default=None,
                   help="image of w mod p (default: smallest root)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lines_ff)

    p = sub.add_parser("sample", help="evaluate a parametrization on a grid")
    p.add_argument("param_file")
    p.add_argument("--grid", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("screen", help="heuristic singular point search mod p")
    p.add_argument("file")
    p.add_argument("--primes", type=int, nargs="*")
    p.set_defaults(func=cmd_screen)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "prime", None) is not None and args.prime > MAX_PRIME:
        return _fail(InputError(f"prime must be at most {MAX_PRIME}"))
    try:
        return args.func(args)
    except CubicParamError as exc:
        return _fail(exc)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(InputError(str(exc)))


def _fail(exc: CubicParamError) -> int:
    err = exc.to_dict()
    report = getattr(exc, "report", None)
    if report is not None:
        err["report"] = io._jsonable(report)
    sys.stderr.write(json.dumps({"error": err}, sort_keys=True) + "\n")
    return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
