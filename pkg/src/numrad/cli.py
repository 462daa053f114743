"""Command line entry point.

Exit codes: 0 when every proven bound holds, 1 when a violation is found,
2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .bounds import distance_to_scalars
from .config import DEFAULT_CONFIG
from .errors import NumradError
from .harness import BOUND_GROUPS, FAMILIES, EnsembleSpec, reproduce_examples, sweep, verify_chain, with_tolerance

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dims(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="numrad", description="Numerical radius bounds for dense complex matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="evaluate the bound chain on one matrix file")
    p.add_argument("--input", required=True, help='JSON matrix {"dim": n, "entries": [[re, im], ...]}')
    p.add_argument("--bounds", choices=BOUND_GROUPS, default="all")
    p.add_argument("--tol", type=float, default=None, help="margin tolerance for holds (default 1e-7)")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser(
        "sweep",
        help="verify the chain on a random ensemble",
        description=(
            "Families: " + ", ".join(FAMILIES) + ". 'hyponormal' is accepted as an alias of "
            "'normal': in finite dimensions every hyponormal matrix is normal."
        ),
    )
    p.add_argument("--family", required=True)
    p.add_argument("--dim", required=True, type=_dims, help="N or A..B")
    p.add_argument("--samples", required=True, type=int)
    p.add_argument("--seed", required=True, type=_u64)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--output")

    p = sub.add_parser("repro", help="recompute the published worked examples")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("dist", help="distance from a matrix to the scalar matrices")
    p.add_argument("--input", required=True)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            a = io.load_matrix(args.input)
            cfg = with_tolerance(DEFAULT_CONFIG, args.tol)
            rep = verify_chain(a, cfg, matrix_id=args.input, groups=(args.bounds,))
            text = io.bounds_to_csv(rep.bounds) if args.format == "csv" else io.dumps(rep) + "\n"
            _emit(text, args.output)
            return EXIT_VIOLATION if rep.violations else EXIT_OK

        if args.command == "sweep":
            specs = [EnsembleSpec(args.family, d, args.samples, args.seed, args.scale) for d in args.dim]
            report = sweep(specs)
            _emit(io.dumps(report) + "\n", args.output)
            return EXIT_VIOLATION if report["violations"] else EXIT_OK

        if args.command == "repro":
            rows = reproduce_examples()
            _emit(io.rows_to_csv(rows) if args.format == "csv" else io.dumps(rows) + "\n", None)
            return EXIT_OK

        if args.command == "dist":
            res = distance_to_scalars(io.load_matrix(args.input))
            lam = res.lambda_star
            _emit(f"lambda_star: {lam.real:.17g} {lam.imag:+.17g}i\ndistance: {res.distance:.17g}\n", None)
            return EXIT_OK
    except (NumradError, OSError, ValueError) as exc:
        print(f"numrad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
