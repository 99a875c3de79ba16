"""Command-line entry point: ``grover-support <group> <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 parse or precondition error. Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import graphcore, lineqw, spectral, structure, walkops

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text, out: Optional[str]) -> None:
    if out:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(out, mode) as fh:
            fh.write(text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_graph_info(args) -> int:
    g = graphcore.load_graph(args.input)
    rep = graphcore.analyze(g)
    _emit(_dump(rep.to_json()) if args.format == "json" else rep.to_text(), args.out)
    return EXIT_OK


def cmd_walk_phases(args) -> int:
    grid = lineqw.pattern(args.k, args.steps)
    if args.format == "ascii":
        data = grid.to_ascii()
    elif args.format == "csv":
        data = grid.to_csv()
    else:
        data = grid.to_pgm()
    _emit(data, args.out)
    return EXIT_OK


def cmd_structure_formula(args) -> int:
    f = structure.coefficients(args.k, args.n)
    text = structure.pretty_print(f, args.format)
    _emit(text + "\n", args.out)
    return EXIT_OK


def cmd_structure_verify(args) -> int:
    g = graphcore.load_graph(args.input)
    rep = structure.verify(g, args.n)
    payload = _dump(rep.to_json_obj())
    if args.report:
        Path(args.report).write_text(payload)
    status = "pass" if rep.passed else f"FAIL ({len(rep.mismatches)} mismatches)"
    sys.stdout.write(f"S(U^{rep.n}) = {rep.formula}: {status}\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_spectral_curves(args) -> int:
    pts = spectral.curve_samples(args.k, args.n, Fraction(args.mu_min), Fraction(args.mu_max), args.samples)
    _emit(spectral.curves_csv(pts), args.out)
    return EXIT_OK


def cmd_spectral_lift(args) -> int:
    g = graphcore.load_graph(args.input)
    rep = spectral.lift_verify(g, args.n, args.tol)
    _emit(_dump(rep.to_json_obj()), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_spectral_appendix(args) -> int:
    pair = spectral.appendix_polys(args.k, args.n)
    _emit(_dump(pair.to_json_obj()), args.out)
    return EXIT_OK


def cmd_spectral_nondiag(args) -> int:
    g = graphcore.load_graph(args.input)
    flags = spectral.nondiag_predict(g, args.n, args.tol)
    obj = {"n": args.n, "flags": [{"mu": f.mu, "exact": f.exact, "disc": f.disc_value} for f in flags]}
    _emit(_dump(obj), args.out)
    return EXIT_OK


def cmd_zeta(args) -> int:
    g = graphcore.load_graph(args.input)
    coeffs = walkops.zeta_poly(g, args.n)
    _emit(_dump({"n": args.n, "coefficients": coeffs}), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grover-support", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    graph = groups.add_parser("graph").add_subparsers(dest="command", required=True)
    s = graph.add_parser("info", help="girth, degrees and diameter")
    s.add_argument("--in", dest="input", required=True, help="file, builtin:NAME, lcf:NOTATION or g6:STRING")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_graph_info)

    walk = groups.add_parser("walk").add_subparsers(dest="command", required=True)
    s = walk.add_parser("phases", help="phase pattern of the discriminant walk")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--format", choices=["ascii", "csv", "pgm"], default="ascii")
    s.add_argument("--out")
    s.set_defaults(func=cmd_walk_phases)

    st = groups.add_parser("structure").add_subparsers(dest="command", required=True)
    s = st.add_parser("formula", help="coefficients of S(U^n) for degree k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_structure_formula)
    s = st.add_parser("verify", help="brute-force check of the formula on a graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--report")
    s.set_defaults(func=cmd_structure_verify)

    sp = groups.add_parser("spectral").add_subparsers(dest="command", required=True)
    s = sp.add_parser("curves", help="sampled real/imaginary parts of lifted eigenvalues")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mu-min", required=True)
    s.add_argument("--mu-max", required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectral_curves)
    s = sp.add_parser("lift", help="check lifted adjacency eigenvalues against char(S(U^n))")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectral_lift)
    s = sp.add_parser("appendix", help="Q_n and P_n polynomials at fixed k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectral_appendix)
    s = sp.add_parser("nondiag", help="predict non-diagonalizability of S(U^n)")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectral_nondiag)

    s = groups.add_parser("zeta", help="coefficients of det(I - u S(U^n))")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_zeta)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (graphcore.GraphParseError, structure.PreconditionError, KeyError, ValueError,
            OSError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except structure.InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
