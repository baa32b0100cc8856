"""Command-line front end over the JSON artifact formats.

Every verb reads at most one input artifact (a file path, inline JSON, or
``-`` for standard input), performs one library operation, and writes
canonical JSON to standard output.  Exit codes: 0 on success, 1 on domain
errors (validation failures, size caps) with a machine-readable error
object, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Any

from . import algebra, bordism, bott, jsonio, kernels
from .acceptance import format_line, run_all
from .algebra import ExtPolynomial, Gf2Polynomial
from .bordism import BordismClass
from .errors import BordismError, InputFormatError, ValidationError
from .graphs import (ColoredGraph, TorusGraph, graph_coloring_polynomial,
                     torus_graph_from_pair, torus_polynomial)
from .localization import FixedPointData, equivariant_chern_number
from .polytopes import coloring_polynomial


def _read_input(raw: str) -> Any:
    """Resolve a positional INPUT: '-' is stdin, '{...}' is inline, else a path."""
    if raw == "-":
        return jsonio.parse_text(sys.stdin.read())
    if raw.lstrip().startswith("{"):
        return jsonio.parse_text(raw)
    try:
        with open(raw, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read input file {raw!r}: {exc}") from exc
    return jsonio.parse_text(text)


def _as_polynomial(obj: Any) -> Gf2Polynomial | ExtPolynomial:
    """Accept a polynomial object, unwrapping a bordism-class wrapper if given."""
    if isinstance(obj, dict) and "polynomial" in obj:
        obj = obj["polynomial"]
    return jsonio.polynomial_from_obj(obj)


def _emit(obj: Any) -> None:
    sys.stdout.write(jsonio.canonical_dumps(obj))


# ---------------------------------------------------------------------------
# verbs


def _cmd_dim(args: argparse.Namespace) -> int:
    out: dict[str, Any] = {"dim": kernels.kernel_space(args.n).dim}
    if args.weight_bound is not None:
        window = kernels.kernel_sample_unitary(args.n, args.weight_bound)
        out["weight_bound"] = window.weight_bound
        out["window_dim"] = window.dim
    _emit(out)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    p = _as_polynomial(_read_input(args.input))
    if isinstance(p, Gf2Polynomial):
        ok, reason = algebra.in_image_verdict(p)
    else:
        ok, reason = algebra.in_image_unitary_verdict(p)
    _emit({"in_image": ok, "reason": reason})
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    _emit(jsonio.polynomial_to_obj(algebra.dual(_as_polynomial(_read_input(args.input)))))
    return 0


def _cmd_diff(args: argparse.Namespace) -> int:
    _emit(jsonio.polynomial_to_obj(
        algebra.differential(_as_polynomial(_read_input(args.input)))))
    return 0


def _cmd_poly_of_polytope(args: argparse.Namespace) -> int:
    p, coloring = jsonio.polytope_from_obj(_read_input(args.input))
    if coloring is None:
        raise ValidationError("the polytope artifact carries no coloring")
    _emit(jsonio.polynomial_to_obj(coloring_polynomial(p, coloring)))
    return 0


def _cmd_poly_of_graph(args: argparse.Namespace) -> int:
    g = jsonio.graph_from_obj(_read_input(args.input))
    if isinstance(g, TorusGraph):
        raise ValidationError("input is a torus graph; use the torus-poly verb")
    _emit(jsonio.polynomial_to_obj(graph_coloring_polynomial(g)))
    return 0


def _cmd_torus_poly(args: argparse.Namespace) -> int:
    obj = _read_input(args.input)
    if isinstance(obj, dict) and "edges" in obj:
        g = jsonio.graph_from_obj(obj)
        if isinstance(g, ColoredGraph):
            raise ValidationError(
                "input is a GF(2)-colored graph; use the poly-of-graph verb")
    else:
        p, coloring = jsonio.polytope_from_obj(obj)
        if coloring is None or coloring.target != "z":
            raise ValidationError("torus-poly needs an integer-colored polytope")
        g = torus_graph_from_pair(p, coloring)
    _emit(jsonio.polynomial_to_obj(torus_polynomial(g)))
    return 0


def _fraction_repr(value: Fraction | int) -> int | str:
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _cmd_chern(args: argparse.Namespace) -> int:
    obj = _read_input(args.input)
    if isinstance(obj, dict) and "points" in obj:
        data = jsonio.fixed_point_data_from_obj(obj)
    else:
        data = FixedPointData.from_polynomial(_as_polynomial(obj))
    cap = 2 * data.n if args.degree_bound is None else args.degree_bound
    numbers = []
    for i in range(cap + 1):
        for j in range((cap - i) // 2 + 1):
            if j and data.n < 2:
                continue
            r = equivariant_chern_number(data, i, j)
            numbers.append({
                "i": i, "j": j,
                "polynomial": r.is_polynomial,
                "integral": r.integral,
                "constant": None if r.constant is None else _fraction_repr(r.constant),
            })
    _emit({"degree_bound": cap, "n": data.n, "numbers": numbers})
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    obj = _read_input(args.input)
    if isinstance(obj, dict) and "flavor" in obj:
        a = jsonio.class_from_obj(obj)
        _emit(jsonio.class_to_obj(bordism.reduce(a)))
        return 0
    p = jsonio.polynomial_from_obj(obj)
    if not isinstance(p, ExtPolynomial):
        raise ValidationError("reduce expects an integer-coefficient artifact")
    _emit(jsonio.polynomial_to_obj(algebra.mod2_reduce(p)))
    return 0


def _cmd_generators(args: argparse.Namespace) -> int:
    gens = bott.bott_generators(args.n)
    polys = [g.polynomial for g in gens]
    rank = bott.dual_span_rank(polys, args.n)
    kernel_dim = kernels.kernel_space(args.n).dim
    _emit({
        "n": args.n,
        "count": len(gens),
        "kernel_dim": kernel_dim,
        "spanning_rank": rank,
        "spans_kernel": rank == kernel_dim,
        "generators": [jsonio.polynomial_to_obj(p) for p in polys],
    })
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.format == "json":
        results = run_all()
        _emit({"passed": sum(r.passed for r in results),
               "total": len(results),
               "results": [{"index": r.index, "name": r.name,
                            "passed": r.passed, "detail": r.detail,
                            "seconds": round(r.seconds, 3)}
                           for r in results]})
    else:
        results = run_all(sys.stdout)
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser plumbing


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bordismkit",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name: str, fn, help_: str, *, takes_input: bool = False,
            takes_n: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=fn)
        if takes_input:
            p.add_argument("input", metavar="INPUT",
                           help="path to a JSON artifact, inline JSON, or - for stdin")
        if takes_n:
            p.add_argument("--n", type=int, required=True,
                           help="ambient torus rank")
        p.add_argument("--format", choices=("json",), default="json",
                       help="output format (canonical JSON)")
        return p

    p = add("dim", _cmd_dim, "dimension of the rank-n kernel space", takes_n=True)
    p.add_argument("--weight-bound", type=int, default=None,
                   help="also report the integral window kernel dimension "
                        "over characters of this weight (default: skip)")
    add("check", _cmd_check, "membership verdict for a polynomial artifact",
        takes_input=True)
    add("dual", _cmd_dual, "dual polynomial of a faithful polynomial",
        takes_input=True)
    add("diff", _cmd_diff, "boundary differential of a polynomial",
        takes_input=True)
    add("poly-of-polytope", _cmd_poly_of_polytope,
        "coloring polynomial of a colored simple polytope", takes_input=True)
    add("poly-of-graph", _cmd_poly_of_graph,
        "coloring polynomial of a GF(2)-colored graph", takes_input=True)
    add("torus-poly", _cmd_torus_poly,
        "torus polynomial of a torus graph or integer-colored polytope",
        takes_input=True)
    p = add("chern", _cmd_chern,
            "equivariant Chern number sweep for fixed-point data",
            takes_input=True)
    p.add_argument("--degree-bound", type=int, default=None,
                   help="sweep c1^i c2^j with i + 2j up to this bound "
                        "(default: 2n)")
    add("reduce", _cmd_reduce,
        "mod-2 reduction of an integer class or polynomial", takes_input=True)
    add("generators", _cmd_generators,
        "distinct generator polynomials of rank n and their span",
        takes_n=True)
    p = sub.add_parser("verify", help="run the bundled verification suite",
                       description="Run the bundled verification suite; exits "
                                   "nonzero if any criterion fails.")
    p.set_defaults(func=_cmd_verify)
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="one PASS/FAIL line per criterion, or a JSON report")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        return 2
    except BordismError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        return 1


if __name__ == "__main__":
    sys.exit(main())
