"""Command-line front end.

Graph sources are given per factor with `--graph FILE` or `--cuntz N`
(repeatable, in factor order, for the tensor commands); the coefficient ring
with `--ring {Z,Zi,Q,Z-half}` (default Z).  Output is plain text, one result
per line, printed in the canonical term order, so identical invocations are
byte-identical.  Exit codes: 0 success, 1 property failure, 2 syntax error,
3 semantic error.
"""

from __future__ import annotations

import argparse
import sys
from random import Random

from . import bisections as bis
from . import checks, exprs
from .algebra import AlgebraElement, disjointify
from .errors import ExpressionSyntaxError, SteinbergError
from .graph import cuntz_graph, load_graph, GroupoidPoint
from .invariants import (
    bowen_franks,
    decide_tensor_tuples,
    is_effective,
    random_projection_search,
    search_projections,
    InvariantViolationError,
)
from .leavitt import reduce_word, to_steinberg
from .scalars import RINGS_BY_NAME
from .tensor import pi, sigma

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_SYNTAX = 2
EXIT_SEMANTIC = 3


class _SourceAction(argparse.Action):
    """Collect --graph/--cuntz occurrences in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, "sources", None) or [])
        kind = "cuntz" if option_string == "--cuntz" else "graph"
        sources.append((kind, values))
        namespace.sources = sources


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--graph", action=_SourceAction, metavar="FILE",
                   help="graph file (vertex/edge lines); repeatable")
    p.add_argument("--cuntz", action=_SourceAction, type=int, metavar="N",
                   help="one-vertex graph with N loop edges; repeatable")
    p.add_argument("--ring", choices=sorted(RINGS_BY_NAME), default="Z",
                   help="coefficient ring (default Z)")
    p.set_defaults(sources=[])


def _graphs(args, need: int):
    sources = args.sources
    if len(sources) != need:
        raise SteinbergError(
            f"this command needs exactly {need} graph source(s) "
            f"(--graph/--cuntz), got {len(sources)}"
        )
    out = []
    for kind, value in sources:
        out.append(cuntz_graph(value) if kind == "cuntz" else load_graph(value))
    return out


def _ring(args):
    return RINGS_BY_NAME[args.ring]


def _cmd_normalize(args) -> int:
    (g,) = _graphs(args, 1)
    print(exprs.parse_element(args.expr, g, _ring(args)))
    return EXIT_OK


def _cmd_mul(args) -> int:
    (g,) = _graphs(args, 1)
    ring = _ring(args)
    print(exprs.parse_element(args.left, g, ring) * exprs.parse_element(args.right, g, ring))
    return EXIT_OK


def _cmd_star(args) -> int:
    (g,) = _graphs(args, 1)
    print(exprs.parse_element(args.expr, g, _ring(args)).star())
    return EXIT_OK


def _cmd_eval(args) -> int:
    (g,) = _graphs(args, 1)
    f = exprs.parse_element(args.expr, g, _ring(args))
    point = GroupoidPoint(
        exprs.parse_boundary_point(args.x, g), args.k, exprs.parse_boundary_point(args.y, g)
    )
    print(f.evaluate(point))
    return EXIT_OK


def _cmd_diagonal(args) -> int:
    (g,) = _graphs(args, 1)
    print("true" if exprs.parse_element(args.expr, g, _ring(args)).is_diagonal() else "false")
    return EXIT_OK


def _cmd_disjointify(args) -> int:
    (g,) = _graphs(args, 1)
    ring = _ring(args)
    pairs = exprs.parse_term_pairs(args.expr, g, ring)
    out = disjointify(g, ring, pairs)
    print(" + ".join(f"{r}*{b}" for r, b in out) if out else "0")
    return EXIT_OK


def _cmd_relcomp(args) -> int:
    (g,) = _graphs(args, 1)
    pieces = bis.relative_complement(
        exprs.parse_bisection(args.left, g), exprs.parse_bisection(args.right, g)
    )
    print(", ".join(str(p) for p in pieces) if pieces else "(empty)")
    return EXIT_OK


def _cmd_tensor_mul(args) -> int:
    gl, gr = _graphs(args, 2)
    ring = _ring(args)
    t1 = exprs.parse_tensor_element(args.left, gl, gr, ring)
    t2 = exprs.parse_tensor_element(args.right, gl, gr, ring)
    print(t1 * t2)
    return EXIT_OK


def _cmd_sigma(args) -> int:
    gl, gr = _graphs(args, 2)
    print(sigma(exprs.parse_tensor_element(args.expr, gl, gr, _ring(args))))
    return EXIT_OK


def _cmd_pi(args) -> int:
    gl, gr = _graphs(args, 2)
    print(pi(exprs.parse_product_element(args.expr, gl, gr, _ring(args))))
    return EXIT_OK


def _require_one_vertex(g):
    if g.n_vertices != 1:
        raise SteinbergError("Leavitt commands need a one-vertex graph (--cuntz n)")
    return g.n_edges


def _cmd_leavitt_reduce(args) -> int:
    (g,) = _graphs(args, 1)
    n = _require_one_vertex(g)
    word = exprs.parse_leavitt_word(args.word)
    print(reduce_word(n, _ring(args), word))
    return EXIT_OK


def _cmd_to_steinberg(args) -> int:
    (g,) = _graphs(args, 1)
    n = _require_one_vertex(g)
    a = exprs.parse_leavitt_element(args.expr, n, _ring(args))
    print(to_steinberg(a, g))
    return EXIT_OK


def _cmd_bf(args) -> int:
    print(bowen_franks(args.n))
    return EXIT_OK


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ExpressionSyntaxError(f"{text!r} is not a comma-separated integer tuple", 0)


def _cmd_decide(args) -> int:
    verdict = decide_tensor_tuples(_parse_tuple(args.ns), _parse_tuple(args.ms))
    print(f"verdict: {verdict.reason}")
    print(f"same: {'true' if verdict.same else 'false'}")
    print(f"isotropy ranks: {verdict.isotropy_ranks[0]} vs {verdict.isotropy_ranks[1]}")
    left = ",".join(str(b) for b in verdict.bf_ns)
    right = ",".join(str(b) for b in verdict.bf_ms)
    print(f"BF: {left} vs {right}")
    return EXIT_OK


def _cmd_search_projections(args) -> int:
    (g,) = _graphs(args, 1)
    ring = _ring(args)
    try:
        if args.samples:
            report = random_projection_search(
                g, ring, args.depth, args.coeff, args.samples, Random(args.seed)
            )
        else:
            report = search_projections(g, ring, args.depth, args.coeff)
    except InvariantViolationError as exc:
        print(f"FAIL: {exc}")
        return EXIT_PROPERTY_FAILURE
    for p, diag in zip(report.projections, report.diagonal_flags):
        print(f"{p}  diagonal={'true' if diag else 'false'}")
    non_diag = len(report.non_diagonal)
    print(f"projections: {len(report.projections)}  non-diagonal: {non_diag}")
    return EXIT_OK


def _cmd_is_effective(args) -> int:
    (g,) = _graphs(args, 1)
    print("true" if is_effective(g) else "false")
    return EXIT_OK


def _cmd_verify(args) -> int:
    failures = 0
    for result in checks.run_all(args.seed, args.iters):
        if result.ok:
            print(f"{result.name}: ok ({result.checks} checks)")
        else:
            failures += 1
            print(f"{result.name}: FAIL ({len(result.failures)}/{result.checks})")
            for msg in result.failures[:5]:
                print(f"  {msg}")
    return EXIT_PROPERTY_FAILURE if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinberg",
        description="Exact computation in groupoid convolution algebras over "
        "finite no-sink graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.set_defaults(func=fn)
        return p

    p = cmd("normalize", _cmd_normalize, "print the normal form of an expression")
    p.add_argument("expr")
    p = cmd("mul", _cmd_mul, "convolve two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("star", _cmd_star, "apply the involution")
    p.add_argument("expr")
    p = cmd("eval", _cmd_eval, "evaluate at a groupoid point (x, k, y)")
    p.add_argument("expr")
    p.add_argument("x", help="boundary point, e.g. 1.2(2)")
    p.add_argument("k", type=int)
    p.add_argument("y", help="boundary point")
    p = cmd("diagonal", _cmd_diagonal, "is the element diagonal?")
    p.add_argument("expr")
    p = cmd("disjointify", _cmd_disjointify, "rewrite over pairwise disjoint cylinders")
    p.add_argument("expr")
    p = cmd("relcomp", _cmd_relcomp, "relative complement of two bisections")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("tensor-mul", _cmd_tensor_mul, "multiply two tensor expressions")
    p.add_argument("left")
    p.add_argument("right")
    p = cmd("sigma", _cmd_sigma, "tensor element -> product-groupoid element")
    p.add_argument("expr")
    p = cmd("pi", _cmd_pi, "product-groupoid element -> tensor element")
    p.add_argument("expr")
    p = cmd("leavitt-reduce", _cmd_leavitt_reduce, "reduce a generator word")
    p.add_argument("word")
    p = cmd("to-steinberg", _cmd_to_steinberg, "Leavitt expression -> algebra element")
    p.add_argument("expr")
    p = cmd("bf", _cmd_bf, "Bowen-Franks group of the 1x1 matrix [n]")
    p.add_argument("n", type=int)
    p = cmd("decide", _cmd_decide, "compare factor tuples of one-vertex groupoids")
    p.add_argument("ns", help="comma-separated integers, e.g. 2,3")
    p.add_argument("ms", help="comma-separated integers, e.g. 2,2")
    p = cmd("search-projections", _cmd_search_projections, "enumerate projections")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--coeff", type=int, default=1)
    p.add_argument("--samples", type=int, default=0,
                   help="run a seeded random search instead of the exhaustive one")
    p.add_argument("--seed", type=int, default=0)
    p = cmd("is-effective", _cmd_is_effective, "does every cycle have an exit?")
    p = cmd("verify", _cmd_verify, "run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=25)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExpressionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (SteinbergError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
