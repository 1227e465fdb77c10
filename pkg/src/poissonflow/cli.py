"""Command-line front end.

Inputs name catalog entries (``P1``, ``euler``, ``tetrahedron``), files, or
inline text in the package formats; outputs stream to stdout unless
``--output`` is given.  Identical invocations print identical bytes: all
timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import catalog as _catalog
from .cohomsolve import trivialize
from .errors import ParseError
from .gracomplex import (GraphSum, bracket, differential, parse_graphsum,
                         render_graphsum)
from .multivec import (Multivector, homogeneity_scale, jacobiator,
                       parse_multivector, render_multivector, schouten)
from .nambu import homogenizing_field_exists, nambu_bivector
from .orient import cocycle1, flow
from .ratpoly import parse_poly
from .verify import run_checks


def _resolve_text(value: str) -> str:
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as f:
            return f.read()
    return value


def load_multivector(value: str, nvars=None) -> Multivector:
    try:
        entry = _catalog.get(value)
    except KeyError:
        pass
    else:
        if isinstance(entry.payload, Multivector):
            return entry.payload
        raise SystemExit("catalog entry %r is a graph sum, not a multivector"
                         % value)
    return parse_multivector(_resolve_text(value), nvars=nvars)


def load_graphsum(value: str) -> GraphSum:
    try:
        entry = _catalog.get(value)
    except KeyError:
        pass
    else:
        if isinstance(entry.payload, GraphSum):
            return entry.payload
        raise SystemExit("catalog entry %r is not a graph sum" % value)
    return parse_graphsum(_resolve_text(value))


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
    else:
        print(text)


def _machine(args) -> bool:
    return args.format == "machine"


def cmd_schouten(args):
    left = load_multivector(args.left, args.nvars)
    right = load_multivector(args.right, args.nvars)
    out = schouten(left, right)
    if _machine(args):
        _emit(args, json.dumps({"result": render_multivector(out)}))
    else:
        _emit(args, render_multivector(out))
    return 0


def cmd_jacobi(args):
    p = load_multivector(args.poisson, args.nvars)
    jac = jacobiator(p)
    if _machine(args):
        _emit(args, json.dumps({"jacobiator": render_multivector(jac),
                                "poisson": jac.is_zero()}))
    else:
        _emit(args, render_multivector(jac))
    return 0


def cmd_scale(args):
    v = load_multivector(args.field, args.nvars)
    p = load_multivector(args.poisson, args.nvars)
    lam = homogeneity_scale(v, p)
    text = "none" if lam is None else str(lam)
    if _machine(args):
        _emit(args, json.dumps({"scale": text}))
    else:
        _emit(args, text)
    return 0


def cmd_flow(args):
    gamma = load_graphsum(args.graph)
    p = load_multivector(args.poisson, args.nvars)
    out = flow(gamma, p)
    if _machine(args):
        _emit(args, json.dumps({"flow": render_multivector(out)}))
    else:
        _emit(args, render_multivector(out))
    return 0


def cmd_cocycle1(args):
    gamma = load_graphsum(args.graph)
    v = load_multivector(args.field, args.nvars)
    p = load_multivector(args.poisson, args.nvars)
    out = cocycle1(gamma, v, p)
    if _machine(args):
        _emit(args, json.dumps({"cocycle1": render_multivector(out)}))
    else:
        _emit(args, render_multivector(out))
    return 0


def cmd_trivialize(args):
    q = load_multivector(args.target, args.nvars)
    p = load_multivector(args.poisson, args.nvars)
    sol = trivialize(q, p, args.degree)
    if _machine(args):
        payload = {"status": sol.status, "kernel_dim": sol.kernel_dim}
        if sol.status == "solved":
            payload["particular"] = render_multivector(sol.particular)
        else:
            payload["witness"] = str(sol.witness)
        _emit(args, json.dumps(payload))
        return 0
    if sol.status == "solved":
        lines = ["status: solved",
                 "particular: %s" % render_multivector(sol.particular),
                 "kernel dimension: %d" % sol.kernel_dim]
        lines += ["kernel[%d]: %s" % (k, render_multivector(b))
                  for k, b in enumerate(sol.kernel_basis)]
    else:
        lines = ["status: infeasible",
                 "inconsistent equation at row %s" % (sol.witness,)]
    _emit(args, "\n".join(lines))
    return 0


def cmd_graph_d(args):
    gamma = load_graphsum(args.graph)
    d = differential(gamma)
    if _machine(args):
        _emit(args, json.dumps({"differential": render_graphsum(d),
                                "cocycle": d.is_zero()}))
    else:
        _emit(args, render_graphsum(d))
        if not d.is_zero():
            print("note: not a cocycle under this package's edge-order "
                  "convention; external conventions may differ",
                  file=sys.stderr)
    return 0


def cmd_graph_bracket(args):
    left = load_graphsum(args.left)
    right = load_graphsum(args.right)
    out = bracket(left, right)
    if _machine(args):
        _emit(args, json.dumps({"bracket": render_graphsum(out)}))
    else:
        _emit(args, render_graphsum(out))
    return 0


def cmd_nambu(args):
    a = parse_poly(args.casimir, 3)
    rho = parse_poly(args.density, 3) if args.density else None
    p = nambu_bivector(a, rho)
    note = ""
    weights = tuple(int(w) for w in args.weights.split(","))
    if rho is None:
        try:
            wa, exists = homogenizing_field_exists(a, weights)
        except Exception:
            wa, exists = None, None
        if exists is False:
            note = ("no polynomial homogenizing field exists "
                    "(weight degree %s equals the weight sum %d)"
                    % (wa, sum(weights)))
    if _machine(args):
        _emit(args, json.dumps({"bivector": render_multivector(p),
                                "note": note}))
    else:
        _emit(args, render_multivector(p))
        if note:
            print("note: " + note, file=sys.stderr)
    return 0


def cmd_catalog(args):
    if args.name:
        entry = _catalog.get(args.name)
        payload = entry.payload
        text = (render_multivector(payload) if isinstance(payload, Multivector)
                else render_graphsum(payload))
        if _machine(args):
            _emit(args, json.dumps({"name": entry.name,
                                    "dimension": entry.dimension,
                                    "note": entry.note,
                                    "payload": text}))
        else:
            _emit(args, text)
        return 0
    lines = []
    for name in _catalog.names():
        entry = _catalog.get(name)
        lines.append("%-14s r=%d  %s" % (entry.name, entry.dimension, entry.note))
    _emit(args, "\n".join(lines))
    return 0


def cmd_verify_paper(args):
    t0 = time.perf_counter()
    report = run_checks(fast=args.fast)
    text = report.table()
    if report.outputs:
        text += "\n" + "\n".join("%s = %s" % (k, v)
                                 for k, v in sorted(report.outputs.items()))
    if _machine(args):
        payload = {"status": "pass" if report.passed else "fail",
                   "checks": {c.ident: c.passed for c in report.checks}}
        payload.update(report.outputs)
        _emit(args, json.dumps(payload))
    else:
        _emit(args, text)
    for c in report.checks:
        if c.seconds >= 0.05:
            print("timing: %-18s %.2fs" % (c.ident, c.seconds), file=sys.stderr)
    print("verify-paper wall time: %.1fs" % (time.perf_counter() - t0),
          file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonflow",
        description="exact graph-complex flows on polynomial Poisson bivectors")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write the result to a file")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--nvars", type=int, default=None,
                       help="dimension for parsed multivectors")

    p = sub.add_parser("schouten", help="bracket of two multivectors")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    common(p)
    p.set_defaults(fn=cmd_schouten)

    p = sub.add_parser("jacobi", help="jacobiator of a bivector")
    p.add_argument("--poisson", required=True)
    common(p)
    p.set_defaults(fn=cmd_jacobi)

    p = sub.add_parser("scale", help="homogeneity scale of P along a field")
    p.add_argument("--field", required=True)
    p.add_argument("--poisson", required=True)
    common(p)
    p.set_defaults(fn=cmd_scale)

    p = sub.add_parser("flow", help="evaluate a graph sum at copies of P")
    p.add_argument("--graph", required=True)
    p.add_argument("--poisson", required=True)
    common(p)
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("cocycle1",
                       help="1-vector evaluation with V placed in every slot")
    p.add_argument("--graph", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--poisson", required=True)
    common(p)
    p.set_defaults(fn=cmd_cocycle1)

    p = sub.add_parser("trivialize", help="solve Q = [[Y,P]] exactly")
    p.add_argument("--target", required=True)
    p.add_argument("--poisson", required=True)
    p.add_argument("--degree", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_trivialize)

    p = sub.add_parser("graph-d", help="graph differential")
    p.add_argument("--graph", required=True)
    common(p)
    p.set_defaults(fn=cmd_graph_d)

    p = sub.add_parser("graph-bracket", help="insertion bracket of graph sums")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    common(p)
    p.set_defaults(fn=cmd_graph_bracket)

    p = sub.add_parser("nambu", help="determinant bracket from a Casimir")
    p.add_argument("--casimir", required=True)
    p.add_argument("--density", default=None)
    p.add_argument("--weights", default="1,1,1")
    common(p)
    p.set_defaults(fn=cmd_nambu)

    p = sub.add_parser("catalog", help="list or print built-in objects")
    p.add_argument("name", nargs="?")
    common(p)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("verify-paper", help="run the full acceptance suite")
    p.add_argument("--fast", action="store_true",
                   help="skip the flow and solver checks")
    common(p)
    p.set_defaults(fn=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
