"""Command-line front end.  Every command prints one JSON object per line."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import calculus as cal
from .algebra import AlgebraElement, format_monomial, from_json, to_expression, to_json
from .bundles import GradingError, bundle_basis
from .connections import CurvatureError, curvature_constant, curvature_expected, curvature_from_xz, nabla
from .haar import PHI, PSI, TAU, haar
from .parser import ParseError, evaluate
from .scalar import GaussianRational, OddPowerError, PoleError, Scalar, eval_at, parse_gaussian
from .sections import kernel_by_length, section_dims
from .symmetry import act_left, act_right, vector_field
from .verify import SUITES, run_verify

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _element(text: str) -> AlgebraElement:
    s = text.strip()
    if s.startswith("["):
        try:
            return from_json(json.loads(s))
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise UsageError(f"bad element JSON: {e}") from None
    return evaluate(s)


def _q0(text):
    if text is None:
        return None
    try:
        if "i" in text:
            return parse_gaussian(text)
        return GaussianRational(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad value for --q: {text!r}") from None


def _scalar_out(s: Scalar, q0) -> dict:
    out = {"value": s.to_string(), "pretty": s.pretty()}
    if q0 is not None:
        out["at_q"] = str(eval_at(s, q0))
    return out


def _element_out(x: AlgebraElement) -> dict:
    return {"element": to_json(x), "expression": to_expression(x)}


def cmd_nf(args):
    x = _element(args.expr)
    return {"input": args.expr, **_element_out(x)}


def cmd_act(args):
    x = _element(args.expr)
    y = act_left(args.gen, x) if args.side == "left" else act_right(x, args.gen)
    return {"side": args.side, "gen": args.gen, "input": args.expr, **_element_out(y)}


_VF = {"x+": "Xplus", "x-": "Xminus", "xz": "Xz"}


def cmd_vf(args):
    x = _element(args.expr)
    return {"op": args.op, "input": args.expr, **_element_out(vector_field(_VF[args.op], x))}


def cmd_diff(args):
    x = _element(args.expr)
    if args.op == "d":
        f = cal.d3(cal.Form.function(x))
    elif args.op == "del":
        f = cal.del_(x)
    else:
        f = cal.dbar(x)
    return {"op": args.op, "input": args.expr, "form": cal.form_to_json(f)}


def cmd_basis(args):
    monos = bundle_basis(args.n, args.len)
    return {
        "n": args.n,
        "len": args.len,
        "basis": [{"m": m, "k": k, "l": l} for m, k, l in monos],
        "names": [format_monomial(x) for x in monos],
    }


def cmd_sections(args):
    dims = section_dims(args.n, args.max_len)
    top = max(dims) if dims else -1
    ker = kernel_by_length(args.n, top) if top >= 0 else {}
    per = []
    for d in sorted(dims):
        per.append({
            "len": d,
            "dim": dims[d],
            "basis": [to_json(v) for v in ker.get(d, ())],
        })
    return {"n": args.n, "max_len": args.max_len, "total": sum(dims.values()), "lengths": per}


def cmd_nabla(args):
    phi = _element(args.expr)
    v = nabla(args.n, phi)
    return {
        "n": args.n,
        "input": args.expr,
        "plus_part": to_json(v.plus_part),
        "minus_part": to_json(v.minus_part),
    }


def cmd_curvature(args):
    s = curvature_constant(args.n)
    e = curvature_expected(args.n)
    xz = curvature_from_xz(args.n)
    return {
        "n": args.n,
        "curvature": _scalar_out(s, args.q0),
        "closed_form": _scalar_out(e, args.q0),
        "equals_closed_form": s == e,
        "equals_xz_form": s == xz,
    }


def cmd_haar(args):
    x = _element(args.expr)
    return {"input": args.expr, "haar": _scalar_out(haar(x), args.q0)}


_COCYCLES = {"tau": TAU, "phi": PHI, "psi": PSI}


def cmd_cocycle(args):
    try:
        raw = json.loads(args.args)
    except json.JSONDecodeError as e:
        raise UsageError(f"--args must be a JSON array: {e}") from None
    if not isinstance(raw, list):
        raise UsageError("--args must be a JSON array")
    xs = [from_json(r) if isinstance(r, list) else evaluate(str(r)) for r in raw]
    ch = _COCYCLES[args.which]
    if len(xs) != ch.arity + 1:
        raise UsageError(f"{args.which} takes {ch.arity + 1} arguments")
    return {"which": args.which, "args": [to_expression(x) for x in xs], "value": _scalar_out(ch(*xs), args.q0)}


def cmd_verify(args):
    q0 = None if args.q0 is None else args.q0.re
    if args.q0 is not None and (not args.q0.is_real() or not 0 < args.q0.re < 1):
        raise UsageError("--q must be a rational in (0, 1) for verify")
    return run_verify(args.suite, args.samples, args.seed, q0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcp1", description="Exact computations on SU_q(2) and CP^1_q.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", dest="q", default=None, help="evaluation point (rational, 0 < q < 1)")
    common.add_argument("--json", action="store_true", help="JSON-lines output (the default)")
    common.add_argument("--human", action="store_true", help="human-readable output")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("nf", parents=[common], help="PBW normal form")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_nf)

    s = sub.add_parser("act", parents=[common], help="U_q(su(2)) action")
    s.add_argument("--side", choices=("left", "right"), default="left")
    s.add_argument("--gen", choices=("K", "Kinv", "E", "F"), required=True)
    s.add_argument("expr")
    s.set_defaults(fn=cmd_act)

    s = sub.add_parser("vf", parents=[common], help="quantum tangent vectors")
    s.add_argument("--op", choices=tuple(_VF), required=True)
    s.add_argument("expr")
    s.set_defaults(fn=cmd_vf)

    s = sub.add_parser("diff", parents=[common], help="exterior derivative")
    s.add_argument("--op", choices=("d", "del", "dbar"), default="d")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_diff)

    s = sub.add_parser("basis", parents=[common], help="PBW basis of L_n at a word length")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(fn=cmd_basis)

    s = sub.add_parser("sections", parents=[common], help="holomorphic sections of L_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-len", type=int, default=8)
    s.set_defaults(fn=cmd_sections)

    s = sub.add_parser("nabla", parents=[common], help="canonical connection on L_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("expr")
    s.set_defaults(fn=cmd_nabla)

    s = sub.add_parser("curvature", parents=[common], help="curvature constant on L_n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_curvature)

    s = sub.add_parser("haar", parents=[common], help="Haar state")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_haar)

    s = sub.add_parser("cocycle", parents=[common], help="evaluate tau, phi or psi")
    s.add_argument("--which", choices=tuple(_COCYCLES), required=True)
    s.add_argument("--args", required=True, help="JSON array of expressions or element JSON")
    s.set_defaults(fn=cmd_cocycle)

    s = sub.add_parser("verify", parents=[common], help="run invariant batteries")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_verify)
    return p


def _human(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_human(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in obj)
    return f"{pad}{obj}"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.q0 = _q0(args.q)
        out = args.fn(args)
    except (UsageError, ParseError, GradingError, cal.FormError) as e:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": str(e)}, sort_keys=True), file=sys.stderr)
        return 2
    except (PoleError, OddPowerError, ZeroDivisionError, ValueError) as e:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": str(e)}, sort_keys=True), file=sys.stderr)
        return 2
    except CurvatureError as e:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": str(e)}, sort_keys=True), file=sys.stderr)
        return 1
    out = {"schema_version": SCHEMA_VERSION, "verb": args.verb, **out}
    if args.human:
        print(_human(out))
    else:
        print(json.dumps(out, sort_keys=True))
    if args.verb == "verify" and out["failures"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
