"""Command-line front end.

    qtorus [--json] VERB ARGS...

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .errors import (DiagonalNotInLq, DomainError, IndexOutOfRange, InvalidPair, ParseError,
                     ZeroInversion, ZeroPolynomial)
from .expr import eval_fo, evaluate, parse_expr
from .fo import fo_to_json, fo_to_text
from .liecert import cert_monomial, lie_eval, lie_to_text
from .torus import (Monomial, TorusElem, in_Lq, lambda_decompose, pi_project, to_json,
                    to_json_obj, to_text, z3grade_component)
from .torus import bracket as torus_bracket
from .verify import LEADING_FORMULAS, SUITE_NAMES, reports_to_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

_DOMAIN_ERRORS = (DomainError, DiagonalNotInLq, ZeroInversion, IndexOutOfRange, InvalidPair,
                  ZeroPolynomial)


class _Failed(Exception):
    pass


def _emit(out, text: str) -> None:
    out.write(text + "\n")


def _element(x: TorusElem, as_json: bool) -> str:
    return to_json(x) if as_json else to_text(x)


def _mono_text(t) -> str:
    return f"z3^{t[0]} z2^{t[1]} z1^{t[2]}"


def _cmd_normalize(args, out):
    _emit(out, _element(evaluate(args.expr), args.json))


def _cmd_bracket(args, out):
    _emit(out, _element(torus_bracket(evaluate(args.left), evaluate(args.right)), args.json))


def _cmd_grade(args, out):
    parts = lambda_decompose(evaluate(args.expr))
    if args.json:
        obj = {"components": [{"degree": N, "element": to_json_obj(x)} for N, x in parts.items()]}
        _emit(out, json.dumps(obj, separators=(",", ":")))
        return
    if not parts:
        _emit(out, "0")
    for N, x in parts.items():
        _emit(out, f"Lambda_{N}: {to_text(x)}")


def _cmd_zcomponent(args, out):
    t = Monomial(args.h, args.m, args.n)
    c = z3grade_component(evaluate(args.expr), t)
    if args.json:
        _emit(out, json.dumps({"e": list(t), "c": str(c)}, separators=(",", ":")))
    else:
        _emit(out, c.pretty())


def _cmd_pi(args, out):
    _emit(out, _element(pi_project(evaluate(args.expr)), args.json))


def _cmd_inlq(args, out):
    ok, witness = in_Lq(evaluate(args.expr))
    if args.json:
        obj = {"in_Lq": ok, "witness": to_json_obj(witness)}
        _emit(out, json.dumps(obj, separators=(",", ":")))
    elif ok:
        _emit(out, "in L_q")
    else:
        shown = ", ".join(f"({t.h},{t.m},{t.n}) ↦ {c.pretty()}" for t, c in witness.items())
        _emit(out, f"NOT in L_q; witness: {shown}")


def _cmd_cert(args, out):
    target = Monomial(args.h, args.m, args.n)
    tree = cert_monomial(*target)
    value = lie_eval(tree)
    ok = value == TorusElem.monomial(*target)
    if args.json:
        obj = {"target": list(target), "certificate": lie_to_text(tree), "ok": ok,
               "evaluation": to_json_obj(value)}
        _emit(out, json.dumps(obj, separators=(",", ":")))
    else:
        _emit(out, lie_to_text(tree))
        if ok:
            _emit(out, f"OK: evaluates to {_mono_text(target)}")
        else:
            _emit(out, f"FAIL: evaluates to {to_text(value)}")
    if not ok:
        raise _Failed()


def _cmd_fo_normalize(args, out):
    x = eval_fo(parse_expr(args.word))
    _emit(out, fo_to_json(x) if args.json else fo_to_text(x))


def _cmd_verify(args, out):
    reports = run_suite(args.suite, args.bound, args.nmax, args.seed, args.casimir_leading)
    if args.json:
        _emit(out, reports_to_json(reports))
    else:
        for r in reports:
            _emit(out, r.to_text())
    if not all(r.passed for r in reports):
        raise _Failed()


def build_parser() -> argparse.ArgumentParser:
    # --json may appear before or after the verb
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="qtorus", parents=[shared],
        description="Exact arithmetic in the quantum torus and the Fairlie-Odesskii algebra.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help_text):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.set_defaults(func=func)
        return p

    verb("normalize", _cmd_normalize, "print the normal form").add_argument("expr")
    p = verb("bracket", _cmd_bracket, "print [E1, E2]")
    p.add_argument("left")
    p.add_argument("right")
    verb("grade", _cmd_grade, "split by total degree").add_argument("expr")
    p = verb("zcomponent", _cmd_zcomponent, "coefficient of z3^h z2^m z1^n")
    p.add_argument("expr")
    for name in ("h", "m", "n"):
        p.add_argument(name, type=int)
    verb("pi", _cmd_pi, "diagonal projection").add_argument("expr")
    verb("inlq", _cmd_inlq, "membership in the Lie algebra generated by z_k^(+-1)").add_argument("expr")
    p = verb("cert", _cmd_cert, "Lie certificate for z3^h z2^m z1^n")
    for name in ("h", "m", "n"):
        p.add_argument(name, type=int)
    verb("fo-normalize", _cmd_fo_normalize,
         "PBW normal form in I1, I2, I3").add_argument("word")
    p = verb("verify", _cmd_verify, "run verification checks")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES,
                   help="check to run (repeatable; default all)")
    p.add_argument("--bound", type=int, help="exhaustive exponent bound")
    p.add_argument("--nmax", type=int, help="largest Casimir power")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--casimir-leading", choices=sorted(LEADING_FORMULAS), default="derived",
                   help="closed form compared with the top coefficient of C^n")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    args.json = getattr(args, "json", False)
    try:
        args.func(args, out)
    except ParseError as exc:
        _emit(err, f"parse error: {exc}")
        return EXIT_PARSE
    except _DOMAIN_ERRORS as exc:
        _emit(err, f"domain error: {exc}")
        return EXIT_DOMAIN
    except _Failed:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
