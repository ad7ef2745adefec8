"""Exact arithmetic in the quantum torus A_q and the Fairlie-Odesskii algebra
U_q'(so3), with Lie certificates and a replayable verification suite."""
from .coeff import ONE, ZERO, S, ScalarRat, one_minus_qpow, q_int_pow, qpow
from .errors import (DiagonalNotInLq, DomainError, IndexOutOfRange, InvalidPair, ParseError,
                     ZeroInversion, ZeroPolynomial)
from .expr import eval_expr, evaluate, parse_expr
from .fo import (FoElem, FoWord, casimir, casimir_power, embed, fo_mul, fo_normalize, gen_G,
                 gen_I, poly_in_casimir)
from .liecert import Bracket, Leaf, Scale, Sum, cert_monomial, lie_eval, lie_phi, lie_to_text
from .torus import (Monomial, TorusElem, bracket, in_Lq, lambda_decompose, mono_mul, mul, phi,
                    pi_project, to_json, to_text, z3grade_component)
from .verify import VerifyReport, run_suite

__all__ = [
    "ONE", "ZERO", "S", "ScalarRat", "one_minus_qpow", "q_int_pow", "qpow",
    "DiagonalNotInLq", "DomainError", "IndexOutOfRange", "InvalidPair", "ParseError",
    "ZeroInversion", "ZeroPolynomial",
    "eval_expr", "evaluate", "parse_expr",
    "FoElem", "FoWord", "casimir", "casimir_power", "embed", "fo_mul", "fo_normalize",
    "gen_G", "gen_I", "poly_in_casimir",
    "Bracket", "Leaf", "Scale", "Sum", "cert_monomial", "lie_eval", "lie_phi", "lie_to_text",
    "Monomial", "TorusElem", "bracket", "in_Lq", "lambda_decompose", "mono_mul", "mul", "phi",
    "pi_project", "to_json", "to_text", "z3grade_component",
    "VerifyReport", "run_suite",
]
