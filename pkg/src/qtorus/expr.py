"""Surface syntax for algebra elements: tokenizer, parser, evaluator.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/")? unary)*       # juxtaposition multiplies
    unary   := "-" unary | factor
    factor  := atom ("^" exponent)?
    exponent:= int | "-" int | "(" "-"? int ("/" "2")? ")"
    atom    := z1 | z2 | z3 | I1 | I2 | I3 | C | q | s | int
             | "(" expr ")" | "[" expr "," expr "]" | phi "(" expr ")" | pi "(" expr ")"

``q^(k/2)`` is read as ``s^k``.  Division is only by scalars.  Positions in
:class:`ParseError` are 1-based columns; end of input is ``len(text) + 1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .coeff import ONE, ScalarRat, qpow
from .errors import DomainError, ParseError
from .torus import TorusElem, bracket, mul, phi, pi_project


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: ScalarRat


@dataclass(frozen=True)
class Gen:
    index: int
    exponent: int = 1


@dataclass(frozen=True)
class FoGen:
    index: int


@dataclass(frozen=True)
class CasimirRef:
    pass


@dataclass(frozen=True)
class Neg:
    body: "ExprAst"


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Sub:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Div:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class LieBr:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class PhiApp:
    body: "ExprAst"


@dataclass(frozen=True)
class PiApp:
    body: "ExprAst"


ExprAst = Union[Scalar, Gen, FoGen, CasimirRef, Neg, Add, Sub, Mul, Div, Pow, LieBr, PhiApp, PiApp]


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
NAMES = {"z1", "z2", "z3", "I1", "I2", "I3", "C", "q", "s", "phi", "pi"}
SYMBOLS = set("+-*/^()[],")
ATOM_START = {"z1", "z2", "z3", "I1", "I2", "I3", "C", "q", "s", "phi", "pi", "<int>", "(", "["}


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "sym", "end"
    text: str
    pos: int  # 1-based


def tokenize(text: str) -> List[Token]:
    toks: List[Token] = []
    i = 0
    n = len(text)
    while i < n:
        m = _TOKEN.match(text, i)
        if m is None or m.end() == i:
            break
        if m.group(1) is not None:
            toks.append(Token("int", m.group(1), m.start(1) + 1))
        elif m.group(2) is not None:
            name = m.group(2)
            if name not in NAMES:
                raise ParseError(f"unknown name {name!r}", m.start(2) + 1, ATOM_START)
            toks.append(Token("name", name, m.start(2) + 1))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in SYMBOLS:
                raise ParseError(f"unexpected character {ch!r}", m.start(3) + 1, ATOM_START | SYMBOLS)
            toks.append(Token("sym", ch, m.start(3) + 1))
        i = m.end()
    toks.append(Token("end", "", n + 1))
    return toks


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def is_sym(self, ch: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == ch

    def expect(self, ch: str) -> Token:
        if not self.is_sym(ch):
            raise ParseError(self._unexpected(), self.tok.pos, {ch})
        return self.advance()

    def _unexpected(self) -> str:
        return "unexpected end of input" if self.tok.kind == "end" else f"unexpected {self.tok.text!r}"

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name") or (t.kind == "sym" and t.text in "([")

    def parse(self) -> ExprAst:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(self._unexpected(), self.tok.pos, {"+", "-", "*", "/", "^", "<end>"})
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.is_sym("+") or self.is_sym("-"):
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> ExprAst:
        node = self.unary()
        while True:
            if self.is_sym("*"):
                self.advance()
                node = Mul(node, self.unary())
            elif self.is_sym("/"):
                self.advance()
                node = Div(node, self.unary())
            elif self.starts_atom():
                node = Mul(node, self.unary())
            else:
                return node

    def unary(self) -> ExprAst:
        if self.is_sym("-"):
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> ExprAst:
        start = self.tok
        base = self.atom()
        if not self.is_sym("^"):
            return base
        self.advance()
        exp = self.exponent()
        if start.kind == "name" and start.text == "q" and isinstance(base, Scalar):
            if (2 * exp).denominator != 1:
                raise ParseError("q exponent must be a multiple of 1/2", start.pos)
            return Scalar(qpow(int(2 * exp)))
        if exp.denominator != 1:
            raise ParseError("only q accepts half-integer exponents", start.pos)
        exp = int(exp)
        if isinstance(base, Gen) and start.kind == "name":
            return Gen(base.index, base.exponent * exp)
        return Pow(base, exp)

    def _int(self) -> int:
        if self.tok.kind != "int":
            raise ParseError(self._unexpected(), self.tok.pos, {"<int>"})
        return int(self.advance().text)

    def exponent(self) -> Fraction:
        if self.is_sym("-"):
            self.advance()
            return Fraction(-self._int())
        if self.tok.kind == "int":
            return Fraction(self._int())
        if self.is_sym("("):
            self.advance()
            sign = 1
            if self.is_sym("-"):
                self.advance()
                sign = -1
            num = self._int()
            den = 1
            if self.is_sym("/"):
                self.advance()
                den = self._int()
                if den != 2:
                    raise ParseError("exponent denominator must be 2", self.toks[self.i - 1].pos, {"2"})
            self.expect(")")
            return Fraction(sign * num, den)
        raise ParseError(self._unexpected(), self.tok.pos, {"<int>", "-", "("})

    def atom(self) -> ExprAst:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Scalar(ScalarRat.from_int(int(t.text)))
        if t.kind == "name":
            self.advance()
            name = t.text
            if name in ("z1", "z2", "z3"):
                return Gen(int(name[1]))
            if name in ("I1", "I2", "I3"):
                return FoGen(int(name[1]))
            if name == "C":
                return CasimirRef()
            if name == "q":
                return Scalar(qpow(2))
            if name == "s":
                return Scalar(qpow(1))
            # phi / pi
            self.expect("(")
            body = self.expr()
            self.expect(")")
            return PhiApp(body) if name == "phi" else PiApp(body)
        if self.is_sym("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if self.is_sym("["):
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return LieBr(left, right)
        raise ParseError(self._unexpected(), t.pos, ATOM_START)


def parse_expr(text: str) -> ExprAst:
    """Parse expression text into an :data:`ExprAst`."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _invert(x: TorusElem, what: str) -> TorusElem:
    if len(x) != 1:
        raise DomainError(f"{what} is not invertible in A_q")
    return x ** -1


def eval_expr(ast: ExprAst) -> TorusElem:
    """Evaluate into A_q; I-generators and C go through the embedding."""
    from .fo import casimir, gen_I

    def ev(node) -> TorusElem:
        if isinstance(node, Scalar):
            return TorusElem.scalar(node.value)
        if isinstance(node, Gen):
            return TorusElem.generator(node.index, node.exponent)
        if isinstance(node, FoGen):
            return gen_I(node.index)
        if isinstance(node, CasimirRef):
            return casimir()
        if isinstance(node, Neg):
            return -ev(node.body)
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, Mul):
            return mul(ev(node.left), ev(node.right))
        if isinstance(node, Div):
            d = ev(node.right).as_scalar()
            if d is None:
                raise DomainError("division is only by nonzero scalars")
            if not d:
                raise DomainError("division by zero")
            return ev(node.left).scale(d.inv())
        if isinstance(node, Pow):
            base = ev(node.base)
            if node.exponent < 0:
                if not isinstance(node.base, (Scalar, Gen)) and base.as_scalar() is None:
                    raise DomainError("negative powers apply only to z-generators and scalars")
                if not base:
                    raise DomainError("zero has no inverse")
                return _invert(base, "base") ** (-node.exponent)
            return base ** node.exponent
        if isinstance(node, LieBr):
            return bracket(ev(node.left), ev(node.right))
        if isinstance(node, PhiApp):
            return phi(ev(node.body))
        if isinstance(node, PiApp):
            return pi_project(ev(node.body))
        raise TypeError(f"not an ExprAst: {node!r}")

    return ev(ast)


def evaluate(text: str) -> TorusElem:
    return eval_expr(parse_expr(text))


def parse_scalar(text: str) -> ScalarRat:
    """Parse text that must evaluate to a scalar (a multiple of unity)."""
    val = evaluate(text).as_scalar()
    if val is None:
        raise DomainError(f"{text!r} is not a scalar")
    return val


def eval_fo(ast: ExprAst):
    """Evaluate in the abstract algebra U_q'(so3); z-generators are rejected."""
    from .fo import FoElem, casimir_fo, fo_mul

    def ev(node) -> FoElem:
        if isinstance(node, Scalar):
            return FoElem({(0, 0, 0): node.value})
        if isinstance(node, FoGen):
            return FoElem.generator(node.index)
        if isinstance(node, CasimirRef):
            return casimir_fo()
        if isinstance(node, Neg):
            return -ev(node.body)
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, Mul):
            return fo_mul(ev(node.left), ev(node.right))
        if isinstance(node, LieBr):
            a, b = ev(node.left), ev(node.right)
            return fo_mul(a, b) - fo_mul(b, a)
        if isinstance(node, Div):
            d = ev(node.right)
            if set(d.terms) - {(0, 0, 0)} or not d:
                raise DomainError("division is only by nonzero scalars")
            return ev(node.left).scale(d.component((0, 0, 0)).inv())
        if isinstance(node, Pow):
            base = ev(node.base)
            if node.exponent < 0:
                if set(base.terms) - {(0, 0, 0)} or not base:
                    raise DomainError("negative powers are not defined in U_q'(so3)")
                return FoElem({(0, 0, 0): base.component((0, 0, 0)) ** node.exponent})
            out = FoElem.unity()
            for _ in range(node.exponent):
                out = fo_mul(out, base)
            return out
        raise DomainError(f"{type(node).__name__} is not available in U_q'(so3)")

    return ev(ast)


def to_lie_expr(ast: ExprAst):
    """Read a parsed certificate back as a :data:`LieExpr`.

    Accepts leaves ``z_k^(+-1)``, brackets, sums, and products whose left
    factor is a scalar.
    """
    from .liecert import Bracket, Leaf, Scale, Sum

    def scalar_of(node):
        if isinstance(node, (Gen, FoGen, CasimirRef, LieBr, PhiApp, PiApp)):
            return None
        try:
            return eval_expr(node).as_scalar()
        except DomainError:
            return None

    def conv(node):
        if isinstance(node, Gen):
            if node.exponent not in (1, -1):
                raise DomainError(f"z{node.index}^{node.exponent} is not a generator leaf")
            return Leaf(node.index, node.exponent)
        if isinstance(node, LieBr):
            return Bracket(conv(node.left), conv(node.right))
        if isinstance(node, Mul):
            c = scalar_of(node.left)
            if c is None:
                raise DomainError("products inside a Lie expression need a scalar left factor")
            return Scale(c, conv(node.right))
        if isinstance(node, Neg):
            return Scale(-ONE, conv(node.body))
        if isinstance(node, (Add, Sub)):
            parts: List = []

            def flatten(n, sign):
                if isinstance(n, Add):
                    flatten(n.left, sign)
                    flatten(n.right, sign)
                elif isinstance(n, Sub):
                    flatten(n.left, sign)
                    flatten(n.right, -sign)
                else:
                    e = conv(n)
                    parts.append(e if sign == 1 else Scale(-ONE, e))

            flatten(node, 1)
            return Sum(tuple(parts))
        raise DomainError(f"{type(node).__name__} is not allowed in a Lie expression")

    return conv(ast)


def parse_lie(text: str):
    return to_lie_expr(parse_expr(text))
