"""Lie polynomial expressions over z_k^(+-1) and membership certificates.

A certificate for a basis monomial ``z3^h z2^m z1^n`` is a :class:`LieExpr`
whose leaves are only the six torus generators and whose evaluation is that
monomial with coefficient exactly 1.  The construction bootstraps from

    z3 z2^2 z1 = (1-q)^-3 [z3, [z2, [z2, z1]]]
    z3^-1 z2^-2 z1^T = (scalar) (ad z1^(+-1))^|T| [[z3^-1, z2^-1], z2^-1]

to single powers ``z_k^h``, then pairs, then triples.  Every scalar that gets
inverted along the way has the form ``1 - q^k`` with ``k != 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .coeff import ONE, ScalarRat, one_minus_qpow, q_int_pow
from .errors import DiagonalNotInLq, InvalidPair
from .torus import TorusElem, add_scale, bracket


@dataclass(frozen=True)
class Leaf:
    """The generator ``z_index^sign``."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index not in (1, 2, 3) or self.sign not in (1, -1):
            raise ValueError(f"not a torus generator: z{self.index}^{self.sign}")


@dataclass(frozen=True)
class Bracket:
    left: "LieExpr"
    right: "LieExpr"


@dataclass(frozen=True)
class Scale:
    c: ScalarRat
    body: "LieExpr"

    def __post_init__(self):
        if not self.c:
            raise ValueError("Scale coefficient must be nonzero")


@dataclass(frozen=True)
class Sum:
    parts: Tuple["LieExpr", ...]


LieExpr = Union[Leaf, Bracket, Scale, Sum]


def lie_eval(e: LieExpr) -> TorusElem:
    """Evaluate a Lie expression in A_q."""
    if isinstance(e, Leaf):
        return TorusElem.generator(e.index, e.sign)
    if isinstance(e, Bracket):
        return bracket(lie_eval(e.left), lie_eval(e.right))
    if isinstance(e, Scale):
        return lie_eval(e.body).scale(e.c)
    if isinstance(e, Sum):
        out = TorusElem.zero()
        for p in e.parts:
            out = add_scale(ONE, lie_eval(p), out)
        return out
    raise TypeError(f"not a LieExpr: {e!r}")


def lie_phi(e: LieExpr) -> LieExpr:
    """Relabel leaves z1 -> z2 -> z3 -> z1, keeping the tree shape."""
    if isinstance(e, Leaf):
        return Leaf(e.index % 3 + 1, e.sign)
    if isinstance(e, Bracket):
        return Bracket(lie_phi(e.left), lie_phi(e.right))
    if isinstance(e, Scale):
        return Scale(e.c, lie_phi(e.body))
    if isinstance(e, Sum):
        return Sum(tuple(lie_phi(p) for p in e.parts))
    raise TypeError(f"not a LieExpr: {e!r}")


def ad_power(u: LieExpr, k: int, v: LieExpr) -> LieExpr:
    """``(ad u)^k (v)`` as a right-nested bracket chain."""
    for _ in range(k):
        v = Bracket(u, v)
    return v


def size(e: LieExpr) -> int:
    """Number of nodes in the tree."""
    if isinstance(e, Leaf):
        return 1
    if isinstance(e, Bracket):
        return 1 + size(e.left) + size(e.right)
    if isinstance(e, Scale):
        return 1 + size(e.body)
    return 1 + sum(size(p) for p in e.parts)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

class _Trace:
    """Records the exponents k of every 1 - q^k inverted during construction."""

    def __init__(self):
        self.exponents = []

    def inv(self, k: int) -> ScalarRat:
        if k == 0:
            raise ZeroDivisionError("1 - q^0 is not invertible")
        self.exponents.append(k)
        return one_minus_qpow(k).inv()


Z1, Z2, Z3 = Leaf(1), Leaf(2), Leaf(3)
Z1_INV, Z2_INV, Z3_INV = Leaf(1, -1), Leaf(2, -1), Leaf(3, -1)

# [[z3^-1, z2^-1], z2^-1] = (1-q)^2 z3^-1 z2^-2
COMMT_CORE = Bracket(Bracket(Z3_INV, Z2_INV), Z2_INV)


def _comm0(tr: _Trace) -> LieExpr:
    c = tr.inv(1) ** 3
    return Scale(c, Bracket(Z3, Bracket(Z2, Bracket(Z2, Z1))))


def cert_comm0() -> LieExpr:
    """``(1-q)^-3 [z3, [z2, [z2, z1]]]``, which evaluates to z3 z2^2 z1."""
    return _comm0(_Trace())


def _commT(T: int, tr: _Trace) -> LieExpr:
    if T >= 0:
        c = q_int_pow(T) * tr.inv(1) ** (T + 2)
        return Scale(c, ad_power(Z1, T, COMMT_CORE))
    sign = -1 if T % 2 else 1
    c = tr.inv(1) ** (2 - T) * sign
    return Scale(c, ad_power(Z1_INV, -T, COMMT_CORE))


def cert_commT(T: int) -> LieExpr:
    """Certificate for z3^-1 z2^-2 z1^T."""
    return _commT(T, _Trace())


def _single(axis: int, h: int, tr: _Trace) -> LieExpr:
    if axis not in (1, 2, 3):
        raise InvalidPair(f"axis must be 1, 2 or 3, got {axis}")
    if h == 0:
        raise DiagonalNotInLq("z^0 is the identity, which is not in L_q")
    if abs(h) == 1:
        return Leaf(axis, h)
    # z1^h = q^3 (1-q^h)^-1 [z3 z2^2 z1, z3^-1 z2^-2 z1^(h-1)]
    tree = Scale(q_int_pow(3) * tr.inv(h), Bracket(_comm0(tr), _commT(h - 1, tr)))
    for _ in range(axis - 1):
        tree = lie_phi(tree)
    return tree


def cert_single_power(axis: int, h: int) -> LieExpr:
    """Certificate for ``z_axis^h``, ``h != 0``."""
    return _single(axis, h, _Trace())


PAIRS = {(3, 2): 1, (2, 1): 1, (3, 1): -1}


def _pair(pair: Tuple[int, int], a: int, b: int, tr: _Trace) -> LieExpr:
    pair = tuple(pair)
    if pair not in PAIRS:
        raise InvalidPair(f"pair must be one of {sorted(PAIRS)}, got {pair}")
    if a == 0 or b == 0:
        raise DiagonalNotInLq("pair exponents must both be nonzero")
    first, second = pair
    body = Bracket(_single(first, a, tr), _single(second, b, tr))
    return Scale(tr.inv(PAIRS[pair] * a * b), body)


def cert_pair(pair: Tuple[int, int], a: int, b: int) -> LieExpr:
    """Certificate for ``z_i^a z_j^b`` with ``(i, j)`` in (3,2), (3,1), (2,1)."""
    return _pair(pair, a, b, _Trace())


def _monomial(h: int, m: int, n: int, tr: _Trace) -> LieExpr:
    if h == m == n:
        raise DiagonalNotInLq(f"z3^{h} z2^{m} z1^{n} is diagonal, hence not in L_q")
    nonzero = [e != 0 for e in (h, m, n)]
    if sum(nonzero) == 1:
        axis = 3 - nonzero.index(True)
        return _single(axis, h or m or n, tr)
    if sum(nonzero) == 2:
        if h == 0:
            return _pair((2, 1), m, n, tr)
        if m == 0:
            return _pair((3, 1), h, n, tr)
        return _pair((3, 2), h, m, tr)
    if h != m:
        # [z3^h z2^m, z1^n] = (1 - q^(n(m-h))) z3^h z2^m z1^n
        body = Bracket(_pair((3, 2), h, m, tr), _single(1, n, tr))
        return Scale(tr.inv(n * (m - h)), body)
    # [z3^h, z2^h z1^n] = (1 - q^(h(h-n))) z3^h z2^h z1^n
    body = Bracket(_single(3, h, tr), _pair((2, 1), h, n, tr))
    return Scale(tr.inv(h * (h - n)), body)


def cert_monomial(h: int, m: int, n: int) -> LieExpr:
    """Certificate that z3^h z2^m z1^n lies in L_q (not all exponents equal)."""
    return _monomial(h, m, n, _Trace())


def cert_monomial_traced(h: int, m: int, n: int):
    """Like :func:`cert_monomial`, also returning the exponents ``k`` of every
    ``1 - q^k`` that was inverted."""
    tr = _Trace()
    return _monomial(h, m, n, tr), tuple(tr.exponents)


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------

def lie_to_text(e: LieExpr) -> str:
    """Fully parenthesized text that the expression parser reads back."""
    if isinstance(e, Leaf):
        return f"z{e.index}" if e.sign == 1 else f"z{e.index}^-1"
    if isinstance(e, Bracket):
        return f"[{lie_to_text(e.left)},{lie_to_text(e.right)}]"
    if isinstance(e, Scale):
        return f"({e.c.pretty()} * {lie_to_text(e.body)})"
    if isinstance(e, Sum):
        return "(" + " + ".join(lie_to_text(p) for p in e.parts) + ")"
    raise TypeError(f"not a LieExpr: {e!r}")
