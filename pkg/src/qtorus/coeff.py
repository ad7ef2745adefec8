"""Exact arithmetic in the rational function field Q(s), where s = q^(1/2).

Every scalar that shows up in the torus and Fairlie-Odesskii computations is
a rational function of ``s``.  Working over Q(s) with ``s`` transcendental is
the faithful model of "q is not a root of unity": ``1 - q^k`` is a nonzero
polynomial, hence invertible, for every ``k != 0``.

Polynomials are stored as dense tuples of integers in *descending* degree
(the layout used by :mod:`sympy.polys.densearith`); the zero polynomial is
the empty tuple.  A :class:`ScalarRat` is always kept canonical:

* ``gcd(num, den) == 1`` in Z[s] (this clears common content as well),
* the leading coefficient of ``den`` is positive,

so structural equality coincides with field equality and values can be used
as dictionary keys.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Tuple, Union

from sympy.polys.densearith import dup_add, dup_exquo, dup_mul, dup_neg
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from .errors import ZeroInversion

IntPoly = Tuple[int, ...]

_ONE: IntPoly = (ZZ(1),)
_EMPTY: IntPoly = ()


def _poly(coeffs: Iterable[int]) -> IntPoly:
    """Coerce to a tuple of ZZ integers without leading zeros."""
    out = [ZZ(c) for c in coeffs]
    i = 0
    while i < len(out) and not out[i]:
        i += 1
    return tuple(out[i:])


def _sval(p: IntPoly) -> int:
    """Multiplicity of s as a factor of p (number of trailing zeros)."""
    k = 0
    for c in reversed(p):
        if c:
            break
        k += 1
    return k


def _canonical(num, den) -> Tuple[IntPoly, IntPoly]:
    if not num:
        return _EMPTY, _ONE
    if not den:
        raise ZeroInversion("zero denominator")
    den = tuple(den)
    if den == _ONE:
        return tuple(num), _ONE
    k = min(_sval(num), _sval(den))
    if k:
        num, den = num[:len(num) - k], den[:len(den) - k]
    if len(den) == 1:
        # constant denominator: only integer content can cancel
        g = gcd(den[0], *num)
        if den[0] < 0:
            g = -g
        return tuple(c // g for c in num), (den[0] // g,)
    _, num, den = dup_inner_gcd(list(num), list(den), ZZ)
    if den[0] < 0:
        num, den = dup_neg(num, ZZ), dup_neg(den, ZZ)
    return tuple(num), tuple(den)


def _fmt_poly(p: IntPoly) -> str:
    if not p:
        return "0"
    deg = len(p) - 1
    parts = []
    for i, c in enumerate(p):
        if not c:
            continue
        d = deg - i
        c = int(c)
        if d == 0:
            body = str(abs(c))
        else:
            var = "s" if d == 1 else f"s^{d}"
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


class ScalarRat:
    """An element of Q(s) in canonical form.

    Instances are immutable.  Arithmetic with Python ``int`` operands is
    supported on either side.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Iterable[int] = _EMPTY, den: Iterable[int] = _ONE,
                 *, _trusted: bool = False):
        if _trusted:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonical(_poly(num), _poly(den))
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "ScalarRat":
        return cls(num, den, _trusted=True)

    @classmethod
    def from_int(cls, n: int) -> "ScalarRat":
        return cls._raw((ZZ(n),) if n else _EMPTY, _ONE)

    @classmethod
    def from_fraction(cls, a: int, b: int) -> "ScalarRat":
        if b == 0:
            raise ZeroInversion("zero denominator")
        return cls((a,), (b,))

    @classmethod
    def coerce(cls, x: Union["ScalarRat", int]) -> "ScalarRat":
        if isinstance(x, ScalarRat):
            return x
        if isinstance(x, int) or type(x).__name__ == "mpz":
            return cls.from_int(int(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to ScalarRat")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def as_monomial(self):
        """Return ``(c, k)`` if this scalar is the Laurent monomial ``c*s^k``
        with ``c`` an integer, else None."""
        if not self.num or self.den[0] != 1:
            return None
        if any(self.num[1:]) or any(self.den[1:]):
            return None
        return int(self.num[0]), (len(self.num) - 1) - (len(self.den) - 1)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "ScalarRat":
        if not self.num:
            return self
        return ScalarRat._raw(tuple(-c for c in self.num), self.den)

    def __add__(self, other) -> "ScalarRat":
        try:
            other = ScalarRat.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            num = dup_add(list(a), list(c), ZZ)
            den = b
        else:
            num = dup_add(dup_mul(list(a), list(d), ZZ), dup_mul(list(c), list(b), ZZ), ZZ)
            den = dup_mul(list(b), list(d), ZZ)
        return ScalarRat._raw(*_canonical(num, den))

    __radd__ = __add__

    def __sub__(self, other) -> "ScalarRat":
        try:
            other = ScalarRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ScalarRat":
        return ScalarRat.coerce(other) - self

    def __mul__(self, other) -> "ScalarRat":
        try:
            other = ScalarRat.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == _ONE and d == _ONE:
            return ScalarRat._raw(tuple(dup_mul(list(a), list(c), ZZ)), _ONE)
        if d != _ONE:
            _, a, d = dup_inner_gcd(list(a), list(d), ZZ)
        if b != _ONE:
            _, c, b = dup_inner_gcd(list(c), list(b), ZZ)
        num = dup_mul(list(a), list(c), ZZ)
        den = dup_mul(list(b), list(d), ZZ)
        if den[0] < 0:
            num, den = dup_neg(num, ZZ), dup_neg(den, ZZ)
        return ScalarRat._raw(tuple(num), tuple(den))

    __rmul__ = __mul__

    def inv(self) -> "ScalarRat":
        if not self.num:
            raise ZeroInversion("cannot invert the zero scalar")
        num, den = self.den, self.num
        if den[0] < 0:
            num, den = tuple(-x for x in num), tuple(-x for x in den)
        return ScalarRat._raw(num, den)

    def __truediv__(self, other) -> "ScalarRat":
        try:
            other = ScalarRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "ScalarRat":
        return ScalarRat.coerce(other) * self.inv()

    def __pow__(self, k: int) -> "ScalarRat":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_spow(self, k: int) -> "ScalarRat":
        """Multiply by ``s^k`` without a gcd computation."""
        if not self.num or k == 0:
            return self
        num, den = self.num, self.den
        if k > 0:
            t = min(k, _sval(den))
            if t:
                den = den[:-t]
            num = num + (ZZ(0),) * (k - t)
        else:
            k = -k
            t = min(k, _sval(num))
            if t:
                num = num[:-t]
            den = den + (ZZ(0),) * (k - t)
        return ScalarRat._raw(num, den)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self == ScalarRat.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        return f"({_fmt_poly(self.num)})/({_fmt_poly(self.den)})"

    def __repr__(self) -> str:
        return f"ScalarRat({self})"

    def pretty(self) -> str:
        """Short human form: ``q^(k/2)`` style for Laurent monomials,
        otherwise the canonical ``(num)/(den)`` string."""
        mono = self.as_monomial()
        if mono is None:
            return str(self)
        c, k = mono
        if k == 0:
            return str(c)
        if k % 2:
            var = f"q^({k}/2)"
        elif k == 2:
            var = "q"
        else:
            var = f"q^{k // 2}" if k > 0 else f"q^({k // 2})"
        if c == 1:
            return var
        if c == -1:
            return "-" + var
        return f"{c}*{var}"

    @classmethod
    def parse(cls, text: str) -> "ScalarRat":
        """Parse a coefficient string such as ``(-s^6+3*s^4-3*s^2+1)/(1)``.

        Any scalar expression accepted by the CLI grammar works, including
        ``q`` as an alias for ``s^2``.
        """
        from .expr import parse_scalar

        return parse_scalar(text)

    # -- bulk -------------------------------------------------------------
    @staticmethod
    def sum(values: Iterable["ScalarRat"]) -> "ScalarRat":
        """Sum many scalars, grouping by denominator to limit gcd work."""
        groups: dict = {}
        for v in values:
            if not v.num:
                continue
            acc = groups.get(v.den)
            groups[v.den] = list(v.num) if acc is None else dup_add(acc, list(v.num), ZZ)
        total = ZERO
        for den, num in groups.items():
            total = total + ScalarRat._raw(*_canonical(num, den))
        return total


def common_denominator(values: Iterable[ScalarRat]) -> Tuple[IntPoly, list]:
    """Return ``(D, nums)`` with ``values[i] == nums[i] / D`` and ``D`` the lcm
    of the denominators."""
    values = list(values)
    spow = 0
    rest = list(_ONE)
    seen = {_ONE}
    for v in values:
        d = v.den
        k = _sval(d)
        spow = max(spow, k)
        d = d[:len(d) - k] if k else d
        if d in seen:
            continue
        seen.add(d)
        _, _, cof = dup_inner_gcd(rest, list(d), ZZ)
        rest = dup_mul(rest, cof, ZZ)
        seen.add(tuple(rest))
    D = tuple(rest) + (ZZ(0),) * spow
    nums = []
    for v in values:
        if v.den == D:
            nums.append(list(v.num))
        else:
            nums.append(dup_mul(list(v.num), dup_exquo(list(D), list(v.den), ZZ), ZZ))
    return D, nums


def from_shifted_sum(parts: Iterable[Tuple[list, int]], den: IntPoly) -> ScalarRat:
    """Canonical ``sum(p * s^k for p, k in parts) / den``."""
    parts = [(p, k) for p, k in parts if p]
    if not parts:
        return ZERO
    kmin = min(k for _, k in parts)
    total: list = []
    for p, k in parts:
        shifted = list(p) + [ZZ(0)] * (k - kmin) if k > kmin else list(p)
        total = dup_add(total, shifted, ZZ)
    if not total:
        return ZERO
    return ScalarRat._raw(*_canonical(total, den)).mul_spow(kmin)


ZERO = ScalarRat._raw(_EMPTY, _ONE)
ONE = ScalarRat._raw(_ONE, _ONE)
S = ScalarRat._raw((ZZ(1), ZZ(0)), _ONE)


def qpow(k: int) -> ScalarRat:
    """Return ``s^k``, i.e. ``q^(k/2)``."""
    return ONE.mul_spow(k)


def q_int_pow(k: int) -> ScalarRat:
    """Return ``q^k`` (``s^(2k)``)."""
    return ONE.mul_spow(2 * k)


def one_minus_qpow(k: int) -> ScalarRat:
    """Return ``1 - q^k``; nonzero whenever ``k != 0``."""
    return ONE - q_int_pow(k)


def arith(op: str, a: ScalarRat, b: ScalarRat) -> ScalarRat:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def inv(a: ScalarRat) -> ScalarRat:
    return a.inv()


def is_zero(a: ScalarRat) -> bool:
    return a.is_zero()


def from_poly(coeffs_desc: Iterable[int]) -> ScalarRat:
    """Polynomial in s from integer coefficients in descending degree."""
    return ScalarRat(coeffs_desc)
