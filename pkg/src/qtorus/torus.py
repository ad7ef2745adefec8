"""The quantum torus algebra A_q in the normal-ordered basis z3^h z2^m z1^n.

The generators satisfy ``z1 z2 = q z2 z1``, ``z2 z3 = q z3 z2``,
``z3 z1 = q z1 z3`` and ``z_k z_k^-1 = 1``.  Products of basis monomials have
a closed form,

    z3^h z2^m z1^n * z3^u z2^v z1^w = q^(m*u + n*v - n*u) z3^(h+u) z2^(m+v) z1^(n+w),

so elements are sparse maps from exponent triples to :class:`ScalarRat`
coefficients and multiplication never needs a rewriting pass.
"""
from __future__ import annotations

import json
from collections import defaultdict
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union

from sympy.polys.densearith import dup_mul, dup_neg
from sympy.polys.domains import ZZ

from .coeff import ONE, ZERO, ScalarRat, common_denominator, from_shifted_sum
from .errors import IndexOutOfRange

Scalarish = Union[ScalarRat, int]


class Monomial(NamedTuple):
    """Exponents ``(h, m, n)`` of ``z3^h z2^m z1^n``."""

    h: int
    m: int
    n: int

    def total_degree(self) -> int:
        return self.h + self.m + self.n

    def is_diagonal(self) -> bool:
        return self.h == self.m == self.n


def mul_exponent(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> int:
    """Power of q picked up when multiplying basis monomials ``a * b``."""
    _, m, n = a
    u, v, _ = b
    return m * u + n * v - n * u


def mono_mul(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> Tuple[ScalarRat, Monomial]:
    """Product of two basis monomials as ``(coefficient, monomial)``."""
    e = mul_exponent(a, b)
    return ONE.mul_spow(2 * e), Monomial(a[0] + b[0], a[1] + b[1], a[2] + b[2])


def bracket_exponents(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> Tuple[int, int]:
    """The q-powers ``(A, B)`` with ``[a, b] = (q^A - q^B) * (a+b monomial)``."""
    h, m, n = a
    u, v, w = b
    return m * u + n * v - n * u, h * v - h * w + m * w


def commutation_exponent(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> int:
    """``H`` in ``[a, b] = (1 - q^H) a b``."""
    h, m, n = a
    u, v, w = b
    return h * (v - w) + m * (w - u) + n * (u - v)


def _fmt_mono(t: Tuple[int, int, int]) -> str:
    parts = []
    for name, e in zip(("z3", "z2", "z1"), t):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


class TorusElem:
    """A finite linear combination of basis monomials of A_q.

    Zero coefficients are never stored; the empty element is zero.  Values
    are treated as immutable once built.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int, int], Scalarish] | None = None):
        clean: Dict[Monomial, ScalarRat] = {}
        if terms:
            for k, c in terms.items():
                c = ScalarRat.coerce(c)
                if c:
                    clean[Monomial(*k)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, ScalarRat]) -> "TorusElem":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "TorusElem":
        return cls._wrap({})

    @classmethod
    def unity(cls) -> "TorusElem":
        return cls._wrap({Monomial(0, 0, 0): ONE})

    @classmethod
    def scalar(cls, c: Scalarish) -> "TorusElem":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, h: int, m: int, n: int, c: Scalarish = 1) -> "TorusElem":
        return cls({(h, m, n): c})

    @classmethod
    def generator(cls, k: int, power: int = 1) -> "TorusElem":
        """``z_k^power`` for ``k`` in 1..3."""
        if k not in (1, 2, 3):
            raise IndexOutOfRange(f"generator index must be 1, 2 or 3, got {k}")
        e = [0, 0, 0]
        e[3 - k] = power
        return cls.monomial(*e)

    # -- inspection -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Terms sorted lexicographically descending by exponent triple."""
        return sorted(self.terms.items(), reverse=True)

    def support(self):
        return set(self.terms)

    def component(self, t: Tuple[int, int, int]) -> ScalarRat:
        return self.terms.get(Monomial(*t), ZERO)

    __getitem__ = component

    def as_scalar(self):
        """The coefficient if this is a multiple of unity, else None."""
        if not self.terms:
            return ZERO
        if set(self.terms) == {(0, 0, 0)}:
            return self.terms[Monomial(0, 0, 0)]
        return None

    # -- linear structure -------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, TorusElem):
            return self.terms == other.terms
        if isinstance(other, (int, ScalarRat)):
            return self == TorusElem.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "TorusElem":
        return TorusElem._wrap({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "TorusElem":
        if isinstance(other, (int, ScalarRat)):
            other = TorusElem.scalar(other)
        if not isinstance(other, TorusElem):
            return NotImplemented
        return add_scale(ONE, self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "TorusElem":
        if isinstance(other, (int, ScalarRat)):
            other = TorusElem.scalar(other)
        if not isinstance(other, TorusElem):
            return NotImplemented
        return add_scale(-ONE, other, self)

    def __rsub__(self, other) -> "TorusElem":
        return (-self) + other

    def scale(self, c: Scalarish) -> "TorusElem":
        c = ScalarRat.coerce(c)
        if not c:
            return TorusElem.zero()
        if c.is_one():
            return self
        return TorusElem._wrap({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "TorusElem":
        if isinstance(other, TorusElem):
            return mul(self, other)
        if isinstance(other, (int, ScalarRat)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "TorusElem":
        if isinstance(other, (int, ScalarRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "TorusElem":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only single-term elements are invertible here")
            (t, c), = self.terms.items()
            neg = Monomial(-t.h, -t.m, -t.n)
            # z^t * z^-t = q^e * 1
            e = mul_exponent(t, neg)
            inverse = TorusElem._wrap({neg: c.inv().mul_spow(-2 * e)})
            return inverse ** (-k)
        result = TorusElem.unity()
        for _ in range(k):
            result = mul(result, self)
        return result

    # -- text / json ------------------------------------------------------
    def __repr__(self) -> str:
        return f"TorusElem({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def add_scale(c: Scalarish, x: TorusElem, y: TorusElem) -> TorusElem:
    """Return ``c*x + y``."""
    c = ScalarRat.coerce(c)
    out = dict(y.terms)
    if not c:
        return TorusElem._wrap(out)
    for k, v in x.terms.items():
        val = v if c.is_one() else v * c
        prev = out.get(k)
        if prev is not None:
            val = prev + val
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return TorusElem._wrap(out)


def _collect(acc: Mapping[Monomial, list]) -> TorusElem:
    out = {}
    for k, vals in acc.items():
        v = vals[0] if len(vals) == 1 else ScalarRat.sum(vals)
        if v:
            out[k] = v
    return TorusElem._wrap(out)


def _over_common_den(x: TorusElem):
    keys = list(x.terms)
    D, nums = common_denominator(x.terms[k] for k in keys)
    return D, list(zip(keys, nums))


def _assemble(acc: Mapping[Monomial, list], den) -> TorusElem:
    out = {}
    for k, parts in acc.items():
        v = from_shifted_sum(parts, den)
        if v:
            out[k] = v
    return TorusElem._wrap(out)


def linear_combination(pairs: Iterable[Tuple[Scalarish, TorusElem]]) -> TorusElem:
    """``sum(c * x for c, x in pairs)``, reducing each output coefficient once."""
    scalars, bodies = [], []
    for c, x in pairs:
        c = ScalarRat.coerce(c)
        if not c or not x.terms:
            continue
        dx, xs = _over_common_den(x)
        scalars.append(c * ScalarRat(list(ONE.num), list(dx)))
        bodies.append(xs)
    if not scalars:
        return TorusElem.zero()
    den, nums = common_denominator(scalars)
    acc = defaultdict(list)
    for num, xs in zip(nums, bodies):
        for key, p in xs:
            acc[key].append((dup_mul(num, p, ZZ), 0))
    return _assemble(acc, den)


def mul(x: TorusElem, y: TorusElem) -> TorusElem:
    """Product in A_q, bilinear extension of :func:`mono_mul`."""
    if not x.terms or not y.terms:
        return TorusElem.zero()
    dx, xs = _over_common_den(x)
    dy, ys = _over_common_den(y)
    acc = defaultdict(list)
    for a, na in xs:
        for b, nb in ys:
            key = Monomial(a[0] + b[0], a[1] + b[1], a[2] + b[2])
            acc[key].append((dup_mul(na, nb, ZZ), 2 * mul_exponent(a, b)))
    return _assemble(acc, tuple(dup_mul(list(dx), list(dy), ZZ)))


def bracket(x: TorusElem, y: TorusElem) -> TorusElem:
    """Lie bracket ``xy - yx`` via the closed-form structure constants."""
    if not x.terms or not y.terms:
        return TorusElem.zero()
    dx, xs = _over_common_den(x)
    dy, ys = _over_common_den(y)
    acc = defaultdict(list)
    for a, na in xs:
        for b, nb in ys:
            ea, eb = bracket_exponents(a, b)
            if ea == eb:
                continue
            key = Monomial(a[0] + b[0], a[1] + b[1], a[2] + b[2])
            p = dup_mul(na, nb, ZZ)
            acc[key].append((p, 2 * ea))
            acc[key].append((dup_neg(p, ZZ), 2 * eb))
    return _assemble(acc, tuple(dup_mul(list(dx), list(dy), ZZ)))


def phi(x: TorusElem) -> TorusElem:
    """The automorphism z1 -> z2 -> z3 -> z1.

    ``z3^h z2^m z1^n`` maps to ``z1^h z3^m z2^n = q^(h(n-m)) z3^m z2^n z1^h``.
    """
    return TorusElem._wrap({
        Monomial(t.m, t.n, t.h): c.mul_spow(2 * t.h * (t.n - t.m))
        for t, c in x.terms.items()
    })


def z3grade_component(x: TorusElem, t: Tuple[int, int, int]) -> ScalarRat:
    """Coefficient of the basis monomial ``t`` in ``x``."""
    return x.component(t)


def lambda_decompose(x: TorusElem) -> Dict[int, TorusElem]:
    """Split ``x`` into homogeneous parts by total degree ``h + m + n``."""
    parts: Dict[int, dict] = defaultdict(dict)
    for t, c in x.terms.items():
        parts[t.h + t.m + t.n][t] = c
    return {N: TorusElem._wrap(p) for N, p in sorted(parts.items())}


def pi_project(x: TorusElem) -> TorusElem:
    """Projection onto the span of the diagonal monomials z3^h z2^h z1^h."""
    return TorusElem._wrap({t: c for t, c in x.terms.items() if t.h == t.m == t.n})


def in_Lq(x: TorusElem) -> Tuple[bool, TorusElem]:
    """Membership in the Lie subalgebra generated by z_k^(+-1).

    That subalgebra is exactly the span of the non-diagonal monomials, so
    ``x`` belongs to it iff its diagonal projection vanishes.  On failure the
    projection is returned as the obstruction.
    """
    p = pi_project(x)
    if p:
        return False, p
    return True, TorusElem.zero()


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def term_text(t: Tuple[int, int, int], c: ScalarRat) -> str:
    mono = _fmt_mono(t)
    coef = c.pretty()
    if not mono:
        return coef
    if coef == "1":
        return mono
    if coef == "-1":
        return "-" + mono
    return f"{coef}*{mono}"


def to_text(x: TorusElem) -> str:
    """Human text, terms in descending exponent order joined by `` + ``."""
    if not x.terms:
        return "0"
    return " + ".join(term_text(t, c) for t, c in x.items())


def to_json_obj(x, algebra: str | None = None) -> dict:
    obj = {"terms": [{"e": list(t), "c": str(c)} for t, c in x.items()]}
    if algebra is not None:
        obj["algebra"] = algebra
    return obj


def to_json(x: TorusElem) -> str:
    return json.dumps(to_json_obj(x), separators=(",", ":"))


def from_json_obj(obj: Mapping) -> TorusElem:
    terms = {}
    for entry in obj["terms"]:
        h, m, n = entry["e"]
        terms[(int(h), int(m), int(n))] = ScalarRat.parse(entry["c"])
    return TorusElem(terms)


def from_json(text: str) -> TorusElem:
    return from_json_obj(json.loads(text))


def from_terms(pairs: Iterable[Tuple[Tuple[int, int, int], Scalarish]]) -> TorusElem:
    acc = defaultdict(list)
    for t, c in pairs:
        acc[Monomial(*t)].append(ScalarRat.coerce(c))
    return _collect(acc)
