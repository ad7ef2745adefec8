"""The Fairlie-Odesskii algebra U_q'(so3) and its image in the quantum torus.

Abstract elements live in the PBW basis ``I1^h I2^m I3^n`` and are normalized
by rewriting with

    I2 I1 -> q I1 I2 - q^(1/2) I3
    I3 I2 -> q I2 I3 - q^(1/2) I1
    I3 I1 -> q^-1 I1 I3 + q^(-1/2) I2

which is each defining relation solved for its out-of-order product.  The
embedding ``I_k -> G_k / (q - q^-1)`` sends everything into A_q, where the
Casimir element and its powers are computed.
"""
from __future__ import annotations

import json
import threading
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple, Union

from .coeff import ONE, ZERO, ScalarRat, qpow
from .errors import IndexOutOfRange
from .torus import TorusElem, linear_combination, mul

Scalarish = Union[ScalarRat, int]
Word = Tuple[int, ...]

# (misordered pair) -> [(coefficient, replacement word)]
RULES: Dict[Tuple[int, int], List[Tuple[ScalarRat, Word]]] = {
    (2, 1): [(qpow(2), (1, 2)), (-qpow(1), (3,))],
    (3, 2): [(qpow(2), (2, 3)), (-qpow(1), (1,))],
    (3, 1): [(qpow(-2), (1, 3)), (qpow(-1), (2,))],
}

STRATEGIES = ("leftmost", "rightmost")


class FoMonomial(NamedTuple):
    """Exponents ``(h, m, n)`` of ``I1^h I2^m I3^n``."""

    h: int
    m: int
    n: int

    def word(self) -> Word:
        return (1,) * self.h + (2,) * self.m + (3,) * self.n


class FoWord(NamedTuple):
    letters: Word
    coefficient: ScalarRat = ONE


def _letters_to_monomial(word: Word) -> FoMonomial:
    return FoMonomial(word.count(1), word.count(2), word.count(3))


def _redex(word: Word, strategy: str):
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    for i in positions:
        if word[i] > word[i + 1]:
            return i
    return None


@lru_cache(maxsize=None)
def _normal_word(word: Word, strategy: str) -> Tuple[Tuple[FoMonomial, ScalarRat], ...]:
    i = _redex(word, strategy)
    if i is None:
        return ((_letters_to_monomial(word), ONE),)
    acc: Dict[FoMonomial, list] = defaultdict(list)
    for c, rep in RULES[(word[i], word[i + 1])]:
        for mono, c2 in _normal_word(word[:i] + rep + word[i + 2:], strategy):
            acc[mono].append(c * c2)
    out = []
    for mono, vals in acc.items():
        v = ScalarRat.sum(vals)
        if v:
            out.append((mono, v))
    return tuple(out)


class FoElem:
    """Element of U_q'(so3) in the PBW basis; zero coefficients are pruned."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, int, int], Scalarish] | None = None):
        clean: Dict[FoMonomial, ScalarRat] = {}
        if terms:
            for k, c in terms.items():
                if min(k) < 0:
                    raise ValueError(f"PBW exponents must be nonnegative, got {k}")
                c = ScalarRat.coerce(c)
                if c:
                    clean[FoMonomial(*k)] = c
        self.terms = clean

    @classmethod
    def unity(cls) -> "FoElem":
        return cls({(0, 0, 0): 1})

    @classmethod
    def generator(cls, k: int) -> "FoElem":
        if k not in (1, 2, 3):
            raise IndexOutOfRange(f"generator index must be 1, 2 or 3, got {k}")
        e = [0, 0, 0]
        e[k - 1] = 1
        return cls({tuple(e): 1})

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def component(self, t) -> ScalarRat:
        return self.terms.get(FoMonomial(*t), ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FoElem):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FoElem") -> "FoElem":
        acc = defaultdict(list)
        for t, c in list(self.terms.items()) + list(other.terms.items()):
            acc[t].append(c)
        return FoElem({t: ScalarRat.sum(v) for t, v in acc.items()})

    def __neg__(self) -> "FoElem":
        return FoElem({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "FoElem") -> "FoElem":
        return self + (-other)

    def scale(self, c: Scalarish) -> "FoElem":
        c = ScalarRat.coerce(c)
        return FoElem({t: v * c for t, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FoElem):
            return fo_mul(self, other)
        if isinstance(other, (int, ScalarRat)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarRat)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"FoElem({fo_to_text(self)})"

    def __str__(self) -> str:
        return fo_to_text(self)


def fo_normalize(words: Union[FoWord, Sequence[int], Iterable[FoWord]],
                 strategy: str = "leftmost") -> FoElem:
    """PBW normal form of a word or a linear combination of words.

    ``words`` may be a single :class:`FoWord`, a bare sequence of letters in
    {1, 2, 3}, or an iterable of :class:`FoWord`.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if isinstance(words, FoWord):
        words = [words]
    elif isinstance(words, (tuple, list)) and all(isinstance(x, int) for x in words):
        words = [FoWord(tuple(words))]
    acc = defaultdict(list)
    for w in words:
        letters = tuple(w.letters)
        if any(x not in (1, 2, 3) for x in letters):
            raise ValueError(f"letters must be 1, 2 or 3, got {letters}")
        for mono, c in _normal_word(letters, strategy):
            acc[mono].append(c * w.coefficient)
    return FoElem({t: ScalarRat.sum(v) for t, v in acc.items()})


def fo_mul(x: FoElem, y: FoElem) -> FoElem:
    words = [FoWord(a.word() + b.word(), ca * cb)
             for a, ca in x.terms.items() for b, cb in y.terms.items()]
    return fo_normalize(words)


# ---------------------------------------------------------------------------
# Embedding into A_q
# ---------------------------------------------------------------------------

_G_WORDS = {
    # G_k as sums of (s-power, first factor, second factor) with factors z_i^e
    1: [(-1, (3, -1), (1, -1)), (1, (3, -1), (1, 1)), (-1, (3, 1), (1, 1))],
    2: [(-1, (2, -1), (3, -1)), (1, (2, -1), (3, 1)), (-1, (2, 1), (3, 1))],
    3: [(-1, (1, -1), (2, -1)), (1, (1, -1), (2, 1)), (-1, (1, 1), (2, 1))],
}


@lru_cache(maxsize=None)
def gen_G(k: int) -> TorusElem:
    """G_k, built from its defining two-letter products and normal-ordered."""
    if k not in _G_WORDS:
        raise IndexOutOfRange(f"G index must be 1, 2 or 3, got {k}")
    out = TorusElem.zero()
    for spow, (i, a), (j, b) in _G_WORDS[k]:
        prod = mul(TorusElem.generator(i, a), TorusElem.generator(j, b))
        out = out + prod.scale(qpow(spow))
    return out


Q_MINUS_QINV = qpow(2) - qpow(-2)


@lru_cache(maxsize=None)
def gen_I(k: int) -> TorusElem:
    """Image of I_k in A_q, i.e. ``G_k / (q - q^-1)``."""
    return gen_G(k).scale(Q_MINUS_QINV.inv())


_power_lock = threading.Lock()
_G_POWERS: Dict[Tuple[int, int], TorusElem] = {}


def _gen_G_power(k: int, e: int) -> TorusElem:
    with _power_lock:
        hit = _G_POWERS.get((k, e))
    if hit is not None:
        return hit
    val = TorusElem.unity() if e == 0 else mul(_gen_G_power(k, e - 1), gen_G(k))
    with _power_lock:
        _G_POWERS[(k, e)] = val
    return val


def embed(x: FoElem) -> TorusElem:
    """Algebra homomorphism U_q'(so3) -> A_q.

    Products are formed from powers of the G_k, whose coefficients are Laurent
    polynomials, and divided by (q - q^-1)^degree at the end.
    """
    pairs = []
    for (h, m, n), c in x.terms.items():
        pairs.append((c / Q_MINUS_QINV ** (h + m + n), _G_monomial(h, m, n)))
    return linear_combination(pairs)


@lru_cache(maxsize=4096)
def _G_monomial(h: int, m: int, n: int) -> TorusElem:
    return mul(mul(_gen_G_power(1, h), _gen_G_power(2, m)), _gen_G_power(3, n))


def casimir_fo() -> FoElem:
    """C = -q^(1/2)(q - q^-1) I1 I2 I3 + q I1^2 + q^-1 I2^2 + q I3^2."""
    return FoElem({
        (1, 1, 1): -qpow(1) * Q_MINUS_QINV,
        (2, 0, 0): qpow(2),
        (0, 2, 0): qpow(-2),
        (0, 0, 2): qpow(2),
    })


def casimir_from_G() -> TorusElem:
    """C recovered from q^(-5/2)(q^2-1)^2 C = -G1G2G3 + q^(1/2)G1^2 + q^(-3/2)G2^2 + q^(1/2)G3^2."""
    g1, g2, g3 = gen_G(1), gen_G(2), gen_G(3)
    rhs = (-mul(mul(g1, g2), g3)
           + mul(g1, g1).scale(qpow(1))
           + mul(g2, g2).scale(qpow(-3))
           + mul(g3, g3).scale(qpow(1)))
    factor = qpow(-5) * (qpow(4) - 1) ** 2
    return rhs.scale(factor.inv())


@lru_cache(maxsize=None)
def casimir() -> TorusElem:
    c = embed(casimir_fo())
    if c != casimir_from_G():
        raise AssertionError("Casimir constructions disagree")
    return c


_casimir_lock = threading.Lock()
_casimir_powers: List[TorusElem] = []


def casimir_power(n: int) -> TorusElem:
    """C^n, extending a retained chain C^0, C^1, ... one product at a time."""
    if n < 0:
        raise ValueError("Casimir powers must be nonnegative")
    c = casimir()
    with _casimir_lock:
        if not _casimir_powers:
            _casimir_powers.append(TorusElem.unity())
        while len(_casimir_powers) <= n:
            _casimir_powers.append(mul(_casimir_powers[-1], c))
        return _casimir_powers[n]


def poly_in_casimir(coeffs: Sequence[Scalarish]) -> TorusElem:
    """``sum_j coeffs[j] * C^j`` with coefficients in ascending degree."""
    out = TorusElem.zero()
    for j, c in enumerate(coeffs):
        c = ScalarRat.coerce(c)
        if c:
            out = out + casimir_power(j).scale(c)
    return out


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _fmt_fo_mono(t) -> str:
    parts = []
    for name, e in zip(("I1", "I2", "I3"), t):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def fo_to_text(x: FoElem) -> str:
    if not x.terms:
        return "0"
    out = []
    for t, c in x.items():
        mono = _fmt_fo_mono(t)
        coef = c.pretty()
        if not mono:
            out.append(coef)
        elif coef == "1":
            out.append(mono)
        elif coef == "-1":
            out.append("-" + mono)
        else:
            out.append(f"{coef}*{mono}")
    return " + ".join(out)


def fo_to_json_obj(x: FoElem) -> dict:
    return {"terms": [{"e": list(t), "c": str(c)} for t, c in x.items()], "algebra": "fo"}


def fo_to_json(x: FoElem) -> str:
    return json.dumps(fo_to_json_obj(x), separators=(",", ":"))


def fo_from_json(text: str) -> FoElem:
    obj = json.loads(text)
    return FoElem({tuple(e["e"]): ScalarRat.parse(e["c"]) for e in obj["terms"]})
