import itertools
import random

import pytest

from qtorus.coeff import ONE, ZERO, ScalarRat, q_int_pow, qpow
from qtorus.errors import IndexOutOfRange
from qtorus.fo import gen_G
from qtorus.torus import (Monomial, TorusElem, bracket, from_json, in_Lq, lambda_decompose,
                          mono_mul, mul, phi, pi_project, to_json, to_text, z3grade_component)
from qtorus.verify import random_torus_elem

# Letter-level oracle: a monomial is a word of (index, +-1) letters, and
# adjacent letters are swapped into the order z3, z2, z1 using only the
# defining relations z2 z3 = q z3 z2, z1 z3 = q^-1 z3 z1, z1 z2 = q z2 z1
# (and their inverse-letter versions, where each sign flips the exponent).
_SWAP = {(2, 3): 1, (1, 3): -1, (1, 2): 1}


def _letters(t):
    h, m, n = t
    out = []
    for idx, e in ((3, h), (2, m), (1, n)):
        out += [(idx, 1 if e > 0 else -1)] * abs(e)
    return out


def _oracle_mono_mul(a, b):
    word = _letters(a) + _letters(b)
    qexp = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            (x, ex), (y, ey) = word[i], word[i + 1]
            if x < y:
                # z_x^ex z_y^ey = q^(k ex ey) z_y^ey z_x^ex when z_x z_y = q^k z_y z_x
                qexp += _SWAP[(x, y)] * ex * ey
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
    exps = {1: 0, 2: 0, 3: 0}
    for idx, e in word:
        exps[idx] += e
    return q_int_pow(qexp), Monomial(exps[3], exps[2], exps[1])


def test_defining_relations():
    z1, z2, z3 = (TorusElem.generator(k) for k in (1, 2, 3))
    q = q_int_pow(1)
    assert mul(z2, z3) == mul(z3, z2).scale(q)
    assert mul(z1, z3) == mul(z3, z1).scale(q.inv())
    assert mul(z1, z2) == mul(z2, z1).scale(q)
    for k in (1, 2, 3):
        assert mul(TorusElem.generator(k), TorusElem.generator(k, -1)) == TorusElem.unity()


def test_mono_mul_matches_letter_oracle():
    rng = random.Random(5)
    for _ in range(300):
        a = tuple(rng.randint(-3, 3) for _ in range(3))
        b = tuple(rng.randint(-3, 3) for _ in range(3))
        assert mono_mul(a, b) == _oracle_mono_mul(a, b)


def test_associativity_random():
    rng = random.Random(6)
    for _ in range(60):
        x, y, z = (random_torus_elem(rng, 3, 2) for _ in range(3))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_bracket_is_commutator():
    rng = random.Random(7)
    for _ in range(100):
        x, y = random_torus_elem(rng), random_torus_elem(rng)
        assert bracket(x, y) == mul(x, y) - mul(y, x)


def test_bracket_vanishes_on_opposite_exponents():
    for a in itertools.product(range(-2, 3), repeat=3):
        b = tuple(-e for e in a)
        assert not bracket(TorusElem.monomial(*a), TorusElem.monomial(*b))


def test_phi_on_generators_and_letter_oracle():
    z1, z2, z3 = (TorusElem.generator(k) for k in (1, 2, 3))
    assert phi(z3) == z1 and phi(z2) == z3 and phi(z1) == z2
    # phi of a monomial is the normal form of the relabelled word
    for t in itertools.product(range(-2, 3), repeat=3):
        word = [(k % 3 + 1, e) for k, e in _letters(t)]
        expect = TorusElem.unity()
        for idx, e in word:
            expect = mul(expect, TorusElem.generator(idx, e))
        assert phi(TorusElem.monomial(*t)) == expect


def test_phi_order_three_and_multiplicative():
    rng = random.Random(8)
    for _ in range(50):
        x, y = random_torus_elem(rng), random_torus_elem(rng)
        assert phi(phi(phi(x))) == x
        assert phi(mul(x, y)) == mul(phi(x), phi(y))


def test_negative_power_of_monomial():
    x = TorusElem.monomial(1, 2, -1, qpow(3))
    assert mul(x, x ** -1) == TorusElem.unity()
    assert x ** 0 == TorusElem.unity()


def test_generator_index_checked():
    with pytest.raises(IndexOutOfRange):
        TorusElem.generator(4)


def test_gradations():
    x = TorusElem.monomial(1, 0, 0) + TorusElem.monomial(1, 1, 0, 3) + TorusElem.monomial(0, 0, -1)
    parts = lambda_decompose(x)
    assert sorted(parts) == [-1, 1, 2]
    assert parts[2] == TorusElem.monomial(1, 1, 0, 3)
    assert z3grade_component(x, (1, 1, 0)) == ScalarRat.coerce(3)
    assert z3grade_component(x, (5, 5, 5)) == ZERO


def test_lambda_grading_is_multiplicative():
    rng = random.Random(9)
    for _ in range(30):
        x, y = random_torus_elem(rng), random_torus_elem(rng)
        for N, xn in lambda_decompose(x).items():
            for M, ym in lambda_decompose(y).items():
                assert set(lambda_decompose(mul(xn, ym))) <= {N + M}


def test_pi_and_membership():
    diag = TorusElem.monomial(2, 2, 2)
    off = TorusElem.monomial(1, 2, 1)
    assert pi_project(diag + off) == diag
    assert in_Lq(off) == (True, TorusElem.zero())
    ok, witness = in_Lq(diag + off)
    assert not ok and witness == diag


def test_text_format_of_G1():
    assert to_text(gen_G(1)) == "q^(-1/2)*z3 z1 + q^(1/2)*z3^-1 z1 + q^(-1/2)*z3^-1 z1^-1"
    assert to_text(TorusElem.zero()) == "0"


def test_json_roundtrip():
    rng = random.Random(10)
    for _ in range(50):
        x = random_torus_elem(rng)
        assert from_json(to_json(x)) == x
        assert to_json(from_json(to_json(x))) == to_json(x)


def test_zero_coefficients_are_dropped():
    x = TorusElem({Monomial(1, 0, 0): ONE, Monomial(0, 1, 0): ZERO})
    assert list(x.terms) == [Monomial(1, 0, 0)]
    assert not (x - x)
