import itertools
import random

import pytest

from qtorus.coeff import ONE, ZERO, q_int_pow, qpow
from qtorus.fo import (RULES, FoElem, FoWord, Q_MINUS_QINV, casimir, casimir_from_G, casimir_fo,
                       casimir_power, embed, fo_from_json, fo_mul, fo_normalize, fo_to_json,
                       fo_to_text, gen_G, gen_I, poly_in_casimir)
from qtorus.torus import Monomial, TorusElem, bracket, mul, phi, pi_project
from qtorus.verify import random_fo_elem


def test_rules_reproduce_defining_relations():
    # q^(1/2) I1 I2 - q^(-1/2) I2 I1 = I3 and its cyclic companions
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        lhs = (fo_normalize(FoWord((a, b), qpow(1))) - fo_normalize(FoWord((b, a), qpow(-1))))
        assert lhs == FoElem.generator(c)


def test_rules_only_rewrite_misordered_pairs():
    assert set(RULES) == {(2, 1), (3, 2), (3, 1)}


def test_normal_words_are_fixed():
    for t in itertools.product(range(3), repeat=3):
        word = (1,) * t[0] + (2,) * t[1] + (3,) * t[2]
        assert fo_normalize(word) == FoElem({t: ONE})


def test_known_normal_form():
    assert fo_normalize((2, 1)) == FoElem({(1, 1, 0): q_int_pow(1), (0, 0, 1): -qpow(1)})
    assert fo_to_text(fo_normalize((2, 1))) == "q*I1 I2 + -q^(1/2)*I3"


def test_strategies_agree():
    for length in range(5):
        for word in itertools.product((1, 2, 3), repeat=length):
            assert fo_normalize(word, "leftmost") == fo_normalize(word, "rightmost")


def test_unknown_strategy_and_letter():
    with pytest.raises(ValueError):
        fo_normalize((1, 2), "middle")
    with pytest.raises(ValueError):
        fo_normalize((1, 4))


def test_fo_mul_associative():
    rng = random.Random(11)
    for _ in range(20):
        x, y, z = (random_fo_elem(rng, 2, 1) for _ in range(3))
        assert fo_mul(fo_mul(x, y), z) == fo_mul(x, fo_mul(y, z))


def test_embedding_is_homomorphism():
    rng = random.Random(12)
    for _ in range(200):
        x, y = random_fo_elem(rng, 2, 1), random_fo_elem(rng, 2, 1)
        assert embed(fo_mul(x, y)) == mul(embed(x), embed(y))


def test_embedding_of_generators():
    for k in (1, 2, 3):
        assert embed(FoElem.generator(k)) == gen_I(k)
        assert gen_I(k).scale(Q_MINUS_QINV) == gen_G(k)
        assert not pi_project(gen_I(k))


def test_relations_hold_in_torus():
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        lhs = mul(gen_I(a), gen_I(b)).scale(qpow(1)) - mul(gen_I(b), gen_I(a)).scale(qpow(-1))
        assert lhs == gen_I(c)


def test_G_normal_forms():
    G2 = (TorusElem.monomial(-1, -1, 0, qpow(1)) + TorusElem.monomial(1, -1, 0, qpow(-1))
          + TorusElem.monomial(1, 1, 0, qpow(1)))
    G3 = (TorusElem.monomial(0, -1, -1, qpow(1)) + TorusElem.monomial(0, 1, -1, qpow(-1))
          + TorusElem.monomial(0, 1, 1, qpow(1)))
    assert gen_G(2) == G2
    assert gen_G(3) == G3


def test_phi_cycles_G():
    assert phi(gen_G(1)) == gen_G(3)
    assert phi(gen_G(3)) == gen_G(2)
    assert phi(gen_G(2)) == gen_G(1)


def test_casimir_constructions_agree_and_shape():
    C = casimir()
    assert embed(casimir_fo()) == casimir_from_G() == C
    assert set(C.terms) == {Monomial(2, 2, 2), Monomial(0, 0, 0), Monomial(-2, -2, -2)}
    lead = -q_int_pow(4) * ((q_int_pow(2) - 1) ** 2).inv()
    assert C.component((2, 2, 2)) == lead


def test_casimir_is_central():
    C = casimir()
    for k in (1, 2, 3):
        assert not bracket(C, gen_I(k))


def test_casimir_powers_chain():
    C = casimir()
    assert casimir_power(0) == TorusElem.unity()
    assert casimir_power(3) == mul(mul(C, C), C)
    with pytest.raises(ValueError):
        casimir_power(-1)


def test_poly_in_casimir():
    C = casimir()
    p = poly_in_casimir([1, 0, qpow(1)])
    assert p == TorusElem.unity() + mul(C, C).scale(qpow(1))
    assert poly_in_casimir([ZERO]) == TorusElem.zero()


def test_json_roundtrip():
    rng = random.Random(13)
    for _ in range(30):
        x = random_fo_elem(rng)
        assert fo_from_json(fo_to_json(x)) == x
    assert '"algebra":"fo"' in fo_to_json(FoElem.generator(1))
