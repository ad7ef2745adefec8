import itertools
import random

import pytest

from qtorus.coeff import ONE, q_int_pow
from qtorus.errors import DiagonalNotInLq, InvalidPair
from qtorus.expr import parse_lie
from qtorus.liecert import (Z1, Z2, Z3, Bracket, Leaf, Scale, Sum, ad_power, cert_comm0,
                            cert_commT, cert_monomial, cert_monomial_traced, cert_pair,
                            cert_single_power, lie_eval, lie_phi, lie_to_text, size)
from qtorus.torus import TorusElem, phi, pi_project
from qtorus.verify import random_scalar


def test_comm0_tree_and_value():
    tree = cert_comm0()
    assert isinstance(tree, Scale)
    assert tree.body == Bracket(Z3, Bracket(Z2, Bracket(Z2, Z1)))
    assert lie_eval(tree) == TorusElem.monomial(1, 2, 1)


def test_phi_of_comm0():
    shifted = lie_phi(cert_comm0())
    c = (ONE - q_int_pow(1)) ** -3
    assert shifted == Scale(c, Bracket(Z1, Bracket(Z3, Bracket(Z3, Z2))))
    assert lie_eval(shifted) == phi(TorusElem.monomial(1, 2, 1))


@pytest.mark.parametrize("T", range(-4, 5))
def test_commT(T):
    assert lie_eval(cert_commT(T)) == TorusElem.monomial(-1, -2, T)


@pytest.mark.parametrize("axis", (1, 2, 3))
@pytest.mark.parametrize("h", (-3, -2, -1, 1, 2, 3))
def test_single_powers(axis, h):
    expect = TorusElem.generator(axis, h)
    assert lie_eval(cert_single_power(axis, h)) == expect


def test_pairs():
    for (i, j), a, b in itertools.product(((3, 2), (2, 1), (3, 1)), (-2, 1, 3), (-1, 2)):
        t = [0, 0, 0]
        t[3 - i], t[3 - j] = a, b
        assert lie_eval(cert_pair((i, j), a, b)) == TorusElem.monomial(*t)


def test_invalid_requests():
    with pytest.raises(InvalidPair):
        cert_pair((1, 2), 1, 1)
    with pytest.raises(DiagonalNotInLq):
        cert_monomial(2, 2, 2)
    with pytest.raises(DiagonalNotInLq):
        cert_single_power(1, 0)
    with pytest.raises(ValueError):
        Leaf(4)


def test_all_certificates_in_cube():
    count = 0
    for t in itertools.product(range(-2, 3), repeat=3):
        if t[0] == t[1] == t[2]:
            continue
        tree, inverted = cert_monomial_traced(*t)
        val = lie_eval(tree)
        assert val == TorusElem.monomial(*t)
        assert not pi_project(val)
        assert 0 not in inverted
        count += 1
    assert count == 120


def test_leaves_are_generators_only():
    def leaves(e):
        if isinstance(e, Leaf):
            yield e
        elif isinstance(e, Bracket):
            yield from leaves(e.left)
            yield from leaves(e.right)
        elif isinstance(e, Scale):
            yield from leaves(e.body)
        else:
            for p in e.parts:
                yield from leaves(p)

    for leaf in leaves(cert_monomial(-2, 3, 1)):
        assert leaf.sign in (1, -1)


def _random_tree(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return Leaf(rng.randint(1, 3), rng.choice((1, -1)))
    kind = rng.random()
    if kind < 0.6:
        return Bracket(_random_tree(rng, depth - 1), _random_tree(rng, depth - 1))
    if kind < 0.8:
        return Scale(random_scalar(rng), _random_tree(rng, depth - 1))
    return Sum(tuple(_random_tree(rng, depth - 1) for _ in range(rng.randint(2, 3))))


def test_phi_naturality_on_random_trees():
    rng = random.Random(14)
    for _ in range(120):
        tree = _random_tree(rng, 4)
        assert lie_eval(lie_phi(tree)) == phi(lie_eval(tree))


def test_text_roundtrip():
    rng = random.Random(15)
    for t in ((1, 2, 1), (-1, 3, 0), (2, -2, 1)):
        tree = cert_monomial(*t)
        assert parse_lie(lie_to_text(tree)) == tree
    for _ in range(30):
        tree = _random_tree(rng, 3)
        assert lie_eval(parse_lie(lie_to_text(tree))) == lie_eval(tree)


def test_ad_power_and_size():
    e = ad_power(Z1, 3, Z2)
    assert e == Bracket(Z1, Bracket(Z1, Bracket(Z1, Z2)))
    assert size(e) == 7
