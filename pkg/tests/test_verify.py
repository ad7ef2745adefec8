import json
import random

import pytest

from qtorus.coeff import q_int_pow
from qtorus.errors import ZeroPolynomial
from qtorus.torus import Monomial, mono_mul
from qtorus.verify import (SUITE_NAMES, VerifyReport, casimir_leading_coefficient,
                           casimir_leading_coefficient_stated, random_casimir_poly,
                           reports_to_json, run_suite, verify_casimir_gradation,
                           verify_certificates, verify_closed_forms, verify_not_lie,
                           verify_phi_and_center, verify_presentations, verify_roundtrip)


def _bad_mono_mul(a, b):
    c, t = mono_mul(a, b)
    if a[1] and b[0]:
        c = c * q_int_pow(1)
    return c, t


def test_presentations_pass():
    r = verify_presentations(3)
    assert r.passed and r.counterexample is None and r.cases_run > 0


def test_corrupted_product_is_caught():
    r = verify_presentations(3, mono_mul_impl=_bad_mono_mul)
    assert not r.passed
    assert r.counterexample is not None
    json.dumps(r.counterexample)


def test_closed_forms_small():
    assert verify_closed_forms(1, 50, 3, seed=1).passed


def test_certificates_small():
    r = verify_certificates(1)
    assert r.passed and r.cases_run == 27 - 3


def test_casimir_leading_formulas():
    assert casimir_leading_coefficient(1) == casimir_leading_coefficient_stated(1)
    assert casimir_leading_coefficient(2) != casimir_leading_coefficient_stated(2)
    assert verify_casimir_gradation(3).passed
    r = verify_casimir_gradation(3, "stated")
    assert not r.passed and r.counterexample["inputs"] == {"n": 2}


def test_not_lie_and_zero_polynomial():
    assert verify_not_lie([(0, 1), (1, 0, 1)], trials=3, degree=2, seed=2).passed
    with pytest.raises(ZeroPolynomial):
        verify_not_lie([(0, 0)])


def test_random_casimir_poly_nonzero():
    rng = random.Random(3)
    for _ in range(50):
        p = random_casimir_poly(rng, 3)
        assert any(p) and len(p) <= 4


def test_phi_and_center_small():
    assert verify_phi_and_center(10, seed=4).passed


def test_roundtrip_small():
    assert verify_roundtrip(40, seed=5).passed


def test_reports_are_deterministic():
    a = run_suite(["certificates", "not-lie"], bound=1, seed=7)
    b = run_suite(["not-lie", "certificates"], bound=1, seed=7)
    assert [r.check_name for r in a] == [r.check_name for r in b] == ["certificates", "not_lie"]
    assert [r.counterexample for r in a] == [r.counterexample for r in b]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite(["nope"])
    assert "confluence" in SUITE_NAMES


def test_report_serialization():
    r = VerifyReport("demo", False, 3, {"inputs": [1]}, 0.0125)
    obj = json.loads(reports_to_json([r]))
    assert obj == {"checks": [{"name": "demo", "passed": False, "cases": 3,
                               "elapsed_ms": 12.5, "counterexample": {"inputs": [1]}}]}
    assert r.to_text().startswith("FAIL demo: 3 cases")


def test_mono_mul_sanity():
    c, t = mono_mul((0, 1, 0), (1, 0, 0))
    assert t == Monomial(1, 1, 0) and c == q_int_pow(1)
