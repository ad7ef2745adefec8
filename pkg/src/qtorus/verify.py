"""Desk-scale replay of the algebraic identities, producing pass/fail reports.

Each ``verify_*`` function runs one family of checks and returns a
:class:`VerifyReport`.  Failures are reported, never raised; the first
failing case is kept as a JSON-ready counterexample so it can be replayed
through the CLI.  All randomness is drawn from ``random.Random(seed)``.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from .coeff import ONE, ScalarRat, one_minus_qpow, q_int_pow, qpow
from .errors import DiagonalNotInLq, ZeroPolynomial
from .fo import (FoElem, FoWord, casimir, casimir_power, embed, fo_normalize, gen_G,
                 gen_I, poly_in_casimir)
from .liecert import cert_monomial_traced, lie_eval
from .torus import (Monomial, TorusElem, bracket, commutation_exponent, mul,
                    phi, pi_project, to_json_obj, to_text)


@dataclass
class VerifyReport:
    check_name: str
    passed: bool
    cases_run: int
    counterexample: Optional[dict] = None
    elapsed: float = 0.0  # seconds

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed report needs a counterexample")

    def to_json_obj(self) -> dict:
        return {
            "name": self.check_name,
            "passed": self.passed,
            "cases": self.cases_run,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "counterexample": self.counterexample,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.check_name}: {self.cases_run} cases in {self.elapsed * 1000:.0f} ms"
        if self.counterexample is not None:
            line += "\n  counterexample: " + json.dumps(self.counterexample, separators=(",", ":"))
        return line


class _Run:
    """Accumulates cases and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.counterexample = None
        self.t0 = time.perf_counter()

    def check(self, ok: bool, payload: Callable[[], dict]) -> bool:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = payload()
        return ok

    def report(self) -> VerifyReport:
        return VerifyReport(self.name, self.counterexample is None, self.cases,
                            self.counterexample, time.perf_counter() - self.t0)


def _elem(x: TorusElem) -> dict:
    return to_json_obj(x)


def _product_from(mono_mul_impl) -> Callable[[TorusElem, TorusElem], TorusElem]:
    if mono_mul_impl is None:
        return mul

    def product(x: TorusElem, y: TorusElem) -> TorusElem:
        out = TorusElem.zero()
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                c, t = mono_mul_impl(a, b)
                out = out + TorusElem({t: ca * cb * c})
        return out

    return product


# ---------------------------------------------------------------------------
# Random generation
# ---------------------------------------------------------------------------

def random_scalar(rng: random.Random) -> ScalarRat:
    """A nonzero scalar ``(a/b) * s^k``, times ``(1 - q^j)^(+-1)`` with
    probability 1/3; ``a`` in [-5, 5] minus 0, ``b`` in [1, 5], ``k`` in
    [-4, 4], ``j`` in [1, 3]."""
    a = rng.choice([x for x in range(-5, 6) if x])
    b = rng.randint(1, 5)
    c = ScalarRat.from_fraction(a, b).mul_spow(rng.randint(-4, 4))
    if rng.random() < 1 / 3:
        f = one_minus_qpow(rng.randint(1, 3))
        c = c * (f if rng.random() < 0.5 else f.inv())
    return c


def random_torus_elem(rng: random.Random, max_terms: int = 3, bound: int = 3) -> TorusElem:
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        t = tuple(rng.randint(-bound, bound) for _ in range(3))
        out[t] = random_scalar(rng)
    return TorusElem(out)


def random_fo_elem(rng: random.Random, max_terms: int = 2, bound: int = 2) -> FoElem:
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        t = tuple(rng.randint(0, bound) for _ in range(3))
        out[t] = random_scalar(rng)
    return FoElem(out)


def random_casimir_poly(rng: random.Random, degree: int = 3) -> List[ScalarRat]:
    """Coefficient list of a nonzero polynomial of degree <= ``degree``.

    The actual degree is uniform in [0, degree]; the leading coefficient is a
    :func:`random_scalar`, lower ones are zero with probability 1/3.
    """
    d = rng.randint(0, degree)
    coeffs = [ScalarRat.from_int(0) if rng.random() < 1 / 3 else random_scalar(rng)
              for _ in range(d)]
    coeffs.append(random_scalar(rng))
    return coeffs


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def verify_presentations(bound: int = 6, mono_mul_impl=None) -> VerifyReport:
    """Torus relations, reordering laws for |m|, |n| <= bound, FO relations.

    ``mono_mul_impl`` substitutes the monomial product (used to confirm that a
    broken product is caught).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    run = _Run("presentations")
    prod = _product_from(mono_mul_impl)
    z = TorusElem.generator
    q = q_int_pow

    for i, j in ((1, 2), (2, 3), (3, 1)):
        lhs = prod(z(i), z(j))
        rhs = prod(z(j), z(i)).scale(q(1))
        run.check(lhs == rhs, lambda: {"relation": f"z{i} z{j} = q z{j} z{i}",
                                       "residual": _elem(lhs - rhs)})
    for k in (1, 2, 3):
        a, b = prod(z(k), z(k, -1)), prod(z(k, -1), z(k))
        one = TorusElem.unity()
        run.check(a == one and b == one,
                  lambda: {"relation": f"z{k} z{k}^-1 = 1 = z{k}^-1 z{k}",
                           "residual": _elem(a - one), "residual_other": _elem(b - one)})

    laws = (((1, 2), 1), ((2, 3), 1), ((1, 3), -1))
    for (i, j), sign in laws:
        for m in range(-bound, bound + 1):
            for n in range(-bound, bound + 1):
                lhs = prod(z(i, m), z(j, n))
                rhs = prod(z(j, n), z(i, m)).scale(q(sign * m * n))
                run.check(lhs == rhs, lambda: {
                    "relation": f"z{i}^m z{j}^n = q^({sign}mn) z{j}^n z{i}^m",
                    "inputs": {"m": m, "n": n}, "residual": _elem(lhs - rhs)})

    g = {k: gen_I(k) for k in (1, 2, 3)}
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        res = prod(g[a], g[b]).scale(qpow(1)) - prod(g[b], g[a]).scale(qpow(-1)) - g[c]
        run.check(not res, lambda: {
            "relation": f"q^(1/2) I{a} I{b} - q^(-1/2) I{b} I{a} = I{c}", "residual": _elem(res)})
    return run.report()


def _closed_form_case(run: _Run, a, b) -> None:
    x, y = TorusElem.monomial(*a), TorusElem.monomial(*b)
    xy, yx = mul(x, y), mul(y, x)
    br = bracket(x, y)
    oracle = xy - yx
    H = commutation_exponent(a, b)
    via_h = xy.scale(one_minus_qpow(H)) if H else TorusElem.zero()
    ok = br == oracle and br == via_h
    if a[0] + b[0] == a[1] + b[1] == a[2] + b[2]:
        ok = ok and not br
    run.check(ok, lambda: {"inputs": {"a": list(a), "b": list(b)}, "bracket": _elem(br),
                           "xy_minus_yx": _elem(oracle), "one_minus_qH_xy": _elem(via_h)})


def verify_closed_forms(bound: int = 2, random_cases: int = 500, random_bound: int = 4,
                        seed: int = 0) -> VerifyReport:
    """Bracket closed form against xy - yx, the (1 - q^H) identity, and the
    vanishing law for pairs with h+u = m+v = n+w.

    Exhaustive over ``[-bound, bound]^6``, then ``random_cases`` seeded pairs in
    ``[-random_bound, random_bound]^6``; each random pair also contributes an
    opposite-sum partner so the vanishing law is exercised at the larger bound.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    run = _Run("closed_forms")
    rng_vals = range(-bound, bound + 1)
    monos = list(itertools.product(rng_vals, repeat=3))
    for a in monos:
        for b in monos:
            _closed_form_case(run, a, b)
    rng = random.Random(seed)
    R = random_bound
    for _ in range(random_cases):
        a = tuple(rng.randint(-R, R) for _ in range(3))
        b = tuple(rng.randint(-R, R) for _ in range(3))
        _closed_form_case(run, a, b)
        t = rng.randint(-R, R)
        _closed_form_case(run, a, tuple(t - e for e in a))
    return run.report()


def verify_certificates(bound: int = 3) -> VerifyReport:
    """Every non-diagonal monomial in ``[-bound, bound]^3`` has a certificate
    evaluating to exactly that monomial; diagonal ones are rejected."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    run = _Run("certificates")
    rejected_ok = True
    bad_diag = None
    for h, m, n in itertools.product(range(-bound, bound + 1), repeat=3):
        if h == m == n:
            try:
                cert_monomial_traced(h, m, n)
            except DiagonalNotInLq:
                continue
            rejected_ok = False
            bad_diag = bad_diag or [h, m, n]
            continue
        tree, inverted = cert_monomial_traced(h, m, n)
        val = lie_eval(tree)
        target = TorusElem.monomial(h, m, n)
        ok = val == target and not pi_project(val) and all(k != 0 for k in inverted)
        run.check(ok, lambda: {"inputs": [h, m, n], "evaluation": _elem(val),
                               "inverted_exponents": list(inverted)})
    if not rejected_ok and run.counterexample is None:
        run.counterexample = {"diagonal_accepted": bad_diag}
    return run.report()


def casimir_leading_coefficient(n: int) -> ScalarRat:
    """(-1)^n q^(2n(n+1)) (q^2-1)^(-2n), the (2n,2n,2n) coefficient of C^n.

    C contributes -q^4 (q^2-1)^-2 per factor and reordering
    (z3 z2 z1)^(2j) past (z3 z2 z1)^2 adds q^(4j).
    """
    c = q_int_pow(2 * n * (n + 1)) * ((q_int_pow(2) - 1) ** (2 * n)).inv()
    return -c if n % 2 else c


def casimir_leading_coefficient_stated(n: int) -> ScalarRat:
    """(-1)^n q^(2(n^2-n+2)) (q^2-1)^(-2n), the closed form as usually quoted.

    It agrees with :func:`casimir_leading_coefficient` only at n = 1.
    """
    c = q_int_pow(2 * (n * n - n + 2)) * ((q_int_pow(2) - 1) ** (2 * n)).inv()
    return -c if n % 2 else c


LEADING_FORMULAS = {"derived": casimir_leading_coefficient,
                    "stated": casimir_leading_coefficient_stated}


def verify_casimir_gradation(n_max: int = 4, leading: str = "derived") -> VerifyReport:
    """C^n has the predicted (2n,2n,2n) coefficient and the rest of its support
    in even total degrees between -6n and 6n-2.

    ``leading`` picks the closed form the top coefficient is compared with.
    The support check subtracts the actual top component, so it does not
    depend on that choice.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    formula = LEADING_FORMULAS[leading]
    run = _Run("casimir_gradation")
    for n in range(1, n_max + 1):
        cn = casimir_power(n)
        lead = formula(n)
        top = Monomial(2 * n, 2 * n, 2 * n)
        actual = cn.component(top)
        rest = cn - TorusElem.monomial(*top, actual)
        degrees = sorted({t.total_degree() for t in rest.terms})
        ok = actual == lead and all(N % 2 == 0 and -6 * n <= N <= 6 * n - 2 for N in degrees)
        run.check(ok, lambda: {"inputs": {"n": n}, "expected_leading": str(lead),
                               "actual_leading": str(actual),
                               "remainder_degrees": degrees})
    return run.report()


DEFAULT_POLYNOMIALS = (
    (1,),                      # 1
    (0, 1),                    # C
    (0, 0, 1),                 # C^2
    (0, 0, 0, 1),              # C^3
    (1, 1),                    # C + 1
    (0, -q_int_pow(1), 1),     # C^2 - q C
    (0, 1, 0, qpow(1)),        # q^(1/2) C^3 + C
)


def verify_not_lie(polynomials: Optional[Sequence[Sequence]] = None, trials: int = 0,
                   degree: int = 3, seed: int = 0) -> VerifyReport:
    """pi(p(C)) != 0 for each given polynomial and for ``trials`` seeded random
    nonzero polynomials of degree <= ``degree`` (see :func:`random_casimir_poly`).

    Beyond nonvanishing, the (2d,2d,2d) component of pi(p(C)) must equal the
    leading coefficient of p times that of C^d.
    """
    polys = [[ScalarRat.coerce(c) for c in p] for p in (polynomials or ())]
    for p in polys:
        if not any(p):
            raise ZeroPolynomial("polynomial coefficients are all zero")
    rng = random.Random(seed)
    polys += [random_casimir_poly(rng, degree) for _ in range(trials)]
    run = _Run("not_lie")
    for p in polys:
        d = max(j for j, c in enumerate(p) if c)
        proj = pi_project(poly_in_casimir(p))
        expected_top = p[d] * (casimir_leading_coefficient(d) if d else ONE)
        ok = bool(proj) and proj.component((2 * d,) * 3) == expected_top
        run.check(ok, lambda: {"inputs": [str(c) for c in p], "projection": _elem(proj)})
    return run.report()


def verify_phi_and_center(samples: int = 200, seed: int = 0) -> VerifyReport:
    """Phi^3 = id and Phi multiplicative on random elements, Phi permutes the
    G_k, and C commutes with the I_k and with random embedded elements."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    run = _Run("phi_and_center")
    rng = random.Random(seed)
    C = casimir()
    for k in (1, 2, 3):
        br = bracket(C, gen_I(k))
        run.check(not br, lambda: {"inputs": {"bracket_C_with_I": k}, "value": _elem(br)})
    # Phi sends z3 z1 to z1 z2, so G1 -> G3 -> G2 -> G1
    for k in (1, 2, 3):
        img = phi(gen_G(k))
        run.check(img == gen_G((k + 1) % 3 + 1), lambda: {"inputs": {"phi_of_G": k}, "value": _elem(img)})
    for _ in range(samples):
        x = random_torus_elem(rng)
        y = random_torus_elem(rng)
        x3 = phi(phi(phi(x)))
        lhs, rhs = phi(mul(x, y)), mul(phi(x), phi(y))
        run.check(x3 == x and lhs == rhs, lambda: {
            "inputs": {"x": _elem(x), "y": _elem(y)},
            "phi_cubed_x": _elem(x3), "phi_xy_minus_phix_phiy": _elem(lhs - rhs)})
    for _ in range(max(1, samples // 10)):
        f = random_fo_elem(rng)
        br = bracket(C, embed(f))
        run.check(not br, lambda: {"inputs": {"fo": {"terms": [
            {"e": list(t), "c": str(c)} for t, c in f.items()]}}, "value": _elem(br)})
    return run.report()


def _embed_word(word, memo: dict) -> TorusElem:
    word = tuple(word)
    if word not in memo:
        memo[word] = mul(_embed_word(word[:-1], memo), gen_I(word[-1])) if word else TorusElem.unity()
    return memo[word]


def verify_confluence(max_len: int = 5) -> VerifyReport:
    """Every word of length <= max_len over I1, I2, I3 normalizes the same way
    under leftmost and rightmost rewriting, and the normal form embeds to the
    product of the embedded letters."""
    run = _Run("confluence")
    memo: dict = {}
    for length in range(max_len + 1):
        for word in itertools.product((1, 2, 3), repeat=length):
            left = fo_normalize(FoWord(word), "leftmost")
            right = fo_normalize(FoWord(word), "rightmost")
            direct = _embed_word(word, memo)
            emb = embed(left)
            run.check(left == right and emb == direct, lambda: {
                "inputs": {"word": [f"I{x}" for x in word]},
                "leftmost": [[list(t), str(c)] for t, c in left.items()],
                "rightmost": [[list(t), str(c)] for t, c in right.items()],
                "embed_residual": _elem(emb - direct)})
    return run.report()


def verify_roundtrip(samples: int = 500, seed: int = 0) -> VerifyReport:
    """Text and JSON serializations evaluate back to the same element."""
    from .expr import evaluate
    from .torus import from_json, to_json

    run = _Run("roundtrip")
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_torus_elem(rng, max_terms=4, bound=4)
        text = to_text(x)
        back = evaluate(text)
        js = to_json(x)
        ok = back == x and from_json(js) == x and to_json(from_json(js)) == js
        run.check(ok, lambda: {"inputs": _elem(x), "text": text, "parsed": _elem(back)})
    return run.report()


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

def _suite_table(bound=None, nmax=None, seed=0, leading="derived"):
    return {
        "presentations": lambda: verify_presentations(bound or 6),
        "closed-forms": lambda: verify_closed_forms(bound or 2, 500, 4, seed),
        "certificates": lambda: verify_certificates(bound or 3),
        "casimir": lambda: verify_casimir_gradation(nmax or 4, leading),
        "not-lie": lambda: verify_not_lie(DEFAULT_POLYNOMIALS, 25, 3, seed),
        "phi-center": lambda: verify_phi_and_center(200, seed),
        "confluence": lambda: verify_confluence(5),
        "roundtrip": lambda: verify_roundtrip(500, seed),
    }


SUITE_NAMES = tuple(_suite_table())


def run_suite(names: Optional[Sequence[str]] = None, bound: Optional[int] = None,
              nmax: Optional[int] = None, seed: int = 0,
              leading: str = "derived") -> List[VerifyReport]:
    """Run the named checks (all by default) in the fixed suite order.

    ``bound`` overrides the exhaustive bound of presentations, closed-forms
    and certificates; ``nmax`` the largest Casimir power checked; ``leading``
    the closed form for the Casimir top coefficient (see ``LEADING_FORMULAS``).
    """
    table = _suite_table(bound, nmax, seed, leading)
    names = list(names) if names else list(table)
    unknown = [n for n in names if n not in table]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}; choose from {list(table)}")
    return [table[n]() for n in SUITE_NAMES if n in names]


def reports_to_json(reports: Sequence[VerifyReport]) -> str:
    return json.dumps({"checks": [r.to_json_obj() for r in reports]}, separators=(",", ":"))
