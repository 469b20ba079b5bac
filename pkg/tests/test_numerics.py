"""Digamma/trigamma layer, numeric identity verification, derivative checks,
and the residual sum.  mpmath serves as the independent reference."""

import math
import random
from fractions import Fraction as F

import mpmath
import pytest

from hbe.catalog import EvalPoint, rhs_closed
from hbe.errors import DomainError, PoleError
from hbe.exact import ExactParam, harmonic, harmonic2, harmonic2_exact
from hbe.numerics import (
    EULER_GAMMA,
    ZETA2,
    binom_real,
    derivative_check,
    digamma,
    harmonic2_num,
    harmonic_num,
    random_suite,
    residual_sum,
    residual_tail_bound,
    trigamma,
    validate_half_integer_order2,
    verify_numeric,
)

# high-precision partial sum of 4^j/(j^2 C(2j,j)) at n = 10000, frozen from a
# 40-digit mpmath run
RESIDUAL_10000 = 4.899353862037374770184526


def test_digamma_spots():
    assert abs(digamma(1.0) + EULER_GAMMA) < 1e-14
    assert abs(digamma(1.5) + EULER_GAMMA - (2 - 2 * math.log(2))) < 1e-13
    assert abs(trigamma(1.0) - math.pi ** 2 / 6) < 1e-13
    # psi'(3/2) = pi^2/2 - 4
    assert abs(trigamma(1.5) - (math.pi ** 2 / 2 - 4)) < 1e-13


def test_digamma_against_mpmath():
    rng = random.Random(7)
    xs = [rng.uniform(1e-3, 60.0) for _ in range(60)]
    xs += [rng.uniform(-30.0, -1e-3) for _ in range(60)]
    for x in xs:
        if abs(x - round(x)) < 1e-6:
            continue
        ref = float(mpmath.digamma(x))
        assert abs(digamma(x) - ref) <= 1e-12 * max(1.0, abs(ref)), x
        ref1 = float(mpmath.polygamma(1, x))
        assert abs(trigamma(x) - ref1) <= 1e-12 * max(1.0, abs(ref1)), x


def test_digamma_recurrence_property():
    rng = random.Random(2024)
    for _ in range(200):
        x = rng.uniform(0.01, 50.0)
        assert abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-12


def test_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            digamma(x)
        with pytest.raises(PoleError):
            trigamma(x)
    with pytest.raises(PoleError):
        harmonic_num(-3.0)


def test_harmonic_num_cross_module():
    for n in range(1, 61):
        exact = float(harmonic(n))
        assert abs(harmonic_num(float(n)) - exact) <= 1e-12 * exact
        exact2 = float(harmonic2(n))
        assert abs(harmonic2_num(float(n)) - exact2) <= 1e-12 * max(1.0, exact2)
    assert abs(harmonic2_num(0.0)) <= 1e-12
    assert abs(harmonic_num(-0.5) + 2 * math.log(2)) <= 1e-12


def test_binom_real():
    assert abs(binom_real(3.0, 4) - 35.0) < 1e-12 * 35
    assert abs(binom_real(0.5, 1) - 1.5) < 1e-13
    # one negative factor for m in (-2, -1)
    assert binom_real(-1.2, 3) < 0
    prod = (-0.2) * 0.8 * 1.8 / 6.0
    assert abs(binom_real(-1.2, 3) - prod) < 1e-13
    with pytest.raises(DomainError):
        binom_real(-2.0 + 1e-12, 5)


# ---------------------------------------------------------------------------
# numeric identity verification
# ---------------------------------------------------------------------------

def test_verify_numeric_examples():
    assert verify_numeric("I-cb-gen", 0.37, 10, 1e-9).passed
    rep = verify_numeric("I-thm21", 4.0, 12, 1e-9)
    assert rep.passed
    # floating evaluation agrees with the exact layer
    exact = float(rhs_closed("I-thm21", EvalPoint.at(12, m=4)))
    assert abs(rep.lhs - exact) <= 1e-12 * max(1.0, abs(exact))
    assert abs(rep.rhs - exact) <= 1e-12 * max(1.0, abs(exact))
    assert verify_numeric("I-thm51", -1.4, 6, 1e-8).passed
    assert verify_numeric("I-thm41", -1.4, 9, 1e-8).passed


def test_verify_numeric_domain():
    with pytest.raises(DomainError):
        verify_numeric("I-thm21", -1.0, 5)
    with pytest.raises(DomainError):
        verify_numeric("I-thm21", -1.5, 5)
    with pytest.raises(DomainError):
        verify_numeric("I-thm51", -1.5 + 5e-10, 5)
    with pytest.raises(DomainError):
        verify_numeric("I-thm41", 2.0, 0)
    with pytest.raises(DomainError):
        verify_numeric("I-har", 2.0, 3)


def test_numeric_report_invariant_and_record():
    rep = verify_numeric("I-cb-gen", 1.25, 8, 1e-8)
    assert rep.passed == (rep.rel_err <= rep.tol)
    rec = rep.to_record()
    assert list(rec) == ["identity", "m", "n", "equal", "lhs", "rhs",
                         "terms", "t_lhs_ns", "t_rhs_ns"]
    assert rec["m"] == "1.25"
    assert float(rec["lhs"]) == rep.lhs


def test_random_suite_deterministic_and_passing():
    reports = random_suite(seed=0, trials=50)
    assert len(reports) == 200
    assert all(r.passed for r in reports)
    again = random_suite(seed=0, trials=50)
    assert [(r.identity, r.m, r.n, r.lhs) for r in reports] == \
        [(r.identity, r.m, r.n, r.lhs) for r in again]
    assert all(-1.45 < r.m < 10.0 for r in reports)
    assert all(abs(r.m + 1.5) > 1e-3 and abs(r.m + 1.0) > 1e-3 for r in reports)


# ---------------------------------------------------------------------------
# derivative checks
# ---------------------------------------------------------------------------

def test_derivative_checks():
    assert derivative_check("harmonic", 2.5, 1e-6) <= 1e-6
    assert derivative_check("binomial", 0.8, 1e-6) <= 1e-5
    assert derivative_check("identity-1.4", 1.3, 1e-6, n=8) <= 1e-5


def test_derivative_check_domain():
    with pytest.raises(DomainError):
        derivative_check("harmonic", 2.5, 1e-2)
    with pytest.raises(DomainError):
        derivative_check("harmonic", 2.5, 1e-9)
    with pytest.raises(DomainError):
        derivative_check("spectral", 2.5, 1e-6)
    with pytest.raises(DomainError):
        derivative_check("harmonic", -1.0, 1e-6)


# ---------------------------------------------------------------------------
# the residual sum
# ---------------------------------------------------------------------------

def test_residual_sum_small():
    assert residual_sum(1).exact == 2
    assert residual_sum(2).exact == F(8, 3)
    # brute force oracle
    acc = F(0)
    for j in range(1, 51):
        acc += F(4 ** j, j * j * math.comb(2 * j, j))
        rs = residual_sum(j)
        assert rs.exact == acc, j
        assert abs(rs.numeric - float(acc)) <= 1e-12 * float(acc)


def test_residual_sum_large_matches_reference():
    rs = residual_sum(10000)
    assert abs(rs.numeric - RESIDUAL_10000) <= 1e-11 * RESIDUAL_10000
    assert abs(float(rs.exact) - RESIDUAL_10000) <= 1e-11 * RESIDUAL_10000


def test_residual_tail_bound_majorization():
    # term-by-term: 4^j/(j^2 C(2j,j)) <= sqrt(1.5 pi) j^{-3/2}
    bound_c = math.sqrt(1.5 * math.pi)
    term = 2.0
    for j in range(2, 2001):
        term *= 2 * (j - 1) * (j - 1) / (j * (2 * j - 1))
        assert term <= bound_c * j ** -1.5, j
    # partial-sum increments stay within the tail bound
    s1000 = residual_sum(1000).numeric
    s4000 = residual_sum(4000).numeric
    assert 0 < s4000 - s1000 <= residual_tail_bound(1000)
    assert residual_tail_bound(4000) < residual_tail_bound(1000)
    with pytest.raises(DomainError):
        residual_sum(0)


# ---------------------------------------------------------------------------
# the half-integer order-2 gate
# ---------------------------------------------------------------------------

def test_half_integer_order2_gate():
    assert validate_half_integer_order2(points=10, tol=1e-10)
    for k in range(10):
        m = ExactParam(2 * k + 1)
        exact_f = float(harmonic2_exact(m))
        ref = ZETA2 - float(mpmath.polygamma(1, k + 1.5))
        assert abs(exact_f - ref) <= 1e-10 * max(1.0, abs(ref)), k
