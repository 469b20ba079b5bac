"""Exact core: binomials, harmonic families, the constant ring, parameters."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hbe.errors import DomainError, OutOfSpanError
from hbe.exact import (
    LN2,
    LN2_SQUARED,
    PI_SQUARED,
    ExactParam,
    SymValue,
    binom_gen,
    binom_nat,
    catalan,
    harmonic,
    harmonic2,
    harmonic2_exact,
    harmonic_exact,
    odd_harmonic,
    odd_harmonic2,
    sym_add,
    sym_mul,
    sym_scale,
)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def prod_binom(m: F, k: int) -> F:
    """Independent oracle: plain product prod_{j=1..k} (m+j)/j."""
    p = F(1)
    for j in range(1, k + 1):
        p *= (m + j) / j
    return p


# ---------------------------------------------------------------------------
# binomials
# ---------------------------------------------------------------------------

def test_binom_nat_spots():
    assert binom_nat(4, 2) == 6
    assert binom_nat(3, 5) == 0
    assert binom_nat(20, 10) == prod_binom(F(10), 10)  # 184756
    assert binom_nat(20, 10) == 184756


def test_binom_nat_rejects_negative():
    with pytest.raises(DomainError):
        binom_nat(-1, 0)
    with pytest.raises(DomainError):
        binom_nat(3, -2)


def test_binom_gen_spots():
    assert binom_gen(F(1, 2), 1) == F(3, 2)
    assert binom_gen(0, 7) == 1
    assert binom_gen(F(5, 2), 3) == prod_binom(F(5, 2), 3) == F(231, 16)


def test_binom_gen_matches_binom_nat():
    for n in range(61):
        for k in range(n + 1):
            assert binom_gen(n - k, k) == binom_nat(n, k)


def test_binom_gen_half_central_ratio():
    # C(k+1/2, k) / C(2k, k) = 2^{-2k} (2k+1)
    for k in range(1, 51):
        assert binom_gen(F(1, 2), k) / binom_nat(2 * k, k) == F(2 * k + 1, 4 ** k)


def test_binom_gen_half_integer_relation():
    # C(u-1/2, v) 2^{2v} C(2(u-v), u-v) = C(u, v) C(2u, u)
    for u in range(26):
        for v in range(u + 1):
            lhs = binom_gen(F(2 * u - 1, 2) - v, v) * 4 ** v \
                * binom_nat(2 * (u - v), u - v)
            assert lhs == binom_nat(u, v) * binom_nat(2 * u, u), (u, v)


@given(st.integers(0, 40), st.integers(0, 40))
def test_binom_gen_integer_agreement(m, k):
    assert binom_gen(m, k) == binom_nat(m + k, k)


def test_catalan_spots():
    assert catalan(0) == 1
    assert catalan(3) == binom_nat(6, 3) / 4 == 5
    assert catalan(10) == 16796


def test_catalan_back_recursion():
    for n in range(1, 101):
        assert catalan(n - 1) * 2 * (2 * n - 1) == (n + 1) * catalan(n)


# ---------------------------------------------------------------------------
# harmonic families
# ---------------------------------------------------------------------------

def test_harmonic_spots():
    assert harmonic(0) == 0
    assert harmonic(3) == F(11, 6)
    assert odd_harmonic(2) == F(4, 3)
    assert harmonic2(0) == 0
    assert harmonic2(2) == F(5, 4)
    assert odd_harmonic2(2) == F(10, 9)


def test_even_odd_harmonic_relations():
    for n in range(1, 201):
        assert harmonic(2 * n) == harmonic(n) / 2 + odd_harmonic(n)
        assert harmonic(2 * n - 1) == harmonic(n - 1) / 2 + odd_harmonic(n)


def test_harmonic_rejects_negative():
    for fn in (harmonic, odd_harmonic, harmonic2, odd_harmonic2):
        with pytest.raises(DomainError):
            fn(-1)


def test_harmonic_exact_values():
    assert harmonic_exact(ExactParam(6)) == F(11, 6)
    assert harmonic_exact(ExactParam(1)) == SymValue(2, -2)
    assert harmonic_exact(ExactParam(-1)) == SymValue(0, -2)
    assert str(harmonic_exact(ExactParam(1))) == "2 - 2*ln2"


def test_harmonic2_exact_values():
    assert harmonic2_exact(ExactParam(4)) == F(5, 4)
    assert harmonic2_exact(ExactParam(0)) == 0
    assert harmonic2_exact(ExactParam(1)) == SymValue(4, 0, 0, F(-1, 3))


# ---------------------------------------------------------------------------
# the constant ring
# ---------------------------------------------------------------------------

def test_sym_ring_expansion():
    v = SymValue(2, -2)
    assert v * v == SymValue(4, -8, 4, 0)
    assert sym_scale(F(1, 3), SymValue(3, 3)) == SymValue(1, 1)
    assert sym_add(SymValue(1), LN2) == SymValue(1, 1)


def test_sym_out_of_span_products():
    with pytest.raises(OutOfSpanError):
        sym_mul(SymValue(1, 1), PI_SQUARED)
    with pytest.raises(OutOfSpanError):
        sym_mul(LN2, LN2_SQUARED)
    with pytest.raises(OutOfSpanError):
        sym_mul(PI_SQUARED, PI_SQUARED)
    # scalar embeddings multiply with anything
    assert sym_mul(SymValue(2), PI_SQUARED) == SymValue(0, 0, 0, 2)


def test_sym_rational_embedding_equality():
    assert SymValue(F(17, 3)) == F(17, 3)
    assert SymValue(F(17, 3)) != F(16, 3)
    assert SymValue(1, 1) != 1
    assert hash(SymValue(F(17, 3))) == hash(F(17, 3))


def test_sym_rendering():
    assert str(SymValue()) == "0"
    assert str(SymValue(F(-1, 2))) == "-1/2"
    assert str(SymValue(2, -2)) == "2 - 2*ln2"
    assert str(SymValue(0, F(1, 3), -1, F(2, 7))) == "1/3*ln2 - 1*ln2^2 + 2/7*pi^2"


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_sym_add_commutes_and_associates(a, b, c, d, e, f):
    x = SymValue(a, b, c, d)
    y = SymValue(e, f, a, b)
    z = SymValue(c, d, e, f)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)


@given(rationals, rationals, rationals)
def test_sym_scale_distributes(q, a, b):
    x = SymValue(a, b)
    y = SymValue(b, a)
    assert sym_scale(q, x + y) == sym_scale(q, x) + sym_scale(q, y)


def test_sym_mul_matches_float_on_in_span_pairs():
    rng = random.Random(12345)
    def rnd():
        return F(rng.randint(-50, 50), rng.randint(1, 30))
    for _ in range(100):
        x = SymValue(rnd(), rnd())
        y = SymValue(rnd(), rnd())
        prod = x * y
        fx, fy, fp = float(x), float(y), float(prod)
        assert abs(fx * fy - fp) <= 1e-10 * max(1.0, abs(fp))


# ---------------------------------------------------------------------------
# exact parameters
# ---------------------------------------------------------------------------

def test_exact_param_domain():
    assert ExactParam(-1).value == F(-1, 2)
    assert ExactParam(0).is_integer
    assert ExactParam(7).value == F(7, 2)
    for bad in (-2, -3, -4):
        with pytest.raises(DomainError):
            ExactParam(bad)


def test_exact_param_parse_and_render():
    assert ExactParam.parse("3") == ExactParam(6)
    assert ExactParam.parse("-1/2") == ExactParam(-1)
    assert ExactParam.parse("7/2") == ExactParam(7)
    assert ExactParam.parse("6/2") == ExactParam(6)
    assert str(ExactParam(3)) == "3/2"
    assert ExactParam(3).schema_str() == "3/2"
    assert ExactParam(6).schema_str() == "6/2"
    with pytest.raises(DomainError):
        ExactParam.parse("1/3")
    with pytest.raises(DomainError):
        ExactParam.parse("x")


def test_exact_param_helpers():
    m = ExactParam(1)
    assert not m.is_integer
    with pytest.raises(DomainError):
        m.int_value
    assert m.shifted(3) == ExactParam(7)
    assert ExactParam(4).int_value == 2
    assert sorted([ExactParam(4), ExactParam(-1), ExactParam(1)]) == \
        [ExactParam(-1), ExactParam(1), ExactParam(4)]


@given(st.integers(-1, 200))
def test_exact_param_value_roundtrip(t):
    p = ExactParam(t)
    assert ExactParam.from_value(p.value) == p
