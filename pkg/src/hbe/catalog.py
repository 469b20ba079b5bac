"""Registry of the catalogued closed-form identities.

Every entry pairs a direct-summation oracle for the left-hand side (the sum
evaluated term by term in exact arithmetic, exactly as written) with the
closed form for the right-hand side.  Verification is exact: a point check
passes iff the two sides are coefficient-wise identical in the constant ring.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .errors import DomainError
from .exact import (
    ExactParam,
    SymValue,
    binom_gen,
    harmonic,
    harmonic2,
    harmonic2_exact,
    harmonic_exact,
    odd_harmonic,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

# default parameter grid for range sweeps: all exact points with 2m in [-1, 40]
DEFAULT_M_GRID = tuple(ExactParam(t) for t in range(-1, 41))


def _cb(n: int) -> int:
    """Central binomial coefficient C(2n, n) as a plain integer."""
    return math.comb(2 * n, n)


def _t2(n: int) -> Fraction:
    """2^{2n+1} / C(2n,n)."""
    return Fraction(1 << (2 * n + 1), _cb(n))


def _residual(n: int) -> Fraction:
    """sum_{j=1..n} 4^j / (j^2 C(2j,j)), by direct summation."""
    if n < 1:
        return _ZERO
    term = Fraction(2)
    total = Fraction(2)
    for j in range(2, n + 1):
        term *= Fraction(2 * (j - 1) * (j - 1), j * (2 * j - 1))
        total += term
    return total


def _harmonic_parts(m: ExactParam) -> tuple[Fraction, Fraction]:
    """H_m split into (rational part, ln2 coefficient)."""
    h = harmonic_exact(m)
    return h.c1, h.cl


def _harmonic2_parts(m: ExactParam) -> tuple[Fraction, Fraction]:
    """H_m^(2) split into (rational part, pi^2 coefficient)."""
    h = harmonic2_exact(m)
    return h.c1, h.cp


# ---------------------------------------------------------------------------
# left sides: direct term-by-term summation (running products, no factorials)
# ---------------------------------------------------------------------------

def _lhs_rockett(m, n):
    return SymValue(sum(Fraction(1, math.comb(n, k)) for k in range(n + 1)))


def _lhs_cb0(m, n):
    u = _ONE
    s = _ONE
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        s += u
    return SymValue(s)


def _lhs_cbgen(m, n):
    t = m.twice
    # coeff_k = 4^k C(m+k,k) / C(2k,k) obeys coeff_k = coeff_{k-1} (2m+2k)/(2k-1)
    coeff = _ONE
    s = _ONE
    for k in range(1, n + 1):
        coeff *= Fraction(t + 2 * k, 2 * k - 1)
        s += coeff
    return SymValue(s)


def _lhs_thm21(m, n):
    t = m.twice
    h1, hl = _harmonic_parts(m)
    coeff = _ONE
    s1 = h1
    csum = _ONE
    for k in range(1, n + 1):
        coeff *= Fraction(t + 2 * k, 2 * k - 1)
        h1 += Fraction(2, t + 2 * k)
        s1 += coeff * h1
        csum += coeff
    # the ln2 coefficient of H_{k+m} is constant in k, so it factors out
    return SymValue(s1, hl * csum)


def _lhs_har(m, n):
    u = _ONE
    h = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h += Fraction(1, k)
        s += u * h
    return SymValue(s)


def _lhs_har_mn(m, n):
    u = _ONE
    b = _ONE
    h = harmonic(n)
    s = h
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        b *= Fraction(n + k, k)
        h += Fraction(1, n + k)
        s += u * b * h
    return SymValue(s)


def _lhs_ohar(m, n):
    u = _ONE
    o = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        o += Fraction(1, 2 * k - 1)
        s += u * o
    return SymValue(s)


def _lhs_evenhar(m, n):
    u = _ONE
    h = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h += Fraction(1, 2 * k - 1) + Fraction(1, 2 * k)
        s += u * h
    return SymValue(s)


def _lhs_o1(m, n):
    o = _ZERO
    s = _ZERO
    for k in range(n + 1):
        o += Fraction(1, 2 * k + 1)          # o = O_{k+1}
        s += (2 * k + 1) * o
    return SymValue(s)


def _lhs_o2(m, n):
    o = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        o += Fraction(1, 2 * k - 1)
        s += o
    return SymValue(s)


def _lhs_chujin(m, n):
    mi = m.int_value
    h = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        h += Fraction(1, k)
        s += (-1) ** k * Fraction(math.comb(n, k), math.comb(mi + k, k)) * h
    return SymValue(s)


def _lhs_cb2(m, n):
    t = m.twice
    a = _ONE                     # C(m+n+1, k)
    b = _cb(n)                   # C(2j, j) with j = n - k
    dnk = 1                      # C(n, k)
    p4 = 1                       # 4^k
    s = _ZERO
    for k in range(n):
        j = n - k
        s += a * Fraction(p4 * b, (2 * j - 1) * dnk)
        a *= Fraction(t + 2 * (n + 1 - k), 2 * (k + 1))
        dnk = dnk * (n - k) // (k + 1)
        b = b * j // (2 * (2 * j - 1))
        p4 <<= 2
    return SymValue(s)


def _lhs_thm41(m, n):
    t = m.twice
    h1, hl = _harmonic_parts(m)
    h1 += Fraction(2, t + 2)     # H_{m+1}
    # coeff_k = 2^{-2k} C(2k,k) / ((2k-1) C(m+k+1,k));
    # coeff_1 = 1/(2m+4) and coeff_k = coeff_{k-1} (2k-3)/(2m+2k+2)
    coeff = Fraction(1, t + 4)
    h1 += Fraction(2, t + 4)     # H_{m+2}, the k = 1 harmonic value
    s1 = coeff * h1
    csum = coeff
    for k in range(2, n + 1):
        coeff *= Fraction(2 * k - 3, t + 2 * k + 2)
        h1 += Fraction(2, t + 2 * k + 2)
        s1 += coeff * h1
        csum += coeff
    return SymValue(s1, hl * csum)


def _lhs_c41a(m, n):
    w = _ONE
    h = _ONE                     # H_{k+1} at k = 0
    s = _ZERO
    for k in range(1, n + 1):
        w *= Fraction(2 * k - 1, 2 * k)
        h += Fraction(1, k + 1)
        s += w / ((2 * k - 1) * (k + 1)) * h
    return SymValue(s)


def _lhs_c41b(m, n):
    w = _ONE
    h = _ONE + Fraction(1, 2)    # H_{k+2} at k = 0
    s = _ZERO
    for k in range(1, n + 1):
        w *= Fraction(2 * k - 1, 2 * k)
        h += Fraction(1, k + 2)
        s += w / ((2 * k - 1) * (k + 1) * (k + 2)) * h
    return SymValue(s)


def _lhs_c42(m, n):
    w = _ONE
    b = _ONE                     # C(n+k, k)
    h = harmonic(n)
    s = _ZERO
    for k in range(1, n + 1):
        w *= Fraction(2 * k - 1, 2 * k)
        b *= Fraction(n + k, k)
        h += Fraction(1, n + k)
        s += w / ((2 * k - 1) * b) * h
    return SymValue(s)


def _lhs_riordan(m, n):
    w = _ONE
    s = -_ONE                    # the k = 0 term is 1/(2*0 - 1) = -1
    for k in range(1, n + 1):
        w *= Fraction(2 * k - 1, 2 * k)
        s += w / (2 * k - 1)
    return SymValue(s)


def _lhs_thm51(m, n):
    t = m.twice
    h1, hl = _harmonic_parts(m)
    g1, gp = _harmonic2_parts(m)
    coeff = _ONE
    s1 = h1 * h1 - g1
    sxh = h1
    csum = _ONE
    for k in range(1, n + 1):
        coeff *= Fraction(t + 2 * k, 2 * k - 1)
        inv = Fraction(2, t + 2 * k)
        h1 += inv
        g1 += inv * inv
        s1 += coeff * (h1 * h1 - g1)
        sxh += coeff * h1
        csum += coeff
    # (h1 + hl L)^2 - (g1 + gp P) expands with hl, gp constant in k
    return SymValue(s1, 2 * hl * sxh, hl * hl * csum, -gp * csum)


def _lhs_thm51_0(m, n):
    u = _ONE
    h = _ZERO
    h2 = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h += Fraction(1, k)
        h2 += Fraction(1, k * k)
        s += u * (h * h - h2)
    return SymValue(s)


def _lhs_hsq(m, n):
    u = _ONE
    h = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h += Fraction(1, k)
        s += u * h * h
    return SymValue(s)


def _lhs_h2o(m, n):
    u = _ONE
    h2 = _ZERO
    s = _ZERO
    for k in range(1, n + 1):
        u *= Fraction(2 * k, 2 * k - 1)
        h2 += Fraction(1, k * k)
        s += u * h2
    return SymValue(s)


def _lhs_parker(m, n):
    u = _ONE
    s = _ZERO
    for j in range(1, n + 1):
        u *= Fraction(2 * j, 2 * j - 1)
        s += u / j
    return SymValue(s)


def _lhs_haroddhar(m, n):
    # the even and odd relations ride in separate ring coordinates so a single
    # coefficient-wise comparison checks the pair at once
    h = _ZERO
    for k in range(1, 2 * n):
        h += Fraction(1, k)
    return SymValue(h + Fraction(1, 2 * n), h)


# ---------------------------------------------------------------------------
# right sides: the closed forms
# ---------------------------------------------------------------------------

def _rhs_rockett(m, n):
    s = sum(Fraction(1 << k, k) for k in range(1, n + 2))
    return SymValue(Fraction(n + 1, 1 << (n + 1)) * s)


def _rhs_cb0(m, n):
    return SymValue((Fraction((n + 1) << (2 * n + 1), _cb(n)) + 1) / 3)


def _rhs_cbgen(m, n):
    mv = m.value
    r = binom_gen(mv, n) / _cb(n)
    return SymValue(((mv + n + 1) * r * (1 << (2 * n + 1)) + 1) / (2 * mv + 3))


def _rhs_thm21(m, n):
    mv = m.value
    d = 2 * mv + 3
    r = binom_gen(mv, n) / _cb(n)
    hm = harmonic_exact(m)
    hnm = harmonic_exact(m.shifted(n))
    t1 = ((Fraction(1 << (2 * n + 1)) * (mv + n + 1) * r) * hnm + hm) / d
    t2 = Fraction(2) * ((1 << (2 * n)) * (2 * n - 1) * r + 1) / (d * d)
    return t1 - t2


def _rhs_har(m, n):
    return SymValue(_t2(n) / 3 * ((n + 1) * harmonic(n) - Fraction(2 * n - 1, 3))
                    - Fraction(2, 9))


def _rhs_har_mn(m, n):
    d = 2 * n + 3
    return SymValue(Fraction(1 << (2 * n + 1)) / d
                    * ((2 * n + 1) * harmonic(2 * n) - Fraction(2 * n - 1, d))
                    + (harmonic(n) - Fraction(2, d)) / d)


def _rhs_ohar(m, n):
    return SymValue(Fraction(2, 9)
                    + Fraction(2, 9) * Fraction(1 << (2 * n), _cb(n))
                    * (n + 1) * (3 * odd_harmonic(n) - 1))


def _rhs_evenhar(m, n):
    return SymValue(Fraction(1, 9) + Fraction(1 << (2 * n), _cb(n)) / 3
                    * (2 * (n + 1) * harmonic(2 * n) - Fraction(4 * n + 1, 3)))


def _rhs_o1(m, n):
    return SymValue(((2 * n + 1) * (2 * n + 3) * odd_harmonic(n + 1)
                     - (n - 1) * (n + 1)) / Fraction(4))


def _rhs_o2(m, n):
    return SymValue(Fraction(2 * n + 1, 2) * odd_harmonic(n) - Fraction(n, 2))


def _rhs_chujin(m, n):
    mi = m.int_value
    return SymValue(Fraction(mi, n + mi) * (harmonic(mi - 1) - harmonic(n + mi - 1)))


def _rhs_cb2(m, n):
    mv = m.value
    return SymValue(Fraction(1 << (2 * n)) * (mv + n + 1)
                    / ((mv + 1) * (2 * mv + 3)) * binom_gen(mv, n)
                    - Fraction(_cb(n)) / (2 * mv + 3))


def _rhs_thm41(m, n):
    mv = m.value
    d = 2 * mv + 3
    hm = harmonic_exact(m)
    hmn1 = harmonic_exact(m.shifted(n + 1))
    ratio = Fraction(_cb(n)) / binom_gen(mv + 1, n)
    t3 = (Fraction(1, 1 << (2 * n)) / d * ratio) * (hmn1 + Fraction(2) / d)
    return SymValue((4 * mv + 5) / ((mv + 1) * d * d)) + hm / d - t3


def _rhs_c41a(m, n):
    return SymValue(Fraction(5, 9)
                    - Fraction(_cb(n), (1 << (2 * n)) * 3 * (n + 1))
                    * (harmonic(n + 1) + Fraction(2, 3)))


def _rhs_c41b(m, n):
    return SymValue(Fraction(19, 100)
                    - Fraction(_cb(n), (1 << (2 * n)) * 5 * (n + 1) * (n + 2))
                    * (harmonic(n + 2) + Fraction(2, 5)))


def _rhs_c42(m, n):
    d = 2 * n + 1
    return SymValue((harmonic(n) + Fraction(2, d)) / d
                    - Fraction(1, (1 << (2 * n)) * d)
                    * (harmonic(2 * n) + Fraction(2, d)))


def _rhs_riordan(m, n):
    return SymValue(-Fraction(_cb(n), 1 << (2 * n)))


def _rhs_thm51(m, n):
    mv = m.value
    d = 2 * mv + 3
    r = binom_gen(mv, n) / _cb(n)
    hm = harmonic_exact(m)
    h2m = harmonic2_exact(m)
    hmn = harmonic_exact(m.shifted(n))
    h2mn = harmonic2_exact(m.shifted(n))
    xm = hm * hm - h2m
    xmn = hmn * hmn - h2mn
    p = Fraction(1 << (2 * n + 1))
    a = xm + (p * r) * (hmn + (mv + n + 1) * xmn)
    b = (2 * p * (mv + n + 1) * r) * hmn + 4 * hm + (p * (2 * n - 1) * r) * hmn
    c = Fraction((1 << (2 * n)) * (2 * n - 1)) * r + 1
    return a / d - b / (d * d) + SymValue(8 * c / (d * d * d))


def _rhs_thm51_0(m, n):
    t2 = _t2(n)
    hn = harmonic(n)
    h2n = harmonic2(n)
    return SymValue(t2 / 3 * ((n + 1) * (hn * hn - h2n)
                              - Fraction(2, 3) * (2 * n - 1) * hn)
                    + Fraction(8, 27) * (Fraction((2 * n - 1) << (2 * n), _cb(n)) + 1))


def _rhs_hsq(m, n):
    t2 = _t2(n)
    hn = harmonic(n)
    return SymValue(Fraction(44, 27)
                    + t2 / 3 * ((n + 1) * hn * hn
                                - Fraction(2 * (2 * n - 1), 3) * hn
                                + Fraction(8 * n - 22, 9))
                    + _residual(n) / 3)


def _rhs_h2o(m, n):
    return SymValue(Fraction(4, 3)
                    + _t2(n) / 3 * ((n + 1) * harmonic2(n) - 2)
                    + _residual(n) / 3)


def _rhs_parker(m, n):
    return SymValue(2 * (Fraction(1 << (2 * n), _cb(n)) - 1))


def _rhs_haroddhar(m, n):
    on = odd_harmonic(n)
    return SymValue(harmonic(n) / 2 + on, harmonic(n - 1) / 2 + on)


# ---------------------------------------------------------------------------
# descriptors and the registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalPoint:
    m: Optional[ExactParam]
    n: int

    @classmethod
    def at(cls, n: int, m=None) -> "EvalPoint":
        if m is None or isinstance(m, ExactParam):
            return cls(m, n)
        return cls(ExactParam.from_value(m), n)


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    title: str
    source: str
    requires_m: bool
    n_min: int
    ring: str                                   # "rational" | "symvalue"
    m_domain: Optional[Callable[[ExactParam], bool]]
    m_domain_desc: str
    lhs_fn: Callable[[Optional[ExactParam], int], SymValue]
    rhs_fn: Callable[[Optional[ExactParam], int], SymValue]
    terms_fn: Callable[[int], int]

    def admits(self, point: EvalPoint) -> bool:
        if point.n < self.n_min:
            return False
        if self.requires_m:
            return point.m is not None and (self.m_domain is None or self.m_domain(point.m))
        return point.m is None


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    point: EvalPoint
    lhs: SymValue
    rhs: SymValue
    equal: bool
    lhs_terms: int
    t_lhs_ns: int
    t_rhs_ns: int

    def to_record(self, no_timing: bool = False) -> dict:
        return {
            "identity": self.identity,
            "m": self.point.m.schema_str() if self.point.m is not None else None,
            "n": self.point.n,
            "equal": self.equal,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "terms": self.lhs_terms,
            "t_lhs_ns": 0 if no_timing else self.t_lhs_ns,
            "t_rhs_ns": 0 if no_timing else self.t_rhs_ns,
        }


def _m_any(p: ExactParam) -> bool:
    return True


def _m_integer(p: ExactParam) -> bool:
    return p.is_integer


def _m_integer_pos(p: ExactParam) -> bool:
    return p.is_integer and p.twice >= 2


def registry(order2_half_integers: bool = False) -> list[IdentityDescriptor]:
    """The full identity catalog.

    order2_half_integers widens the order-2 identity to half-integer
    parameters; enable it only after validate_half_integer_order2 has passed
    (the exact half-integer order-2 values rest on a derived closed form).
    """
    def d(id, title, source, lhs, rhs, terms, requires_m=False, n_min=0,
          ring="rational", m_domain=None, m_desc=""):
        return IdentityDescriptor(id, title, source, requires_m, n_min, ring,
                                  m_domain, m_desc, lhs, rhs, terms)

    n_plus_1 = lambda n: n + 1
    n_terms = lambda n: n

    thm51_domain = _m_any if order2_half_integers else _m_integer
    thm51_desc = ("any exact m" if order2_half_integers
                  else "integer m >= 0 (half-integers gated on the order-2 cross-check)")

    return [
        d("I-rockett", "row sum of inverse binomial coefficients", "(1.1)",
          _lhs_rockett, _rhs_rockett, n_plus_1),
        d("I-cb0", "inverse central binomial sum", "(1.2)/(1.3)",
          _lhs_cb0, _rhs_cb0, n_plus_1),
        d("I-cb-gen", "parameterized inverse central binomial sum", "(1.4)",
          _lhs_cbgen, _rhs_cbgen, n_plus_1,
          requires_m=True, m_domain=_m_any, m_desc="any exact m"),
        d("I-thm21", "harmonic-weighted parameterized sum", "Theorem 2.1",
          _lhs_thm21, _rhs_thm21, n_plus_1, requires_m=True, ring="symvalue",
          m_domain=_m_any, m_desc="any exact m"),
        d("I-har", "harmonic-weighted inverse central binomial sum", "(2.3)/(1.5)",
          _lhs_har, _rhs_har, n_plus_1),
        d("I-har-mn", "shifted-harmonic weight at matched parameter", "(2.4)",
          _lhs_har_mn, _rhs_har_mn, n_plus_1),
        d("I-ohar", "odd-harmonic-weighted inverse central binomial sum", "(2.6)",
          _lhs_ohar, _rhs_ohar, n_plus_1),
        d("I-evenhar", "even-index harmonic weight", "(2.7)/(1.6)",
          _lhs_evenhar, _rhs_evenhar, n_plus_1),
        d("I-o1", "weighted odd harmonic partial sum", "(2.8)",
          _lhs_o1, _rhs_o1, n_plus_1),
        d("I-o2", "plain odd harmonic partial sum", "(2.9)",
          _lhs_o2, _rhs_o2, n_plus_1),
        d("I-chujin", "alternating inverse-binomial harmonic sum", "after Theorem 2.1",
          _lhs_chujin, _rhs_chujin, n_plus_1, requires_m=True,
          m_domain=_m_integer_pos, m_desc="integer m >= 1"),
        d("I-cb2", "weighted central binomial convolution", "(4.2)",
          _lhs_cb2, _rhs_cb2, n_terms, requires_m=True,
          m_domain=_m_any, m_desc="any exact m"),
        d("I-thm41", "inverse-weight harmonic sum, shifted parameter", "Theorem 4.1",
          _lhs_thm41, _rhs_thm41, n_terms, requires_m=True, n_min=1,
          ring="symvalue", m_domain=_m_any, m_desc="any exact m"),
        d("I-c41a", "inverse-weight harmonic sum at m = 0", "Corollary 4.1",
          _lhs_c41a, _rhs_c41a, n_terms, n_min=1),
        d("I-c41b", "inverse-weight harmonic sum at m = 1", "Corollary 4.1",
          _lhs_c41b, _rhs_c41b, n_terms, n_min=1),
        d("I-c42", "inverse-weight harmonic sum at m = n-1", "Corollary 4.2",
          _lhs_c42, _rhs_c42, n_terms, n_min=1),
        d("I-riordan", "signed scaled central binomial sum", "(4.9)",
          _lhs_riordan, _rhs_riordan, n_plus_1),
        d("I-thm51", "squared-harmonic parameterized sum", "Theorem 5.1",
          _lhs_thm51, _rhs_thm51, n_plus_1, requires_m=True, n_min=1,
          ring="symvalue", m_domain=thm51_domain, m_desc=thm51_desc),
        d("I-thm51-0", "squared-harmonic sum at m = 0", "(5.6)",
          _lhs_thm51_0, _rhs_thm51_0, n_plus_1, n_min=1),
        d("I-hsq", "squared-harmonic weight with residual sum", "(5.7)",
          _lhs_hsq, _rhs_hsq, n_terms, n_min=1),
        d("I-h2o", "order-2 harmonic weight with residual sum", "(5.8)",
          _lhs_h2o, _rhs_h2o, n_terms, n_min=1),
        d("I-parker", "Parker's sum", "after (5.8)",
          _lhs_parker, _rhs_parker, n_terms, n_min=1),
        d("I-haroddhar", "even/odd-index harmonic decomposition pair", "(1.7)",
          _lhs_haroddhar, _rhs_haroddhar, lambda n: 4 * n - 1, n_min=1,
          ring="symvalue"),
    ]


def lookup(identity: str, regs: Optional[Sequence[IdentityDescriptor]] = None
           ) -> IdentityDescriptor:
    for desc in (regs if regs is not None else registry()):
        if desc.id == identity:
            return desc
    raise DomainError(f"unknown identity {identity!r}")


def _check_domain(desc: IdentityDescriptor, point: EvalPoint) -> None:
    if point.n < desc.n_min:
        raise DomainError(f"{desc.id} needs n >= {desc.n_min}, got {point.n}")
    if desc.requires_m:
        if point.m is None:
            raise DomainError(f"{desc.id} requires a parameter m")
        if desc.m_domain is not None and not desc.m_domain(point.m):
            raise DomainError(f"{desc.id} does not admit m = {point.m} "
                              f"({desc.m_domain_desc})")
    elif point.m is not None:
        raise DomainError(f"{desc.id} takes no parameter m")


def lhs_direct(identity: str, point: EvalPoint,
               regs: Optional[Sequence[IdentityDescriptor]] = None) -> SymValue:
    """The left-hand side, summed term by term in exact arithmetic."""
    desc = lookup(identity, regs)
    _check_domain(desc, point)
    return desc.lhs_fn(point.m, point.n)


def rhs_closed(identity: str, point: EvalPoint,
               regs: Optional[Sequence[IdentityDescriptor]] = None) -> SymValue:
    """The closed-form right-hand side."""
    desc = lookup(identity, regs)
    _check_domain(desc, point)
    return desc.rhs_fn(point.m, point.n)


def verify_point(identity: str, point: EvalPoint,
                 regs: Optional[Sequence[IdentityDescriptor]] = None
                 ) -> VerificationReport:
    """Check one point exactly; equal means coefficient-wise identical."""
    desc = lookup(identity, regs)
    _check_domain(desc, point)
    t0 = time.perf_counter_ns()
    lhs = desc.lhs_fn(point.m, point.n)
    t1 = time.perf_counter_ns()
    rhs = desc.rhs_fn(point.m, point.n)
    t2 = time.perf_counter_ns()
    return VerificationReport(identity, point, lhs, rhs, lhs == rhs,
                              desc.terms_fn(point.n), t1 - t0, t2 - t1)


def verify_range(identity: str, n_max: int,
                 m_set: Optional[Iterable[ExactParam]] = None,
                 regs: Optional[Sequence[IdentityDescriptor]] = None
                 ) -> list[VerificationReport]:
    """Verify n = n_min..n_max crossed with m_set, in (m, n) order.

    m_set is ignored for parameter-free identities.  When omitted for a
    parameterized identity, the default grid (2m in [-1, 40]) filtered by the
    identity's domain is used; explicitly supplied out-of-domain points raise
    DomainError.
    """
    desc = lookup(identity, regs)
    if desc.requires_m:
        if m_set is None:
            ms = [m for m in DEFAULT_M_GRID if desc.m_domain is None or desc.m_domain(m)]
        else:
            ms = sorted(set(m_set))
    else:
        ms = [None]
    reports = []
    for m in ms:
        for n in range(desc.n_min, n_max + 1):
            reports.append(verify_point(identity, EvalPoint(m, n), regs))
    return reports
