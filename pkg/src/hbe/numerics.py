"""Floating-point digamma/trigamma layer.

Lets the catalogued parameterized identities be checked at arbitrary real m
(not only the exactly representable points), validates the derivative
relations that the closed forms rest on by finite differences, and explores
the order-2 residual sum that has no known closed form.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError

EULER_GAMMA = 0.57721566490153286060651209008240243
ZETA2 = math.pi * math.pi / 6.0

# argument is shifted above this before the asymptotic series is applied;
# with Bernoulli terms through B14 that gives ~1e-15 relative error
_SHIFT = 10.0

# B_{2k}/(2k), k = 1..7
_PSI_TAIL = (1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
             1.0 / 132, -691.0 / 32760, 1.0 / 12)
# B_{2k}, k = 1..7
_PSI1_TAIL = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
              5.0 / 66, -691.0 / 2730, 7.0 / 6)

_POLE_EPS = 1e-12


def _near_nonpositive_integer(x: float, eps: float = _POLE_EPS) -> bool:
    return x <= 0.5 and abs(x - round(x)) < eps and round(x) <= 0


def _centered_frac(x: float) -> float:
    """x minus its nearest integer, in [-0.5, 0.5]."""
    return x - round(x)


def digamma(x: float) -> float:
    """psi(x) for real non-pole x.

    Upward recurrence shifts the argument above 10, then the asymptotic
    expansion with Bernoulli terms through B14 is applied; negative
    non-integer arguments go through the reflection formula.
    """
    x = float(x)
    if _near_nonpositive_integer(x):
        raise PoleError(f"digamma pole at {x}")
    if x < 0.0:
        # psi(x) = psi(1-x) - pi * cot(pi x)
        f = _centered_frac(x)
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * f)
    acc = 0.0
    while x < _SHIFT:
        acc -= 1.0 / x
        x += 1.0
    y = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_PSI_TAIL):
        tail = tail * y + c
    tail *= y
    return acc + math.log(x) - 0.5 / x - tail


def trigamma(x: float) -> float:
    """psi'(x) for real non-pole x; same shift-plus-asymptotics scheme."""
    x = float(x)
    if _near_nonpositive_integer(x):
        raise PoleError(f"trigamma pole at {x}")
    if x < 0.0:
        # psi'(x) + psi'(1-x) = pi^2 / sin^2(pi x)
        f = _centered_frac(x)
        s = math.sin(math.pi * f)
        return math.pi * math.pi / (s * s) - trigamma(1.0 - x)
    acc = 0.0
    while x < _SHIFT:
        acc += 1.0 / (x * x)
        x += 1.0
    y = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_PSI1_TAIL):
        tail = tail * y + c
    tail *= y / x
    return acc + 1.0 / x + 0.5 * y + tail


def harmonic_num(z: float) -> float:
    """H_z = psi(z+1) + gamma for real z outside the negative integers."""
    return digamma(z + 1.0) + EULER_GAMMA


def harmonic2_num(z: float) -> float:
    """H_z^(2) = zeta(2) - psi'(z+1)."""
    return ZETA2 - trigamma(z + 1.0)


# ---------------------------------------------------------------------------
# generalized binomials at real parameters
# ---------------------------------------------------------------------------

def _gamma_sign(x: float) -> float:
    if x > 0.0:
        return 1.0
    return -1.0 if math.ceil(-x) % 2 else 1.0


def binom_real(m: float, n: int) -> float:
    """C(m+n, n) at real m, via log-gamma with explicit sign tracking.

    The sign matters: for m in (-2, -1) the product prod (m+j)/j carries one
    negative factor, so C(m+n, n) < 0 for n >= 1.
    """
    if n < 0:
        raise DomainError("binom_real needs n >= 0")
    r = round(m)
    if -n <= r <= -1 and abs(m - r) < 1e-9:
        raise DomainError(f"m = {m} within 1e-9 of a binomial pole")
    a, b = m + n + 1.0, m + 1.0
    if _near_nonpositive_integer(a) or _near_nonpositive_integer(b):
        raise PoleError(f"gamma pole in C({m}+{n}, {n})")
    sign = _gamma_sign(a) * _gamma_sign(b)
    return sign * math.exp(math.lgamma(a) - math.lgamma(n + 1.0) - math.lgamma(b))


# ---------------------------------------------------------------------------
# floating-point evaluation of the parameterized identities
# ---------------------------------------------------------------------------

NUMERIC_IDS = ("I-cb-gen", "I-thm21", "I-thm41", "I-thm51")

_NUMERIC_N_MIN = {"I-cb-gen": 0, "I-thm21": 0, "I-thm41": 1, "I-thm51": 1}


@dataclass(frozen=True)
class NumericReport:
    identity: str
    m: float
    n: int
    lhs: float
    rhs: float
    rel_err: float
    tol: float
    passed: bool

    def to_record(self, no_timing: bool = False) -> dict:
        return {
            "identity": self.identity,
            "m": f"{self.m:.17g}",
            "n": self.n,
            "equal": self.passed,
            "lhs": f"{self.lhs:.17g}",
            "rhs": f"{self.rhs:.17g}",
            "terms": self.n + 1,
            "t_lhs_ns": 0,
            "t_rhs_ns": 0,
        }


def _check_m(m: float) -> None:
    r = round(m)
    if r <= -1 and abs(m - r) <= 1e-9:
        raise DomainError(f"m = {m} is (within 1e-9 of) a negative integer")
    if abs(m + 1.5) <= 1e-9:
        raise DomainError("m = -3/2 is excluded")


def _lhs_cbgen_f(m: float, n: int) -> float:
    u = b = s = 1.0
    for k in range(1, n + 1):
        u *= 2.0 * k / (2.0 * k - 1.0)
        b *= (m + k) / k
        s += u * b
    return s


def _rhs_cbgen_f(m: float, n: int) -> float:
    r = binom_real(m, n) / math.comb(2 * n, n)
    return ((m + n + 1.0) * r * math.ldexp(1.0, 2 * n + 1) + 1.0) / (2.0 * m + 3.0)


def _lhs_thm21_f(m: float, n: int) -> float:
    u = b = 1.0
    h = harmonic_num(m)
    s = h
    for k in range(1, n + 1):
        u *= 2.0 * k / (2.0 * k - 1.0)
        b *= (m + k) / k
        h += 1.0 / (m + k)
        s += u * b * h
    return s


def _rhs_thm21_f(m: float, n: int) -> float:
    d = 2.0 * m + 3.0
    r = binom_real(m, n) / math.comb(2 * n, n)
    t1 = (math.ldexp(1.0, 2 * n + 1) * (m + n + 1.0) * r * harmonic_num(m + n)
          + harmonic_num(m)) / d
    t2 = 2.0 / (d * d) * (math.ldexp(1.0, 2 * n) * (2 * n - 1.0) * r + 1.0)
    return t1 - t2


def _lhs_thm41_f(m: float, n: int) -> float:
    h = harmonic_num(m + 1.0)
    w = g = 1.0
    s = 0.0
    for k in range(1, n + 1):
        w *= (2.0 * k - 1.0) / (2.0 * k)
        g *= (m + 1.0 + k) / k
        h += 1.0 / (m + k + 1.0)
        s += w / ((2.0 * k - 1.0) * g) * h
    return s


def _rhs_thm41_f(m: float, n: int) -> float:
    d = 2.0 * m + 3.0
    ratio = math.comb(2 * n, n) / binom_real(m + 1.0, n)
    t3 = math.ldexp(1.0, -2 * n) / d * ratio * (harmonic_num(m + n + 1.0) + 2.0 / d)
    return (4.0 * m + 5.0) / ((m + 1.0) * d * d) + harmonic_num(m) / d - t3


def _lhs_thm51_f(m: float, n: int) -> float:
    u = b = 1.0
    h = harmonic_num(m)
    h2 = harmonic2_num(m)
    s = h * h - h2
    for k in range(1, n + 1):
        u *= 2.0 * k / (2.0 * k - 1.0)
        b *= (m + k) / k
        h += 1.0 / (m + k)
        h2 += 1.0 / ((m + k) * (m + k))
        s += u * b * (h * h - h2)
    return s


def _rhs_thm51_f(m: float, n: int) -> float:
    d = 2.0 * m + 3.0
    r = binom_real(m, n) / math.comb(2 * n, n)
    hm, h2m = harmonic_num(m), harmonic2_num(m)
    hmn, h2mn = harmonic_num(m + n), harmonic2_num(m + n)
    p = math.ldexp(1.0, 2 * n + 1)
    a = (hm * hm - h2m) + p * r * (hmn + (m + n + 1.0) * (hmn * hmn - h2mn))
    b = 2.0 * p * (m + n + 1.0) * r * hmn + 4.0 * hm + p * (2 * n - 1.0) * r * hmn
    c = math.ldexp(1.0, 2 * n) * (2 * n - 1.0) * r + 1.0
    return a / d - b / (d * d) + 8.0 * c / (d * d * d)


_NUMERIC_SIDES = {
    "I-cb-gen": (_lhs_cbgen_f, _rhs_cbgen_f),
    "I-thm21": (_lhs_thm21_f, _rhs_thm21_f),
    "I-thm41": (_lhs_thm41_f, _rhs_thm41_f),
    "I-thm51": (_lhs_thm51_f, _rhs_thm51_f),
}


def verify_numeric(identity: str, m: float, n: int, tol: float = 1e-8) -> NumericReport:
    """Evaluate both sides of a parameterized identity in floating point.

    Relative error is scaled by max(1, |lhs|, |rhs|); exponential factors on
    both sides make an absolute tolerance meaningless.
    """
    if identity not in _NUMERIC_SIDES:
        raise DomainError(f"{identity!r} has no numeric evaluator "
                          f"(supported: {', '.join(NUMERIC_IDS)})")
    _check_m(m)
    if n < _NUMERIC_N_MIN[identity]:
        raise DomainError(f"{identity} needs n >= {_NUMERIC_N_MIN[identity]}")
    lhs_f, rhs_f = _NUMERIC_SIDES[identity]
    lhs = lhs_f(m, n)
    rhs = rhs_f(m, n)
    rel = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
    return NumericReport(identity, m, n, lhs, rhs, rel, tol, rel <= tol)


def random_suite(seed: int, trials: int = 50, tol: float = 1e-8,
                 n_max: int = 15, identities=NUMERIC_IDS) -> list[NumericReport]:
    """Seeded random (m, n) sweep over the parameterized identities.

    m is uniform in (-1.45, 10) with 1e-3 neighborhoods of -3/2 and the
    negative integers rejected; n is uniform in [1, n_max].
    """
    rng = random.Random(seed)
    reports = []
    for _ in range(trials):
        while True:
            m = rng.uniform(-1.45, 10.0)
            if abs(m + 1.5) <= 1e-3 or abs(m + 1.0) <= 1e-3:
                continue
            break
        n = rng.randint(1, n_max)
        for ident in identities:
            reports.append(verify_numeric(ident, m, n, tol))
    return reports


# ---------------------------------------------------------------------------
# finite-difference validation of the derivative relations
# ---------------------------------------------------------------------------

DERIVATIVE_KINDS = ("harmonic", "binomial", "identity-1.4")


def derivative_check(kind: str, m: float, h: float, n: int = 8) -> float:
    """Max deviation between a central finite difference and its analytic
    counterpart.

    harmonic:      d/dz H_z            vs  zeta(2) - H_z^(2)
    binomial:      d/dm C(m+k, k)      vs  C(m+k, k) (H_{k+m} - H_m), k <= 20
    identity-1.4:  d/dm of both sides of the parameterized inverse
                   central-binomial sum at the given n; they must agree.
    """
    if not 1e-7 <= h <= 1e-4:
        raise DomainError(f"step h = {h} outside [1e-7, 1e-4]")
    _check_m(m)
    _check_m(m + h)
    _check_m(m - h)
    if kind == "harmonic":
        fd = (harmonic_num(m + h) - harmonic_num(m - h)) / (2.0 * h)
        return abs(fd - (ZETA2 - harmonic2_num(m)))
    if kind == "binomial":
        worst = 0.0
        for k in range(21):
            fd = (binom_real(m + h, k) - binom_real(m - h, k)) / (2.0 * h)
            analytic = binom_real(m, k) * (harmonic_num(k + m) - harmonic_num(m))
            worst = max(worst, abs(fd - analytic))
        return worst
    if kind == "identity-1.4":
        fd_lhs = (_lhs_cbgen_f(m + h, n) - _lhs_cbgen_f(m - h, n)) / (2.0 * h)
        fd_rhs = (_rhs_cbgen_f(m + h, n) - _rhs_cbgen_f(m - h, n)) / (2.0 * h)
        return abs(fd_lhs - fd_rhs)
    raise DomainError(f"unknown derivative kind {kind!r}")


# ---------------------------------------------------------------------------
# the residual sum  sum_{j=1..n} 4^j / (j^2 C(2j, j))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidualSum:
    n: int
    exact: Fraction
    numeric: float
    tail_bound: float


def residual_tail_bound(n: int) -> float:
    """Upper bound on the tail sum_{j > n} 4^j / (j^2 C(2j,j)).

    Majorization: C(2j,j) >= 4^j / sqrt(pi (j + 1/2)) and
    sqrt(j + 1/2) <= sqrt(1.5 j) for j >= 1 give terms <= sqrt(1.5 pi) j^{-3/2},
    and the integral comparison bounds the tail by 2 sqrt(1.5 pi) / sqrt(n).
    """
    if n < 1:
        raise DomainError("tail bound needs n >= 1")
    return 2.0 * math.sqrt(1.5 * math.pi) / math.sqrt(n)


def residual_sum(n: int) -> ResidualSum:
    """Exact and floating-point partial sums of 4^j / (j^2 C(2j,j)).

    No closed form is claimed for any n; the report carries the partial sum
    together with a tail bound for the corresponding infinite series.
    """
    if n < 1:
        raise DomainError("residual_sum needs n >= 1")
    term = Fraction(2)           # j = 1: 4 / (1 * 2)
    total = Fraction(2)
    term_f = 2.0
    total_f = 2.0
    for j in range(2, n + 1):
        ratio_num = 2 * (j - 1) * (j - 1)
        ratio_den = j * (2 * j - 1)
        term *= Fraction(ratio_num, ratio_den)
        total += term
        term_f *= ratio_num / ratio_den
        total_f += term_f
    return ResidualSum(n, total, total_f, residual_tail_bound(n))


# ---------------------------------------------------------------------------
# the gate for the derived half-integer order-2 closed form
# ---------------------------------------------------------------------------

def validate_half_integer_order2(points: int = 10, tol: float = 1e-10) -> bool:
    """Check H_{k+1/2}^(2) = 4 O_{k+1}^(2) - pi^2/3 against trigamma.

    Returns True iff the relative deviation stays within tol at
    m = 1/2, 3/2, ..., (2*points-1)/2.  The exact layer's half-integer
    order-2 values must not be relied on before this passes.
    """
    from .exact import ExactParam, harmonic2_exact
    for k in range(points):
        m = ExactParam(2 * k + 1)
        exact_f = float(harmonic2_exact(m))
        numeric = harmonic2_num(k + 0.5)
        if abs(exact_f - numeric) > tol * max(1.0, abs(numeric)):
            return False
    return True
