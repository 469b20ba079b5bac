"""Exact arithmetic core.

Arbitrary-precision rationals, binomial/Catalan/harmonic-family evaluators at
integer and half-integer arguments, and the four-dimensional constant ring
spanned by (1, ln2, ln^2 2, pi^2) in which every exact value produced by the
identity catalog lives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, OutOfSpanError

# The exact scalar used everywhere.  fractions.Fraction already guarantees the
# canonical form this package relies on: lowest terms after every operation,
# denominator >= 1, zero stored as 0/1.
Rational = Fraction

ScalarLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)

LN2_FLOAT = math.log(2.0)
PI_SQ_FLOAT = math.pi * math.pi


# ---------------------------------------------------------------------------
# binomial / Catalan evaluators
# ---------------------------------------------------------------------------

def binom_nat(n: int, k: int) -> Fraction:
    """C(n, k) for nonnegative integers, 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binom_nat needs nonnegative arguments, got ({n}, {k})")
    return Fraction(math.comb(n, k))


def binom_gen(m: ScalarLike, k: int) -> Fraction:
    """Generalized binomial C(m+k, k) = prod_{j=1..k} (m+j)/j for rational m.

    Agrees with binom_nat(m+k, k) at nonnegative integer m.  Zero factors are
    allowed (the result is then 0); k must be a nonnegative integer.
    """
    if k < 0:
        raise DomainError(f"binom_gen needs k >= 0, got {k}")
    mf = Fraction(m)
    if mf.denominator == 1 and mf >= 0:
        return Fraction(math.comb(mf.numerator + k, k))
    num = 1
    den = 1
    p, q = mf.numerator, mf.denominator
    for j in range(1, k + 1):
        num *= p + j * q
        den *= j * q
    return Fraction(num, den)


def catalan(n: int) -> Fraction:
    """Catalan number C(2n, n) / (n+1), as an integer-valued Fraction."""
    if n < 0:
        raise DomainError(f"catalan needs n >= 0, got {n}")
    return Fraction(math.comb(2 * n, n), n + 1)


# ---------------------------------------------------------------------------
# harmonic families (empty sums are 0)
# ---------------------------------------------------------------------------

def harmonic(n: int) -> Fraction:
    """H_n = sum_{k=1..n} 1/k."""
    if n < 0:
        raise DomainError(f"harmonic needs n >= 0, got {n}")
    return sum((Fraction(1, k) for k in range(1, n + 1)), _ZERO)


def odd_harmonic(n: int) -> Fraction:
    """O_n = sum_{k=1..n} 1/(2k-1)."""
    if n < 0:
        raise DomainError(f"odd_harmonic needs n >= 0, got {n}")
    return sum((Fraction(1, 2 * k - 1) for k in range(1, n + 1)), _ZERO)


def harmonic2(n: int) -> Fraction:
    """Order-2 harmonic number sum_{k=1..n} 1/k^2."""
    if n < 0:
        raise DomainError(f"harmonic2 needs n >= 0, got {n}")
    return sum((Fraction(1, k * k) for k in range(1, n + 1)), _ZERO)


def odd_harmonic2(n: int) -> Fraction:
    """Order-2 odd harmonic number sum_{k=1..n} 1/(2k-1)^2."""
    if n < 0:
        raise DomainError(f"odd_harmonic2 needs n >= 0, got {n}")
    return sum((Fraction(1, (2 * k - 1) ** 2) for k in range(1, n + 1)), _ZERO)


# ---------------------------------------------------------------------------
# the constant ring
# ---------------------------------------------------------------------------

def _coerce(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class SymValue:
    """Element of the rational span of the basis (1, ln2, ln^2 2, pi^2).

    The basis is treated as linearly independent over the rationals, so
    equality is coefficient-wise.  A value whose ln2/ln^2 2/pi^2 coefficients
    all vanish compares equal to the plain rational it embeds.
    """

    c1: Fraction = _ZERO
    cl: Fraction = _ZERO
    cl2: Fraction = _ZERO
    cp: Fraction = _ZERO

    def __post_init__(self):
        object.__setattr__(self, "c1", _coerce(self.c1))
        object.__setattr__(self, "cl", _coerce(self.cl))
        object.__setattr__(self, "cl2", _coerce(self.cl2))
        object.__setattr__(self, "cp", _coerce(self.cp))

    # -- classification ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.cl == 0 and self.cl2 == 0 and self.cp == 0

    @property
    def rational_part(self) -> Fraction:
        return self.c1

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise OutOfSpanError(f"{self} has irrational components")
        return self.c1

    @classmethod
    def of(cls, x) -> "SymValue":
        if isinstance(x, SymValue):
            return x
        return cls(_coerce(x))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, SymValue):
            return SymValue(self.c1 + other.c1, self.cl + other.cl,
                            self.cl2 + other.cl2, self.cp + other.cp)
        if isinstance(other, (int, Fraction)):
            return SymValue(self.c1 + other, self.cl, self.cl2, self.cp)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SymValue(-self.c1, -self.cl, -self.cl2, -self.cp)

    def __sub__(self, other):
        if isinstance(other, (SymValue, int, Fraction)):
            return self + (-other if isinstance(other, SymValue) else -_coerce(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def _scale(self, q) -> "SymValue":
        q = _coerce(q)
        return SymValue(q * self.c1, q * self.cl, q * self.cl2, q * self.cp)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        if not isinstance(other, SymValue):
            return NotImplemented
        if other.is_rational:
            return self._scale(other.c1)
        if self.is_rational:
            return other._scale(self.c1)
        # both factors carry irrational parts; the only representable product
        # is (a + b ln2)(c + d ln2), via ln2 * ln2 = ln^2 2
        if self.cl2 == 0 and self.cp == 0 and other.cl2 == 0 and other.cp == 0:
            return SymValue(self.c1 * other.c1,
                            self.c1 * other.cl + self.cl * other.c1,
                            self.cl * other.cl,
                            _ZERO)
        raise OutOfSpanError(f"product of {self} and {other} leaves the span")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(1, 1) / other)
        if isinstance(other, SymValue) and other.is_rational:
            return self._scale(1 / other.c1)
        return NotImplemented

    # -- comparison / conversion --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, SymValue):
            return (self.c1 == other.c1 and self.cl == other.cl
                    and self.cl2 == other.cl2 and self.cp == other.cp)
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.c1 == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.c1)
        return hash((self.c1, self.cl, self.cl2, self.cp))

    def __bool__(self):
        return not (self.c1 == 0 and self.cl == 0 and self.cl2 == 0 and self.cp == 0)

    def __float__(self):
        return (float(self.c1) + float(self.cl) * LN2_FLOAT
                + float(self.cl2) * LN2_FLOAT * LN2_FLOAT
                + float(self.cp) * PI_SQ_FLOAT)

    def __str__(self):
        parts = []
        for coeff, label in ((self.c1, ""), (self.cl, "ln2"),
                             (self.cl2, "ln2^2"), (self.cp, "pi^2")):
            if coeff == 0:
                continue
            mag = -coeff if coeff < 0 else coeff
            body = f"{mag}*{label}" if label else f"{mag}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"SymValue({self.c1!r}, {self.cl!r}, {self.cl2!r}, {self.cp!r})"


SYM_ZERO = SymValue()
SYM_ONE = SymValue(_ONE)
LN2 = SymValue(cl=_ONE)
LN2_SQUARED = SymValue(cl2=_ONE)
PI_SQUARED = SymValue(cp=_ONE)


def sym_add(a: SymValue, b: SymValue) -> SymValue:
    return SymValue.of(a) + SymValue.of(b)


def sym_scale(q: ScalarLike, a: SymValue) -> SymValue:
    return SymValue.of(a) * _coerce(q)


def sym_mul(a: SymValue, b: SymValue) -> SymValue:
    return SymValue.of(a) * SymValue.of(b)


# ---------------------------------------------------------------------------
# exactly representable parameter points
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ExactParam:
    """Parameter m = twice/2, restricted to the points where harmonic values
    have exact closed forms in the constant ring: integers >= 0 and
    half-integers >= -1/2.  Negative integers and -3/2 are unrepresentable by
    construction.
    """

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError("twice must be an int")
        if self.twice < -1:
            raise DomainError(
                f"m = {Fraction(self.twice, 2)} is outside the exact domain "
                "(integers >= 0 and half-integers >= -1/2)")

    @classmethod
    def from_value(cls, value: ScalarLike) -> "ExactParam":
        v = Fraction(value)
        if v.denominator not in (1, 2):
            raise DomainError(f"m = {v} is not an integer or half-integer")
        return cls(v.numerator * (2 // v.denominator))

    @classmethod
    def parse(cls, text: str) -> "ExactParam":
        try:
            v = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse parameter {text!r}") from exc
        return cls.from_value(v)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def int_value(self) -> int:
        if not self.is_integer:
            raise DomainError(f"m = {self.value} is not an integer")
        return self.twice // 2

    def shifted(self, k: int) -> "ExactParam":
        """The point m + k for an integer k."""
        return ExactParam(self.twice + 2 * k)

    def schema_str(self) -> str:
        """Wire rendering used in reports: numerator over a fixed 2."""
        return f"{self.twice}/2"

    def __str__(self):
        return str(self.value)


def harmonic_exact(m: ExactParam) -> SymValue:
    """H_m in the constant ring.

    Integer m gives the plain rational H_m.  Half-integer m = j - 1/2 uses
    H_{j-1/2} = 2*O_j - 2*ln2, which holds for every j >= 0.
    """
    if m.is_integer:
        return SymValue(harmonic(m.int_value))
    j = (m.twice + 1) // 2
    return SymValue(2 * odd_harmonic(j), Fraction(-2))


def harmonic2_exact(m: ExactParam) -> SymValue:
    """H_m^(2) in the constant ring.

    Integer m gives the plain rational.  Half-integer m = j - 1/2 uses
    H_{j-1/2}^(2) = 4*O_j^(2) - pi^2/3, cross-checked against trigamma by the
    numeric layer (see hbe.numerics.validate_half_integer_order2).
    """
    if m.is_integer:
        return SymValue(harmonic2(m.int_value))
    j = (m.twice + 1) // 2
    return SymValue(4 * odd_harmonic2(j), _ZERO, _ZERO, Fraction(-1, 3))
