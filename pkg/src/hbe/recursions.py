"""Recursive solvers for the inverse-central-binomial power sums.

U_d(n) = sum_{k=1..n} 4^k k^d / C(2k,k) and its harmonic-weighted companion
V_d(n) = sum_{k=1..n} 4^k k^d H_k / C(2k,k) satisfy recursions in d at fixed n
obtained by summation by parts.  This module implements those recursions, the
printed closed forms for small d, and an exact fitter that discovers the
polynomial structure

    V_d(n) = 2^{2n+1} / (N(d) C(2n,n)) * ((n+1) P_d(n) H_n - (2n-1) Q_d(n) / N(d))
             + C(d) / N(d)^2,      N(d) = prod_{j=0..d+1} (2j+1),

with P_d, Q_d of degree d, by solving an exact linear system over the
rationals and validating on held-out points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SingularSystemError
from .exact import harmonic

_ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# recursion coefficients
# ---------------------------------------------------------------------------

def c_coeff(d: int, j: int) -> Fraction:
    """The coefficient C(d+1, j+1) + C(d, j+1) of the descent recursion."""
    if d < 1:
        raise DomainError(f"c_coeff needs d >= 1, got {d}")
    if not 1 <= j <= d:
        raise DomainError(f"c_coeff needs 1 <= j <= d, got j = {j} for d = {d}")
    return Fraction(math.comb(d + 1, j + 1) + math.comb(d, j + 1))


@dataclass(frozen=True)
class CoeffTable:
    """c_{d,1} .. c_{d,d} for one degree d."""

    d: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.d:
            raise DomainError("entry count must equal d")
        for j, c in enumerate(self.entries, start=1):
            if c != c_coeff(self.d, j):
                raise DomainError(f"c_{{{self.d},{j}}} = {c} violates the binomial formula")

    @classmethod
    def for_degree(cls, d: int) -> "CoeffTable":
        return cls(d, tuple(c_coeff(d, j) for j in range(1, d + 1)))

    def __getitem__(self, j: int) -> Fraction:
        return self.entries[j - 1]


# ---------------------------------------------------------------------------
# the recursions
# ---------------------------------------------------------------------------

def _pow_ratio(n: int) -> Fraction:
    """2^{2n+1} / C(2n,n)."""
    return Fraction(1 << (2 * n + 1), math.comb(2 * n, n))


def _check_dn(d: int, n: int) -> None:
    if d < 0:
        raise DomainError(f"degree d must be >= 0, got {d}")
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


def u_values(d: int, n: int) -> list[Fraction]:
    """U_0(n) .. U_d(n) at fixed n, built bottom-up in d."""
    _check_dn(d, n)
    t = (n + 1) * _pow_ratio(n)
    out = [(t - 2) / 3]
    for dd in range(1, d + 1):
        acc = t * n ** dd
        for j in range(1, dd + 1):
            acc -= (-1) ** j * c_coeff(dd, j) * out[dd - j]
        out.append(acc / (2 * dd + 3))
    return out


def u_rec(d: int, n: int) -> Fraction:
    """U_d(n) by the degree-descent recursion."""
    return u_values(d, n)[d]


def v_values(d: int, n: int) -> list[Fraction]:
    """V_0(n) .. V_d(n) at fixed n."""
    _check_dn(d, n)
    t2 = _pow_ratio(n)
    hn = harmonic(n)
    v0 = t2 / 3 * ((n + 1) * hn - Fraction(2 * n - 1, 3)) - Fraction(2, 9)
    us = u_values(d, n)
    out = [v0]
    hn1 = hn + Fraction(1, n + 1)
    for dd in range(1, d + 1):
        acc = (n + 1) * t2 * n ** dd * hn1 - 2 * us[dd]
        for j in range(1, dd + 1):
            acc -= (-1) ** j * c_coeff(dd, j) * out[dd - j]
        out.append(acc / (2 * dd + 3))
    return out


def v_rec(d: int, n: int) -> Fraction:
    """V_d(n) by the degree-descent recursion (pulls in U_d(n))."""
    return v_values(d, n)[d]


# ---------------------------------------------------------------------------
# printed closed forms for small d
# ---------------------------------------------------------------------------

def u_closed_small(d: int, n: int) -> Fraction:
    """Closed forms for U_1, U_2, U_3."""
    _check_dn(d, n)
    t = (n + 1) * _pow_ratio(n)
    if d == 1:
        return ((3 * n + 1) * t - 2) / 15
    if d == 2:
        return ((15 * n * n + 12 * n - 1) * t + 2) / 105
    if d == 3:
        return ((105 * n ** 3 + 135 * n * n + 3 * n - 9) * t + 18) / 945
    raise DomainError(f"no catalogued closed form for U_{d}")


def v_closed_small(d: int, n: int) -> Fraction:
    """Closed forms for V_1, V_2.

    The quadratic multiplying H_n in V_2 is 15n^2 + 12n - 1, the variant
    confirmed by direct summation (V_2(1) = 2); see fit_structure(2).
    """
    _check_dn(d, n)
    t2 = _pow_ratio(n)
    hn = harmonic(n)
    if d == 1:
        return ((3 * n + 1) * (n + 1) * t2 * hn / 15
                - (18 * n * n - 11 * n + 1) * t2 / 225 + Fraction(2, 225))
    if d == 2:
        return ((n + 1) * (15 * n * n + 12 * n - 1) * t2 * hn / 105
                - (450 * n ** 3 - 261 * n * n - 328 * n + 173) * t2 / 11025
                + Fraction(346, 11025))
    raise DomainError(f"no catalogued closed form for V_{d}")


# ---------------------------------------------------------------------------
# exact structure discovery
# ---------------------------------------------------------------------------

def nfactor(d: int) -> Fraction:
    """N(d) = prod_{j=0..d+1} (2j+1)."""
    out = 1
    for j in range(d + 2):
        out *= 2 * j + 1
    return Fraction(out)


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square system by Gaussian elimination over the rationals.

    Every pivot is exact, so any nonzero pivot works; no magnitude-based
    pivoting is needed.  Raises SingularSystemError when no unique solution
    exists.
    """
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise DomainError("solve_exact needs a square system")
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            row_r, row_c = m[r], m[col]
            for c in range(col, n + 1):
                row_r[c] -= f * row_c[c]
    sol = [_ZERO] * n
    for r in range(n - 1, -1, -1):
        acc = m[r][n]
        for c in range(r + 1, n):
            acc -= m[r][c] * sol[c]
        sol[r] = acc / m[r][r]
    return sol


def _poly_eval(coeffs: tuple[Fraction, ...], n: int) -> Fraction:
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class PolynomialFit:
    """Discovered polynomial structure of V_d(n) (kind "v") or U_d(n) (kind "u").

    p and q are coefficient tuples, lowest degree first.  For kind "u" the
    ansatz is U_d(n) = 2^{2n+1} (n+1) P(n) / (N C(2n,n)) + C/N and q is empty.
    """

    d: int
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    cconst: Fraction
    nfactor: Fraction
    residual_ok: bool
    kind: str = "v"
    diagnostic: str = ""

    def evaluate(self, n: int) -> Fraction:
        t2 = _pow_ratio(n)
        pn = _poly_eval(self.p, n)
        if self.kind == "u":
            return t2 * (n + 1) * pn / self.nfactor + self.cconst / self.nfactor
        qn = _poly_eval(self.q, n)
        return (t2 / self.nfactor * ((n + 1) * pn * harmonic(n)
                                     - (2 * n - 1) * qn / self.nfactor)
                + self.cconst / self.nfactor ** 2)

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "P": [str(c) for c in self.p],
            "Q": [str(c) for c in self.q],
            "C": str(self.cconst),
            "N": str(self.nfactor),
            "residual_ok": self.residual_ok,
            "diagnostic": self.diagnostic,
        }


def fit_structure(d: int) -> PolynomialFit:
    """Discover P_d, Q_d, C(d) for the V_d ansatz by exact interpolation.

    The 2d+3 unknowns are fitted on n = 1..2d+3 and validated on the next
    2d+3 points; residual_ok reflects the validation.  A singular sample
    system raises SingularSystemError.
    """
    if d < 1:
        raise DomainError(f"fit_structure needs d >= 1, got {d}")
    nf = nfactor(d)
    unknowns = 2 * d + 3
    rows, rhs = [], []
    for n in range(1, unknowns + 1):
        t2 = _pow_ratio(n)
        hn = harmonic(n)
        a = t2 * (n + 1) * hn / nf
        b = -t2 * (2 * n - 1) / (nf * nf)
        row = [a * n ** i for i in range(d + 1)]
        row += [b * n ** i for i in range(d + 1)]
        row.append(1 / (nf * nf))
        rows.append(row)
        rhs.append(v_rec(d, n))
    sol = solve_exact(rows, rhs)
    p = tuple(sol[: d + 1])
    q = tuple(sol[d + 1: 2 * d + 2])
    cconst = sol[2 * d + 2]
    fit = PolynomialFit(d, p, q, cconst, nf, True)
    bad = [n for n in range(unknowns + 1, 2 * unknowns + 1)
           if fit.evaluate(n) != v_rec(d, n)]
    if bad:
        return PolynomialFit(d, p, q, cconst, nf, False,
                             diagnostic=f"validation failed at n = {bad}")
    return fit


def fit_structure_u(d: int) -> PolynomialFit:
    """Same discovery for the plain power sum: U_d(n) = t (n+1) P(n)/N + C/N."""
    if d < 1:
        raise DomainError(f"fit_structure_u needs d >= 1, got {d}")
    nf = nfactor(d)
    unknowns = d + 2
    rows, rhs = [], []
    for n in range(1, unknowns + 1):
        a = _pow_ratio(n) * (n + 1) / nf
        row = [a * n ** i for i in range(d + 1)]
        row.append(1 / nf)
        rows.append(row)
        rhs.append(u_rec(d, n))
    sol = solve_exact(rows, rhs)
    p = tuple(sol[: d + 1])
    cconst = sol[d + 1]
    fit = PolynomialFit(d, p, (), cconst, nf, True, kind="u")
    bad = [n for n in range(unknowns + 1, 2 * unknowns + 1)
           if fit.evaluate(n) != u_rec(d, n)]
    if bad:
        return PolynomialFit(d, p, (), cconst, nf, False, kind="u",
                             diagnostic=f"validation failed at n = {bad}")
    return fit
