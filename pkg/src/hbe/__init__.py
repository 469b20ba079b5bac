"""Exact verification and evaluation engine for harmonic-number /
inverse-central-binomial sum identities.

The exact layer works over arbitrary-precision rationals extended by the
constants ln2, ln^2 2 and pi^2, so every catalogued identity is checked by
coefficient-wise equality rather than within a floating-point tolerance; a
separate digamma/trigamma layer re-verifies the parameterized identities at
arbitrary real parameters.
"""

from .errors import DomainError, OutOfSpanError, PoleError, SingularSystemError
from .exact import (
    LN2,
    LN2_SQUARED,
    PI_SQUARED,
    ExactParam,
    Rational,
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
from .catalog import (
    EvalPoint,
    IdentityDescriptor,
    VerificationReport,
    lhs_direct,
    lookup,
    registry,
    rhs_closed,
    verify_point,
    verify_range,
)
from .recursions import (
    CoeffTable,
    PolynomialFit,
    c_coeff,
    fit_structure,
    fit_structure_u,
    u_closed_small,
    u_rec,
    v_closed_small,
    v_rec,
)
from .numerics import (
    NumericReport,
    ResidualSum,
    derivative_check,
    digamma,
    harmonic2_num,
    harmonic_num,
    residual_sum,
    trigamma,
    validate_half_integer_order2,
    verify_numeric,
)

__version__ = "0.1.0"
