"""Closed-form identities for the two-upper/one-lower family member:
the beta-downshift recurrence and the three differential relations.

Each identity is expressed as a transformation of the parameter tuple plus
prefactors and (for the downshift) a finite correction sum, so both sides
stay independently evaluable and testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConditionViolated
from .gammafns import pochhammer, reciprocal_gamma
from .series import HmlfSpec, evaluate, validate_spec

__all__ = [
    "DownshiftExpansion",
    "downshift_expansion",
    "beta_downshift",
    "derivative_closed_form",
    "parameter_shift_rhs",
    "index_weight_shift_rhs",
]


def _require_2_1(spec: HmlfSpec, what: str) -> HmlfSpec:
    if spec.p != 2 or spec.q != 1:
        raise ValueError(f"{what} is defined for p = 2, q = 1 specs, "
                         f"got p = {spec.p}, q = {spec.q}")
    return validate_spec(spec)


@dataclass(frozen=True)
class DownshiftExpansion:
    """Structured right-hand side of the downshift identity.

    The value at u is  scale * u**power * F_shifted(u)  plus the finite
    correction sum of coeff * u**p over the recorded (p, coeff) pairs, whose
    powers run n-1, n-2, ..., 0.
    """

    scale: float
    power: int
    shifted: HmlfSpec
    correction: tuple[tuple[int, float], ...]


def downshift_expansion(spec: HmlfSpec, n: int) -> DownshiftExpansion:
    """Expansion expressing the member with beta replaced by beta - n*alpha
    through the member with all three parameters raised by n.

    Requires beta > n*alpha so every correction Gamma argument stays positive
    (the identity's stated validity condition; violating it raises
    ConditionViolated rather than silently extending).
    """
    spec = _require_2_1(spec, "downshift_expansion")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not spec.beta > n * spec.alpha:
        raise ConditionViolated(
            f"downshift requires beta > n*alpha, got beta = {spec.beta}, "
            f"n*alpha = {n * spec.alpha}")
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    scale = pochhammer(a1, n) * pochhammer(a2, n) / pochhammer(b1, n)
    shifted = HmlfSpec((a1 + n, a2 + n), (b1 + n,), spec.alpha, spec.beta)
    correction = tuple(
        (n - r,
         pochhammer(a1, n - r) * pochhammer(a2, n - r) / pochhammer(b1, n - r)
         * reciprocal_gamma(spec.beta - r * spec.alpha))
        for r in range(1, n + 1))
    return DownshiftExpansion(scale, n, shifted, correction)


def beta_downshift(spec: HmlfSpec, n: int, u: float, tol: float = 1e-13,
                   max_terms: int = 10000) -> float:
    """Value of the member with beta - n*alpha at u, assembled from the
    shifted member plus the correction sum (never from the direct series)."""
    ex = downshift_expansion(spec, n)
    head = ex.scale * u ** ex.power * evaluate(ex.shifted, u, tol, max_terms).value
    tail = math.fsum(coeff * u ** p for p, coeff in ex.correction)
    return head + tail


def derivative_closed_form(spec: HmlfSpec, m: int) -> tuple[float, HmlfSpec]:
    """Closed form of the m-th u-derivative: a scale factor and the family
    member whose series equals the derivative.

    The result member has upper parameters (a1+m, a2+m, m+1), lower
    parameters (b1+m, 1), the same alpha, and beta shifted to m*alpha + beta.
    """
    spec = _require_2_1(spec, "derivative_closed_form")
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    scale = (math.factorial(m) * pochhammer(a1, m) * pochhammer(a2, m)
             / pochhammer(b1, m))
    result = HmlfSpec((a1 + m, a2 + m, float(m + 1)), (b1 + m, 1.0),
                      spec.alpha, m * spec.alpha + spec.beta)
    return scale, result


def parameter_shift_rhs(spec: HmlfSpec, m: int, u: float, tol: float = 1e-13,
                        max_terms: int = 10000) -> float:
    """u^m (a1)_m (a2)_m / (b1)_m times the member with every parameter
    raised by m (beta unchanged).

    This is the numeric right-hand side of the umbral-derivative relation
    that shifts the Pochhammer indices; the operator-valued left-hand side
    has no standalone numerical meaning and is not modelled.
    """
    spec = _require_2_1(spec, "parameter_shift_rhs")
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if u == 0.0:
        return 0.0
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    scale = pochhammer(a1, m) * pochhammer(a2, m) / pochhammer(b1, m)
    shifted = HmlfSpec((a1 + m, a2 + m), (b1 + m,), spec.alpha, spec.beta)
    return u ** m * scale * evaluate(shifted, u, tol, max_terms).value


def index_weight_shift_rhs(spec: HmlfSpec, m: int, u: float, tol: float = 1e-13,
                           max_terms: int = 10000) -> float:
    """u^m times the member with m appended (2; 1) parameter pairs and beta
    shifted to m*alpha + beta.

    Term-wise this multiplies coefficient r by (r+1)^m and moves the Gamma
    weight m steps up; it is the numeric right-hand side of the remaining
    umbral-derivative relation.
    """
    spec = _require_2_1(spec, "index_weight_shift_rhs")
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if u == 0.0:
        return 0.0
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    widened = HmlfSpec((a1, a2) + (2.0,) * m, (b1,) + (1.0,) * m,
                       spec.alpha, m * spec.alpha + spec.beta)
    return u ** m * evaluate(widened, u, tol, max_terms).value
