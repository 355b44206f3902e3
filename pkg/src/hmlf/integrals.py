"""Closed-form right-hand sides of the integral representations and the
Laplace/Sumudu transforms.

Every operation builds a transformed parameter tuple plus prefactor and sums
the resulting series; none of them performs numerical integration.  The
quadrature oracle verifies them from the other side.

The three Gaussian-weight identities (one for each of p - q in {1, 0, -1})
share a single construction: halve every parameter into the pair (x/2,
(x+1)/2), append an upper 1/2, double alpha, and evaluate at 4^(p-q)/delta.
That exponent rule reproduces the separately stated argument constants 4/d,
1/d and 1/(4d); it falls out of the Pochhammer duplication identity
(d)_{2r} = 4^r (d/2)_r ((d+1)/2)_r applied to the even part of the series.
"""

from __future__ import annotations

import math

from .errors import FormalIdentity, InvalidDelta, InvalidS
from .series import EffectiveRule, HmlfSpec, classify, evaluate, validate_spec

__all__ = [
    "moment_spec",
    "moment_integral",
    "gaussian_spec",
    "gaussian_argument",
    "gaussian_integral",
    "sine_integral_spec",
    "sine_integral_rhs",
    "cosine_integral_spec",
    "cosine_integral_rhs",
    "transform_spec",
    "laplace_transform",
    "sumudu_transform",
]


def _require_2_1(spec: HmlfSpec, what: str) -> HmlfSpec:
    if spec.p != 2 or spec.q != 1:
        raise ValueError(f"{what} is defined for p = 2, q = 1 specs, "
                         f"got p = {spec.p}, q = {spec.q}")
    return validate_spec(spec)


def moment_spec(spec: HmlfSpec, delta: float) -> HmlfSpec:
    """Parameter tuple of the antiderivative member: append delta+1 above
    and delta+2 below."""
    spec = validate_spec(spec)
    if delta == -1.0:
        raise InvalidDelta("delta = -1 voids the u^(delta+1)/(delta+1) prefactor")
    d2 = delta + 2.0
    if d2 <= 0.0 and d2 == math.floor(d2):
        raise InvalidDelta(f"delta + 2 = {d2} is a nonpositive integer")
    return HmlfSpec(spec.upper + (delta + 1.0,), spec.lower + (d2,),
                    spec.alpha, spec.beta)


def moment_integral(spec: HmlfSpec, delta: float, u: float, tol: float = 1e-13,
                    max_terms: int = 10000) -> float:
    """Antiderivative of u^delta f(u), normalized to vanish at u = 0
    (valid normalization for delta > -1)."""
    mspec = moment_spec(spec, delta)
    if u == 0.0:
        if delta < -1.0:
            raise InvalidDelta(f"u = 0 is singular for delta = {delta} < -1")
        return 0.0
    if u < 0.0 and (delta + 1.0) != math.floor(delta + 1.0):
        raise InvalidDelta(
            f"u^(delta+1) is not real for u = {u} with fractional delta = {delta}")
    return (u ** (delta + 1.0) / (delta + 1.0)
            * evaluate(mspec, u, tol, max_terms).value)


def gaussian_spec(spec: HmlfSpec) -> HmlfSpec:
    """Doubled parameter tuple of the Gaussian-weight identity."""
    spec = validate_spec(spec)
    upper: list[float] = []
    for a in spec.upper:
        upper += [a / 2.0, (a + 1.0) / 2.0]
    upper.append(0.5)
    lower: list[float] = []
    for b in spec.lower:
        lower += [b / 2.0, (b + 1.0) / 2.0]
    return HmlfSpec(upper, lower, 2.0 * spec.alpha, spec.beta)


def gaussian_argument(spec: HmlfSpec, delta: float) -> float:
    """Series argument 4^(p-q)/delta of the Gaussian-weight identity."""
    return 4.0 ** (spec.p - spec.q) / delta


def gaussian_integral(spec: HmlfSpec, delta: float, tol: float = 1e-13,
                      max_terms: int = 10000) -> float:
    """Integral of exp(-delta u^2) f(u) over the real line, by closed form.

    Raises FormalIdentity when the doubled member is formal-only under the
    effective rule: the identity then holds only as a formal series and a
    float would be meaningless.
    """
    spec = validate_spec(spec)
    if delta <= 0.0:
        raise InvalidDelta(f"delta must be > 0, got {delta}")
    doubled = gaussian_spec(spec)
    if classify(doubled).effective_rule is EffectiveRule.FORMAL_ONLY:
        raise FormalIdentity(
            "doubled member is formal-only (p - q - alpha = "
            f"{doubled.p - doubled.q - doubled.alpha:g} > 0); the Gaussian "
            "identity is asymptotic for these parameters")
    arg = gaussian_argument(spec, delta)
    return math.sqrt(math.pi / delta) * evaluate(doubled, arg, tol, max_terms).value


def sine_integral_spec(spec: HmlfSpec) -> HmlfSpec:
    spec = _require_2_1(spec, "sine_integral_rhs")
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    return HmlfSpec(
        (a1 / 2.0, (a1 + 1.0) / 2.0, a2 / 2.0, (a2 + 1.0) / 2.0, 0.5, 1.0),
        (b1 / 2.0, (b1 + 1.0) / 2.0),
        2.0 * spec.alpha, spec.beta)


def sine_integral_rhs(spec: HmlfSpec, tol: float = 1e-13,
                      max_terms: int = 10000) -> float:
    """Closed form of the half-line integral of f(-u) sin(u): the doubled
    member evaluated at the fixed argument -16.

    The improper integral is classically convergent only when the doubled
    member is entire, which for this construction means alpha > 2; at or
    below that the identity is formal and FormalIdentity is raised.
    """
    rhs = sine_integral_spec(spec)
    if classify(rhs).effective_rule is not EffectiveRule.ENTIRE:
        raise FormalIdentity(
            f"sine integral identity requires alpha > 2, got alpha = {spec.alpha}")
    return evaluate(rhs, -16.0, tol, max_terms).value


def cosine_integral_spec(spec: HmlfSpec) -> HmlfSpec:
    spec = _require_2_1(spec, "cosine_integral_rhs")
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    return HmlfSpec(
        ((a1 + 1.0) / 2.0, (a1 + 2.0) / 2.0, (a2 + 1.0) / 2.0,
         (a2 + 2.0) / 2.0, 1.5, 1.0),
        ((b1 + 1.0) / 2.0, (b1 + 2.0) / 2.0),
        2.0 * spec.alpha, spec.alpha + spec.beta)


def cosine_integral_rhs(spec: HmlfSpec, tol: float = 1e-13,
                        max_terms: int = 10000) -> float:
    """Closed form of the half-line integral of f(-u) cos(u): prefactor
    a1 a2 / b1 times the shifted doubled member at -16 (beta moves to
    alpha + beta)."""
    rhs = cosine_integral_spec(spec)
    if classify(rhs).effective_rule is not EffectiveRule.ENTIRE:
        raise FormalIdentity(
            f"cosine integral identity requires alpha > 2, got alpha = {spec.alpha}")
    a1, a2 = spec.upper
    b1 = spec.lower[0]
    return a1 * a2 / b1 * evaluate(rhs, -16.0, tol, max_terms).value


def transform_spec(spec: HmlfSpec) -> HmlfSpec:
    """Parameter tuple shared by the Laplace and Sumudu closed forms: the
    literal constant 1 joins the upper parameters."""
    spec = _require_2_1(spec, "transform_spec")
    a1, a2 = spec.upper
    return HmlfSpec((a1, a2, 1.0), spec.lower, spec.alpha, spec.beta)


def laplace_transform(spec: HmlfSpec, s: float, tol: float = 1e-13,
                      max_terms: int = 10000) -> float:
    """Laplace transform of t -> f(-t), evaluated as (1/s) times the
    transformed member at -1/s.

    The transformed member is entire only for alpha > 2; below that the
    series in 1/s is asymptotic and is summed by optimal truncation, so the
    result degrades gracefully as s decreases.
    """
    spec = _require_2_1(spec, "laplace_transform")
    if s <= 0.0:
        raise InvalidS(f"s must be > 0, got {s}")
    tspec = transform_spec(spec)
    return evaluate(tspec, -1.0 / s, tol, max_terms,
                    allow_asymptotic=True).value / s


def sumudu_transform(spec: HmlfSpec, u: float, tol: float = 1e-13,
                     max_terms: int = 10000) -> float:
    """Sumudu transform of t -> f(-t): the transformed member at -u.

    Equals (1/u) times the Laplace transform at 1/u, the classical duality.
    """
    spec = _require_2_1(spec, "sumudu_transform")
    tspec = transform_spec(spec)
    return evaluate(tspec, -u, tol, max_terms, allow_asymptotic=True).value
