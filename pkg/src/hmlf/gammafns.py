"""Overflow-safe Gamma, reciprocal-Gamma and Pochhammer arithmetic.

Every series term in this package is a ratio of rising factorials divided by
a Gamma value.  At large order those factors overflow double precision long
before the ratio does, so the workhorse representation here is a signed
logarithm: ``value = sign * exp(log_abs)``.

All functions are pure and hold no mutable state; concurrent use is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HmlfError

__all__ = [
    "SignedLog",
    "log_gamma",
    "reciprocal_gamma",
    "pochhammer",
    "pochhammer_signed_log",
]

LOG_PI = 1.1447298858494002
_EULER_GAMMA = 0.5772156649015329

# zeta(2), zeta(3), ... zeta(56); coefficients of the Taylor expansion of
# ln Gamma(1+e) = -EulerGamma*e + sum_{k>=2} (-1)^k zeta(k)/k * e^k, |e| <= 1/2.
_ZETA = (
    1.6449340668482264, 1.2020569031595942, 1.0823232337111381,
    1.03692775514337, 1.0173430619844492, 1.008349277381923,
    1.0040773561979444, 1.0020083928260821, 1.000994575127818,
    1.0004941886041194, 1.000246086553308, 1.0001227133475785,
    1.0000612481350588, 1.000030588236307, 1.0000152822594086,
    1.0000076371976379, 1.000003817293265, 1.0000019082127165,
    1.0000009539620338, 1.0000004769329869, 1.0000002384505027,
    1.000000119219926, 1.000000059608189, 1.0000000298035034,
    1.0000000149015549, 1.0000000074507118, 1.000000003725334,
    1.0000000018626598, 1.0000000009313275, 1.0000000004656628,
    1.000000000232831, 1.0000000001164155, 1.0000000000582077,
    1.0000000000291038, 1.000000000014552, 1.000000000007276,
    1.000000000003638, 1.000000000001819, 1.0000000000009095,
    1.0000000000004547, 1.0000000000002274, 1.0000000000001137,
    1.0000000000000568, 1.0000000000000284, 1.0000000000000142,
    1.000000000000007, 1.0000000000000036, 1.0000000000000018,
    1.0000000000000009, 1.0000000000000004, 1.0000000000000002,
    1.0000000000000002, 1.0, 1.0, 1.0,
)

# Direct product is exact enough (and cheap) up to this order; beyond it the
# log-Gamma difference form takes over.
_POCH_DIRECT_MAX = 64


@dataclass(frozen=True)
class SignedLog:
    """A real number stored as sign and natural log of its absolute value.

    ``sign == 0`` if and only if ``log_abs == -inf`` (the number is zero).
    """

    log_abs: float
    sign: int

    def value(self) -> float:
        """Reconstruct the plain float, saturating to +-inf on overflow."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_abs)
        except OverflowError:
            return self.sign * math.inf


ZERO_SIGNED_LOG = SignedLog(-math.inf, 0)


def _lgamma_near_one(e: float) -> float:
    # ln Gamma(1+e) for |e| <= 0.5, free of the cancellation that makes
    # plain lgamma lose relative accuracy near its zeros.
    s = 0.0
    c = 0.0
    ek = e
    for i, z in enumerate(_ZETA):
        k = i + 2
        ek *= e
        term = z / k * ek if k % 2 == 0 else -z / k * ek
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
        if abs(term) < 1e-21:
            break
    return s - _EULER_GAMMA * e


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0, relative error <= 1e-14.

    The C library's lgamma is accurate except near the zeros of ln Gamma at
    x = 1 and x = 2, where the tiny result magnifies its absolute error; the
    band [0.5, 2.5] therefore uses a Taylor expansion around those zeros.
    """
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"log_gamma requires finite x > 0, got {x!r}")
    if 0.5 <= x <= 1.5:
        return _lgamma_near_one(x - 1.0)
    if 1.5 < x <= 2.5:
        e = x - 2.0
        return math.log1p(e) + _lgamma_near_one(e)
    return math.lgamma(x)


def _sin_pi(x: float) -> float:
    # sin(pi*x) with argument reduction done on x itself, so accuracy does
    # not degrade near integer x the way sin(pi*x) computed directly would.
    n = math.floor(x)
    r = x - n
    if r == 0.0:
        return 0.0
    s = math.sin(math.pi * r) if r <= 0.5 else math.sin(math.pi * (1.0 - r))
    return -s if (int(n) & 1) else s


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x) for any finite real x; exactly 0 at x in {0, -1, -2, ...}.

    The reciprocal is entire, so no input raises a domain error: nonpositive
    integers map to the function's zeros, negative non-integers go through
    the reflection identity 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi.
    """
    if not math.isfinite(x):
        raise ValueError(f"reciprocal_gamma requires finite x, got {x!r}")
    if x > 0.0:
        # exp underflows gracefully to 0.0 for huge x
        return math.exp(-log_gamma(x)) if x < 1e306 else 0.0
    if x == math.floor(x):
        return 0.0
    s = _sin_pi(x)
    log_mag = log_gamma(1.0 - x) + math.log(abs(s)) - LOG_PI
    try:
        return math.copysign(math.exp(log_mag), s)
    except OverflowError:
        return math.copysign(math.inf, s)


def pochhammer(a: float, r: int) -> float:
    """Rising factorial (a)_r = a (a+1) ... (a+r-1), with (a)_0 = 1.

    Returns an exact 0.0 when a is a nonpositive integer with |a| < r.
    Raises OverflowError when the product leaves double range; callers that
    need large r should use :func:`pochhammer_signed_log` instead.
    """
    if r < 0:
        raise ValueError(f"pochhammer requires r >= 0, got {r}")
    result = 1.0
    for k in range(r):
        result *= a + k
    if math.isinf(result) or math.isnan(result):
        raise OverflowError(f"pochhammer({a}, {r}) exceeds double range")
    return result


def pochhammer_signed_log(a: float, r: int) -> SignedLog:
    """Rising factorial in signed-log form; never overflows."""
    if r < 0:
        raise ValueError(f"pochhammer_signed_log requires r >= 0, got {r}")
    if r == 0:
        return SignedLog(0.0, 1)
    a_is_int = a == math.floor(a)
    if a_is_int and a <= 0.0 and r >= 1.0 - a:
        # the factor a + (-a) = 0 lies inside the product
        return ZERO_SIGNED_LOG
    if r <= _POCH_DIRECT_MAX:
        log_abs = 0.0
        sign = 1
        for k in range(r):
            f = a + k
            log_abs += math.log(abs(f))
            if f < 0.0:
                sign = -sign
        return SignedLog(log_abs, sign)
    if a > 0.0:
        return SignedLog(math.lgamma(a + r) - math.lgamma(a), 1)
    if a_is_int:
        # all factors are negative integers: |(a)_r| = Gamma(1-a)/Gamma(1-a-r)
        log_abs = math.lgamma(1.0 - a) - math.lgamma(1.0 - a - r)
        return SignedLog(log_abs, -1 if r & 1 else 1)
    # negative non-integer start: lgamma gives log|Gamma| on both sides of 0
    negatives = min(r, math.ceil(-a))
    log_abs = math.lgamma(a + r) - math.lgamma(a)
    return SignedLog(log_abs, -1 if negatives & 1 else 1)
