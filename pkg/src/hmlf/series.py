"""Parameter space and series evaluation for the hypergeometric
Mittag-Leffler family.

A member of the family is fixed by upper parameters a_1..a_p, lower
parameters b_1..b_q and positive reals alpha, beta; its value at u is

    f(u) = sum_r  (a_1)_r ... (a_p)_r / [(b_1)_r ... (b_q)_r Gamma(alpha r + beta)] u^r.

Convergence is classified two ways.  The (p, q)-only rule follows the
family's defining statement: entire for p <= q, unit disk for p = q + 1,
divergent for p > q + 1.  Stirling growth of Gamma(alpha r + beta) shows the
terms actually scale like (r!)^(p-q-alpha) * alpha^(-alpha r), so the
effective rule used for runtime guards is decided by the sign of
p - q - alpha: negative -> entire, zero -> radius alpha^alpha, positive ->
formal series only.  The two agree at alpha = 1 and the effective rule is
the sharper statement for the doubled-alpha members produced by the
Gaussian-integral identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DivergenceRejected, InvalidAlphaBeta, LowerParamPole, NonConvergence
from .gammafns import SignedLog, ZERO_SIGNED_LOG, log_gamma, pochhammer_signed_log, reciprocal_gamma

__all__ = [
    "HmlfSpec",
    "PaperRule",
    "EffectiveRule",
    "ConvergenceClass",
    "EvalStatus",
    "EvalResult",
    "validate_spec",
    "termination_index",
    "classify",
    "coefficient",
    "evaluate",
]

_LOG_HUGE = math.log(8.98846567431158e307)  # half of float max, headroom for u^r


@dataclass(frozen=True)
class HmlfSpec:
    """Immutable parameter tuple naming one member of the family."""

    upper: tuple[float, ...]
    lower: tuple[float, ...]
    alpha: float
    beta: float

    def __init__(self, upper: Sequence[float], lower: Sequence[float],
                 alpha: float, beta: float):
        object.__setattr__(self, "upper", tuple(float(a) for a in upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in lower))
        object.__setattr__(self, "alpha", float(alpha))
        object.__setattr__(self, "beta", float(beta))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def as_dict(self) -> dict:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "alpha": self.alpha,
            "beta": self.beta,
        }


class PaperRule(Enum):
    """Convergence classification by (p, q) alone."""

    ALL_FINITE = "all_finite"
    UNIT_DISK = "unit_disk"
    DIVERGES_NONZERO = "diverges_nonzero"


class EffectiveRule(Enum):
    """Convergence classification by the sign of p - q - alpha."""

    ENTIRE = "entire"
    FINITE_RADIUS = "finite_radius"
    FORMAL_ONLY = "formal_only"


@dataclass(frozen=True)
class ConvergenceClass:
    paper_rule: PaperRule
    effective_rule: EffectiveRule
    radius: float | None = None  # set iff effective_rule is FINITE_RADIUS


class EvalStatus(Enum):
    CONVERGED = "converged"
    TERMINATED = "terminated"
    TRUNCATED_ASYMPTOTIC = "truncated_asymptotic"
    DIVERGENCE_DETECTED = "divergence_detected"


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    est_abs_error: float
    status: EvalStatus


def _nonpositive_int(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def termination_index(spec: HmlfSpec) -> int | None:
    """Index of the last nonvanishing term when an upper parameter is a
    nonpositive integer, else None."""
    idx = None
    for a in spec.upper:
        if _nonpositive_int(a):
            t = int(-a)
            idx = t if idx is None else min(idx, t)
    return idx


def validate_spec(spec: HmlfSpec) -> HmlfSpec:
    """Check the parameter-domain invariants and return the spec unchanged.

    Raises InvalidAlphaBeta when alpha or beta leaves the positive reals, and
    LowerParamPole when a lower parameter is a nonpositive integer whose
    Pochhammer factor would vanish before the series terminates.
    """
    if not (math.isfinite(spec.alpha) and spec.alpha > 0.0):
        raise InvalidAlphaBeta(f"alpha must be finite and > 0, got {spec.alpha!r}")
    if not (math.isfinite(spec.beta) and spec.beta > 0.0):
        raise InvalidAlphaBeta(f"beta must be finite and > 0, got {spec.beta!r}")
    for x in spec.upper + spec.lower:
        if not math.isfinite(x):
            raise InvalidAlphaBeta(f"parameters must be finite, got {x!r}")
    stop = termination_index(spec)
    for b in spec.lower:
        if _nonpositive_int(b):
            # (b)_r vanishes first at r = -b + 1; harmless only if every
            # surviving term has r <= -b
            if stop is None or stop > int(-b):
                raise LowerParamPole(
                    f"lower parameter {b} makes the denominator vanish at "
                    f"r = {int(-b) + 1} before the series terminates")
    return spec


def classify(spec: HmlfSpec) -> ConvergenceClass:
    """Static convergence classification; see the module docstring."""
    p, q = spec.p, spec.q
    if p <= q:
        paper = PaperRule.ALL_FINITE
    elif p == q + 1:
        paper = PaperRule.UNIT_DISK
    else:
        paper = PaperRule.DIVERGES_NONZERO
    growth = (p - q) - spec.alpha
    if growth < 0.0:
        return ConvergenceClass(paper, EffectiveRule.ENTIRE)
    if growth == 0.0:
        return ConvergenceClass(paper, EffectiveRule.FINITE_RADIUS,
                                radius=spec.alpha ** spec.alpha)
    return ConvergenceClass(paper, EffectiveRule.FORMAL_ONLY)


def coefficient(spec: HmlfSpec, r: int) -> float:
    """Series coefficient c_r = prod (a_i)_r / [prod (b_j)_r Gamma(alpha r + beta)].

    Computed in the signed-log domain so intermediate rising factorials
    cannot overflow; raises OverflowError only if c_r itself is out of range.
    """
    if r < 0:
        raise ValueError(f"coefficient requires r >= 0, got {r}")
    if r == 0:
        return reciprocal_gamma(spec.beta)
    log_abs = 0.0
    sign = 1
    for a in spec.upper:
        sl = pochhammer_signed_log(a, r)
        if sl.sign == 0:
            return 0.0
        log_abs += sl.log_abs
        sign *= sl.sign
    for b in spec.lower:
        sl = pochhammer_signed_log(b, r)
        if sl.sign == 0:
            raise ZeroDivisionError(
                f"lower parameter {b} has vanishing Pochhammer at r = {r}")
        log_abs -= sl.log_abs
        sign *= sl.sign
    log_abs -= log_gamma(spec.alpha * r + spec.beta)
    if log_abs > _LOG_HUGE:
        raise OverflowError(f"coefficient magnitude exp({log_abs:.1f}) exceeds double range")
    return sign * math.exp(log_abs) if log_abs > -745.0 else 0.0


class _CompensatedSum:
    """Neumaier variant of Kahan summation; exact to one rounding of the result."""

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.carry += (self.total - t) + x
        else:
            self.carry += (x - t) + self.total
        self.total = t

    def value(self) -> float:
        return self.total + self.carry


def evaluate(spec: HmlfSpec, u: float, tol: float = 1e-13,
             max_terms: int = 10000, allow_asymptotic: bool = False) -> EvalResult:
    """Sum the series at u with compensated accumulation.

    Terms follow the recurrence t_{r+1} = t_r * prod(a_i + r)/prod(b_j + r)
    * u * exp(lnGamma(alpha r + beta) - lnGamma(alpha (r+1) + beta)).
    Summation stops at exact termination (nonpositive-integer upper
    parameter), or once two consecutive terms with r >= 8 fall below
    tol * max(1, |partial sum|).

    Outside the convergence domain the call raises DivergenceRejected unless
    ``allow_asymptotic`` is set, in which case the divergent tail is cut at
    the smallest-magnitude term and that magnitude is reported as the error
    estimate (optimal truncation).
    """
    spec = validate_spec(spec)
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if not math.isfinite(u):
        raise ValueError(f"u must be finite, got {u!r}")

    stop_at = termination_index(spec)
    rule = classify(spec)
    divergent_here = False
    if u != 0.0 and stop_at is None:  # a terminating series is a polynomial
        if rule.effective_rule is EffectiveRule.FORMAL_ONLY:
            divergent_here = True
        elif rule.effective_rule is EffectiveRule.FINITE_RADIUS and abs(u) >= rule.radius:
            divergent_here = True
    if divergent_here and not allow_asymptotic:
        raise DivergenceRejected(
            f"series diverges at u = {u} (rule {rule.effective_rule.value}"
            + (f", radius {rule.radius}" if rule.radius is not None else "")
            + "); pass allow_asymptotic for optimal truncation")

    t = reciprocal_gamma(spec.beta)
    if u == 0.0:
        return EvalResult(t, 1, 0.0, EvalStatus.CONVERGED)

    def next_term(t_r: float, r: int) -> float:
        num = 1.0
        for a in spec.upper:
            num *= a + r
        den = 1.0
        for b in spec.lower:
            den *= b + r
        gamma_step = math.exp(log_gamma(spec.alpha * r + spec.beta)
                              - log_gamma(spec.alpha * (r + 1) + spec.beta))
        return t_r * (num / den) * u * gamma_step

    if divergent_here:
        return _sum_optimal_truncation(t, next_term, max_terms)

    acc = _CompensatedSum()
    acc.add(t)
    consecutive_small = 0
    prev_small = 0.0
    r = 0
    while True:
        if stop_at is not None and r >= stop_at:
            return EvalResult(acc.value(), stop_at + 1, 0.0, EvalStatus.TERMINATED)
        t_next = next_term(t, r)
        r += 1
        if r >= max_terms:
            raise NonConvergence(
                f"no convergence within {max_terms} terms (last |t| = {abs(t_next):.3e})")
        t = t_next
        acc.add(t)
        s = acc.value()
        if not (math.isfinite(t) and math.isfinite(s)):
            raise NonConvergence(f"series overflowed double range at r = {r}")
        if abs(t) <= tol * max(1.0, abs(s)):
            consecutive_small += 1
            if consecutive_small >= 2 and r >= 8:
                return EvalResult(s, r + 1, max(abs(t), prev_small),
                                  EvalStatus.CONVERGED)
            prev_small = abs(t)
        else:
            consecutive_small = 0


def _sum_optimal_truncation(t0: float, next_term, max_terms: int) -> EvalResult:
    # Divergent (formal) series: sum up to and including the globally
    # smallest-magnitude term, and report that magnitude as the error scale.
    terms = [t0]
    t = t0
    r = 0
    min_idx = 0
    min_abs = abs(t0)
    while r + 1 < max_terms:
        t_next = next_term(t, r)
        if t_next == 0.0 or not math.isfinite(t_next):
            break
        terms.append(t_next)
        r += 1
        t = t_next
        if abs(t) < min_abs:
            min_abs = abs(t)
            min_idx = r
        # growth persisting beyond the recorded minimum settles the cut
        if r - min_idx >= 2 or abs(t) > 16.0 * min_abs:
            break
    acc = _CompensatedSum()
    for x in terms[:min_idx + 1]:
        acc.add(x)
    return EvalResult(acc.value(), min_idx + 1, min_abs,
                      EvalStatus.TRUNCATED_ASYMPTOTIC)
