"""Reductions connecting the family to classical and recently introduced
functions; used throughout the tests as independent correctness anchors.

The constructors return plain floats.  Where a reduction is exact (equal
series term by term) the wrapper is a thin parameter map; where it inverts a
relation (the Bessel-type hybrid) the prefactor is applied explicitly.
"""

from __future__ import annotations

import math

from .errors import GammaPole
from .gammafns import pochhammer
from .series import HmlfSpec, evaluate

__all__ = [
    "mittag_leffler",
    "prabhakar",
    "hyp_tricomi",
    "hyp_bessel",
    "fox_wright_2psi1",
    "classical_2f1",
    "sin_via_hmlf",
    "cos_via_hmlf",
    "cos_sqrt_gaussian",
]

SQRT_PI = math.sqrt(math.pi)


def mittag_leffler(alpha: float, beta: float, u: float, tol: float = 1e-13) -> float:
    """Two-parameter Mittag-Leffler function: the empty-parameter member."""
    return evaluate(HmlfSpec((), (), alpha, beta), u, tol).value


def prabhakar(a1: float, alpha: float, beta: float, u: float,
              tol: float = 1e-13) -> float:
    """Three-parameter (Prabhakar) Mittag-Leffler function, realized as the
    one-upper/one-lower member with lower parameter 1."""
    return evaluate(HmlfSpec((a1,), (1.0,), alpha, beta), u, tol).value


def hyp_tricomi(a1: float, a2: float, b1: float, m: int, u: float,
                tol: float = 1e-13) -> float:
    """Hypergeometric-Tricomi hybrid: sum of (-u)^r (a1)_r (a2)_r /
    [Gamma(m+r+1) r! (b1)_r], an exact reduction of the member with an extra
    lower 1 at alpha = 1, beta = m + 1."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return evaluate(HmlfSpec((a1, a2), (b1, 1.0), 1.0, m + 1.0), -u, tol).value


def hyp_bessel(a1: float, a2: float, b1: float, m: int, u: float,
               tol: float = 1e-13) -> float:
    """Hypergeometric-Bessel hybrid: sum of (-1)^r (a1)_{m+2r} (a2)_{m+2r} /
    [r! Gamma(m+r+1) (b1)_{m+2r}] (u/2)^{m+2r}.

    Computed through the quadratic-argument relation: prefactor
    (u/2)^m (a1)_m (a2)_m / (b1)_m times the four-upper/three-lower member
    at -u^2, whose parameters come from splitting each shifted parameter via
    the duplication identity.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if u == 0.0:
        raise ValueError("u = 0 is excluded by the inverted relation; "
                         "the m > 0 series vanishes there and m = 0 gives the r = 0 term")
    spec = HmlfSpec(
        ((a1 + m) / 2.0, (a1 + m + 1.0) / 2.0,
         (a2 + m) / 2.0, (a2 + m + 1.0) / 2.0),
        (1.0, (b1 + m) / 2.0, (b1 + m + 1.0) / 2.0),
        1.0, m + 1.0)
    prefactor = ((u / 2.0) ** m * pochhammer(a1, m) * pochhammer(a2, m)
                 / pochhammer(b1, m))
    return prefactor * evaluate(spec, -u * u, tol).value


def fox_wright_2psi1(a1: float, a2: float, alpha: float, beta: float, u: float,
                     tol: float = 1e-13) -> float:
    """Fox-Wright series sum of Gamma(a1+r) Gamma(a2+r) / Gamma(alpha r + beta)
    * u^r / r!, obtained by rescaling the member with lower parameter 1."""
    for a in (a1, a2):
        if a <= 0.0 and a == math.floor(a):
            raise GammaPole(f"Gamma({a}) prefactor is at a pole")
    scale = math.gamma(a1) * math.gamma(a2)
    return scale * evaluate(HmlfSpec((a1, a2), (1.0,), alpha, beta), u, tol).value


def classical_2f1(a1: float, a2: float, b1: float, u: float,
                  tol: float = 1e-13) -> float:
    """Gauss hypergeometric function for |u| < 1: the alpha = beta = 1 member."""
    return evaluate(HmlfSpec((a1, a2), (b1,), 1.0, 1.0), u, tol).value


def sin_via_hmlf(u: float, tol: float = 1e-13) -> float:
    """sin(u) built as (u sqrt(pi)/2) times the no-upper member at
    alpha = 1, beta = 3/2, argument -u^2/4."""
    spec = HmlfSpec((), (1.0,), 1.0, 1.5)
    return u * SQRT_PI / 2.0 * evaluate(spec, -u * u / 4.0, tol).value


def cos_via_hmlf(u: float, tol: float = 1e-13) -> float:
    """cos(u) built as sqrt(pi) times the no-upper member at alpha = 1,
    beta = 1/2, argument -u^2/4."""
    spec = HmlfSpec((), (1.0,), 1.0, 0.5)
    return SQRT_PI * evaluate(spec, -u * u / 4.0, tol).value


def cos_sqrt_gaussian(delta: float, tol: float = 1e-13) -> float:
    """Closed form of the Gaussian-weight integral of cos(sqrt(u)) over the
    real line (even continuation cosh(sqrt(|u|)) for u < 0): (pi/sqrt(delta))
    times the no-upper member at alpha = 2, beta = 1/2, argument 1/(64 delta)."""
    if delta <= 0.0:
        raise ValueError(f"delta must be > 0, got {delta}")
    spec = HmlfSpec((), (1.0,), 2.0, 0.5)
    return math.pi / math.sqrt(delta) * evaluate(spec, 1.0 / (64.0 * delta), tol).value
