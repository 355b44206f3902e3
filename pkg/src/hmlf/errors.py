"""Exception types shared across the package."""


class HmlfError(Exception):
    """Base class for every library-specific failure."""


class InvalidAlphaBeta(HmlfError, ValueError):
    """alpha or beta violates the parameter domain (both must be finite and > 0)."""


class LowerParamPole(HmlfError, ValueError):
    """A lower parameter is a nonpositive integer with no terminating upper
    parameter protecting the series from a vanishing denominator."""


class DivergenceRejected(HmlfError):
    """Evaluation refused: the series diverges at the requested point and
    asymptotic (optimal-truncation) mode was not requested."""


class NonConvergence(HmlfError):
    """The term budget was exhausted before the tolerance was met."""


class ConditionViolated(HmlfError, ValueError):
    """An identity's stated validity condition does not hold."""


class FormalIdentity(HmlfError):
    """The closed form exists only as a formal/asymptotic series for these
    parameters; a numerical value would be meaningless without opting in."""


class InvalidDelta(HmlfError, ValueError):
    """The integral's delta parameter is outside its admissible range."""


class InvalidS(HmlfError, ValueError):
    """The Laplace variable must be positive."""


class GammaPole(HmlfError, ValueError):
    """A Gamma-function prefactor is evaluated at a nonpositive integer."""


class DomainOutsideConvergence(HmlfError, ValueError):
    """The requested scan range has no overlap with the series' convergence
    domain."""


class MaxSubdivisions(HmlfError):
    """Adaptive quadrature could not reach the tolerance within its
    subdivision budget."""


class AccelerationFailure(HmlfError):
    """The partial-sum sequence of an oscillatory integral did not stabilize
    under extrapolation."""
