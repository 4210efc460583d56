"""Semantic exception hierarchy.

Public functions raise these instead of bare ValueError/RuntimeError so that
callers (and the CLI exit-code mapping) can distinguish contract violations
from numerical trouble.
"""

from __future__ import annotations


class BoostcapError(Exception):
    """Base class for every error raised by this package."""


class DomainError(BoostcapError, ValueError):
    """Input outside the mathematical domain of the operation."""


class RangeError(BoostcapError, ValueError):
    """Input inside the domain but outside the validated accuracy range."""


class SingularConfigurationError(BoostcapError):
    """Geometric configuration where the requested quantity is undefined."""


class ConvergenceError(BoostcapError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best estimate obtained and the associated error bound so a
    caller can decide whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(f"{message} (estimate={estimate!r}, error_bound={error_bound!r})")
        self.estimate = estimate
        self.error_bound = error_bound


class IntegrityError(BoostcapError):
    """A mathematical identity that must hold numerically was violated."""


class NotAChannelError(BoostcapError, ValueError):
    """Pauli parameters whose probability vector leaves the simplex."""


class ThresholdNotFoundError(BoostcapError):
    """Root bracketing failed: no sign change inside the scan range."""


class PreconditionError(BoostcapError, ValueError):
    """Operation precondition violated (e.g. solver called off its regime)."""
