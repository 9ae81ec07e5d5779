"""
Exception hierarchy shared by the services and the CLI.

InputError subclasses map to exit status 2; NumericError subclasses and
golden mismatches map to 3.
"""


class LGToolkitError(Exception):
    """Base class for toolkit errors."""


class InputError(LGToolkitError, ValueError):
    """Malformed or inconsistent input."""


class DimensionMismatchError(InputError):
    pass


class ConfigurationError(InputError):
    """Point configuration rejected at parse time."""


class SubdivisionError(InputError):
    """Cells do not form a polyhedral subdivision."""


class DegenerationError(InputError):
    """Breakpoint set J is not a valid maximal degeneration."""


class InsertionError(InputError):
    """Not a cyclic insertion, or no admissible m_sigma exists."""


class ScopeError(InputError):
    """Request outside the brute-force scope of an operation."""


class ConstantFunctionalError(InputError):
    pass


class NumericError(LGToolkitError, RuntimeError):
    """Floating-point procedure failed; diagnostics attached when available."""

    def __init__(self, message: str, diagnostics: dict = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class MarginViolationError(NumericError):
    """Path passes too close to a critical value."""


class MatchingAmbiguityError(NumericError):
    """Root matching stayed ambiguous at the minimum step size."""


class ClusterSeparationError(NumericError):
    """Stage critical-value clusters are not separated; use a smaller s."""


class NormTieError(NumericError):
    """Two critical values share a modulus."""


class DerivativeVanishesError(NumericError):
    pass


class GoldenMismatchError(LGToolkitError):
    """Emitted artifact differs from the recorded golden (exit status 3)."""
