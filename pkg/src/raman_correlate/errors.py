"""Exception hierarchy shared by all modules."""


class RamanError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(RamanError, ValueError):
    """Invalid or incomplete system / scenario configuration."""


class DomainError(RamanError, ValueError):
    """Argument outside the domain where a quantity is defined."""


class NumericalError(RamanError, ArithmeticError):
    """A numerical procedure failed or lost too much accuracy."""


class ExceptionalPointError(NumericalError):
    """The dynamical matrix is (numerically) non-diagonalizable."""


class GrowthOverflowError(NumericalError, OverflowError):
    """Exponential growth of the propagator exceeds the float range."""


class InstabilityError(NumericalError):
    """A Hamiltonian that should be stable has complex normal-mode frequencies."""


class DegenerateParametersError(NumericalError):
    """Closed-form construction is singular for the requested parameters."""


class AnalyticFormulaInapplicable(DomainError):
    """The closed-form expressions divide by a vanishing coupling."""


class ResourceError(RamanError, MemoryError):
    """Requested truncated space is larger than the configured cap."""


class TruncationWarning(UserWarning):
    """Fock-space truncation may be affecting an oracle result."""
