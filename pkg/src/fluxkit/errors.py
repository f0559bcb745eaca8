"""Exception hierarchy. Domain/configuration problems exit the CLI with 1,
numeric failures with 2."""


class FluxkitError(Exception):
    """Base class for all fluxkit errors."""


class ParameterDomainError(FluxkitError):
    """An input value is outside its physical or mathematical domain."""


class ConfigurationError(FluxkitError):
    """A structurally invalid setup (missing anchor, bad basis size, ...)."""


class StepSizeError(ConfigurationError):
    """Integration step violates the stability guard."""


class CalibrationError(FluxkitError):
    """A calibration sweep or estimator could not produce a usable result."""


class SynthesisError(FluxkitError):
    """Filter synthesis could not reach the requested targets."""


class NumericError(FluxkitError):
    """A numerical routine failed to converge or produced invalid output."""


class DegenerateSteadyStateError(NumericError):
    """The Lindblad generator has a multi-dimensional null space."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        super().__init__(
            f"steady state is not unique: null space has dimension {dimension}"
        )
