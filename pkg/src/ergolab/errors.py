"""Exception types raised across ergolab."""


class ErgolabError(ValueError):
    """Base class for all library errors."""


class DimensionError(ErgolabError):
    """Operands have incompatible or unsupported dimensions."""


class NotHermitianError(ErgolabError):
    """An operator required to be Hermitian is not, beyond tolerance."""


class InvalidStateError(ErgolabError):
    """A matrix or parameter set does not describe a physical quantum state.

    ``invariant`` names the violated condition and ``residual`` carries the
    measured deviation, so callers can report both.
    """

    def __init__(self, invariant, residual, message=None):
        self.invariant = invariant
        self.residual = float(residual)
        if message is None:
            message = f"{invariant} violated (residual {self.residual:.3e})"
        super().__init__(message)


class ConvergenceError(ErgolabError):
    """An iterative routine failed to converge within its sweep budget."""
