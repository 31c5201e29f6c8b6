"""Exception types shared across the package."""


class LrsError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(LrsError, ValueError):
    """A sequence spec, parameter or argument violates a precondition."""


class SingularMatrixError(LrsError, ArithmeticError):
    """An exact linear system has determinant zero."""


class RootFindingError(LrsError, ArithmeticError):
    """Root iteration failed to meet the residual tolerance."""


class AmbiguousClusterError(RootFindingError):
    """Root approximations cannot be clustered decisively.

    Raised when two candidate clusters sit close enough that raising the
    working precision is the only safe resolution.
    """


class InsufficientRowsError(LrsError):
    """Too few array rows were generated to cover the requested bound."""


class UnknownIdentityError(LrsError, KeyError):
    """No identity with the given name is registered."""
