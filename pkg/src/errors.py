"""
Exception hierarchy for operator-connection computations.

Every error carries an ``exit_code`` so the CLI can map failures to stable
process exit codes without inspecting messages.
"""


class ConnectionsError(Exception):
    """Base class for all library errors."""

    exit_code: int = 4


class SpecParseError(ConnectionsError, ValueError):
    """A matrix, function, measure or connection spec could not be parsed."""

    exit_code = 2


class DimensionMismatch(ConnectionsError, ValueError):
    """Operands have different dimensions."""

    exit_code = 3


class NonHermitianInput(ConnectionsError, ValueError):
    """Entries differ from their conjugate transpose beyond tol_sym."""


class NegativeScalar(ConnectionsError, ValueError):
    """Cone operations only accept nonnegative scalars."""


class DomainError(ConnectionsError):
    """A scalar function is undefined at some eigenvalue."""


class SingularMatrix(ConnectionsError):
    """Inversion requested for a numerically singular matrix."""


class DegenerateGrid(ConnectionsError, ValueError):
    """Sample points coincide or are out of range."""


class NonFiniteIntegral(ConnectionsError):
    """Quadrature of a density produced a non-finite value."""


class MissingEndpointValue(ConnectionsError):
    """An endpoint atom needs g(0) or g(inf) but the integrand did not declare it."""


class IncomparableRepresentation(ConnectionsError):
    """Measures cannot be ordered in the atoms-plus-density representation."""


class ConvergenceFailure(ConnectionsError):
    """The epsilon-ladder did not stabilize."""


class NonScalarResult(ConnectionsError):
    """A connection evaluated on scalar multiples of I is not a multiple of I."""


class ZeroConnection(ConnectionsError):
    """Normalization requested for a connection with (numerically) zero norm."""


class UnsupportedInversion(ConnectionsError):
    """No representing measure is known for the given representing function."""

    exit_code = 5
