"""Exception hierarchy.

Two families matter to the command line: :class:`InputError` (bad files,
exit code 2) and :class:`PreconditionError` (valid input that violates a
mathematical precondition, exit code 3).
"""


class PontrelError(Exception):
    """Base class for every error raised by this package."""


class InputError(PontrelError):
    pass


class PreconditionError(PontrelError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class NotHermitian(PreconditionError, ValueError):
    pass


class NoSolution(PreconditionError, ValueError):
    pass


class NotInResolventSet(PreconditionError):
    """The point is an eigenvalue, or the range of ``T - z`` is not the whole space."""


class DomainNotDecomposable(PreconditionError):
    pass


class WrongForm(PreconditionError):
    pass


class DegenerateSamplePair(PreconditionError):
    pass


class DerivativeNotInvertible(PreconditionError):
    """``Q'(oo) = -Gamma^+ Gamma`` is singular."""


class SingularQ(PreconditionError):
    pass


class DegenerateTrace(PreconditionError):
    pass


class HypothesesNotMet(PreconditionError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(InputError):
    pass
