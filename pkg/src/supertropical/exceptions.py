"""Exception hierarchy for the supertropical package.

Everything raised on purpose by this library derives from
:class:`SupertropicalError`, so callers can catch one type at the top of a
pipeline.  Shape and input problems additionally derive from the matching
builtin (``ValueError`` or ``TypeError``) so that sloppy call sites fail the
way they would with any other numeric library.
"""


class SupertropicalError(Exception):
    """Base class for all library errors."""


class ShapeError(SupertropicalError, ValueError):
    """Operands have incompatible dimensions."""


class InvalidInputError(SupertropicalError, ValueError):
    """A precondition on the arguments does not hold."""


class SingularMatrixError(SupertropicalError, ArithmeticError):
    """The permanent is ghost or zero where a tangible one is required."""


class NoChangeOfBaseError(SupertropicalError):
    """No generalized permutation matrix maps one base onto the other."""


class NotInClosedSpanError(SupertropicalError):
    """The vector is not a fixed point of the projector for this base."""


class DegenerateSpaceError(SupertropicalError):
    """The spanned space carries a nontrivial radical for the given form."""


class ParseError(SupertropicalError, ValueError):
    """Malformed scalar or matrix text.

    Carries the 1-based ``line`` and ``column`` of the offending token.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
