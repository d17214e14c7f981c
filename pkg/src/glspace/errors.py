"""Exception hierarchy shared by every glspace module."""


class GlspaceError(Exception):
    """Base class for all library errors."""


class InputError(GlspaceError, ValueError):
    """Malformed or out-of-contract input."""


class DimensionError(InputError):
    """Operands live in spaces of different dimension."""


class GeometryError(InputError):
    """Polytope is unbounded, not full-dimensional, or degenerate."""


class SymmetryError(InputError):
    """Point or row set is not closed under negation."""


class FunctionalNotNorming(InputError):
    """A functional whose dual norm is not exactly 1."""


class NotAbsolute(InputError):
    """A unit ball that does not define an absolute norm."""


class UnsupportedDimension(InputError):
    """Dimension exceeds the desk-scale limits of an exact routine."""


class PreconditionError(InputError):
    """An operation was called on data violating its precondition."""


class TheoremViolation(GlspaceError, AssertionError):
    """A computed verdict contradicts a proven theorem; this is a bug."""


class ParseError(InputError):
    """Polytope text could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
