"""Exception hierarchy shared by every jacobikit module."""


class JacobikitError(Exception):
    """Base class for all errors raised by jacobikit."""


# -- scalar ring ---------------------------------------------------------------

class ChartMismatch(JacobikitError):
    pass


class DivisionByZero(JacobikitError, ZeroDivisionError):
    pass


class IndexOutOfRange(JacobikitError, IndexError):
    pass


class PoleAtPoint(JacobikitError):
    pass


class ParseError(JacobikitError, ValueError):
    """Raised by the expression parser; ``offset`` is a 0-based character index."""

    def __init__(self, message, text="", offset=None):
        self.message = message
        self.text = text
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class ExpressionSyntaxError(ParseError):
    pass


class UnknownIdentifier(ParseError):
    pass


class NonLinearExponent(ParseError):
    pass


class NonNaturalExponent(ParseError):
    pass


# -- tensor calculus -----------------------------------------------------------

class KindMismatch(JacobikitError, TypeError):
    pass


class DegreeMismatch(JacobikitError, ValueError):
    pass


class NotABivector(JacobikitError):
    """J∘Λ is not skew; ``residual`` holds the symmetric part of its matrix."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


# -- Jacobi structures ---------------------------------------------------------

class NameClash(JacobikitError):
    pass


class NotHomogeneous(JacobikitError):
    pass


class Degenerate(JacobikitError):
    pass


class NotLCS(JacobikitError):
    def __init__(self, message, residuals=()):
        super().__init__(message)
        self.residuals = list(residuals)


class NotJacobi(JacobikitError):
    pass


class NotCompatible(JacobikitError):
    pass


class HypothesisViolated(JacobikitError):
    pass


class UnknownIdentity(JacobikitError, KeyError):
    pass


class MissingInput(JacobikitError, KeyError):
    pass


# -- CLI -----------------------------------------------------------------------

class LoadError(JacobikitError):
    """Anything that makes a structure file unusable (exit code 2)."""


class SchemaError(LoadError):
    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class UnresolvedReference(LoadError):
    pass


class DimensionMismatch(LoadError):
    pass


class IoError(LoadError):
    pass
