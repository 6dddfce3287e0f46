"""Exception hierarchy shared by all modules."""


class EssVarsError(Exception):
    """Base class for every error raised by this package."""


# linear algebra

class DependentInput(EssVarsError, ValueError):
    pass


class Singular(EssVarsError, ArithmeticError):
    pass


# polynomials

class ContextMismatch(EssVarsError, ValueError):
    pass


class VariableClash(EssVarsError, ValueError):
    pass


class UnknownVariable(EssVarsError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


# parsing

class ParseError(EssVarsError, ValueError):
    """Malformed input text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message, pos=None, text=None):
        self.message = message
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UndeclaredVariable(ParseError):
    pass


class ZeroDenominator(ParseError):
    pass


# apolarity / reduction

class NotHomogeneous(EssVarsError, ValueError):
    pass


class ZeroDegree(EssVarsError, ValueError):
    pass


class BadOrder(EssVarsError, ValueError):
    pass


class DegreeMismatch(EssVarsError, ValueError):
    pass


class BadOverride(EssVarsError, ValueError):
    pass


class ZeroPolynomial(EssVarsError, ValueError):
    pass


class InternalInconsistency(EssVarsError, RuntimeError):
    pass
