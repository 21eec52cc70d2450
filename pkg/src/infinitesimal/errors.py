"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by :mod:`infinitesimal`."""


class ParseError(AlgebraError, ValueError):
    pass


class NotSquareFree(AlgebraError):
    pass


class RedundantExtension(AlgebraError):
    """The proposed minimal polynomial has a rational root."""

    def __init__(self, root):
        super().__init__(f"minimal polynomial has the rational root {root}")
        self.root = root


class NonInvertible(AlgebraError, ZeroDivisionError):
    """Raised on division by zero, or by a zero divisor of a reducible extension.

    ``factor`` is the nontrivial factor of the defining polynomial that was
    uncovered (``None`` for plain division by zero).
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class InexactDivision(AlgebraError, ArithmeticError):
    pass


class IndeterminateValuation(AlgebraError):
    """A series is zero up to its truncation, so its valuation is unknown."""

    def __init__(self, truncation=None, message=None):
        if message is None:
            message = f"series vanishes below its truncation O(eps^{truncation})"
        super().__init__(message)
        self.truncation = truncation


class NotInValuationRing(AlgebraError):
    pass


class RequiresExtension(AlgebraError):
    """A polynomial needs a root that the current constant field lacks.

    ``minpoly`` is the offending univariate polynomial (a ``Poly``).
    """

    def __init__(self, minpoly):
        super().__init__(f"no root in the constant field for {minpoly}")
        self.minpoly = minpoly


class TruncationInsufficient(AlgebraError):
    pass


class CommonComponent(AlgebraError):
    pass


class UnrepresentablePoint(AlgebraError):
    """An intersection point has coordinates outside the constant field."""

    def __init__(self, factor):
        super().__init__(f"intersection coordinates need a root of {factor}")
        self.factor = factor


class DegenerateCoordinates(AlgebraError):
    pass


class NondeterministicCount(AlgebraError):
    pass


class NotHomogeneous(AlgebraError, ValueError):
    pass


class SingularMatrix(AlgebraError):
    pass


class CounterexampleFound(AlgebraError):
    def __init__(self, element, reason):
        super().__init__(f"{reason}: {element}")
        self.element = element
        self.reason = reason
