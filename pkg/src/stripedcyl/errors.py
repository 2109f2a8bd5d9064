"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CylError(Exception):
    """Base class for all errors raised by stripedcyl."""


class InvalidGenerator(CylError, ValueError):
    """A generator was constructed with an illegal arity or slot."""


class ArityMismatch(CylError, TypeError):
    """Two words were composed whose arities do not line up."""

    def __init__(self, left: int, right: int, message: str | None = None):
        self.left = left
        self.right = right
        super().__init__(message or f"arity mismatch: {left} != {right}")


class NotEndomorphism(CylError, TypeError):
    """A power was requested of a generator that changes arity."""


class SignatureMismatch(CylError, TypeError):
    """Two morphisms live in different hom-sets."""


class PeriodMismatch(CylError, ValueError):
    """Affine diagrams were stacked with incompatible periods."""


class WindingViolation(CylError, RuntimeError):
    """A closed loop wound more than once around the cylinder.

    Embedded diagrams cannot produce this, so it always signals a bug.
    """


class InvalidDiagram(CylError, ValueError):
    """An affine diagram failed one of its structural invariants."""


class InconsistentIndex(CylError, ValueError):
    """A death/birth index admits no non-crossing cap system."""


# alias kept for callers that use the shorter name
InvalidIndex = InconsistentIndex


class OutOfRange(CylError, ValueError):
    """A relation instance was requested outside its stated domain."""


class DimTooSmall(CylError, ValueError):
    """The bar construction was asked for a vector space of dimension < 1."""


class ShapeMismatch(CylError, ValueError):
    """Matrices of incompatible shapes were combined."""


class ParseError(CylError, ValueError):
    """Text could not be parsed; carries the offending source span."""

    def __init__(self, message: str, text: str = "", start: int = 0, end: int | None = None):
        self.text = text
        self.start = start
        self.end = start + 1 if end is None else end
        super().__init__(message)

    def render(self) -> str:
        if not self.text:
            return str(self)
        caret = " " * self.start + "^" * max(1, self.end - self.start)
        return f"{self}\n  {self.text}\n  {caret}"
