"""Exception types raised across the package."""


class AlgCountError(Exception):
    """Base class for all errors raised by algcount."""


class NonPrimeCharacteristic(AlgCountError, ValueError):
    pass


class FieldTooLarge(AlgCountError, ValueError):
    pass


class DivisionByZero(AlgCountError, ZeroDivisionError):
    pass


class DimensionMismatch(AlgCountError, ValueError):
    pass


class ContextMismatch(AlgCountError, ValueError):
    pass


class Singular(AlgCountError, ArithmeticError):
    """Raised when an inverse is requested for a singular matrix."""


class BudgetExceeded(AlgCountError, RuntimeError):
    """A configured enumeration budget would be exceeded."""


class UnknownPredicate(AlgCountError, KeyError):
    def __str__(self):
        return f"unknown predicate {self.args[0]!r}"


class InvariantViolation(AlgCountError, AssertionError):
    """An always-on internal consistency check failed (a bug)."""


class InternalNonDivisible(InvariantViolation):
    """The Burnside sum was not divisible by the group order."""
