"""Exception types shared across the package."""


class ParmonError(Exception):
    """Base class for all package errors."""


class DivisionByZero(ParmonError, ZeroDivisionError):
    pass


class PoleError(ParmonError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class OrderMismatch(ParmonError, ValueError):
    pass


class ResourceLimit(ParmonError, ValueError):
    pass


class InvalidVertex(ParmonError, ValueError):
    pass


class NotApplicable(ParmonError, ValueError):
    pass


class DegenerateParameter(ParmonError, ArithmeticError):
    """A normalising scalar vanished while building matrix units."""


class ConstructionOrderError(ParmonError, RuntimeError):
    pass


class InvalidTableau(ParmonError, ValueError):
    pass


class InvalidPair(ParmonError, ValueError):
    pass


class RuleMismatch(ParmonError, AssertionError):
    """The combinatorial product rule disagreed with the algebra product."""


class UsageError(ParmonError, ValueError):
    pass
