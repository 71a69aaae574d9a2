"""Exception hierarchy shared by all modules."""


class AlexQuandleError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AlexQuandleError, ValueError):
    """Malformed polynomial or braid text."""


class EmptyInput(ParseError):
    pass


class IndexOutOfRange(AlexQuandleError, ValueError):
    """A generator index does not fit the strand count."""


class ZeroDivisor(AlexQuandleError, ZeroDivisionError):
    pass


class BothZero(AlexQuandleError, ValueError):
    pass


class NonInvertibleT(AlexQuandleError, ValueError):
    pass


class NotSquare(AlexQuandleError, ValueError):
    pass


class ZeroModulus(AlexQuandleError, ValueError):
    pass


class UnitModulus(AlexQuandleError, ValueError):
    pass


class InconsistentAssignment(AlexQuandleError, ValueError):
    pass


class WrongVerdict(AlexQuandleError, ValueError):
    pass


class NotADivisor(AlexQuandleError, ValueError):
    pass


class LengthMismatch(AlexQuandleError, ValueError):
    pass


class BudgetExceeded(AlexQuandleError, RuntimeError):
    pass


class DatasetError(AlexQuandleError, ValueError):
    pass


class InternalError(AlexQuandleError, RuntimeError):
    """An algebraic identity that must hold failed; indicates a bug."""
