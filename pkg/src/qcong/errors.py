"""Exception hierarchy shared by every qcong module."""


class QSeriesError(ValueError):
    """Base class for all qcong errors."""


class InvalidOrder(QSeriesError):
    pass


class NotInvertible(QSeriesError):
    pass


class InvalidBase(QSeriesError):
    pass


class InvalidModulus(QSeriesError):
    pass


class DivergentSpec(QSeriesError):
    pass


class NoProductForm(QSeriesError):
    pass


class ParseError(QSeriesError):
    """Raised by the text grammar; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class UnknownIdentity(QSeriesError, KeyError):
    def __str__(self):
        return f"unknown identity: {self.args[0]}"


class NotCoprime(QSeriesError):
    pass


class TruncationTooSmall(QSeriesError):
    pass
