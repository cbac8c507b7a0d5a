from typing import Optional


class Splitg2Error(Exception):
    pass


class FieldError(Splitg2Error):
    pass


class FieldMismatch(FieldError):
    def __init__(self, left: object, right: object):
        super().__init__(f"Operands live in different fields: {left} and {right}")
        self.left = left
        self.right = right


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class InvalidModulus(FieldError):
    pass


class ShapeMismatch(Splitg2Error):
    pass


class NotInteger(Splitg2Error):
    pass


class ParseError(Splitg2Error):
    """
    Raised when user supplied text cannot be decoded.

    `position` locates the problem: a character offset for JSON text,
    or a path such as `entries[2][5]` inside an already decoded document.
    """

    def __init__(self, message: str, position: Optional[str] = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class DerivationError(Splitg2Error):
    pass


class NotInSpan(DerivationError):
    pass


class ParameterizationMismatch(DerivationError):
    pass


class NotClosed(DerivationError):
    def __init__(self, i: int, j: int, reason: str):
        super().__init__(f"Bracket [x{i}, x{j}] leaves the span: {reason}")
        self.i = i
        self.j = j
