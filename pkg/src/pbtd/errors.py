"""Exception hierarchy shared by every pbtd module."""


class PBTDError(Exception):
    """Base class for all errors raised by pbtd."""


class EqualElements(PBTDError, ValueError):
    pass


class OutOfRange(PBTDError, ValueError):
    pass


class BadPermutation(PBTDError, ValueError):
    pass


class MiddleColumnMoved(PBTDError, ValueError):
    pass


class OutOfWindow(PBTDError, ValueError):
    pass


class ConfigError(PBTDError, ValueError):
    pass


class ParseError(PBTDError, ValueError):
    """Malformed design input.

    ``line`` and ``cell`` are 1-based and point at the offending input
    location when one exists.
    """

    def __init__(self, message, line=None, cell=None):
        self.line = line
        self.cell = cell
        where = []
        if line is not None:
            where.append(f"line {line}")
        if cell is not None:
            where.append(f"cell {cell}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class ShapeError(ParseError):
    pass


class TokenError(ParseError):
    pass


class RangeError(ParseError):
    pass


class SelfPairError(ParseError):
    pass


class SchemaError(ParseError):
    pass
