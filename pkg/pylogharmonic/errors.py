""" Exceptions raised by pylogharmonic
"""
from typing import Optional


class LogharmonicError(ValueError):
    """ Base class for all input and domain errors of this package """


class ZeroConstantTerm(LogharmonicError):
    pass


class OutsideRadius(LogharmonicError):
    pass


class ExpressionSyntaxError(LogharmonicError):

    def __init__(self, message: str, offset: int):
        super().__init__(f'{message} (at byte offset {offset})')
        self.offset = offset


class UnknownIdentifier(ExpressionSyntaxError):

    def __init__(self, name: str, offset: int):
        super().__init__(f'unknown identifier {name!r}', offset)
        self.name = name


class SingularAtOrigin(LogharmonicError):
    pass


class DivisionNearZero(LogharmonicError):
    pass


class BadNormalization(LogharmonicError):
    pass


class DilatationNotVanishing(LogharmonicError):
    pass


class NotHerglotz(LogharmonicError):
    pass


class NotRealCoefficient(LogharmonicError):
    pass


class NotTypicallyReal(LogharmonicError):
    pass


class DegenerateDenominator(LogharmonicError):
    pass


class OriginEvaluation(LogharmonicError):
    pass


class PreconditionFailed(LogharmonicError):
    pass


class ConfigError(LogharmonicError):

    def __init__(self,
                 message: str,
                 field: Optional[str] = None,
                 line: Optional[int] = None):
        where = []
        if field is not None:
            where.append(f'field {field!r}')
        if line is not None:
            where.append(f'line {line}')
        suffix = f' ({", ".join(where)})' if where else ''
        super().__init__(f'{message}{suffix}')
        self.field = field
        self.line = line
