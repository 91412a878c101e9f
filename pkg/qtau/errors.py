"""Exceptions raised by the q-series engine and the congruence verifier."""

__all__ = ['QTauError', 'DomainError', 'SpecParseError', 'NonUnitError', 'ModulusMismatchError',
           'InexactDivisionError', 'LimitExceededError', 'UnknownCheckError']


class QTauError(Exception):
    """Base class for everything qtau raises on purpose."""


class DomainError(QTauError, ValueError):
    """An argument lies outside the domain of the operation (negative order, k = 0, m < 2, ...)."""


class SpecParseError(DomainError):
    """An eta product spec string could not be parsed."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column + 1}: {text!r}")
        self.text = text
        self.column = column


class NonUnitError(QTauError, ArithmeticError):
    """The constant term of a series is not invertible in its coefficient ring."""


class ModulusMismatchError(DomainError):
    """Two modular series with different moduli were combined."""


class InexactDivisionError(QTauError, ArithmeticError):
    """The divisor-sum recurrence produced a non-integral value."""

    def __init__(self, k: int, n: int, numerator: int):
        super().__init__(f"recurrence for k={k} is not integral at n={n} (numerator {numerator})")
        self.k = k
        self.n = n
        self.numerator = numerator


class LimitExceededError(DomainError):
    """A requested order or scan limit exceeds the configured hard ceiling."""


class UnknownCheckError(QTauError, KeyError):
    """A check id is not in the registry."""

    def __init__(self, check_id: str, suggestions=()):
        self.check_id = check_id
        self.suggestions = tuple(suggestions)
        message = f"no check with id {check_id!r}"
        if self.suggestions:
            message += f" (did you mean {', '.join(self.suggestions)}?)"
        super().__init__(message)

    def __str__(self):
        return self.args[0]
