"""Typed exceptions shared across the package.

Every error raised on purpose by this package derives from RadixGraphError,
so callers (and the CLI) can distinguish our failures from genuine bugs.
"""


class RadixGraphError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RadixGraphError):
    """An argument lies outside the documented domain of an operation."""


class UndefinedInputError(ValidationError):
    """The mathematical result is undefined for the given input, e.g. gcd(0, 0)."""


class NotAUnitError(ValidationError):
    """An operand is not invertible modulo the given modulus."""


class ZeroDenominatorError(ValidationError):
    """A fraction with denominator zero was supplied."""


class CapacityError(RadixGraphError):
    """The request exceeds a configured size cap and was refused, not attempted."""


class ParseError(RadixGraphError):
    """Textual input (CLI argument) could not be parsed."""
