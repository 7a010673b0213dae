"""Exact rational helpers for the relpres toolkit."""

from fractions import Fraction
from typing import Union

from ..core.exceptions import ParseError

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an integer or a "num/den" string into an exact rational.

    Args:
        value: An int, a Fraction, or a string such as "3/4" or "-2"

    Returns:
        The value as a Fraction

    Raises:
        ParseError: If the string is not a rational literal
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"not a rational: {value!r}") from e
    raise ParseError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """
    Format a rational as "num/den", or as a plain integer when den is 1.

    Args:
        value: The rational to format

    Returns:
        The string form used in JSON reports
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def mod_circle(value: Fraction, length: Fraction) -> Fraction:
    """Reduce a time or position into [0, length)."""
    return value - length * (value // length)
