"""Utility modules for the relpres toolkit."""

from .rationals import parse_rational, format_rational, mod_circle

__all__ = [
    "parse_rational",
    "format_rational",
    "mod_circle",
]
