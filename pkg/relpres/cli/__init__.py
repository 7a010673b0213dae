"""CLI module for the relpres toolkit."""

from .commands import cli

__all__ = ["cli"]
