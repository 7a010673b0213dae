"""
Fixtures package for the relpres toolkit.

This package contains predefined groups, presentations and diagrams for
tests and demonstrations.
"""

from .predefined_diagrams import DESCRIPTIONS, DIAGRAMS, get_diagram, get_fixture_names

__all__ = ["DESCRIPTIONS", "DIAGRAMS", "get_diagram", "get_fixture_names"]
