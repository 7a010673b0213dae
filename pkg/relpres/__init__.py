"""
relpres - A verification toolkit for one-relator relative presentations.

This package rewrites unimodular relators into canonical form and audits
Howie diagrams over the result with curvature and car motion arguments.
"""

__version__ = "1.0.0"

from relpres.core.models import Group, TWord, FPWord, PhiPresentation, SurfaceMap, HowieDiagram

__all__ = ["Group", "TWord", "FPWord", "PhiPresentation", "SurfaceMap", "HowieDiagram"]
