"""
Models package for the relpres toolkit.

This package contains all immutable domain models used by the services.
"""

from .enums import CornerType, FaceKind, MoveKind, Severity, VertexCase
from .group import Group
from .words import (
    CyclicForm,
    FPWord,
    cyclic_decomposition,
    Stable,
    Syllable,
    TWord,
    fp_conjugacy,
    fp_cyclic_reduce,
    fp_multiply,
    fp_reduce,
    free_reduce,
    sub_membership,
    tword_conjugacy,
    tword_cyclic_reduce,
)
from .presentation import (
    ConditionReport,
    FactorTag,
    FreeProductCase,
    OrderBoundReport,
    Pairs,
    PhiPresentation,
    RelatorFactor,
    RewriteMove,
    RewriteTrace,
)
from .surface_map import SurfaceMap, build_map, map_from_polygons, random_map
from .diagram import HowieDiagram
from .motion import CarSchedule, CollisionReport, MultipleMotion, Piece
from .report import Finding, Report
from .curvature import CurvatureReport, VertexCensus

__all__ = [
    "CornerType", "FaceKind", "MoveKind", "Severity", "VertexCase",
    "Group",
    "CyclicForm", "FPWord", "Stable", "Syllable", "TWord",
    "cyclic_decomposition", "fp_conjugacy", "fp_cyclic_reduce", "fp_multiply", "fp_reduce", "free_reduce",
    "sub_membership", "tword_conjugacy", "tword_cyclic_reduce",
    "ConditionReport", "FactorTag", "FreeProductCase", "OrderBoundReport", "Pairs",
    "PhiPresentation", "RelatorFactor", "RewriteMove", "RewriteTrace",
    "SurfaceMap", "build_map", "map_from_polygons", "random_map",
    "HowieDiagram",
    "CarSchedule", "CollisionReport", "MultipleMotion", "Piece",
    "Finding", "Report",
    "CurvatureReport", "VertexCensus",
]
