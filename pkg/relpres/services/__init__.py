"""Services module containing the rewriting, diagram, curvature and motion logic."""

from . import (
    audit_service,
    curvature_service,
    diagram_service,
    fuzz_service,
    motion_service,
    rewriter_service,
)

__all__ = [
    "audit_service",
    "curvature_service",
    "diagram_service",
    "fuzz_service",
    "motion_service",
    "rewriter_service",
]
