"""
Audit service for the relpres toolkit.

This module strings the diagram, curvature and motion services together:
the combined curvature audit for k = 2, the no-digon curvature check and
the full pipeline behind ``relpres audit``.
"""

import logging
from typing import Dict, List

from ..core.exceptions import WrongShape
from ..core.models import FaceKind, Finding, HowieDiagram, Report
from . import curvature_service, diagram_service, motion_service

logger = logging.getLogger(__name__)

COMBINED_RHS = 6


def combined_inequality_values(perimeter: int, large_faces: int, k: int, m: int) -> Dict[str, object]:
    """Both sides of (D + 3) * perimeter - large + 2 >= 6 with D = k(2m + 1)."""
    constant = k * (2 * m + 1)
    lhs = (constant + 3) * perimeter - large_faces + 2
    return {
        "D": constant,
        "perimeter": perimeter,
        "largeFaces": large_faces,
        "lhs": lhs,
        "rhs": COMBINED_RHS,
        "holds": lhs >= COMBINED_RHS,
    }


def combined_audit(diag: HowieDiagram) -> Report:
    """
    Audit the combined curvature K + K' of a disk diagram under the standard motion.

    Checks that interior vertices have K <= 0, that no zero-curvature interior
    vertex hosts a complete collision, that combined face and interior edge
    curvatures take their expected values, and the final inequality.

    Args:
        diag: A legal disk diagram

    Returns:
        Report with the inequality sides, per-face combined curvature and the
        zero-curvature vertex cases

    Raises:
        WrongShape: Unless there is exactly one exterior face and no exterior vertex
    """
    perimeter, large = curvature_service.exterior_shape(diag)
    p = diag.presentation
    kinds = diagram_service.classify_faces(diag)
    weights = curvature_service.standard_weights(diag)
    table = curvature_service.gauss_bonnet_report(diag.surface, weights)
    motion = motion_service.standard_motion(diag)
    collisions = motion_service.detect_collisions(diag, motion)
    report = Report("combined")

    cases: Dict[str, str] = {}
    gap = p.k == 2 and p.base.has_involution()
    for v in diagram_service.interior_vertices(diag):
        census = curvature_service.vertex_census(diag, weights, v, kinds)
        where = f"vertex {v}"
        if census.curvature > 0:
            report.add(Finding.error("CombinedCurvature", f"interior vertex has K = {census.curvature}", where))
            continue
        if census.curvature < 0 or v not in collisions.cc_vertices:
            continue
        case = census.zero_case()
        label = case.value if case is not None else "unlisted"
        cases[str(v)] = label
        message = f"complete collision at a zero-curvature vertex (case {label})"
        if gap:
            report.add(Finding.warning(
                "InvolutionHypothesisGap", f"{message}; G has an involution and k = 2", where,
            ))
        else:
            report.add(Finding.error("ZeroCurvatureCollision", message, where))

    k_sigma: Dict[str, int] = {}
    for f, kind in enumerate(kinds):
        if kind == FaceKind.EXTERIOR:
            continue
        value = int(table.face_curvature[f]) + collisions.kprime_faces[f]
        k_sigma[str(f)] = value
        if (kind.is_large and value > -1) or (kind == FaceKind.DIGON and value != 0):
            report.add(Finding.error("CombinedCurvature", f"K + K' = {value} on a {kind.value} face", f"face {f}"))
    for e, (d, partner) in enumerate(diag.surface.edges()):
        interior = (diag.is_interior_face(diag.surface.face_of(d))
                    and diag.is_interior_face(diag.surface.face_of(partner)))
        if interior and collisions.kprime_edge(e):
            report.add(Finding.error("CombinedCurvature", "interior edge carries collision points", f"edge {e}"))

    report.values.update(combined_inequality_values(perimeter, large, p.k, p.m))
    report.values.update({"kSigma": k_sigma, "vertexCases": cases, "collisions": collisions.to_dict()})
    if not report.values["holds"]:
        report.add(Finding.error(
            "IsoperimetricFailure", f"{report.values['lhs']} < {COMBINED_RHS}",
        ))
    logger.info("combined audit: lhs=%s, %d findings", report.values["lhs"], len(report.findings))
    return report


def no_digon_boundary_check(diag: HowieDiagram) -> Report:
    """
    Curvature bounds for diagrams without digons.

    Boundary vertices must have K <= 2 and interior vertices K <= 0. Diagrams
    with digons are reported as not applicable.
    """
    report = Report("noDigon")
    kinds = diagram_service.classify_faces(diag)
    if any(kind == FaceKind.DIGON for kind in kinds):
        report.values["applicable"] = False
        return report
    report.values["applicable"] = True
    weights = curvature_service.standard_weights(diag)
    table = curvature_service.gauss_bonnet_report(diag.surface, weights)
    for v, value in table.vertex_curvature.items():
        bound = 2 if diagram_service.is_boundary_vertex(diag, v) else 0
        if value > bound:
            report.add(Finding.error("NoDigonCurvature", f"K = {value} exceeds {bound}", f"vertex {v}"))
    return report


def full_audit(diag: HowieDiagram) -> List[Report]:
    """
    Run every audit that applies to a diagram.

    Validation and reducedness always run. The curvature and motion steps run
    once every interior face classifies; the inequality step runs for disk
    diagrams (the k >= 3 inequality or the combined audit for k = 2).

    Args:
        diag: The diagram

    Returns:
        Reports in pipeline order
    """
    validation = diagram_service.validate_diagram(diag)
    reports = [validation, diagram_service.reducedness_check(diag)]
    if "IllegalFace" in validation.codes():
        logger.warning("illegal faces present; skipping curvature and motion audits")
        return reports

    reports.append(curvature_service.curvature_report(diag))
    reports.append(curvature_service.interior_curvature_audit(diag))
    reports.append(no_digon_boundary_check(diag))

    if len(diag.exterior_faces) <= 1:
        motion = motion_service.standard_motion(diag)
        collisions = motion_service.detect_collisions(diag, motion)
        reports.append(motion_service.validate_motion(motion, diag))
        reports.append(motion_service.collision_structure_audit(diag, motion, collisions))
        crash = motion_service.car_crash_audit(diag, collisions)
        crash.values["collisions"] = collisions.to_dict()
        reports.append(crash)

    try:
        if diag.presentation.k >= 3:
            reports.append(curvature_service.isoperimetric_check_k3(diag))
        else:
            reports.append(combined_audit(diag))
    except WrongShape as e:
        skipped = Report("inequality", values={"skipped": str(e)})
        reports.append(skipped)
    return reports


def summarize(reports: List[Report]) -> dict:
    """JSON document of a pipeline run: one key per step plus the overall verdict."""
    data = {report.name: report.to_dict() for report in reports}
    data["ok"] = all(report.ok for report in reports)
    return data
