"""
Curvature service for the relpres toolkit.

Pure functions for the weight test on arbitrary maps, the standard corner
weights of a Howie diagram (with special digons), per-vertex corner censuses
and the isoperimetric check for powers k >= 3.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..core.exceptions import CensusMismatch, MissingWeight, UnclassifiedFace, WrongShape
from ..core.models import (
    CornerType,
    CurvatureReport,
    FaceKind,
    Finding,
    HowieDiagram,
    Report,
    SurfaceMap,
    VertexCensus,
)
from . import diagram_service

logger = logging.getLogger(__name__)

Weights = Dict[int, Fraction]


def gauss_bonnet_report(surface: SurfaceMap, weights: Mapping[int, Fraction]) -> CurvatureReport:
    """
    Evaluate vertex and face curvatures for a corner weighting.

    Args:
        surface: Any map
        weights: Corner id -> weight

    Returns:
        CurvatureReport whose total equals 2 * chi for every weighting

    Raises:
        MissingWeight: If some corner has no weight
    """
    missing = [c for c in range(surface.corner_count) if c not in weights]
    if missing:
        raise MissingWeight(f"no weight for corners {missing[:5]}")

    report = CurvatureReport(euler=surface.euler_characteristic())
    for v, corners in enumerate(surface.vertices()):
        report.vertex_curvature[v] = 2 - sum((Fraction(weights[c]) for c in corners), Fraction(0))
    for f, darts in enumerate(surface.faces):
        report.face_curvature[f] = 2 - sum((1 - Fraction(weights[c]) for c in darts), Fraction(0))
    return report


def rho_neighbours(surface: SurfaceMap, corner: int) -> Tuple[int, int]:
    """The corners before and after ``corner`` in the rotation at its vertex."""
    orbit = surface.vertices()[surface.vertex_of(corner)]
    i = orbit.index(corner)
    return orbit[i - 1], orbit[(i + 1) % len(orbit)]


def special_digons(diag: HowieDiagram, kinds: Optional[List[FaceKind]] = None) -> Dict[int, int]:
    """
    Find the special digons and their positive corners.

    A digon is special when both faces across its edges are interior and one
    of its corners sits between a (++) corner and a (--) corner. When both
    corners qualify, the first corner of the face is taken as positive.

    Args:
        diag: The diagram
        kinds: Face kinds, computed when omitted

    Returns:
        Face index -> positive corner id
    """
    surface = diag.surface
    kinds = kinds if kinds is not None else diagram_service.classify_faces(diag)
    stops = {CornerType.PLUS_PLUS, CornerType.MINUS_MINUS}
    found: Dict[int, int] = {}
    for f, kind in enumerate(kinds):
        if kind != FaceKind.DIGON:
            continue
        darts = surface.faces[f]
        if not all(diag.is_interior_face(surface.face_of(surface.theta[d])) for d in darts):
            continue
        for corner in darts:
            before, after = rho_neighbours(surface, corner)
            types = {diagram_service.corner_type(diag, before), diagram_service.corner_type(diag, after)}
            if types == stops:
                found[f] = corner
                break
    return found


def standard_weights(diag: HowieDiagram) -> Weights:
    """
    Standard corner weights of a Howie diagram.

    Corners of nonspecial digons and stop corners of interior faces weigh 0,
    the negative corner of a special digon weighs -1, everything else 1.

    Args:
        diag: A diagram with classified faces

    Returns:
        Corner id -> weight in {-1, 0, 1}

    Raises:
        UnclassifiedFace: If an interior face is illegal
    """
    surface = diag.surface
    kinds = diagram_service.classify_faces(diag)
    illegal = [f for f, kind in enumerate(kinds) if kind == FaceKind.ILLEGAL]
    if illegal:
        raise UnclassifiedFace(f"faces {illegal} are neither relator faces nor digons")

    special = special_digons(diag, kinds)
    weights: Weights = {}
    for f, kind in enumerate(kinds):
        for corner in surface.faces[f]:
            if kind == FaceKind.EXTERIOR:
                weights[corner] = Fraction(1)
            elif kind == FaceKind.DIGON:
                if f not in special:
                    weights[corner] = Fraction(0)
                else:
                    weights[corner] = Fraction(1 if special[f] == corner else -1)
            else:
                weights[corner] = Fraction(0 if diagram_service.corner_type(diag, corner).is_stop else 1)
    return weights


def vertex_census(diag: HowieDiagram, weights: Mapping[int, Fraction], vertex: int,
                  kinds: Optional[List[FaceKind]] = None) -> VertexCensus:
    """
    Count the corner classes at a vertex and cross-check its curvature.

    Args:
        diag: The diagram
        weights: Output of standard_weights
        vertex: Vertex index
        kinds: Face kinds, computed when omitted

    Returns:
        The census

    Raises:
        CensusMismatch: If 2 + n - l - p - x differs from 2 minus the weight sum
    """
    surface = diag.surface
    kinds = kinds if kinds is not None else diagram_service.classify_faces(diag)
    n = l = p = x = 0
    for corner in surface.vertices()[vertex]:
        kind = kinds[surface.face_of(corner)]
        weight = weights[corner]
        if kind == FaceKind.EXTERIOR:
            x += 1
        elif kind == FaceKind.DIGON:
            n += weight == -1
            p += weight == 1
        elif kind.is_large and not diagram_service.corner_type(diag, corner).is_stop:
            l += 1

    types = diagram_service.vertex_corner_types(diag, vertex)
    mixed = types[0] in (CornerType.PLUS_MINUS, CornerType.MINUS_PLUS)
    census = VertexCensus(n, l, p, x, source_or_sink=mixed and all(t == types[0] for t in types))

    direct = 2 - sum((weights[c] for c in surface.vertices()[vertex]), Fraction(0))
    if direct != census.curvature:
        raise CensusMismatch(f"vertex {vertex}: K = {direct} but census gives {census.curvature}")
    return census


def expected_face_curvature(kind: FaceKind, k: int) -> int:
    if kind == FaceKind.EXTERIOR:
        return 2
    if kind.is_large:
        return 2 - k
    return 0


def curvature_report(diag: HowieDiagram) -> Report:
    """
    Weigh a diagram and tabulate its curvatures and censuses.

    Args:
        diag: A legal diagram

    Returns:
        Report with the Gauss-Bonnet table, per-vertex census and FaceCurvature
        findings for faces off their expected value
    """
    kinds = diagram_service.classify_faces(diag)
    weights = standard_weights(diag)
    table = gauss_bonnet_report(diag.surface, weights)
    report = Report("curvature")
    k = diag.presentation.k
    for f, kind in enumerate(kinds):
        expected = expected_face_curvature(kind, k)
        if table.face_curvature[f] != expected:
            report.add(Finding.error(
                "FaceCurvature", f"K = {table.face_curvature[f]}, expected {expected}", f"face {f}",
            ))
    census = {str(v): vertex_census(diag, weights, v, kinds).to_dict() for v in range(diag.surface.vertex_count)}
    report.values.update(table.to_dict())
    report.values["census"] = census
    return report


def _adjacent_stop_corners(diag: HowieDiagram, vertex: int) -> bool:
    types = diagram_service.vertex_corner_types(diag, vertex)
    n = len(types)
    if n < 2:
        return False
    return any(types[i].is_stop and types[(i + 1) % n].is_stop for i in range(n if n > 2 else 1))


def _negative_corner_flanked(diag: HowieDiagram, corner: int, kinds: List[FaceKind]) -> bool:
    """A negative special corner must sit between two mixed corners of large faces."""
    surface = diag.surface
    for neighbour in rho_neighbours(surface, corner):
        if not kinds[surface.face_of(neighbour)].is_large:
            return False
        if diagram_service.corner_type(diag, neighbour).is_stop:
            return False
    return True


def interior_curvature_audit(diag: HowieDiagram) -> Report:
    """
    Report interior vertices that break the nonpositive curvature argument.

    Args:
        diag: A legal diagram

    Returns:
        Report with PositiveInteriorCurvature, InsufficientSeparation and
        AdjacentStopCorners findings plus the census of every interior vertex
    """
    report = Report("interiorCurvature")
    kinds = diagram_service.classify_faces(diag)
    weights = standard_weights(diag)
    censuses: Dict[str, dict] = {}
    for v in diagram_service.interior_vertices(diag):
        census = vertex_census(diag, weights, v, kinds)
        censuses[str(v)] = census.to_dict()
        where = f"vertex {v}"
        if census.curvature > 0:
            label = diagram_service.vertex_label(diag, v)
            if census.n == 1 and census.l == 2:
                case = "n = 1, l = 2"
            elif census.n == 0 and census.l <= 1:
                case = f"n = 0, l = {census.l}"
            else:
                case = f"n = {census.n}, l = {census.l}"
            shape = "source or sink" if census.source_or_sink else "mixed"
            report.add(Finding.error(
                "PositiveInteriorCurvature",
                f"K = {census.curvature} ({case}, {shape}) with label {label}",
                where,
            ))
        if census.l < 2 * census.n:
            report.add(Finding.error("InsufficientSeparation", f"l = {census.l} < 2n = {2 * census.n}", where))
        for corner in diag.surface.vertices()[v]:
            if weights[corner] == -1 and not _negative_corner_flanked(diag, corner, kinds):
                report.add(Finding.error(
                    "InsufficientSeparation", f"negative corner {corner} is not flanked by large-face corners", where,
                ))
        if _adjacent_stop_corners(diag, v):
            report.add(Finding.error("AdjacentStopCorners", "(++) and (--) corners are adjacent", where))
    report.values["census"] = censuses
    logger.info("interior curvature audit: %d findings", len(report.findings))
    return report


def isoperimetric_k3_values(perimeter: int, large_faces: int, k: int) -> Dict[str, object]:
    """Both sides of 2 * perimeter - (k - 2) * large + 2 >= 4."""
    lhs = 2 * perimeter - (k - 2) * large_faces + 2
    return {"perimeter": perimeter, "largeFaces": large_faces, "lhs": lhs, "rhs": 4, "holds": lhs >= 4}


def exterior_shape(diag: HowieDiagram) -> Tuple[int, int]:
    """
    Perimeter and large-face count of a disk diagram.

    Raises:
        WrongShape: Unless there is exactly one exterior face and no exterior vertex
    """
    if len(diag.exterior_faces) != 1 or diag.exterior_vertices:
        raise WrongShape("need exactly one exterior face and no exterior vertices")
    exterior = next(iter(diag.exterior_faces))
    kinds = diagram_service.classify_faces(diag)
    return len(diag.surface.faces[exterior]), sum(1 for kind in kinds if kind.is_large)


def isoperimetric_check_k3(diag: HowieDiagram) -> Report:
    """
    Evaluate the isoperimetric inequality for k >= 3.

    Args:
        diag: A disk diagram over a presentation with k >= 3

    Returns:
        Report with both sides and an IsoperimetricFailure finding when it fails

    Raises:
        WrongShape: If k < 3 or the exterior markings do not describe a disk
    """
    k = diag.presentation.k
    if k < 3:
        raise WrongShape(f"k = {k}: the k >= 3 inequality does not apply, use the combined audit")
    perimeter, large = exterior_shape(diag)
    report = Report("isoperimetric")
    report.values.update(isoperimetric_k3_values(perimeter, large, k))
    if not report.values["holds"]:
        report.add(Finding.error(
            "IsoperimetricFailure", f"{report.values['lhs']} < 4 with perimeter {perimeter} and {large} large faces",
        ))
    return report
