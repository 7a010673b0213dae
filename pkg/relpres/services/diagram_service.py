"""
Diagram service for the relpres toolkit.

This module reads labels off Howie diagrams, classifies faces against the
relator and the digon relations, checks reducedness and validates the
diagram conditions. Validators never raise on bad diagrams; they return
findings.
"""

import logging
from typing import Dict, List, Optional, Tuple

from ..config import Settings
from ..core.models import (
    CornerType,
    FaceKind,
    Finding,
    FPWord,
    HowieDiagram,
    Pairs,
    Report,
    Stable,
    TWord,
    fp_multiply,
)

logger = logging.getLogger(__name__)


def face_label(diag: HowieDiagram, face: int, start: int = 0) -> TWord:
    """
    Read the label of a face anticlockwise.

    Args:
        diag: The diagram
        face: Face index
        start: Position of the first dart read

    Returns:
        t^e_1 x_1 t^e_2 x_2 ... where e_i is +1 iff the i-th dart runs along its edge
    """
    letters: list = []
    for sign, label in diag.face_pairs(face, start):
        letters.append(Stable(sign))
        letters.extend(label.syllables)
    return TWord(tuple(letters))


def vertex_label(diag: HowieDiagram, vertex: int) -> FPWord:
    """Product of the corner labels of a vertex in rotation order, reduced in H."""
    corners = diag.surface.vertices()[vertex]
    return fp_multiply(diag.presentation.base, *[diag.corner_labels[c] for c in corners])


def corner_type(diag: HowieDiagram, corner: int) -> CornerType:
    """Type of the corner after dart ``corner`` from the two flanking traversal signs."""
    return CornerType.from_signs(diag.is_forward(corner), diag.is_forward(diag.surface.next_dart(corner)))


def vertex_corner_types(diag: HowieDiagram, vertex: int) -> List[CornerType]:
    return [corner_type(diag, c) for c in diag.surface.vertices()[vertex]]


def is_source(diag: HowieDiagram, vertex: int) -> bool:
    return all(t == CornerType.MINUS_PLUS for t in vertex_corner_types(diag, vertex))


def is_sink(diag: HowieDiagram, vertex: int) -> bool:
    return all(t == CornerType.PLUS_MINUS for t in vertex_corner_types(diag, vertex))


def is_boundary_vertex(diag: HowieDiagram, vertex: int) -> bool:
    """True for exterior vertices and vertices on an exterior face."""
    if vertex in diag.exterior_vertices:
        return True
    return any(diag.surface.face_of(c) in diag.exterior_faces for c in diag.surface.vertices()[vertex])


def interior_vertices(diag: HowieDiagram) -> List[int]:
    return [v for v in range(diag.surface.vertex_count) if not is_boundary_vertex(diag, v)]


def _rotation_of(pairs: Pairs, pattern: Pairs) -> Optional[int]:
    """Smallest r with pairs[r:] + pairs[:r] == pattern."""
    if len(pairs) != len(pattern):
        return None
    n = len(pairs)
    for r in range(n):
        if all(pairs[(r + i) % n] == pattern[i] for i in range(n)):
            return r
    return None


def match_face(diag: HowieDiagram, face: int) -> Tuple[FaceKind, Optional[int], Optional[FPWord]]:
    """
    Classify one face and locate its reading origin.

    Returns:
        Tuple (kind, r, p): r is the face position matching the first pair of
        the relator (or the t^-1 dart of a digon), p the digon element
    """
    if face in diag.exterior_faces:
        return FaceKind.EXTERIOR, None, None
    p = diag.presentation
    pairs = diag.face_pairs(face)
    if len(pairs) == 2:
        for r in range(2):
            (sign0, x), (sign1, y) = pairs[r], pairs[1 - r]
            if sign0 == -1 and sign1 == 1 and p.in_p(x) and not x.is_empty() and p.digon_pairs(x)[1][1] == y:
                return FaceKind.DIGON, r, x
    r = _rotation_of(pairs, p.relator_pairs(1))
    if r is not None:
        return FaceKind.LARGE_POS, r, None
    r = _rotation_of(pairs, p.relator_pairs(-1))
    if r is not None:
        return FaceKind.LARGE_NEG, r, None
    return FaceKind.ILLEGAL, None, None


def classify_faces(diag: HowieDiagram) -> List[FaceKind]:
    """Kind of every face (exterior faces are reported as such)."""
    return [match_face(diag, f)[0] for f in range(diag.surface.face_count)]


def _word_ending_at(diag: HowieDiagram, dart: int) -> TWord:
    """Face label read from the corner after ``dart`` so that it ends with the letter of ``dart``."""
    surface = diag.surface
    face = surface.face_of(dart)
    start = (surface.position(dart) + 1) % len(surface.faces[face])
    body = face_label(diag, face, start)
    head = diag.corner_labels[dart].syllables
    return TWord(head + body.letters[:len(body.letters) - len(head)])


def reducedness_check(diag: HowieDiagram) -> Report:
    """
    Find mirror pairs and adjacent digons across interior edges.

    Args:
        diag: The diagram

    Returns:
        Report with ``reduced`` and ``phiReduced`` values and ReduciblePair /
        DigonPair findings
    """
    report = Report("reducedness")
    surface = diag.surface
    kinds = classify_faces(diag)
    group = diag.presentation.base
    reduced, digon_free = True, True
    for e, (d, partner) in enumerate(surface.edges()):
        f1, f2 = surface.face_of(d), surface.face_of(partner)
        if f1 == f2 or not (diag.is_interior_face(f1) and diag.is_interior_face(f2)):
            continue
        start = surface.position(d)
        if face_label(diag, f1, start) == _word_ending_at(diag, partner).inverse(group):
            reduced = False
            report.add(Finding.error("ReduciblePair", f"faces {f1} and {f2} are mirror images", f"edge {e}"))
        if kinds[f1] == FaceKind.DIGON and kinds[f2] == FaceKind.DIGON:
            digon_free = False
            report.add(Finding.error("DigonPair", f"digons {f1} and {f2} share an edge", f"edge {e}"))
    report.values.update({"reduced": reduced, "phiReduced": reduced and digon_free})
    return report


def _alternation_ok(types: List[CornerType]) -> bool:
    stops = [t for t in types if t.is_stop]
    if not stops:
        return all(t == types[0] for t in types)
    n = len(stops)
    return n % 2 == 0 and all(stops[i] != stops[(i + 1) % n] for i in range(n))


def validate_diagram(diag: HowieDiagram, require_sphere: Optional[bool] = None) -> Report:
    """
    Check the diagram conditions.

    Interior faces must read as the relator power (either sign) or a digon,
    interior vertices must carry trivial labels, corner types must alternate
    around interior vertices, and the surface must be a sphere when required.

    Args:
        diag: The diagram
        require_sphere: Demand a sphere; defaults to ``Settings.REQUIRE_SPHERE``

    Returns:
        Report with per-face kinds, surface data and findings
    """
    require_sphere = Settings.REQUIRE_SPHERE if require_sphere is None else require_sphere
    report = Report("diagram")
    surface = diag.surface
    kinds = classify_faces(diag)
    for f, kind in enumerate(kinds):
        if kind == FaceKind.ILLEGAL:
            report.add(Finding.error("IllegalFace", f"label {face_label(diag, f)} is not a relator", f"face {f}"))

    inner = interior_vertices(diag)
    for v in inner:
        label = vertex_label(diag, v)
        if not label.is_empty():
            report.add(Finding.error("InteriorVertexNontrivial", f"label {label} is not trivial", f"vertex {v}"))
        if not _alternation_ok(vertex_corner_types(diag, v)):
            report.add(Finding.error("CornerAlternation", "(++) and (--) corners do not alternate", f"vertex {v}"))

    chi = surface.euler_characteristic()
    if require_sphere and not surface.is_sphere():
        report.add(Finding.error("NotSphere", f"surface has Euler characteristic {chi}"))

    n_faces, n_vertices = len(diag.exterior_faces), len(diag.exterior_vertices)
    if n_faces > 1 or n_vertices > 1 or (n_faces and n_vertices):
        report.add(Finding.error(
            "ExteriorMarking", f"{n_faces} exterior faces and {n_vertices} exterior vertices",
        ))

    reducedness = reducedness_check(diag)
    witness = False
    if n_faces == 0 and n_vertices == 1 and report.ok and reducedness.values["reduced"]:
        witness = not vertex_label(diag, next(iter(diag.exterior_vertices))).is_empty()

    report.values.update({
        "faces": [kind.value for kind in kinds],
        "faceKinds": face_kind_counts(kinds),
        "V": surface.vertex_count,
        "E": surface.edge_count,
        "F": surface.face_count,
        "euler": chi,
        "interiorVertices": inner,
        "reduced": reducedness.values["reduced"],
        "phiReduced": reducedness.values["phiReduced"],
        "aspherical_witness": witness,
    })
    logger.info("diagram validated: %d findings", len(report.findings))
    return report


def face_kind_counts(kinds: List[FaceKind]) -> Dict[str, int]:
    """Number of faces of each kind, keyed by kind value."""
    counts: Dict[str, int] = {}
    for kind in kinds:
        counts[kind.value] = counts.get(kind.value, 0) + 1
    return counts
