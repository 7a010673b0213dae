"""
Howie diagram model for the relpres toolkit.

A Howie diagram is a surface map whose edges all carry the stable letter t,
oriented by one designated dart per edge, and whose corners carry elements of
H = G^(0) * ... * G^(s).
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Sequence, Tuple

from ..exceptions import ParseError
from .presentation import Pairs, PhiPresentation
from .surface_map import SurfaceMap
from .words import FPWord, fp_reduce


@dataclass(frozen=True)
class HowieDiagram:
    """
    Labelled map over a canonical presentation.

    Attributes:
        surface: Underlying map
        edge_forward: Per edge, the dart traversed along the edge orientation
        corner_labels: Per corner id (the dart before the corner), its label in H
        exterior_faces: Faces exempt from relator legality
        exterior_vertices: Vertices exempt from the trivial-label condition
        presentation: The presentation the labels live over
    """
    surface: SurfaceMap
    edge_forward: Tuple[int, ...]
    corner_labels: Tuple[FPWord, ...]
    exterior_faces: FrozenSet[int]
    exterior_vertices: FrozenSet[int]
    presentation: PhiPresentation
    _forward: Tuple[bool, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        surface = self.surface
        if len(self.edge_forward) != surface.edge_count:
            raise ParseError(f"edgeForward has {len(self.edge_forward)} entries for {surface.edge_count} edges")
        forward = [False] * surface.dart_count
        for e, dart in enumerate(self.edge_forward):
            if dart not in surface.edges()[e]:
                raise ParseError(f"edgeForward[{e}] = {dart} is not a dart of edge {e}")
            forward[dart] = True
        if len(self.corner_labels) != surface.corner_count:
            raise ParseError(f"{len(self.corner_labels)} corner labels for {surface.corner_count} corners")
        labels = tuple(fp_reduce(w, self.presentation.base, copies=self.presentation.copies)
                       for w in self.corner_labels)
        object.__setattr__(self, "corner_labels", labels)
        for f in self.exterior_faces:
            if not 0 <= f < surface.face_count:
                raise ParseError(f"exterior face {f} does not exist")
        for v in self.exterior_vertices:
            if not 0 <= v < surface.vertex_count:
                raise ParseError(f"exterior vertex {v} does not exist")
        object.__setattr__(self, "_forward", tuple(forward))

    @classmethod
    def from_face_labels(
        cls,
        surface: SurfaceMap,
        edge_forward: Sequence[int],
        face_labels: Sequence[Sequence[FPWord]],
        presentation: PhiPresentation,
        exterior_faces: Sequence[int] = (),
        exterior_vertices: Sequence[int] = (),
    ) -> "HowieDiagram":
        """
        Build a diagram from corner labels listed face by face.

        Args:
            surface: Underlying map
            edge_forward: Forward dart per edge
            face_labels: For every face, the labels of the corners after its darts
            presentation: Presentation over which labels are read
            exterior_faces: Exterior face indices
            exterior_vertices: Exterior vertex indices

        Returns:
            The diagram
        """
        if len(face_labels) != surface.face_count:
            raise ParseError("cornerLabels must list every face")
        labels: List[FPWord] = [FPWord()] * surface.corner_count
        for face, row in zip(surface.faces, face_labels):
            if len(row) != len(face):
                raise ParseError("cornerLabels row does not match its face degree")
            for dart, word in zip(face, row):
                labels[dart] = word
        return cls(
            surface=surface,
            edge_forward=tuple(edge_forward),
            corner_labels=tuple(labels),
            exterior_faces=frozenset(exterior_faces),
            exterior_vertices=frozenset(exterior_vertices),
            presentation=presentation,
        )

    def is_forward(self, dart: int) -> bool:
        """True iff the dart runs along its edge orientation."""
        return self._forward[dart]

    def sign(self, dart: int) -> int:
        return 1 if self._forward[dart] else -1

    def face_pairs(self, face: int, start: int = 0) -> Pairs:
        """
        Read a face as (sign, corner label) pairs.

        Args:
            face: Face index
            start: Position of the first dart

        Returns:
            Pairs (sign of dart, label of the corner after it) anticlockwise
        """
        darts = self.surface.faces[face]
        n = len(darts)
        return [(self.sign(darts[(start + i) % n]), self.corner_labels[darts[(start + i) % n]])
                for i in range(n)]

    def interior_faces(self) -> List[int]:
        return [f for f in range(self.surface.face_count) if f not in self.exterior_faces]

    def interior_vertices(self) -> List[int]:
        return [v for v in range(self.surface.vertex_count) if v not in self.exterior_vertices]

    def is_interior_face(self, face: int) -> bool:
        return face not in self.exterior_faces

    def face_labels_rows(self) -> List[List[FPWord]]:
        """Corner labels regrouped face by face."""
        return [[self.corner_labels[d] for d in face] for face in self.surface.faces]

    def to_dict(self) -> dict:
        """
        Convert the diagram to its JSON file representation.

        Returns:
            Map fields plus edgeForward, cornerLabels and exterior markings
        """
        data = self.surface.to_dict()
        data.update({
            "edgeForward": list(self.edge_forward),
            "cornerLabels": [[w.to_dict() for w in row] for row in self.face_labels_rows()],
            "exteriorFaces": sorted(self.exterior_faces),
            "exteriorVertices": sorted(self.exterior_vertices),
        })
        return data

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return (f"<HowieDiagram(faces={self.surface.face_count}, "
                f"exterior_faces={sorted(self.exterior_faces)}, "
                f"exterior_vertices={sorted(self.exterior_vertices)})>")
