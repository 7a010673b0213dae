"""
Surface map model for the relpres toolkit.

This module contains the SurfaceMap model: a combinatorial map on a closed
oriented surface given by darts, an edge involution theta, and faces listed as
anticlockwise dart cycles. Corners are identified with darts: corner ``d`` is
the gap after dart ``d`` and before the next dart of its face.
"""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..exceptions import FacesNotPartition, MapError, OddDartTotal, ThetaHasFixedPoint, ThetaNotInvolution


@dataclass(frozen=True)
class SurfaceMap:
    """
    Combinatorial map on a closed oriented surface.

    Attributes:
        dart_count: Number of darts (even)
        theta: Opposite dart of every dart
        faces: Faces as anticlockwise tuples of darts
    """
    dart_count: int
    theta: Tuple[int, ...]
    faces: Tuple[Tuple[int, ...], ...]
    _face_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _vertices: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _vertex_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _edges: Tuple[Tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    _edge_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_theta(self.dart_count, self.theta)
        face_of, index = _check_faces(self.dart_count, self.faces)
        object.__setattr__(self, "_face_of", face_of)
        object.__setattr__(self, "_index", index)

        vertex_of = [-1] * self.dart_count
        orbits: List[Tuple[int, ...]] = []
        for start in range(self.dart_count):
            if vertex_of[start] >= 0:
                continue
            orbit, d = [], start
            while vertex_of[d] < 0:
                vertex_of[d] = len(orbits)
                orbit.append(d)
                d = self.rho(d)
            if d != start:
                raise MapError(f"corner rotation is not a permutation at corner {d}")
            orbits.append(tuple(orbit))
        object.__setattr__(self, "_vertices", tuple(orbits))
        object.__setattr__(self, "_vertex_of", tuple(vertex_of))

        edges = sorted({(min(d, t), max(d, t)) for d, t in enumerate(self.theta)})
        edge_of = [0] * self.dart_count
        for e, (d, t) in enumerate(edges):
            edge_of[d] = edge_of[t] = e
        object.__setattr__(self, "_edges", tuple(edges))
        object.__setattr__(self, "_edge_of", tuple(edge_of))

    def face_of(self, dart: int) -> int:
        return self._face_of[dart]

    def next_dart(self, dart: int) -> int:
        """Dart following ``dart`` anticlockwise in its face."""
        face = self.faces[self._face_of[dart]]
        return face[(self._index[dart] + 1) % len(face)]

    def prev_dart(self, dart: int) -> int:
        face = self.faces[self._face_of[dart]]
        return face[(self._index[dart] - 1) % len(face)]

    def position(self, dart: int) -> int:
        """Index of the dart (and of the corner after it) within its face."""
        return self._index[dart]

    def rho(self, corner: int) -> int:
        """
        Rotate a corner to its neighbour at the same vertex.

        The corner after dart d sits between d and next(d); its neighbour is the
        corner following theta(next(d)).

        Args:
            corner: Corner id (the dart before it)

        Returns:
            The next corner in the cyclic order around the vertex
        """
        return self.theta[self.next_dart(corner)]

    @property
    def corner_count(self) -> int:
        return self.dart_count

    def vertices(self) -> List[Tuple[int, ...]]:
        """Corner orbits of rho, each in its cyclic order, scanned from the smallest corner."""
        return list(self._vertices)

    def vertex_of(self, corner: int) -> int:
        return self._vertex_of[corner]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (smaller dart, larger dart), ordered by their smaller dart."""
        return list(self._edges)

    def edge_of(self, dart: int) -> int:
        return self._edge_of[dart]

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        """V - E + F."""
        return self.vertex_count - self.edge_count + self.face_count

    def components(self) -> int:
        """Number of connected components, joining faces across edges."""
        parent = list(range(self.face_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d, t in self._edges:
            parent[find(self._face_of[d])] = find(self._face_of[t])
        return len({find(f) for f in range(self.face_count)})

    def is_sphere(self) -> bool:
        return self.components() == 1 and self.euler_characteristic() == 2

    def to_dict(self) -> dict:
        """
        Convert the map to its JSON file representation.

        Returns:
            Dictionary with darts, theta and faces
        """
        return {
            "darts": self.dart_count,
            "theta": list(self.theta),
            "faces": [list(face) for face in self.faces],
        }

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return (f"<SurfaceMap(V={self.vertex_count}, E={self.edge_count}, "
                f"F={self.face_count}, chi={self.euler_characteristic()})>")

    def __str__(self) -> str:
        """User-friendly representation."""
        return f"map with {self.face_count} faces on a surface of Euler characteristic {self.euler_characteristic()}"


def _check_theta(dart_count: int, theta: Sequence[int]) -> None:
    if len(theta) != dart_count:
        raise ThetaNotInvolution(f"theta has {len(theta)} entries for {dart_count} darts")
    for d, t in enumerate(theta):
        if not 0 <= t < dart_count:
            raise ThetaNotInvolution(f"theta({d}) = {t} is not a dart")
    for d, t in enumerate(theta):
        if t == d:
            raise ThetaHasFixedPoint(f"theta fixes dart {d}")
    for d, t in enumerate(theta):
        if theta[t] != d:
            raise ThetaNotInvolution(f"theta(theta({d})) = {theta[t]}")


def _check_faces(dart_count: int, faces: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    face_of = [-1] * dart_count
    index = [-1] * dart_count
    for f, face in enumerate(faces):
        if not face:
            raise FacesNotPartition(f"face {f} is empty")
        for i, d in enumerate(face):
            if not 0 <= d < dart_count:
                raise FacesNotPartition(f"face {f} lists unknown dart {d}")
            if face_of[d] >= 0:
                raise FacesNotPartition(f"dart {d} appears twice")
            face_of[d], index[d] = f, i
    missing = [d for d in range(dart_count) if face_of[d] < 0]
    if missing:
        raise FacesNotPartition(f"darts {missing} belong to no face")
    return tuple(face_of), tuple(index)


def build_map(dart_count: int, theta: Sequence[int], faces: Sequence[Sequence[int]]) -> SurfaceMap:
    """
    Validate raw map data and build a SurfaceMap.

    Args:
        dart_count: Number of darts
        theta: Opposite dart per dart
        faces: Dart cycles, anticlockwise

    Returns:
        The validated map

    Raises:
        ThetaNotInvolution: If theta is not an involution on the darts
        ThetaHasFixedPoint: If theta fixes a dart
        FacesNotPartition: If the faces do not partition the darts
    """
    return SurfaceMap(
        dart_count=dart_count,
        theta=tuple(theta),
        faces=tuple(tuple(face) for face in faces),
    )


def euler_characteristic(surface: SurfaceMap) -> int:
    return surface.euler_characteristic()


def vertices(surface: SurfaceMap) -> List[Tuple[int, ...]]:
    return surface.vertices()


def map_from_polygons(polygons: Sequence[Sequence[int]]) -> SurfaceMap:
    """
    Glue polygons given by their vertex cycles.

    Dart ``i`` of a polygon runs from its ``i``-th vertex to the next one; darts
    are numbered consecutively polygon by polygon, and every directed side u -> v
    is glued to an unused side v -> u (first match wins).

    Args:
        polygons: Vertex-name cycles, anticlockwise

    Returns:
        The glued map

    Raises:
        MapError: If some side has no reversed partner
    """
    sides: List[Tuple[int, int]] = []
    faces: List[Tuple[int, ...]] = []
    for polygon in polygons:
        start = len(sides)
        n = len(polygon)
        sides.extend((polygon[i], polygon[(i + 1) % n]) for i in range(n))
        faces.append(tuple(range(start, start + n)))

    by_side: Dict[Tuple[int, int], List[int]] = {}
    for d, side in enumerate(sides):
        by_side.setdefault(side, []).append(d)
    theta = [-1] * len(sides)
    for d, (u, v) in enumerate(sides):
        if theta[d] >= 0:
            continue
        partners = [x for x in by_side.get((v, u), []) if theta[x] < 0 and x != d]
        if not partners:
            raise MapError(f"side {u}->{v} has no reversed partner")
        theta[d], theta[partners[0]] = partners[0], d
    return build_map(len(sides), theta, faces)


def random_map(face_degrees: Sequence[int], seed: int) -> SurfaceMap:
    """
    Build a map with the given face degrees and a random edge pairing.

    Args:
        face_degrees: Degree of every face, in dart order
        seed: Seed for the pairing

    Returns:
        A valid map of any genus, possibly disconnected

    Raises:
        OddDartTotal: If the degrees sum to an odd number
    """
    total = sum(face_degrees)
    if total % 2:
        raise OddDartTotal(f"face degrees sum to {total}")
    faces, start = [], 0
    for degree in face_degrees:
        faces.append(tuple(range(start, start + degree)))
        start += degree
    darts = list(range(total))
    random.Random(seed).shuffle(darts)
    theta = [0] * total
    for x, y in zip(darts[::2], darts[1::2]):
        theta[x], theta[y] = y, x
    return build_map(total, theta, faces)
