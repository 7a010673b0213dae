"""
Motion models for the relpres toolkit.

Cars run along face boundaries of a diagram. A position on a face of degree n
is a rational in [0, n): the corner after the face's i-th dart sits at i + 1
(mod n), and the i-th dart covers [i, i + 1]. Schedules store unwrapped
positions so velocities stay nonnegative across the wrap.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ...utils import format_rational


@dataclass(frozen=True)
class Piece:
    """Linear piece of a car schedule on the time interval [t0, t1]."""
    t0: Fraction
    t1: Fraction
    pos0: Fraction
    vel: Fraction

    @property
    def pos1(self) -> Fraction:
        return self.pos0 + self.vel * (self.t1 - self.t0)

    def position(self, t: Fraction) -> Fraction:
        return self.pos0 + self.vel * (t - self.t0)

    def shifted(self, dt: Fraction, dpos: Fraction) -> "Piece":
        return Piece(self.t0 + dt, self.t1 + dt, self.pos0 + dpos, self.vel)

    def to_dict(self) -> dict:
        return {
            "t0": format_rational(self.t0),
            "t1": format_rational(self.t1),
            "pos0": format_rational(self.pos0),
            "vel": format_rational(self.vel),
        }


@dataclass(frozen=True)
class CarSchedule:
    """
    Piecewise linear schedule of one car over one time circle.

    Attributes:
        pieces: Consecutive linear pieces covering [0, L]
    """
    pieces: Tuple[Piece, ...]

    def piece_at(self, t: Fraction) -> Piece:
        """The first piece whose closed interval contains t."""
        for piece in self.pieces:
            if piece.t0 <= t <= piece.t1:
                return piece
        raise ValueError(f"time {t} outside the schedule")

    def position(self, t: Fraction) -> Fraction:
        """Unwrapped position at time t in [0, L]."""
        return self.piece_at(t).position(t)

    @property
    def start(self) -> Fraction:
        return self.pieces[0].t0

    @property
    def end(self) -> Fraction:
        return self.pieces[-1].t1

    def advance(self) -> Fraction:
        """Total distance travelled over the schedule."""
        return self.pieces[-1].pos1 - self.pieces[0].pos0

    def breakpoints(self) -> List[Fraction]:
        return sorted({p.t0 for p in self.pieces} | {p.t1 for p in self.pieces})

    def to_dict(self) -> list:
        return [piece.to_dict() for piece in self.pieces]


@dataclass(frozen=True)
class MultipleMotion:
    """
    Cars on every face of a diagram.

    Attributes:
        period: Shift period T
        circle_length: Length L of the time circle
        cars: Per face, its cars in shift order
    """
    period: Fraction
    circle_length: Fraction
    cars: Tuple[Tuple[CarSchedule, ...], ...]

    def car_count(self, face: int) -> int:
        return len(self.cars[face])

    def to_dict(self) -> dict:
        return {
            "period": format_rational(self.period),
            "circleLength": format_rational(self.circle_length),
            "faces": [[car.to_dict() for car in face] for face in self.cars],
        }

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<MultipleMotion(T={self.period}, L={self.circle_length}, faces={len(self.cars)})>"


@dataclass
class CollisionReport:
    """
    Exact collisions of a multiple motion over one time circle.

    Attributes:
        cc_vertices: Vertex -> complete collision time intervals (t0 == t1 for instants)
        edge_points: Edge -> distinct collision positions on the forward dart
        edge_events: Edge -> (time, position) pairs
        kprime_faces: Face -> 1 - d_D
        constant: The boundary bound k(2m + 1)
    """
    cc_vertices: Dict[int, List[Tuple[Fraction, Fraction]]] = field(default_factory=dict)
    edge_points: Dict[int, List[Fraction]] = field(default_factory=dict)
    edge_events: Dict[int, List[Tuple[Fraction, Fraction]]] = field(default_factory=dict)
    kprime_faces: Dict[int, int] = field(default_factory=dict)
    constant: Optional[int] = None

    def kprime_edge(self, edge: int) -> int:
        """Number of distinct complete collision points on an edge."""
        return len(self.edge_points.get(edge, []))

    @property
    def kprime_edge_total(self) -> int:
        return sum(len(points) for points in self.edge_points.values())

    @property
    def kprime_face_total(self) -> int:
        return sum(self.kprime_faces.values())

    def to_dict(self) -> dict:
        return {
            "ccVertices": {
                str(v): [[format_rational(a), format_rational(b)] for a, b in spans]
                for v, spans in sorted(self.cc_vertices.items())
            },
            "edgePoints": {
                str(e): [format_rational(x) for x in points]
                for e, points in sorted(self.edge_points.items())
            },
            "kprimeFaces": {str(f): value for f, value in sorted(self.kprime_faces.items())},
            "kprimeEdgeTotal": self.kprime_edge_total,
            "D": self.constant,
        }
