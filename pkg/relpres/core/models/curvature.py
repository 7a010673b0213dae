"""
Curvature models for the relpres toolkit.

Curvature values are exact rationals. Vertex curvature is 2 minus the sum of
its corner weights; face curvature is 2 minus the sum of (1 - weight) over
its corners.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from ...utils import format_rational
from .enums import VertexCase


@dataclass
class CurvatureReport:
    """
    Gauss-Bonnet bookkeeping of a weighted map.

    Attributes:
        vertex_curvature: Vertex index -> K(v)
        face_curvature: Face index -> K(D)
        euler: Euler characteristic of the map
    """
    vertex_curvature: Dict[int, Fraction] = field(default_factory=dict)
    face_curvature: Dict[int, Fraction] = field(default_factory=dict)
    euler: int = 0

    @property
    def total(self) -> Fraction:
        return sum(self.vertex_curvature.values(), Fraction(0)) + sum(self.face_curvature.values(), Fraction(0))

    @property
    def holds(self) -> bool:
        """True when the total curvature equals twice the Euler characteristic."""
        return self.total == 2 * self.euler

    def to_dict(self) -> dict:
        return {
            "vertexCurvature": {str(v): format_rational(k) for v, k in sorted(self.vertex_curvature.items())},
            "faceCurvature": {str(f): format_rational(k) for f, k in sorted(self.face_curvature.items())},
            "total": format_rational(self.total),
            "euler": self.euler,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class VertexCensus:
    """
    Corner census of one vertex under the standard weights.

    Attributes:
        n: Negative special-digon corners (weight -1)
        l: (+-) and (-+) corners of large faces
        p: Positive special-digon corners
        x: Exterior corners
        source_or_sink: True when every corner has the same mixed type
    """
    n: int
    l: int
    p: int
    x: int
    source_or_sink: bool = False

    @property
    def curvature(self) -> int:
        return 2 + self.n - self.l - self.p - self.x

    def zero_case(self) -> Optional[VertexCase]:
        """The zero-curvature case this census falls into, if any."""
        if self.curvature != 0 or self.x:
            return None
        if self.p > 0:
            return VertexCase.A
        return {(0, 2): VertexCase.B, (1, 3): VertexCase.C, (2, 4): VertexCase.D}.get((self.n, self.l))

    def to_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "p": self.p, "x": self.x, "K": self.curvature}

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<VertexCensus(n={self.n}, l={self.l}, p={self.p}, x={self.x})>"
