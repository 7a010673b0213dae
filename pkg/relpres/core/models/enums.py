"""
Enums for the relpres toolkit.

This module contains all enumeration types used across the toolkit.
"""

from enum import Enum as PyEnum


class CornerType(PyEnum):
    """
    Enum for corner types of a map with oriented edges.

    The first sign is '+' iff the incoming dart runs along its edge orientation,
    the second sign is '+' iff the outgoing dart does.
    """
    PLUS_PLUS = "++"
    MINUS_MINUS = "--"
    PLUS_MINUS = "+-"
    MINUS_PLUS = "-+"

    @classmethod
    def from_signs(cls, incoming_forward: bool, outgoing_forward: bool) -> "CornerType":
        """Build the corner type from the two traversal directions."""
        key = ("+" if incoming_forward else "-") + ("+" if outgoing_forward else "-")
        return cls(key)

    @property
    def is_stop(self) -> bool:
        """Corners of types (++) and (--) are where standard cars may stop."""
        return self in (CornerType.PLUS_PLUS, CornerType.MINUS_MINUS)


class FaceKind(PyEnum):
    """
    Enum for face classes of a Howie diagram.
    """
    DIGON = "digon"
    LARGE_POS = "large_pos"
    LARGE_NEG = "large_neg"
    EXTERIOR = "exterior"
    ILLEGAL = "illegal"

    @property
    def is_large(self) -> bool:
        return self in (FaceKind.LARGE_POS, FaceKind.LARGE_NEG)


class MoveKind(PyEnum):
    """Moves recorded while rewriting a relator into canonical form."""
    REDUCE_M = "reduce_m"
    REDUCE_S = "reduce_s"
    CONJUGATE = "conjugate"


class Severity(PyEnum):
    """Severity of an audit finding."""
    ERROR = "error"
    WARNING = "warning"


class VertexCase(PyEnum):
    """
    Zero-curvature interior vertex cases of the combined audit.

    a) a positive special-digon corner is present; b) to d) are sources or sinks
    with no positive corner and (n, l) equal to (0, 2), (1, 3) or (2, 4).
    """
    A = "a"
    B = "b"
    C = "c"
    D = "d"
