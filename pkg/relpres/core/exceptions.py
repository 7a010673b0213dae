"""Custom exceptions for the relpres toolkit."""


class RelPresError(Exception):
    """Base exception for all relpres errors."""
    pass


class ParseError(RelPresError):
    """Raised when an input file is malformed or misses a required field."""
    pass


class GroupTableError(RelPresError):
    """Raised when a multiplication table does not define a group."""
    pass


class NonAssociative(GroupTableError):
    """Raised when the table fails associativity on some triple."""
    pass


class NoIdentityAtZero(GroupTableError):
    """Raised when element 0 is not a two-sided identity."""
    pass


class NoInverse(GroupTableError):
    """Raised when some element has no two-sided inverse."""
    pass


class CopyIndexOutOfRange(RelPresError):
    """Raised when a syllable names a factor copy outside the declared range."""
    pass


class NotUnimodular(RelPresError):
    """Raised when the stable letter exponent sum of a relator is not one."""
    pass


class NonMinimal(RelPresError):
    """Raised when the rewriting fixpoint violates the canonical form conditions."""
    pass


class ConjugacyMismatch(RelPresError):
    """Raised when an embedded relator is not conjugate to the source word."""
    pass


class PreconditionViolated(RelPresError):
    """Raised when an operation is called outside its documented domain."""
    pass


class FactorizationInvalid(RelPresError):
    """Raised when a product of relator conjugates does not equal the given word."""
    pass


class TransportMismatch(RelPresError):
    """Raised when the transported product does not reduce to the image of the word."""
    pass


class MapError(RelPresError):
    """Raised when a combinatorial map is malformed."""
    pass


class ThetaNotInvolution(MapError):
    """Raised when the edge pairing is not an involution on the darts."""
    pass


class ThetaHasFixedPoint(MapError):
    """Raised when the edge pairing fixes a dart."""
    pass


class FacesNotPartition(MapError):
    """Raised when the face cycles do not partition the darts."""
    pass


class OddDartTotal(MapError):
    """Raised when face degrees sum to an odd number of darts."""
    pass


class MissingWeight(RelPresError):
    """Raised when a corner has no weight assigned."""
    pass


class UnclassifiedFace(RelPresError):
    """Raised when weights are requested for a diagram with an illegal interior face."""
    pass


class CensusMismatch(RelPresError):
    """Raised when a vertex curvature disagrees with its corner census."""
    pass


class WrongShape(RelPresError):
    """Raised when a diagram has the wrong exterior markings or power for an inequality."""
    pass


class IllegalDiagram(RelPresError):
    """Raised when a motion is requested on a diagram that failed validation."""
    pass
