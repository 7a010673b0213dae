"""
Presentation models for the relpres toolkit.

This module contains the canonical phi-presentation of a one-relator relative
presentation together with the records produced while computing and checking it.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..exceptions import PreconditionViolated
from .enums import MoveKind
from .group import Group
from .words import FPWord, Stable, Syllable, TWord, fp_reduce, sub_membership

# A relator period as a cyclic list of (stable letter sign, H-element after it).
Pairs = List[Tuple[int, FPWord]]


@dataclass(frozen=True)
class RewriteMove:
    """One move applied while rewriting, with snapshots of the relator."""
    kind: MoveKind
    before: str
    after: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "before": self.before, "after": self.after}


@dataclass
class RewriteTrace:
    """Audit trail of the rewriting procedure."""
    moves: List[RewriteMove] = field(default_factory=list)

    def record(self, kind: MoveKind, before: str, after: str) -> None:
        self.moves.append(RewriteMove(kind, before, after))

    def count(self, kind: MoveKind) -> int:
        return sum(1 for move in self.moves if move.kind == kind)

    def to_dict(self) -> list:
        return [move.to_dict() for move in self.moves]


@dataclass(frozen=True)
class PhiPresentation:
    """
    Canonical relative presentation <H, t | p^t = p^phi (p in P), R^k>.

    H is the free product of s + 1 copies of the base group, P spans copies
    0 .. s-1, P^phi spans copies 1 .. s, and phi shifts copy indices up by one.
    The relator period is R = c t b_0 t^-1 a_0 t ... b_m t^-1 a_m t.

    Attributes:
        base: Coefficient group G
        s: Highest copy index of H
        m: Number of (b_i, a_i) blocks minus one
        k: Relator power
        c: Element of H between the two consecutive t letters
        a: Elements a_0 .. a_m
        b: Elements b_0 .. b_m
        source: Cyclically reduced source word, when known
    """
    base: Group
    s: int
    m: int
    k: int
    c: FPWord
    a: Tuple[FPWord, ...]
    b: Tuple[FPWord, ...]
    source: Optional[TWord] = None

    def __post_init__(self):
        if self.k < 2:
            raise PreconditionViolated("k ≥ 2 required")
        if self.s < 0 or self.m < -1:
            raise PreconditionViolated(f"invalid shape s={self.s}, m={self.m}")
        if len(self.a) != self.m + 1 or len(self.b) != self.m + 1:
            raise PreconditionViolated("a and b must each hold m + 1 elements")
        for word in (self.c, *self.a, *self.b):
            fp_reduce(word, self.base, copies=self.s + 1)

    @property
    def copies(self) -> int:
        """Number of factor copies in H."""
        return self.s + 1

    @property
    def p_range(self) -> range:
        return range(0, self.s)

    @property
    def p_phi_range(self) -> range:
        return range(1, self.s + 1)

    def in_p(self, word: FPWord) -> bool:
        """Membership in P = G^(0) * ... * G^(s-1)."""
        return sub_membership(word, self.base, self.p_range)

    def in_p_phi(self, word: FPWord) -> bool:
        """Membership in P^phi = G^(1) * ... * G^(s)."""
        return sub_membership(word, self.base, self.p_phi_range)

    def phi(self, word: FPWord) -> FPWord:
        return fp_reduce(word, self.base).shifted(1)

    def phi_inverse(self, word: FPWord) -> FPWord:
        return fp_reduce(word, self.base).shifted(-1)

    def period_pairs(self) -> Pairs:
        """
        The relator period as (sign, element) pairs starting at the first t.

        Returns:
            [(+1, b_0), (-1, a_0), ..., (+1, b_m), (-1, a_m), (+1, c)]
        """
        pairs: Pairs = []
        for a_i, b_i in zip(self.a, self.b):
            pairs.append((1, b_i))
            pairs.append((-1, a_i))
        pairs.append((1, self.c))
        return pairs

    def relator_pairs(self, sign: int = 1) -> Pairs:
        """
        The k-th power of the period (sign +1) or its inverse (sign -1) as pairs.

        Args:
            sign: +1 for R^k, -1 for R^-k

        Returns:
            Cyclic list of (sign, element) pairs of length k(2m + 3)
        """
        period = self.period_pairs()
        if sign < 0:
            n = len(period)
            period = [(-period[(n - 1 - j) % n][0], period[(n - 2 - j) % n][1].inverse(self.base))
                      for j in range(n)]
        return period * self.k

    def relator_period(self) -> TWord:
        """The period c t b_0 t^-1 a_0 t ... b_m t^-1 a_m t as a word."""
        letters: list = list(self.c.syllables)
        for sign, element in self.period_pairs()[:-1]:
            letters.append(Stable(sign))
            letters.extend(element.syllables)
        letters.append(Stable(1))
        return TWord(tuple(letters))

    def digon_pairs(self, p: FPWord) -> Pairs:
        """The digon label p^-phi t^-1 p t as pairs [(-1, p), (+1, p^-phi)]."""
        p = fp_reduce(p, self.base)
        return [(-1, p), (1, self.phi(p).inverse(self.base))]

    def to_dict(self) -> dict:
        """
        Convert the presentation to its JSON file representation.

        Returns:
            Dictionary with s, m, k, c, a, b and the inline group
        """
        data = {
            "s": self.s,
            "m": self.m,
            "k": self.k,
            "c": self.c.to_dict(),
            "a": [w.to_dict() for w in self.a],
            "b": [w.to_dict() for w in self.b],
            "group": self.base.to_dict(),
        }
        if self.source is not None:
            data["source"] = self.source.to_dict()
        return data

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<PhiPresentation(s={self.s}, m={self.m}, k={self.k})>"

    def __str__(self) -> str:
        """User-friendly representation."""
        blocks = " ".join(f"[{b}] t^-1 [{a}] t" for a, b in zip(self.a, self.b))
        return f"([{self.c}] t {blocks})^{self.k}".replace("  ", " ")


@dataclass(frozen=True)
class FreeProductCase:
    """
    The relator is conjugate to g t: the group is G * Z_k.

    Attributes:
        base: Coefficient group G
        g: The coefficient element
        k: Relator power
    """
    base: Group
    g: int
    k: int

    @property
    def message(self) -> str:
        return f"free product case: G ∗ ℤk with k = {self.k}"

    @property
    def infinite_dihedral(self) -> bool:
        """G of order two and k = 2 give the infinite dihedral group."""
        return self.base.order == 2 and self.k == 2

    def to_dict(self) -> dict:
        return {
            "case": "free_product",
            "g": self.g,
            "k": self.k,
            "message": self.message,
            "infinite_dihedral": self.infinite_dihedral,
        }

    def __str__(self) -> str:
        return self.message


@dataclass
class ConditionReport:
    """Per-condition verdicts of the canonical form check."""
    condition1: bool = True
    condition2: bool = True
    condition3: bool = True
    condition4: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3 and self.condition4

    def fail(self, condition: int, message: str) -> None:
        setattr(self, f"condition{condition}", False)
        self.failures.append(f"condition {condition}: {message}")

    def to_dict(self) -> dict:
        return {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "condition4": self.condition4,
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class FactorTag:
    """
    Tag of one factor of a relator-conjugate factorization.

    Attributes:
        kind: "digon", "large_pos" or "large_neg"
        p: Element of P for digon factors
    """
    kind: str
    p: Optional[FPWord] = None

    @classmethod
    def digon(cls, p: FPWord) -> "FactorTag":
        return cls("digon", p)

    @classmethod
    def large_pos(cls) -> "FactorTag":
        return cls("large_pos")

    @classmethod
    def large_neg(cls) -> "FactorTag":
        return cls("large_neg")


@dataclass(frozen=True)
class RelatorFactor:
    """A factor x * relator * x^-1 of a factorization."""
    conjugator: TWord
    tag: FactorTag


@dataclass(frozen=True)
class OrderBoundReport:
    """Outcome of evaluating an alternating product of a_i (or b_i) powers."""
    is_trivial: bool
    bound: int
    min_order: Optional[int]

    @property
    def holds(self) -> bool:
        """Trivial products force the minimal nonidentity order under the bound."""
        if not self.is_trivial:
            return True
        return self.min_order is not None and self.min_order <= self.bound

    def to_dict(self) -> dict:
        return {
            "is_trivial": self.is_trivial,
            "bound": self.bound,
            "min_order": self.min_order,
            "holds": self.holds,
        }
