"""
Finite group model for the relpres toolkit.

This module contains the Group model: a finite coefficient group given by an
explicit multiplication table with the identity fixed at index 0.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import NoIdentityAtZero, NoInverse, NonAssociative, ParseError


@dataclass(frozen=True)
class Group:
    """
    Finite group given by its Cayley table.

    Elements are the integers ``0 .. order - 1`` and ``table[a][b]`` is the index
    of the product ``a * b``. Instances are validated on construction and are
    immutable afterwards.

    Attributes:
        order: Number of elements
        table: Multiplication table as a tuple of rows
    """
    order: int
    table: Tuple[Tuple[int, ...], ...]
    _inverses: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _orders: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_table(self.order, self.table)
        inverses = []
        for a in range(self.order):
            inverses.append(self.table[a].index(0))
        object.__setattr__(self, "_inverses", tuple(inverses))
        object.__setattr__(self, "_orders", tuple(self._compute_order(a) for a in range(self.order)))

    @classmethod
    def from_table(cls, raw_table: Sequence[Sequence[int]]) -> "Group":
        """
        Validate a raw square table and build a Group from it.

        Args:
            raw_table: Square table of element indices

        Returns:
            The validated Group

        Raises:
            ParseError: If the table is not square or has out-of-range entries
            NoIdentityAtZero: If element 0 is not a two-sided identity
            NoInverse: If some element has no two-sided inverse
            NonAssociative: If associativity fails on some triple
        """
        order = len(raw_table)
        if order == 0:
            raise ParseError("group table is empty")
        rows = []
        for row in raw_table:
            if len(row) != order:
                raise ParseError("group table is not square")
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < order:
                    raise ParseError(f"group table entry {entry!r} out of range")
            rows.append(tuple(row))
        return cls(order=order, table=tuple(rows))

    @classmethod
    def cyclic(cls, n: int) -> "Group":
        """Cyclic group of order n with generator 1."""
        return cls.from_table([[(a + b) % n for b in range(n)] for a in range(n)])

    @classmethod
    def symmetric3(cls) -> "Group":
        """Symmetric group on three points; permutations in lexicographic order."""
        perms = list(itertools.permutations(range(3)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
        return cls.from_table(table)

    def mul(self, a: int, b: int) -> int:
        """Product a * b."""
        return self.table[a][b]

    def inv(self, a: int) -> int:
        """Inverse of a."""
        return self._inverses[a]

    def power(self, a: int, n: int) -> int:
        """
        Raise an element to an integer power.

        Args:
            a: Element index
            n: Any integer exponent

        Returns:
            The element a**n
        """
        base = a if n >= 0 else self.inv(a)
        result = 0
        for _ in range(abs(n) % self._orders[a]):
            result = self.mul(result, base)
        return result

    def element_order(self, a: int) -> int:
        """Order of the element a."""
        return self._orders[a]

    def orders(self) -> Dict[int, int]:
        """Order of every element, keyed by element index."""
        return dict(enumerate(self._orders))

    def involutions(self) -> List[int]:
        """Elements of order exactly two."""
        return [a for a, n in enumerate(self._orders) if n == 2]

    def has_involution(self) -> bool:
        """Check whether the group has an element of order two."""
        return bool(self.involutions())

    def is_involution_free(self) -> bool:
        return not self.has_involution()

    def min_nontrivial_order(self) -> Optional[int]:
        """
        Smallest order of a nonidentity element.

        Returns:
            The minimal order, or None for the trivial group
        """
        nontrivial = [n for a, n in enumerate(self._orders) if a != 0]
        return min(nontrivial) if nontrivial else None

    def is_conjugate(self, a: int, b: int) -> bool:
        """Check whether a and b are conjugate in the group."""
        return any(self.mul(self.mul(x, a), self.inv(x)) == b for x in range(self.order))

    def _compute_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def to_dict(self) -> dict:
        """
        Convert the group to its JSON file representation.

        Returns:
            Dictionary with order and table
        """
        return {"order": self.order, "table": [list(row) for row in self.table]}

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<Group(order={self.order}, involution_free={self.is_involution_free()})>"

    def __str__(self) -> str:
        """User-friendly representation."""
        return f"group of order {self.order}"


def _check_table(order: int, table: Tuple[Tuple[int, ...], ...]) -> None:
    """Exhaustively check the group axioms on a square table."""
    if len(table) != order or any(len(row) != order for row in table):
        raise ParseError("group table does not match its declared order")
    for a in range(order):
        if table[0][a] != a or table[a][0] != a:
            raise NoIdentityAtZero(f"element 0 is not an identity (fails at {a})")
    for a in range(order):
        if 0 not in table[a]:
            raise NoInverse(f"element {a} has no right inverse")
        b = table[a].index(0)
        if table[b][a] != 0:
            raise NoInverse(f"element {a} has no two-sided inverse")
    for a, b, c in itertools.product(range(order), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NonAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")
