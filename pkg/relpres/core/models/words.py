"""
Word models for the relpres toolkit.

Words in free products of indexed copies of a finite group G, and words in
H * <t> where H = G^(0) * ... * G^(s). A syllable ``(copy, element)`` stands for
the element of the copy G^(copy); a stable letter stands for t or t^-1. Words in
G * <t> are the special case where every syllable lives in copy 0.
"""

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..exceptions import CopyIndexOutOfRange
from .group import Group


class Syllable(NamedTuple):
    """A nonidentity element of the copy G^(copy)."""
    copy: int
    element: int

    def __str__(self) -> str:
        return f"g{self.element}^({self.copy})"


class Stable(NamedTuple):
    """The stable letter t raised to +1 or -1."""
    exponent: int

    def __str__(self) -> str:
        return "t" if self.exponent == 1 else "t^-1"


Letter = Union[Syllable, Stable]


def letter_key(letter: Letter) -> Tuple[int, int, int, int]:
    """Fixed letter order: syllables by (copy, element) first, then stable letters."""
    if isinstance(letter, Syllable):
        return (0, letter.copy, letter.element, 0)
    return (1, 0, 0, letter.exponent)


@dataclass(frozen=True)
class FPWord:
    """
    Word in a free product of copies of G.

    Attributes:
        syllables: Sequence of (copy, element) pairs
    """
    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "FPWord":
        """Build a word from (copy, element) pairs."""
        return cls(tuple(Syllable(c, e) for c, e in pairs))

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __add__(self, other: "FPWord") -> "FPWord":
        """Concatenation without reduction."""
        return FPWord(self.syllables + other.syllables)

    def is_empty(self) -> bool:
        return not self.syllables

    def copies(self) -> List[int]:
        """Copy indices used by the word, in order of appearance."""
        return [syl.copy for syl in self.syllables]

    def shifted(self, delta: int) -> "FPWord":
        """Apply the shift G^(i) -> G^(i + delta) to every syllable."""
        return FPWord(tuple(Syllable(syl.copy + delta, syl.element) for syl in self.syllables))

    def inverse(self, group: Group) -> "FPWord":
        """Formal inverse (reversed order, inverted syllables)."""
        return FPWord(tuple(Syllable(syl.copy, group.inv(syl.element)) for syl in reversed(self.syllables)))

    def to_dict(self) -> list:
        """
        Convert the word to its JSON representation.

        Returns:
            List of {"copy": i, "g": idx} objects
        """
        return [{"copy": syl.copy, "g": syl.element} for syl in self.syllables]

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<FPWord({list(map(tuple, self.syllables))})>"

    def __str__(self) -> str:
        """User-friendly representation."""
        return " ".join(map(str, self.syllables)) or "1"


@dataclass(frozen=True)
class TWord:
    """
    Word in H * <t>, a sequence of syllables and stable letters.

    Attributes:
        letters: Sequence of Syllable and Stable letters
    """
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def from_fp(cls, word: FPWord) -> "TWord":
        return cls(tuple(word.syllables))

    @classmethod
    def parse(cls, items: Iterable[Union[str, Tuple[int, int]]]) -> "TWord":
        """
        Build a word from a compact list.

        Args:
            items: Items "t", "T" (for t^-1), or (copy, element) pairs

        Returns:
            The TWord
        """
        letters: List[Letter] = []
        for item in items:
            if item == "t":
                letters.append(Stable(1))
            elif item == "T":
                letters.append(Stable(-1))
            else:
                letters.append(Syllable(*item))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "TWord") -> "TWord":
        """Concatenation without reduction."""
        return TWord(self.letters + other.letters)

    def is_empty(self) -> bool:
        return not self.letters

    @property
    def t_count(self) -> int:
        """Number of stable letters t^(+-1)."""
        return sum(1 for x in self.letters if isinstance(x, Stable))

    @property
    def exponent_sum(self) -> int:
        """Sum of the stable letter exponents."""
        return sum(x.exponent for x in self.letters if isinstance(x, Stable))

    def syllables(self) -> List[Syllable]:
        return [x for x in self.letters if isinstance(x, Syllable)]

    def inverse(self, group: Group) -> "TWord":
        """Formal inverse of the word."""
        return TWord(tuple(_invert_letter(x, group) for x in reversed(self.letters)))

    def to_dict(self) -> dict:
        """
        Convert the word to its JSON representation.

        Syllables outside copy 0 keep their copy index so words over H survive a
        round trip; plain words in G * <t> only carry {"g": idx}.

        Returns:
            Dictionary with the letters list
        """
        out = []
        for x in self.letters:
            if isinstance(x, Stable):
                out.append({"t": x.exponent})
            elif x.copy == 0:
                out.append({"g": x.element})
            else:
                out.append({"copy": x.copy, "g": x.element})
        return {"letters": out}

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"<TWord({self})>"

    def __str__(self) -> str:
        """User-friendly representation."""
        return " ".join(map(str, self.letters)) or "1"


class CyclicForm(NamedTuple):
    """Result of cyclic reduction of a TWord."""
    word: TWord
    canonical: TWord
    exponent_sum: int


def _invert_letter(letter: Letter, group: Group) -> Letter:
    if isinstance(letter, Stable):
        return Stable(-letter.exponent)
    return Syllable(letter.copy, group.inv(letter.element))


def _push(stack: List[Letter], letter: Letter, group: Group) -> None:
    """Append a letter to a reduced stack, merging or cancelling with the top."""
    if isinstance(letter, Syllable):
        if letter.element == 0:
            return
        if stack and isinstance(stack[-1], Syllable) and stack[-1].copy == letter.copy:
            top = stack.pop()
            product = group.mul(top.element, letter.element)
            if product != 0:
                stack.append(Syllable(letter.copy, product))
            return
    elif stack and isinstance(stack[-1], Stable) and stack[-1].exponent == -letter.exponent:
        stack.pop()
        return
    stack.append(letter)


def fp_reduce(word: FPWord, group: Group, copies: Optional[int] = None) -> FPWord:
    """
    Compute the normal form of a word in G^(0) * ... * G^(copies - 1).

    Args:
        word: The word to reduce
        group: Coefficient group G
        copies: Number of declared copies; None skips the range check

    Returns:
        Normal form without identity syllables or adjacent equal copies

    Raises:
        CopyIndexOutOfRange: If a syllable names an undeclared copy
    """
    stack: List[Letter] = []
    for syl in word.syllables:
        if syl.copy < 0 or (copies is not None and syl.copy >= copies):
            raise CopyIndexOutOfRange(f"copy index {syl.copy} outside 0..{copies}")
        _push(stack, Syllable(syl.copy, syl.element), group)
    return FPWord(tuple(stack))


def fp_multiply(group: Group, *words: FPWord) -> FPWord:
    """Reduced product of several FPWords."""
    syllables: Tuple[Syllable, ...] = ()
    for w in words:
        syllables += w.syllables
    return fp_reduce(FPWord(syllables), group)


def sub_membership(word: FPWord, group: Group, copy_range: Sequence[int]) -> bool:
    """
    Decide membership in the free factor spanned by a range of copies.

    Args:
        word: Any word in the free product
        group: Coefficient group G
        copy_range: Allowed copy indices, e.g. range(0, s)

    Returns:
        True iff the normal form only uses copies in the range
    """
    allowed = set(copy_range)
    return all(syl.copy in allowed for syl in fp_reduce(word, group).syllables)


def fp_cyclic_reduce(word: FPWord, group: Group) -> FPWord:
    """Freely and cyclically reduced representative of a free product word."""
    syllables = list(fp_reduce(word, group).syllables)
    while len(syllables) >= 2 and syllables[0].copy == syllables[-1].copy:
        first, last = syllables[0], syllables[-1]
        product = group.mul(last.element, first.element)
        syllables = syllables[1:-1] + ([Syllable(first.copy, product)] if product else [])
    return FPWord(tuple(syllables))


def _rotations(seq: Sequence) -> List[tuple]:
    return [tuple(seq[i:]) + tuple(seq[:i]) for i in range(len(seq))] or [()]


def fp_conjugacy(u: FPWord, v: FPWord, group: Group) -> bool:
    """
    Decide conjugacy of two words in a free product of copies of G.

    Args:
        u: First word
        v: Second word
        group: Coefficient group G

    Returns:
        True iff the cyclically reduced forms agree up to rotation (or, for
        single syllables in the same copy, are conjugate in G)
    """
    cu, cv = fp_cyclic_reduce(u, group), fp_cyclic_reduce(v, group)
    if len(cu) != len(cv):
        return False
    if len(cu) == 1:
        a, b = cu.syllables[0], cv.syllables[0]
        return a.copy == b.copy and group.is_conjugate(a.element, b.element)
    return cv.syllables in _rotations(cu.syllables)


def free_reduce(word: TWord, group: Group) -> TWord:
    """Free reduction of a word in H * <t>."""
    stack: List[Letter] = []
    for letter in word.letters:
        _push(stack, letter, group)
    return TWord(tuple(stack))


def canonical_rotation(word: TWord) -> TWord:
    """Least rotation under the fixed letter order."""
    best = min(_rotations(word.letters), key=lambda rot: [letter_key(x) for x in rot])
    return TWord(best)


def cyclic_decomposition(word: TWord, group: Group) -> Tuple[TWord, TWord]:
    """
    Split a word as q * core * q^-1 with a cyclically reduced core.

    Args:
        word: Any word in H * <t>
        group: Coefficient group G

    Returns:
        Tuple (q, core); the free reduction of q core q^-1 equals the free
        reduction of the word
    """
    letters = list(free_reduce(word, group).letters)
    prefix: List[Letter] = []
    while len(letters) >= 2:
        first, last = letters[0], letters[-1]
        if isinstance(first, Stable) and isinstance(last, Stable) and first.exponent == -last.exponent:
            prefix.append(first)
            letters = letters[1:-1]
        elif isinstance(first, Syllable) and isinstance(last, Syllable) and first.copy == last.copy:
            prefix.append(first)
            product = group.mul(last.element, first.element)
            letters = letters[1:-1] + ([Syllable(first.copy, product)] if product else [])
        else:
            break
    return TWord(tuple(prefix)), TWord(tuple(letters))


def tword_cyclic_reduce(word: TWord, group: Group) -> CyclicForm:
    """
    Cyclically reduce a word in G * <t> (or H * <t>).

    Args:
        word: Any word
        group: Coefficient group G

    Returns:
        CyclicForm with the reduced representative, its canonical rotation and
        the stable letter exponent sum
    """
    _, core = cyclic_decomposition(word, group)
    return CyclicForm(core, canonical_rotation(core), core.exponent_sum)


def tword_conjugacy(u: TWord, v: TWord, group: Group) -> bool:
    """
    Decide conjugacy of two words in H * <t>.

    Args:
        u: First word
        v: Second word
        group: Coefficient group G

    Returns:
        True iff the words are conjugate
    """
    cu = tword_cyclic_reduce(u, group).word
    cv = tword_cyclic_reduce(v, group).word
    if len(cu) != len(cv):
        return False
    if len(cu) == 1 and isinstance(cu.letters[0], Syllable) and isinstance(cv.letters[0], Syllable):
        a, b = cu.letters[0], cv.letters[0]
        return a.copy == b.copy and group.is_conjugate(a.element, b.element)
    return cv.letters in _rotations(cu.letters)
