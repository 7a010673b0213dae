"""
Rewriting service for the relpres toolkit.

This module turns a unimodular relator over G * <t> into the canonical
presentation with the shift isomorphism, checks the canonical form conditions,
reduces words in the HNN extension <H, t | p^t = p^phi>, and transports
factorizations back to G * <t>. All functions are pure.
"""

import itertools
import logging
import random
from typing import List, Optional, Sequence, Tuple, Union

from ..config import Settings
from ..core.exceptions import (
    ConjugacyMismatch,
    FactorizationInvalid,
    NonMinimal,
    NotUnimodular,
    PreconditionViolated,
    TransportMismatch,
)
from ..core.models import (
    ConditionReport,
    OrderBoundReport,
    FPWord,
    FreeProductCase,
    Group,
    MoveKind,
    PhiPresentation,
    RelatorFactor,
    RewriteTrace,
    Stable,
    Syllable,
    TWord,
    cyclic_decomposition,
    fp_multiply,
    fp_reduce,
    free_reduce,
    sub_membership,
    tword_conjugacy,
    tword_cyclic_reduce,
)

logger = logging.getLogger(__name__)

# A cyclic relator as (stable letter sign, H-element after it) segments.
Segments = List[Tuple[int, FPWord]]


def _segments_word(segments: Segments) -> TWord:
    letters: list = []
    for sign, element in segments:
        letters.append(Stable(sign))
        letters.extend(element.syllables)
    return TWord(tuple(letters))


def _word_segments(word: TWord, group: Group) -> Segments:
    """Cut a cyclic word with at least one stable letter into segments."""
    letters = list(word.letters)
    first = next(i for i, x in enumerate(letters) if isinstance(x, Stable))
    rotated = letters[first:] + letters[:first]
    raw: List[Tuple[int, list]] = []
    for letter in rotated:
        if isinstance(letter, Stable):
            raw.append((letter.exponent, []))
        else:
            raw[-1][1].append(letter)
    return [(sign, fp_reduce(FPWord(tuple(xs)), group)) for sign, xs in raw]


def _copies(segments: Segments) -> List[int]:
    return [syl.copy for _, element in segments for syl in element]


def _shift(segments: Segments, delta: int) -> Segments:
    return [(sign, element.shifted(delta)) for sign, element in segments]


def _pinch_once(segments: Segments, group: Group) -> Optional[Segments]:
    """
    Apply the leftmost pinch of a cyclic relator, if any.

    A pinch replaces t^-1 x t with x in P by x^phi, or t y t^-1 with y in P^phi
    by y^(phi^-1), relative to the current highest copy s.
    """
    n = len(segments)
    if n < 3:
        return None
    copies = _copies(segments)
    s = max(copies) if copies else 0
    for j in range(n):
        sign, element = segments[j]
        next_sign = segments[(j + 1) % n][0]
        if sign == -1 and next_sign == 1 and sub_membership(element, group, range(0, s)):
            image = element.shifted(1)
        elif sign == 1 and next_sign == -1 and sub_membership(element, group, range(1, s + 1)):
            image = element.shifted(-1)
        else:
            continue
        prev, nxt = (j - 1) % n, (j + 1) % n
        merged = fp_multiply(group, segments[prev][1], image, segments[nxt][1])
        return [
            (segments[i][0], merged) if i == prev else segments[i]
            for i in range(n)
            if i not in (j, nxt)
        ]
    return None


def _normalize(segments: Segments, trace: RewriteTrace) -> Segments:
    """Conjugate by a power of t so the lowest copy used is 0."""
    copies = _copies(segments)
    low = min(copies) if copies else 0
    if low <= 0:
        return segments
    shifted = _shift(segments, -low)
    trace.record(MoveKind.CONJUGATE, str(_segments_word(segments)), str(_segments_word(shifted)))
    return shifted


def _exhaust_pinches(segments: Segments, group: Group, trace: RewriteTrace) -> Segments:
    while True:
        pinched = _pinch_once(segments, group)
        if pinched is None:
            normalized = _normalize(segments, trace)
            if normalized is segments:
                return segments
            segments = normalized
            continue
        logger.debug("pinch: %s -> %s", _segments_word(segments), _segments_word(pinched))
        trace.record(MoveKind.REDUCE_M, str(_segments_word(segments)), str(_segments_word(pinched)))
        segments = pinched


def _in_canonical_shape(segments: Segments) -> bool:
    """No two cyclically consecutive t^-1 letters."""
    n = len(segments)
    if n == 1:
        return segments[0][0] == 1
    return not any(segments[j][0] == -1 and segments[(j + 1) % n][0] == -1 for j in range(n))


def _lower_top_copy(segments: Segments, group: Group) -> Optional[Segments]:
    """Replace every g^(s) by t^-1 g^(s-1) t and re-cut the cyclic word."""
    copies = _copies(segments)
    s = max(copies) if copies else 0
    if s == 0:
        return None
    letters: list = []
    for sign, element in segments:
        letters.append(Stable(sign))
        for syl in element:
            if syl.copy == s:
                letters.extend([Stable(-1), Syllable(s - 1, syl.element), Stable(1)])
            else:
                letters.append(syl)
    reduced = tword_cyclic_reduce(TWord(tuple(letters)), group).word
    return _word_segments(reduced, group)


def _extract(segments: Segments, group: Group, k: int, source: TWord) -> PhiPresentation:
    copies = _copies(segments)
    s = max(copies) if copies else 0
    n = len(segments)
    if n == 1:
        return PhiPresentation(base=group, s=s, m=-1, k=k, c=segments[0][1], a=(), b=(), source=source)
    j = next(i for i in range(n) if segments[i][0] == 1 and segments[(i + 1) % n][0] == 1)
    rotated = segments[j + 1:] + segments[:j + 1]
    body = rotated[:-1]
    return PhiPresentation(
        base=group,
        s=s,
        m=(n - 3) // 2,
        k=k,
        c=rotated[-1][1],
        a=tuple(element for sign, element in body if sign == -1),
        b=tuple(element for sign, element in body if sign == 1),
        source=source,
    )


def rewrite_relator(group: Group, word: TWord, k: int,
                   trace: Optional[RewriteTrace] = None) -> Union[PhiPresentation, FreeProductCase]:
    """
    Rewrite a unimodular relator into the canonical presentation.

    The word is cyclically reduced, its coefficients are placed on copies
    G^(i) by level (conjugating so the lowest level is 0), and the relator is
    then minimized: pinches are exhausted leftmost-first, and the top copy is
    lowered whenever that keeps the canonical shape, until neither applies.

    Args:
        group: Coefficient group G
        word: Relator over G * <t>
        k: Relator power
        trace: Optional trace receiving every move

    Returns:
        FreeProductCase when the reduced word has one stable letter, the
        canonical PhiPresentation otherwise

    Raises:
        PreconditionViolated: If k < 2 or the word uses copies other than 0
        NotUnimodular: If the stable letter exponent sum is not 1
        NonMinimal: If the fixpoint violates condition 1 or 2
    """
    if k < 2:
        raise PreconditionViolated("k ≥ 2 required")
    if any(syl.copy != 0 for syl in word.syllables()):
        raise PreconditionViolated("the relator must be a word over G * <t>")
    trace = trace if trace is not None else RewriteTrace()
    cyclic = tword_cyclic_reduce(word, group)
    if cyclic.exponent_sum != 1:
        raise NotUnimodular(f"exponent sum is {cyclic.exponent_sum}, expected 1")
    reduced = cyclic.word
    if reduced.t_count == 1:
        g = reduced.syllables()[0].element if reduced.syllables() else 0
        logger.info("free product case with g=%d, k=%d", g, k)
        return FreeProductCase(base=group, g=g, k=k)

    prefix_sum, levelled = 0, []
    for letter in reduced.letters:
        if isinstance(letter, Stable):
            prefix_sum += letter.exponent
        else:
            levelled.append((-prefix_sum, letter.element))
    low = min((level for level, _ in levelled), default=0)
    c = fp_reduce(FPWord.of(*[(level - low, g) for level, g in levelled]), group)
    segments: Segments = [(1, c)]
    trace.record(MoveKind.CONJUGATE, str(reduced), str(_segments_word(segments)))
    logger.debug("initial relator %s", _segments_word(segments))

    segments = _exhaust_pinches(segments, group, trace)
    while True:
        candidate = _lower_top_copy(segments, group)
        if candidate is None:
            break
        attempt = RewriteTrace()
        candidate = _exhaust_pinches(candidate, group, attempt)
        if not _in_canonical_shape(candidate):
            logger.debug("lowering the top copy breaks the canonical shape; stopping")
            break
        trace.record(MoveKind.REDUCE_S, str(_segments_word(segments)), str(_segments_word(candidate)))
        trace.moves.extend(attempt.moves)
        segments = candidate

    presentation = _extract(segments, group, k, reduced)
    report = ConditionReport()
    _check_condition1(presentation, report)
    _check_condition2(presentation, report)
    if not report.all_pass:
        raise NonMinimal("; ".join(report.failures))
    logger.info("rewrite finished: s=%d, m=%d after %d moves",
                presentation.s, presentation.m, len(trace.moves))
    return presentation


def _check_condition1(p: PhiPresentation, report: ConditionReport) -> None:
    multi = p.source is None or p.source.t_count > 1
    if multi and p.m < 0:
        report.fail(1, "m = -1 although the relator has more than one stable letter")


def _check_condition2(p: PhiPresentation, report: ConditionReport) -> None:
    for i, a_i in enumerate(p.a):
        if p.in_p(a_i):
            report.fail(2, f"a_{i} = {a_i} lies in P")
    for i, b_i in enumerate(p.b):
        if p.in_p_phi(b_i):
            report.fail(2, f"b_{i} = {b_i} lies in P^phi")


def _check_condition4(p: PhiPresentation, report: ConditionReport) -> None:
    for word in (p.c, *p.a, *p.b):
        if any(not 0 <= syl.copy <= p.s for syl in word):
            report.fail(4, f"{word} leaves G^(0) * ... * G^({p.s})")


def _power(word: FPWord, n: int, group: Group) -> FPWord:
    base = word if n > 0 else word.inverse(group)
    return fp_reduce(FPWord(base.syllables * abs(n)), group)


def _split_subgroup_ends(word: FPWord, allowed: range) -> Tuple[FPWord, FPWord, FPWord]:
    """Split a normal form as (maximal prefix in the factor, middle, maximal suffix in the factor)."""
    syls = word.syllables
    i = 0
    while i < len(syls) and syls[i].copy in allowed:
        i += 1
    j = len(syls)
    while j > i and syls[j - 1].copy in allowed:
        j -= 1
    return FPWord(syls[:i]), FPWord(syls[i:j]), FPWord(syls[j:])


def free_factor_representative(word: FPWord, group: Group, allowed: range) -> FPWord:
    """
    Representative u' of the coset A u with no leading or trailing A-syllables up to conjugation.

    With u = p_1 y p_2 for maximal p_1, p_2 in A, returns p_2^-1 y p_2.
    """
    word = fp_reduce(word, group)
    head, _, tail = _split_subgroup_ends(word, allowed)
    return fp_multiply(group, tail.inverse(group), head.inverse(group), word)


def sample_subgroup(group: Group, allowed: range, size: int, rng: random.Random) -> List[FPWord]:
    """
    Sample nontrivial elements of the free factor spanned by ``allowed``.

    Single syllables come first (shuffled); products of two syllables from
    different copies fill the sample when copies allow it.
    """
    singles = [FPWord.of((c, g)) for c in allowed for g in range(1, group.order)]
    rng.shuffle(singles)
    sample = singles[:size]
    attempts = 0
    while len(sample) < size and len(allowed) > 1 and attempts < 10 * size:
        attempts += 1
        x, y = rng.sample(singles, 2)
        product = fp_multiply(group, x, y)
        if len(product) == 2 and product not in sample:
            sample.append(product)
    return sample


def _free_factor_violations(element: FPWord, group: Group, allowed: range, sample: List[FPWord],
                            max_blocks: int, max_exponent: int) -> Optional[str]:
    """Search p_0 x^n_1 p_1 ... x^n_r p_r = 1 with x the coset representative; return a witness."""
    x = free_factor_representative(element, group, allowed)
    powers = {}
    for n in range(-max_exponent, max_exponent + 1):
        if n != 0:
            xn = _power(x, n, group)
            if not xn.is_empty():
                powers[n] = xn
    last_choices = [FPWord()] + sample
    for r in range(1, max_blocks + 1):
        for exponents in itertools.product(sorted(powers), repeat=r):
            for inner in itertools.product(sample, repeat=r - 1):
                for last in last_choices:
                    parts: List[FPWord] = []
                    for n, p in zip(exponents, list(inner) + [last]):
                        parts.extend([powers[n], p])
                    if fp_multiply(group, *parts).is_empty():
                        return f"exponents {list(exponents)} with {[str(p) for p in inner] + [str(last)]}"
    return None


def verify_conditions(p: PhiPresentation, max_blocks: Optional[int] = None,
                             max_exponent: Optional[int] = None, sample_size: Optional[int] = None,
                             seed: Optional[int] = None) -> ConditionReport:
    """
    Check the four canonical form conditions of a presentation.

    Condition 3 is a bounded search: for every a_i (and b_i) it looks for a
    trivial alternating product of powers of the coset representative and
    sampled subgroup elements. Finding none is evidence, not proof.

    Args:
        p: Presentation to check
        max_blocks: Largest number of power blocks in the search
        max_exponent: Largest absolute exponent in the search
        sample_size: Number of sampled subgroup elements
        seed: Seed for the subgroup sample

    Returns:
        ConditionReport with per-condition verdicts
    """
    max_blocks = Settings.CONDITION3_MAX_BLOCKS if max_blocks is None else max_blocks
    max_exponent = Settings.CONDITION3_MAX_EXPONENT if max_exponent is None else max_exponent
    sample_size = Settings.CONDITION3_SAMPLE_SIZE if sample_size is None else sample_size
    rng = random.Random(Settings.DEFAULT_SEED if seed is None else seed)

    report = ConditionReport()
    _check_condition1(p, report)
    _check_condition2(p, report)
    _check_condition4(p, report)

    group = p.base
    for label, elements, allowed in (("a", p.a, p.p_range), ("b", p.b, p.p_phi_range)):
        sample = sample_subgroup(group, allowed, sample_size, rng)
        for i, element in enumerate(elements):
            if sub_membership(element, group, allowed):
                continue
            witness = _free_factor_violations(element, group, allowed, sample, max_blocks, max_exponent)
            if witness is not None:
                report.fail(3, f"{label}_{i}: trivial product for {witness}")
    return report


def embed_letter(letter) -> List:
    """Image of one letter under g^(i) -> t^-i g t^i."""
    if isinstance(letter, Stable):
        return [letter]
    return [Stable(-1)] * letter.copy + [Syllable(0, letter.element)] + [Stable(1)] * letter.copy


def embed_word(word: TWord, group: Group) -> TWord:
    """Freely reduced image of a word over H and t in G * <t>."""
    letters: list = []
    for letter in word.letters:
        letters.extend(embed_letter(letter))
    return free_reduce(TWord(tuple(letters)), group)


def embed_to_base(p: Union[PhiPresentation, FreeProductCase],
                  source: Optional[TWord] = None) -> Tuple[TWord, bool]:
    """
    Map the relator period back to G * <t> and compare with the source word.

    Args:
        p: Presentation to embed
        source: Source word; defaults to the one stored on the presentation

    Returns:
        Tuple (image, verdict); verdict is True when the image is conjugate to the source

    Raises:
        PreconditionViolated: For a free product case or when no source word is known
        ConjugacyMismatch: If the image is not conjugate to the source
    """
    if isinstance(p, FreeProductCase):
        raise PreconditionViolated("free product case has no presentation to embed")
    source = source if source is not None else p.source
    if source is None:
        raise PreconditionViolated("no source word to compare with")
    image = embed_word(p.relator_period(), p.base)
    if not tword_conjugacy(image, source, p.base):
        raise ConjugacyMismatch(f"image {image} is not conjugate to {source}")
    return image, True


def britton_reduce(word: TWord, p: PhiPresentation) -> TWord:
    """
    Britton-reduce a word over H and t.

    Pinches t^-1 x t (x in P) and t y t^-1 (y in P^phi) are applied
    leftmost-first until none remains, with free and free-product reduction
    between them.

    Args:
        word: Word over H = G^(0) * ... * G^(s) and t
        p: Presentation fixing s

    Returns:
        The Britton-reduced word
    """
    group = p.base
    head: List[Syllable] = []
    raw: List[Tuple[int, list]] = []
    for letter in free_reduce(word, group).letters:
        if isinstance(letter, Stable):
            raw.append((letter.exponent, []))
        elif raw:
            raw[-1][1].append(letter)
        else:
            head.append(letter)
    elements = [fp_reduce(FPWord(tuple(head)), group, copies=p.copies)]
    signs: List[int] = []
    for sign, xs in raw:
        signs.append(sign)
        elements.append(fp_reduce(FPWord(tuple(xs)), group, copies=p.copies))

    # elements[j] sits after signs[j - 1]; elements[0] is the head
    changed = True
    while changed:
        changed = False
        for j in range(len(signs) - 1):
            x = elements[j + 1]
            if signs[j] == -1 and signs[j + 1] == 1 and p.in_p(x):
                image = p.phi(x)
            elif signs[j] == 1 and signs[j + 1] == -1 and p.in_p_phi(x):
                image = p.phi_inverse(x)
            else:
                continue
            merged = fp_multiply(group, elements[j], image, elements[j + 2])
            elements[j:j + 3] = [merged]
            del signs[j:j + 2]
            changed = True
            break

    letters: list = list(elements[0].syllables)
    for sign, element in zip(signs, elements[1:]):
        letters.append(Stable(sign))
        letters.extend(element.syllables)
    return TWord(tuple(letters))


def britton_is_trivial(word: TWord, p: PhiPresentation) -> bool:
    """True iff the word is trivial in <H, t | p^t = p^phi>."""
    return britton_reduce(word, p).is_empty()


def order_bound_check(p: PhiPresentation, i: int, exponents: Sequence[int],
                          elements: Sequence[FPWord], which: str = "a") -> OrderBoundReport:
    """
    Evaluate an alternating product of powers of a_i (or b_i) and subgroup elements.

    For ``which="a"`` the product is a_i^n_1 p_1 ... a_i^n_r p_r; for ``"b"`` it
    is b_i^n_1 p_1^phi ... b_i^n_r p_r^phi.

    Args:
        p: Presentation
        i: Block index
        exponents: Nonzero exponents n_1 .. n_r
        elements: Elements p_1 .. p_r of P, nontrivial except possibly the last
        which: "a" or "b"

    Returns:
        OrderBoundReport with triviality, the bound max |n_k + ... + n_l| and the minimal order

    Raises:
        PreconditionViolated: If the arguments leave the documented domain
    """
    if which not in ("a", "b"):
        raise PreconditionViolated(f"which must be 'a' or 'b', got {which!r}")
    if not 0 <= i <= p.m:
        raise PreconditionViolated(f"block index {i} outside 0..{p.m}")
    if not exponents or len(exponents) != len(elements):
        raise PreconditionViolated("need r >= 1 exponents and as many subgroup elements")
    if any(n == 0 for n in exponents):
        raise PreconditionViolated("exponents must be nonzero")
    group = p.base
    for j, element in enumerate(elements):
        if not p.in_p(element):
            raise PreconditionViolated(f"p_{j + 1} = {element} is not in P")
        if j < len(elements) - 1 and fp_reduce(element, group).is_empty():
            raise PreconditionViolated(f"p_{j + 1} must be nontrivial")

    base = p.a[i] if which == "a" else p.b[i]
    parts: List[FPWord] = []
    for n, element in zip(exponents, elements):
        parts.append(_power(base, n, group))
        parts.append(element if which == "a" else p.phi(element))
    trivial = fp_multiply(group, *parts).is_empty()
    r = len(exponents)
    bound = max(abs(sum(exponents[lo:hi + 1])) for lo in range(r) for hi in range(lo, r))
    return OrderBoundReport(is_trivial=trivial, bound=bound, min_order=group.min_nontrivial_order())


def order_bound_scan(p: PhiPresentation, max_blocks: int = 3, max_exponent: int = 3,
                   sample_size: Optional[int] = None, seed: Optional[int] = None) -> List[dict]:
    """
    Scan alternating products for counterexamples to the order bound.

    Args:
        p: Presentation
        max_blocks: Largest r
        max_exponent: Largest |n_j|
        sample_size: Sampled elements of P \\ {1}; None uses every single syllable
        seed: Sample seed

    Returns:
        Counterexamples as dictionaries (empty when the bound holds throughout)
    """
    rng = random.Random(Settings.DEFAULT_SEED if seed is None else seed)
    size = sample_size if sample_size is not None else p.s * (p.base.order - 1)
    sample = sample_subgroup(p.base, p.p_range, size, rng)
    nonzero = [n for n in range(-max_exponent, max_exponent + 1) if n]
    found: List[dict] = []
    checked = 0
    for which in ("a", "b"):
        for i in range(p.m + 1):
            for r in range(1, max_blocks + 1):
                for exponents in itertools.product(nonzero, repeat=r):
                    for inner in itertools.product(sample, repeat=r - 1):
                        for last in [FPWord()] + sample:
                            report = order_bound_check(p, i, exponents, list(inner) + [last], which)
                            checked += 1
                            if not report.holds:
                                found.append({
                                    "which": which,
                                    "i": i,
                                    "exponents": list(exponents),
                                    "elements": [str(x) for x in list(inner) + [last]],
                                    **report.to_dict(),
                                })
    logger.info("order bound scan checked %d products, %d counterexamples", checked, len(found))
    return found


def digon_word(p: PhiPresentation, element: FPWord) -> TWord:
    """The digon relator t^-1 x t (x^phi)^-1 for x in P."""
    x = fp_reduce(element, p.base)
    return TWord((Stable(-1),) + x.syllables + (Stable(1),) + p.phi(x).inverse(p.base).syllables)


def relator_power(p: PhiPresentation, sign: int) -> TWord:
    """R^k or R^-k as a word."""
    period = p.relator_period()
    word = TWord(period.letters * p.k)
    return word if sign > 0 else word.inverse(p.base)


def _conjugate(x: TWord, body: TWord, group: Group) -> TWord:
    return x + body + x.inverse(group)


def transport_factorization(u: TWord, factors: Sequence[RelatorFactor], p: PhiPresentation,
                           source: Optional[TWord] = None) -> List[Tuple[TWord, int]]:
    """
    Transport a factorization over H and t to conjugates of w^(+-k) in G * <t>.

    Args:
        u: Word over H and t
        factors: Conjugates of relators whose product is u
        p: Presentation with its source word
        source: Source word; defaults to the one stored on the presentation

    Returns:
        (conjugator, sign) per large factor, in order; digon factors are absorbed

    Raises:
        FactorizationInvalid: If the factors do not multiply to u or a digon element leaves P
        TransportMismatch: If the transported product differs from the image of u
    """
    group = p.base
    source = source if source is not None else p.source
    if source is None:
        raise PreconditionViolated("no source word to transport to")
    source = tword_cyclic_reduce(source, group).word

    product: list = []
    for factor in factors:
        tag = factor.tag
        if tag.kind == "digon":
            if tag.p is None or not p.in_p(tag.p) or fp_reduce(tag.p, group).is_empty():
                raise FactorizationInvalid(f"digon element {tag.p} is not a nontrivial element of P")
            body = digon_word(p, tag.p)
        elif tag.kind in ("large_pos", "large_neg"):
            body = relator_power(p, 1 if tag.kind == "large_pos" else -1)
        else:
            raise FactorizationInvalid(f"unknown factor tag {tag.kind!r}")
        product.extend(_conjugate(factor.conjugator, body, group).letters)
    if free_reduce(TWord(tuple(product)), group) != free_reduce(u, group):
        raise FactorizationInvalid("the factors do not multiply to the given word")

    # embed(R) = q z q^-1 with z a rotation w_1^-1 w w_1 of the source word
    q, core = cyclic_decomposition(embed_word(p.relator_period(), group), group)
    rotations = [i for i in range(len(source)) if source.letters[i:] + source.letters[:i] == core.letters]
    if not rotations:
        raise TransportMismatch(f"embedded relator core {core} is not a rotation of {source}")
    w_1 = TWord(source.letters[:rotations[0]])
    y = q + w_1.inverse(group)

    pairs: List[Tuple[TWord, int]] = []
    for factor in factors:
        if factor.tag.kind == "digon":
            image = embed_word(_conjugate(factor.conjugator, digon_word(p, factor.tag.p), group), group)
            if not image.is_empty():
                raise TransportMismatch(f"digon factor maps to {image}, not to the identity")
            continue
        sign = 1 if factor.tag.kind == "large_pos" else -1
        conjugator = free_reduce(embed_word(factor.conjugator, group) + y, group)
        pairs.append((conjugator, sign))

    expanded: list = []
    for conjugator, sign in pairs:
        power = TWord(source.letters * p.k)
        body = power if sign > 0 else power.inverse(group)
        expanded.extend(_conjugate(conjugator, body, group).letters)
    if free_reduce(TWord(tuple(expanded)), group) != embed_word(u, group):
        raise TransportMismatch("transported product differs from the image of u")
    logger.info("transported %d factors into %d conjugates of w^(+-k)", len(factors), len(pairs))
    return pairs
