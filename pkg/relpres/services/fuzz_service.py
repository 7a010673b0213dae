"""
Randomized trials for the relpres toolkit.

Each trial kind draws its inputs from a seeded ``random.Random`` so that a
run is reproducible from (kind, count, seed). Failures are collected as
findings; a clean run has none.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from ..config import Settings
from ..core.exceptions import RelPresError
from ..core.models import (
    FPWord,
    Finding,
    FreeProductCase,
    Group,
    PhiPresentation,
    Report,
    Stable,
    Syllable,
    TWord,
    random_map,
)
from . import curvature_service, rewriter_service

logger = logging.getLogger(__name__)

FUZZ_GROUPS: Dict[str, Callable[[], Group]] = {
    "Z2": lambda: Group.cyclic(2),
    "Z3": lambda: Group.cyclic(3),
    "S3": Group.symmetric3,
}


def gauss_bonnet_trial(rng: random.Random) -> Optional[str]:
    """One random map with random rational weights; returns a failure message or None."""
    faces = rng.randint(1, 6)
    degrees = [rng.randint(1, Settings.FUZZ_MAX_FACE_DEGREE) for _ in range(faces)]
    if sum(degrees) % 2:
        degrees[rng.randrange(faces)] += 1
    surface = random_map(degrees, seed=rng.getrandbits(32))
    weights = {c: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for c in range(surface.corner_count)}
    table = curvature_service.gauss_bonnet_report(surface, weights)
    if not table.holds:
        return f"degrees {degrees}: total {table.total} != 2 * {table.euler}"
    return None


def _random_hnn_word(rng: random.Random, p: PhiPresentation, syllables: int) -> TWord:
    letters: list = []
    for _ in range(syllables):
        if rng.random() < 0.4:
            letters.append(Stable(rng.choice((1, -1))))
        else:
            letters.append(Syllable(rng.randint(0, p.s), rng.randrange(1, p.base.order)))
    return TWord(tuple(letters))


def _random_relation_product(rng: random.Random, p: PhiPresentation) -> TWord:
    """A product of conjugated digon relators, trivial in the HNN extension."""
    word = TWord()
    for _ in range(rng.randint(1, 2)):
        x = FPWord.of(*[(rng.randrange(0, p.s), rng.randrange(1, p.base.order)) for _ in range(rng.randint(1, 2))])
        conjugator = _random_hnn_word(rng, p, rng.randint(0, 3))
        word = word + conjugator + rewriter_service.digon_word(p, x) + conjugator.inverse(p.base)
    return word


def britton_trial(rng: random.Random) -> Optional[str]:
    """Compare Britton triviality with triviality of the image in G * <t>."""
    group = FUZZ_GROUPS[rng.choice(sorted(FUZZ_GROUPS))]()
    s = rng.randint(1, 2)
    c = FPWord.of((0, 1), (s, 1))
    p = PhiPresentation(base=group, s=s, m=0, k=2, c=c, a=(FPWord.of((0, 1)),), b=(FPWord.of((s, 1)),))
    if rng.random() < 0.5:
        word = _random_relation_product(rng, p)
    else:
        word = _random_hnn_word(rng, p, rng.randint(0, Settings.FUZZ_MAX_SYLLABLES))
    verdict = rewriter_service.britton_is_trivial(word, p)
    oracle = rewriter_service.embed_word(word, group).is_empty()
    if verdict != oracle:
        return f"{word}: Britton says {verdict}, free product says {oracle}"
    return None


def random_unimodular_word(rng: random.Random, group: Group, max_t: int,
                           empty_rate: float = 0.25) -> TWord:
    """
    A word with odd t-count at most ``max_t`` and exponent sum one.

    Each stable letter is followed by a nontrivial element, or by nothing
    with probability ``empty_rate``, so runs such as ``t t`` and ``t t^-1``
    occur and the word need not be reduced. A t-count of one gives the
    free product case.
    """
    count = rng.choice([n for n in range(1, max_t + 1) if n % 2])
    signs = [1] * ((count + 1) // 2) + [-1] * ((count - 1) // 2)
    rng.shuffle(signs)
    letters: list = []
    for sign in signs:
        letters.append(Stable(sign))
        if rng.random() >= empty_rate:
            letters.append(Syllable(0, rng.randrange(1, group.order)))
    return TWord(tuple(letters))


def rewrite_trial(rng: random.Random) -> Optional[str]:
    """Rewrite a random relator, check the conditions and the round trip to G * <t>."""
    group = FUZZ_GROUPS[rng.choice(sorted(FUZZ_GROUPS))]()
    word = random_unimodular_word(rng, group, max(3, Settings.FUZZ_MAX_T_LETTERS))
    try:
        result = rewriter_service.rewrite_relator(group, word, Settings.DEFAULT_POWER)
        if isinstance(result, FreeProductCase):
            return None
        report = rewriter_service.verify_conditions(result, max_blocks=2, max_exponent=2,
                                                            sample_size=3, seed=rng.getrandbits(32))
        if not report.all_pass:
            return f"{word}: {'; '.join(report.failures)}"
        rewriter_service.embed_to_base(result, word)
    except RelPresError as e:
        return f"{word}: {type(e).__name__}: {e}"
    return None


TRIALS: Dict[str, Callable[[random.Random], Optional[str]]] = {
    "gauss-bonnet": gauss_bonnet_trial,
    "britton": britton_trial,
    "rewrite": rewrite_trial,
}


def run_fuzz(kind: str, count: int, seed: Optional[int] = None) -> Report:
    """
    Run ``count`` trials of one kind.

    Args:
        kind: One of ``gauss-bonnet``, ``britton``, ``rewrite``
        count: Number of trials
        seed: Seed; defaults to ``Settings.DEFAULT_SEED``

    Returns:
        Report with trial statistics and one FuzzFailure finding per failed trial

    Raises:
        KeyError: For an unknown kind
    """
    trial = TRIALS[kind]
    seed = Settings.DEFAULT_SEED if seed is None else seed
    rng = random.Random(seed)
    report = Report("fuzz")
    failures: List[str] = []
    for i in range(count):
        message = trial(rng)
        if message is not None:
            failures.append(message)
            report.add(Finding.error("FuzzFailure", message, f"trial {i}"))
    report.values.update({"kind": kind, "count": count, "seed": seed, "failures": len(failures)})
    logger.info("fuzz %s: %d trials, %d failures", kind, count, len(failures))
    return report
