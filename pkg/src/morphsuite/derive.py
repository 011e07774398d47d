"""Surface composition, ordering enumeration, and negative-option selection.

Affixes are surface-realized: composing is plain concatenation of the prefix
block, the root, and the suffix block. Alternative orderings permute affixes
within their slot block only; prefixes never migrate past the root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from morphsuite import profiles
from morphsuite.distance import levenshtein
from morphsuite.errors import (
    CombinatorialCap,
    EmptyAffix,
    NoNegativeAvailable,
    UnsupportedStrategy,
)

PREFIX = "prefix"
SUFFIX = "suffix"

RANDOM = "random"
LANG_AGNOSTIC = "lang_agnostic"
LANG_SPECIFIC_TR = "lang_specific_tr"
STRATEGIES = (RANDOM, LANG_AGNOSTIC, LANG_SPECIFIC_TR)

DEFAULT_ORDERING_CAP = 10080  # 7! * 2!


@dataclass(frozen=True)
class Affix:
    """One surface-realized bound morpheme with its slot and gold position."""

    form: str
    slot: str = SUFFIX
    gold_index: int = 0


@dataclass
class SegmentedWord:
    """A segmented record: root, slotted affixes, and the gold surface form."""

    record_id: str
    language_id: str
    root: str
    affixes: list[Affix]
    gold_surface: str
    sentence: str | None = None
    meta_affixes: list[str] = field(default_factory=list)
    manual_negative_affix: str | None = None
    known_valid_alternatives: set[str] = field(default_factory=set)
    nonce_root: str | None = None

    @property
    def morpheme_count(self) -> int:
        return len(self.affixes)

    @property
    def prefix_forms(self) -> list[str]:
        return [a.form for a in self.affixes if a.slot == PREFIX]

    @property
    def suffix_forms(self) -> list[str]:
        return [a.form for a in self.affixes if a.slot == SUFFIX]

    @property
    def gold_order_forms(self) -> list[str]:
        """All affix forms in gold order, prefixes first."""
        return self.prefix_forms + self.suffix_forms


@dataclass(frozen=True)
class CandidateDerivation:
    """One ordering of a record's affixes, realized as a surface string."""

    surface: str
    prefix_order: tuple[str, ...]
    suffix_order: tuple[str, ...]
    is_gold: bool
    levenshtein_to_gold: int


def compose(root: str, ordered_affixes: Sequence[Affix]) -> str:
    """Concatenate the prefix block, the root, and the suffix block."""
    for affix in ordered_affixes:
        if not affix.form:
            raise EmptyAffix(f"empty affix form attached to root {root!r}")
    prefixes = [a.form for a in ordered_affixes if a.slot == PREFIX]
    suffixes = [a.form for a in ordered_affixes if a.slot == SUFFIX]
    return compose_forms(root, prefixes, suffixes)


def compose_forms(root: str, prefixes: Iterable[str], suffixes: Iterable[str]) -> str:
    return "".join(prefixes) + root + "".join(suffixes)


def ordering_space(word: SegmentedWord) -> int:
    return math.factorial(len(word.prefix_forms)) * math.factorial(len(word.suffix_forms))


def _candidates_from_orders(word: SegmentedWord, root: str, orders) -> list[CandidateDerivation]:
    """Realize orderings as surfaces, deduplicated; gold status follows the
    surface, so colliding orderings can never split the gold mark."""
    gold = compose_forms(root, word.prefix_forms, word.suffix_forms)
    seen: dict[str, CandidateDerivation] = {}
    for prefix_order, suffix_order in orders:
        surface = compose_forms(root, prefix_order, suffix_order)
        if surface in seen:
            continue
        seen[surface] = CandidateDerivation(
            surface=surface,
            prefix_order=tuple(prefix_order),
            suffix_order=tuple(suffix_order),
            is_gold=surface == gold or surface in word.known_valid_alternatives,
            levenshtein_to_gold=levenshtein(surface, gold),
        )
    return list(seen.values())


def enumerate_orderings(
    word: SegmentedWord,
    *,
    cap: int = DEFAULT_ORDERING_CAP,
    root: str | None = None,
) -> list[CandidateDerivation]:
    """All per-block orderings of the word's affixes, deduplicated by surface.

    ``root`` substitutes a different root (e.g. a nonce) into every surface
    while keeping the ordering enumeration identical.
    """
    if word.morpheme_count < 1:
        raise EmptyAffix(f"record {word.record_id} has no affixes")
    if ordering_space(word) > cap:
        raise CombinatorialCap(
            f"record {word.record_id}: {ordering_space(word)} orderings exceed cap {cap}"
        )
    orders = (
        (pp, sp)
        for pp in permutations(word.prefix_forms)
        for sp in permutations(word.suffix_forms)
    )
    return _candidates_from_orders(word, root if root is not None else word.root, orders)


def _unrank_permutation(items: Sequence[str], index: int) -> tuple[str, ...]:
    """Lehmer-decode the index-th permutation of items (factorial numbering)."""
    pool = list(items)
    out = []
    for i in range(len(pool), 0, -1):
        f = math.factorial(i - 1)
        pos, index = divmod(index, f)
        out.append(pool.pop(pos))
    return tuple(out)


def sample_orderings(
    word: SegmentedWord,
    n: int,
    rng,
    *,
    root: str | None = None,
) -> list[CandidateDerivation]:
    """Uniform sample of n orderings without replacement, always incl. gold.

    Used when the full ordering space exceeds the cap; index 0 is the gold
    ordering in the factorial numbering.
    """
    total = ordering_space(word)
    n = min(n, total)
    indices = [0]
    if n > 1:
        indices += sorted(rng.sample(range(1, total), n - 1))
    n_suffix = math.factorial(len(word.suffix_forms))
    orders = []
    for index in indices:
        p_index, s_index = divmod(index, n_suffix)
        orders.append(
            (
                _unrank_permutation(word.prefix_forms, p_index),
                _unrank_permutation(word.suffix_forms, s_index),
            )
        )
    return _candidates_from_orders(word, root if root is not None else word.root, orders)


def candidate_pool(
    word: SegmentedWord,
    *,
    cap: int = DEFAULT_ORDERING_CAP,
    rng=None,
    root: str | None = None,
) -> tuple[list[CandidateDerivation], bool]:
    """Candidates for negative selection, sampling when the cap is exceeded.

    Returns (candidates, truncated). Sampling requires an rng; without one
    the cap overflow propagates as CombinatorialCap.
    """
    if ordering_space(word) <= cap or rng is None:
        return enumerate_orderings(word, cap=cap, root=root), False
    return sample_orderings(word, cap, rng, root=root), True


def _manual_negative(word: SegmentedWord, root: str) -> CandidateDerivation:
    if not word.manual_negative_affix:
        raise NoNegativeAvailable(
            f"record {word.record_id}: 1-morpheme items need manual_negative_affix"
        )
    gold = compose_forms(root, word.prefix_forms, word.suffix_forms)
    surface = compose_forms(root, [], [word.manual_negative_affix])
    return CandidateDerivation(
        surface=surface,
        prefix_order=(),
        suffix_order=(word.manual_negative_affix,),
        is_gold=False,
        levenshtein_to_gold=levenshtein(surface, gold),
    )


def default_k(morpheme_count: int) -> int:
    """Negatives per sample: 1 for 1-2 morphemes, 4 for 3 or more."""
    return 1 if morpheme_count <= 2 else 4


def select_negatives(
    word: SegmentedWord,
    strategy: str,
    k: int | None = None,
    rng=None,
    *,
    profile: profiles.LanguageProfile | None = None,
    cap: int = DEFAULT_ORDERING_CAP,
    candidates: list[CandidateDerivation] | None = None,
    root: str | None = None,
) -> list[CandidateDerivation]:
    """Pick k invalid orderings for a record under the given strategy.

    random: uniform k-subset. lang_agnostic: smallest distance to gold,
    lexicographic tie-break. lang_specific_tr: as lang_agnostic, preferring
    surfaces without adjacent vowels, backfilling only when fewer than k
    qualify. Gold and known-valid surfaces are never returned.
    """
    if strategy not in STRATEGIES:
        raise UnsupportedStrategy(f"unknown strategy {strategy!r}")
    if strategy == LANG_SPECIFIC_TR and word.language_id != profiles.TURKISH:
        raise UnsupportedStrategy(
            f"{LANG_SPECIFIC_TR} only applies to Turkish, not {word.language_id}"
        )
    if k is None:
        k = default_k(word.morpheme_count)

    if word.morpheme_count == 1:
        return [_manual_negative(word, root if root is not None else word.root)]

    if candidates is None:
        candidates, _ = candidate_pool(word, cap=cap, rng=rng, root=root)
    pool = [c for c in candidates if not c.is_gold]
    if len(pool) <= k:
        return list(pool)

    if strategy == RANDOM:
        if rng is None:
            raise ValueError("random strategy needs an rng")
        return rng.sample(pool, k)

    ranked = sorted(pool, key=lambda c: (c.levenshtein_to_gold, c.surface))
    if strategy == LANG_AGNOSTIC:
        return ranked[:k]

    if profile is None:
        profile = profiles.load_profile(word.language_id)
    smooth = [c for c in ranked if not profiles.has_adjacent_vowels(c.surface, profile)]
    if len(smooth) >= k:
        return smooth[:k]
    clashing = [c for c in ranked if profiles.has_adjacent_vowels(c.surface, profile)]
    return smooth + clashing[: k - len(smooth)]
