"""Per-language letter tables: vowel/consonant classes, vowel harmony,
letter frequencies, and casing rules.

Profiles are immutable after load and shared freely across threads. The
bundled defaults for Turkish and Finnish live in data/<language>.profile;
the file format is plain UTF-8 ``key = value`` lines (see those files).
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, NamedTuple

from morphsuite.errors import NoVowel, SchemaError, UnknownLetter

TURKISH = "turkish"
FINNISH = "finnish"

FRONT = "front"
BACK = "back"
NEUTRAL = "neutral"

VOWEL = "vowel"
CONSONANT = "consonant"


class LetterClass(NamedTuple):
    kind: str                # "vowel" or "consonant"
    harmony: str | None      # front/back/neutral for vowels, None otherwise


@dataclass(frozen=True)
class LanguageProfile:
    language_id: str
    vowels: frozenset[str]
    consonants: frozenset[str]
    harmony_class_of: Mapping[str, str]
    rounded: frozenset[str]
    letter_frequency: Mapping[str, float]   # normalized to sum to 1 per class
    casing_pairs: Mapping[str, str]         # uppercase -> lowercase

    @property
    def alphabet(self) -> frozenset[str]:
        return self.vowels | self.consonants

    def vowels_in_class(self, harmony: str) -> list[str]:
        return sorted(v for v in self.vowels if self.harmony_class_of[v] == harmony)

    def frequency_weights(self, letters) -> list[float]:
        return [self.letter_frequency[ch] for ch in letters]


def case_fold(word: str, profile: LanguageProfile) -> str:
    """Language-aware lowercasing; Turkish maps I to dotless i and dotted
    uppercase i to i. Characters outside the profile pass through unchanged.
    """
    word = unicodedata.normalize("NFC", word)
    out = []
    for ch in word:
        mapped = profile.casing_pairs.get(ch)
        out.append(mapped if mapped is not None else ch)
    return "".join(out)


def classify(letter: str, profile: LanguageProfile) -> LetterClass:
    """Classify a single letter as vowel (with harmony class) or consonant."""
    folded = case_fold(letter, profile)
    if folded in profile.vowels:
        return LetterClass(VOWEL, profile.harmony_class_of[folded])
    if folded in profile.consonants:
        return LetterClass(CONSONANT, None)
    raise UnknownLetter(f"{letter!r} is not in the {profile.language_id} alphabet")


def check_letters(word: str, profile: LanguageProfile) -> str:
    """Case-fold the word and verify every letter is in the alphabet."""
    folded = case_fold(word, profile)
    for ch in folded:
        if ch not in profile.alphabet:
            raise UnknownLetter(
                f"{ch!r} in {word!r} is not in the {profile.language_id} alphabet"
            )
    return folded


def has_adjacent_vowels(word: str, profile: LanguageProfile) -> bool:
    """True iff two vowels occur next to each other anywhere in the word."""
    folded = check_letters(word, profile)
    vowels = profile.vowels
    return any(a in vowels and b in vowels for a, b in zip(folded, folded[1:]))


def last_vowel_suffix_span(word: str, profile: LanguageProfile) -> tuple[int, int]:
    """Span from the final vowel through the trailing consonants.

    The first letter of the span is a vowel and everything after it (to the
    end of the word) is consonants, so the span is exactly the word-final
    vowel+consonant cluster that stays fixed during nonce generation.
    """
    folded = check_letters(word, profile)
    for i in range(len(folded) - 1, -1, -1):
        if folded[i] in profile.vowels:
            return (i, len(folded))
    raise NoVowel(f"{word!r} contains no vowel")


# ---------------------------------------------------------------------------
# Profile file loading
# ---------------------------------------------------------------------------

def _parse_profile_text(text: str, source: str) -> dict:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SchemaError(f"{source}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    return entries


def _load_profile_entries(entries: dict, source: str) -> LanguageProfile:
    def letters(key: str) -> list[str]:
        if key not in entries:
            raise SchemaError(f"{source}: missing required key {key!r}")
        return entries[key].split()

    language_id = entries.get("language")
    if not language_id:
        raise SchemaError(f"{source}: missing required key 'language'")

    vowels = frozenset(letters("vowels"))
    consonants = frozenset(letters("consonants"))
    if vowels & consonants:
        raise SchemaError(f"{source}: vowels and consonants overlap: {sorted(vowels & consonants)}")

    harmony: dict[str, str] = {}
    for cls in (FRONT, BACK, NEUTRAL):
        key = f"harmony.{cls}"
        if key in entries:
            for v in entries[key].split():
                if v not in vowels:
                    raise SchemaError(f"{source}: harmony letter {v!r} is not a vowel")
                harmony[v] = cls
    missing = vowels - harmony.keys()
    if missing:
        raise SchemaError(f"{source}: vowels without a harmony class: {sorted(missing)}")

    rounded = frozenset(entries.get("rounded", "").split())
    if rounded - vowels:
        raise SchemaError(f"{source}: rounded letters must be vowels")

    casing: dict[str, str] = {}
    for key, value in entries.items():
        if key.startswith("case."):
            upper = key[len("case."):]
            if value not in vowels | consonants:
                raise SchemaError(f"{source}: casing target {value!r} not in alphabet")
            casing[upper] = value

    raw_freq: dict[str, float] = {}
    for key, value in entries.items():
        if key.startswith("freq."):
            ch = key[len("freq."):]
            freq = float(value)
            if freq < 0:
                raise SchemaError(f"{source}: negative frequency for {ch!r}")
            raw_freq[ch] = freq
    alphabet = vowels | consonants
    missing_freq = alphabet - raw_freq.keys()
    if missing_freq:
        raise SchemaError(f"{source}: letters without a frequency: {sorted(missing_freq)}")

    # Normalize to a distribution within each class.
    normalized: dict[str, float] = {}
    for group in (vowels, consonants):
        total = sum(raw_freq[ch] for ch in group)
        if total <= 0:
            raise SchemaError(f"{source}: zero total frequency in a letter class")
        for ch in group:
            normalized[ch] = raw_freq[ch] / total

    return LanguageProfile(
        language_id=language_id,
        vowels=vowels,
        consonants=consonants,
        harmony_class_of=harmony,
        rounded=rounded,
        letter_frequency=normalized,
        casing_pairs=casing,
    )


def load_profile(language_or_path: str | Path) -> LanguageProfile:
    """Load a profile from a bundled language name or an explicit file path."""
    if isinstance(language_or_path, str) and language_or_path in (TURKISH, FINNISH):
        ref = resources.files("morphsuite").joinpath(f"data/{language_or_path}.profile")
        text = ref.read_text(encoding="utf-8")
        source = f"data/{language_or_path}.profile"
    else:
        path = Path(language_or_path)
        text = path.read_text(encoding="utf-8")
        source = str(path)
    return _load_profile_entries(_parse_profile_text(text, source), source)
