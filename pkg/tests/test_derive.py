import math
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphsuite import derive
from morphsuite.derive import Affix, SegmentedWord
from morphsuite.errors import (
    CombinatorialCap,
    EmptyAffix,
    NoNegativeAvailable,
    UnsupportedStrategy,
)
from morphsuite.rng import make_rng


def word(root, suffixes, prefixes=(), language="turkish", **kwargs):
    affixes = [Affix(f, "prefix", i) for i, f in enumerate(prefixes)]
    affixes += [Affix(f, "suffix", i) for i, f in enumerate(suffixes)]
    gold = "".join(prefixes) + root + "".join(suffixes)
    return SegmentedWord(
        record_id=f"t-{root}",
        language_id=language,
        root=root,
        affixes=affixes,
        gold_surface=gold,
        **kwargs,
    )


def test_compose_fixtures():
    assert derive.compose("sohbet", [Affix("ler")]) == "sohbetler"
    fi = word("olosuhte", ["i", "lta", "an"], prefixes=["kuvaus"], language="finnish")
    assert derive.compose("olosuhte", fi.affixes) == "kuvausolosuhteiltaan"
    assert derive.compose("değer", []) == "değer"


def test_compose_rejects_empty_affix():
    with pytest.raises(EmptyAffix):
        derive.compose("x", [Affix("")])


@given(
    st.text(alphabet="abcde", min_size=1, max_size=6),
    st.lists(st.text(alphabet="xyz", min_size=1, max_size=3), max_size=4),
    st.lists(st.text(alphabet="uvw", min_size=1, max_size=3), max_size=4),
)
def test_compose_length_additive(root, prefixes, suffixes):
    w = word(root, suffixes, prefixes=prefixes)
    surface = derive.compose(root, w.affixes)
    assert len(surface) == len(root) + sum(len(a.form) for a in w.affixes)
    assert surface == "".join(prefixes) + root + "".join(suffixes)


def test_enumerate_orderings_counts():
    w = word("sıra", ["dan", "mış"])
    cands = derive.enumerate_orderings(w)
    assert {c.surface for c in cands} == {"sıradanmış", "sıramışdan"}
    assert sum(c.is_gold for c in cands) == 1

    w = word("değer", ["len", "dir", "ip"])
    cands = derive.enumerate_orderings(w)
    assert len(cands) == 6
    assert sum(c.is_gold for c in cands) == 1

    w = word("palvelu", ["j", "a"], prefixes=["laina", "n", "välitys"], language="finnish")
    cands = derive.enumerate_orderings(w)
    assert len(cands) == 12
    surfaces = {c.surface for c in cands}
    assert "lainanvälityspalveluja" in surfaces  # gold
    assert "nlainavälityspalveluja" in surfaces
    assert "lainanvälityspalveluaj" in surfaces


def test_enumerate_orderings_dedups_duplicate_forms():
    w = word("hayal", ["ler", "im", "de", "ki", "ler", "i"])
    cands = derive.enumerate_orderings(w)
    assert len(cands) == math.factorial(6) // 2  # two identical 'ler'
    assert sum(c.is_gold for c in cands) == 1
    assert len({c.surface for c in cands}) == len(cands)


def test_enumerate_orderings_cap():
    w = word("kök", [str(i) for i in "abcdefgh"])  # 8! > 10080
    with pytest.raises(CombinatorialCap):
        derive.enumerate_orderings(w)


def test_sample_orderings_uniform_without_replacement():
    w = word("kök", list("abcdefgh"))
    cands = derive.sample_orderings(w, 200, make_rng(3))
    assert any(c.is_gold for c in cands)
    assert len({c.surface for c in cands}) == len(cands)
    assert len(cands) <= 200
    # every sampled ordering is a true permutation of the affixes
    for c in cands:
        assert sorted(c.suffix_order) == sorted(list("abcdefgh"))


def test_levenshtein_fixture():
    assert derive.levenshtein("sıradanmış", "sıramışdan") == 6


DEGER_REFERENCE_NEGATIVES = {
    "değeriplendir",
    "değerdirlenip",
    "değeripdirlen",
    "değerlenipdir",
}


def test_select_negatives_deger_tie_band():
    """The four reference negatives and the selected four must agree outside
    the distance tie band and both stay inside it."""
    w = word("değer", ["len", "dir", "ip"])
    cands = derive.enumerate_orderings(w)
    non_gold = {c.surface: c.levenshtein_to_gold for c in cands if not c.is_gold}
    assert len(non_gold) == 5

    distances = sorted(non_gold.values())
    kth = distances[3]
    forced = {s for s, d in non_gold.items() if d < kth}
    band = {s for s, d in non_gold.items() if d == kth}

    assert forced <= DEGER_REFERENCE_NEGATIVES
    assert DEGER_REFERENCE_NEGATIVES - forced <= band

    selected = {c.surface for c in derive.select_negatives(w, "lang_agnostic", 4)}
    assert len(selected) == 4
    assert forced <= selected
    assert selected - forced <= band


def test_select_negatives_distance_dominance():
    w = word("kişi", ["leş", "tir", "me", "si", "ne"])
    cands = derive.enumerate_orderings(w)
    selected = derive.select_negatives(w, "lang_agnostic", 4, candidates=cands)
    worst = max(c.levenshtein_to_gold for c in selected)
    excluded = [c for c in cands if not c.is_gold and c not in selected]
    assert all(c.levenshtein_to_gold >= worst for c in excluded)


def test_select_negatives_single_candidate():
    w = word("sıra", ["dan", "mış"])
    for strategy in ("random", "lang_agnostic", "lang_specific_tr"):
        negs = derive.select_negatives(w, strategy, 1, make_rng(1))
        assert [c.surface for c in negs] == ["sıramışdan"]


def test_select_negatives_manual_single_morpheme():
    w = word("sohbet", ["ler"], manual_negative_affix="yin")
    negs = derive.select_negatives(w, "lang_agnostic", 1)
    assert [c.surface for c in negs] == ["sohbetyin"]
    bare = word("sohbet", ["ler"])
    with pytest.raises(NoNegativeAvailable):
        derive.select_negatives(bare, "lang_agnostic", 1)


def test_select_negatives_random_is_subset_and_seeded():
    w = word("değer", ["len", "dir", "ip"])
    a = {c.surface for c in derive.select_negatives(w, "random", 4, make_rng(5))}
    b = {c.surface for c in derive.select_negatives(w, "random", 4, make_rng(5))}
    assert a == b
    assert len(a) == 4
    assert a <= {c.surface for c in derive.enumerate_orderings(w) if not c.is_gold}


def test_select_negatives_tr_heuristic_prefers_no_adjacent_vowels(turkish):
    from morphsuite.profiles import has_adjacent_vowels

    w = word("sınıf", ["lan", "dır", "ıl", "ma", "lar", "ı", "nı"])
    selected = derive.select_negatives(w, "lang_specific_tr", 4, profile=turkish)
    assert len(selected) == 4
    cands = derive.enumerate_orderings(w)
    smooth_pool = [
        c for c in cands if not c.is_gold and not has_adjacent_vowels(c.surface, turkish)
    ]
    if len(smooth_pool) >= 4:
        assert all(not has_adjacent_vowels(c.surface, turkish) for c in selected)


def test_select_negatives_tr_heuristic_backfills(turkish):
    # Both non-gold orderings of two vowel-initial suffixes clash, so the
    # heuristic has to fall back to adjacent-vowel candidates.
    w = word("masa", ["ı", "a", "lar"])
    selected = derive.select_negatives(w, "lang_specific_tr", 4, profile=turkish)
    assert len(selected) == 4


def test_select_negatives_tr_heuristic_rejects_finnish():
    w = word("sano", ["taan", "pas"], language="finnish")
    with pytest.raises(UnsupportedStrategy):
        derive.select_negatives(w, "lang_specific_tr", 1)


def test_negatives_never_gold_or_known_valid():
    w = word("değer", ["len", "dir", "ip"], known_valid_alternatives={"değerlenipdir"})
    for strategy in ("random", "lang_agnostic"):
        negs = derive.select_negatives(w, strategy, 4, make_rng(7))
        surfaces = {c.surface for c in negs}
        assert "değerlendirip" not in surfaces
        assert "değerlenipdir" not in surfaces


@given(
    st.text(alphabet="aeklmnrst", min_size=2, max_size=5),
    st.lists(
        st.text(alphabet="aeklmnrst", min_size=1, max_size=3),
        min_size=2,
        max_size=4,
        unique=True,
    ),
)
def test_enumerate_matches_bruteforce(root, suffixes):
    w = word(root, suffixes)
    expected = {root + "".join(p) for p in permutations(suffixes)}
    got = {c.surface for c in derive.enumerate_orderings(w)}
    assert got == expected
