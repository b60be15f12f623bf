import pytest

from skillvet.arpabet import (
    CONSONANTS,
    GAP,
    PHONEMES,
    SYMBOL_INDEX,
    SYMBOLS,
    VOWELS,
    is_consonant,
    is_phoneme,
    is_vowel,
    normalize_pronunciation,
    strip_stress,
)


def test_inventory_size():
    assert len(VOWELS) == 15
    assert len(CONSONANTS) == 24
    assert len(PHONEMES) == 39
    assert not VOWELS & CONSONANTS


def test_symbols_order_is_sorted_phonemes_then_gap():
    assert SYMBOLS[-1] == GAP
    assert list(SYMBOLS[:-1]) == sorted(PHONEMES)
    assert len(SYMBOLS) == 40
    assert all(SYMBOL_INDEX[s] == i for i, s in enumerate(SYMBOLS))


def test_gap_is_not_a_phoneme():
    assert not is_phoneme(GAP)
    assert not is_vowel(GAP)
    assert not is_consonant(GAP)


@pytest.mark.parametrize(
    "raw,expected",
    [("EY1", "EY"), ("AH0", "AH"), ("OW2", "OW"), ("K", "K"), ("", "")],
)
def test_strip_stress(raw, expected):
    assert strip_stress(raw) == expected


def test_normalize_pronunciation_strips_and_validates():
    assert normalize_pronunciation(["t", "AH0", "m", "EY1", "t", "OW2"]) == (
        "T", "AH", "M", "EY", "T", "OW",
    )
    with pytest.raises(ValueError, match="QX"):
        normalize_pronunciation(["QX"])
    with pytest.raises(ValueError):
        normalize_pronunciation([GAP])


def test_class_predicates():
    assert is_vowel("AA") and not is_consonant("AA")
    assert is_consonant("ZH") and not is_vowel("ZH")
    assert is_phoneme("NG")
