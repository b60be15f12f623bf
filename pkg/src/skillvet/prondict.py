"""Pronouncing dictionary: CMU-format parsing and phrase phonemization.

Entries follow the CMU pronouncing dictionary layout::

    TOMATO  T AH0 M EY1 T OW2
    TOMATO(1)  T AH0 M AA1 T OW2
    ;;; comment

A parenthesized index marks an alternative pronunciation of an earlier
headword; alternatives are merged into a single entry whose pronunciations
keep file order (base form first).  Stress digits are stripped at parse
time, so every stored pronunciation is a tuple of plain ARPABET symbols.

Words missing from the dictionary fall back to a rule-based
letter-to-phoneme guesser.  The guess is deterministic and often wrong in
exactly the way a naive reader would be wrong, which is the property the
rest of the toolkit needs: two spellings of the same sound should map to
nearby phoneme strings even when neither is in the dictionary.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass, field
from importlib import resources

from .arpabet import PHONEMES, strip_stress

logger = logging.getLogger(__name__)

Pronunciation = tuple[str, ...]

_ENTRY_RE = re.compile(r"^(?P<word>[^\s(]+)(?:\((?P<variant>\d+)\))?\s+(?P<phones>\S.*)$")

# Default ceiling on the number of phonemizations returned for a phrase.
# Without a ceiling a phrase of n words with k pronunciations each yields
# k**n candidates and the all-pairs scanner degrades combinatorially.
DEFAULT_CROSS_PRODUCT_CAP = 64


class DictionaryParseError(ValueError):
    """Malformed dictionary input; carries the 1-based source line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass
class PronouncingDictionary:
    """Word -> ordered pronunciations, with CMU-format round-tripping."""

    entries: dict[str, tuple[Pronunciation, ...]] = field(default_factory=dict)

    def lookup(self, word: str) -> tuple[Pronunciation, ...]:
        """All pronunciations for *word* (case-insensitive); empty if unknown."""
        return self.entries.get(word.upper(), ())

    def __contains__(self, word: str) -> bool:
        return word.upper() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def words(self) -> list[str]:
        return sorted(self.entries)

    def to_lines(self) -> list[str]:
        """Serialize back to CMU format, regenerating variant markers."""
        lines = []
        for word in sorted(self.entries):
            for i, pron in enumerate(self.entries[word]):
                marker = f"({i})" if i else ""
                lines.append(f"{word}{marker}  {' '.join(pron)}")
        return lines

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(self.to_lines()) + "\n")


def parse_dictionary(lines, strict: bool = True) -> PronouncingDictionary:
    """Parse CMU-format *lines* into a :class:`PronouncingDictionary`.

    In strict mode any malformed line (bad phoneme, missing pronunciation,
    variant marker without a base entry, duplicate entry) raises
    :class:`DictionaryParseError` naming the line.  In lenient mode such
    lines are skipped with a logged warning.
    """
    base: dict[str, Pronunciation] = {}
    variants: dict[str, list[tuple[int, int, Pronunciation]]] = {}

    def fail(lineno: int, message: str) -> None:
        if strict:
            raise DictionaryParseError(lineno, message)
        logger.warning("skipping dictionary line %d: %s", lineno, message)

    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith(";;;"):
            continue
        m = _ENTRY_RE.match(line.strip())
        if m is None:
            fail(lineno, f"unparseable entry: {line.strip()!r}")
            continue
        word = m.group("word").upper()
        phones = []
        bad = None
        for tok in m.group("phones").split():
            sym = strip_stress(tok.upper())
            if sym not in PHONEMES:
                bad = tok
                break
            phones.append(sym)
        if bad is not None:
            fail(lineno, f"unknown phoneme {bad!r} in entry for {word!r}")
            continue
        pron = tuple(phones)
        if m.group("variant") is None:
            if word in base:
                fail(lineno, f"duplicate entry for {word!r}")
                continue
            base[word] = pron
        else:
            index = int(m.group("variant"))
            if index < 1:
                fail(lineno, f"variant index must be >= 1 in entry for {word!r}")
                continue
            variants.setdefault(word, []).append((index, lineno, pron))

    entries: dict[str, tuple[Pronunciation, ...]] = {}
    for word, pron in base.items():
        prons = [pron]
        seen_indexes = set()
        for index, lineno, alt in sorted(variants.pop(word, [])):
            if index in seen_indexes:
                fail(lineno, f"duplicate variant ({index}) for {word!r}")
                continue
            seen_indexes.add(index)
            prons.append(alt)
        entries[word] = tuple(prons)
    for word, alts in variants.items():
        for _index, lineno, _alt in alts:
            fail(lineno, f"variant entry for {word!r} has no base entry")

    return PronouncingDictionary(entries)


def load_dictionary(path: str, strict: bool = True) -> PronouncingDictionary:
    with open(path, encoding="utf-8") as fh:
        return parse_dictionary(fh, strict=strict)


def load_default_dictionary() -> PronouncingDictionary:
    """Load the dictionary excerpt shipped with the package."""
    text = resources.files("skillvet.data").joinpath("mini_cmudict.txt").read_text("utf-8")
    return parse_dictionary(text.splitlines(), strict=True)


# --- letter-to-phoneme fallback -------------------------------------------

# Greedy longest-match letter groups, tried at widths 3, 2, 1.  The table
# favors the most common reading of each group; context-dependent spellings
# (final silent e, doubled consonants) get the light-touch handling below.
_LETTER_GROUPS: dict[str, Pronunciation] = {
    "igh": ("AY",),
    "tch": ("CH",),
    "dge": ("JH",),
    "que": ("K",),
    "ch": ("CH",), "sh": ("SH",), "th": ("TH",), "ph": ("F",),
    "wh": ("W",), "gh": ("G",), "ck": ("K",), "ng": ("NG",),
    "qu": ("K", "W"), "kn": ("N",), "wr": ("R",),
    "ee": ("IY",), "ea": ("IY",), "oo": ("UW",), "ou": ("AW",),
    "ow": ("AW",), "ai": ("EY",), "ay": ("EY",), "oa": ("OW",),
    "oi": ("OY",), "oy": ("OY",), "au": ("AO",), "aw": ("AO",),
    "ew": ("UW",), "ey": ("IY",), "ie": ("IY",), "ue": ("UW",),
    "ui": ("UW",), "ei": ("EY",), "oe": ("OW",),
    "ar": ("AA", "R"), "er": ("ER",), "ir": ("ER",),
    "or": ("AO", "R"), "ur": ("ER",),
    "bb": ("B",), "cc": ("K",), "dd": ("D",), "ff": ("F",),
    "gg": ("G",), "ll": ("L",), "mm": ("M",), "nn": ("N",),
    "pp": ("P",), "rr": ("R",), "ss": ("S",), "tt": ("T",),
    "zz": ("Z",),
    "a": ("AE",), "b": ("B",), "c": ("K",), "d": ("D",),
    "e": ("EH",), "f": ("F",), "g": ("G",), "h": ("HH",),
    "i": ("IH",), "j": ("JH",), "k": ("K",), "l": ("L",),
    "m": ("M",), "n": ("N",), "o": ("AA",), "p": ("P",),
    "q": ("K",), "r": ("R",), "s": ("S",), "t": ("T",),
    "u": ("AH",), "v": ("V",), "w": ("W",), "x": ("K", "S"),
    "y": ("Y",), "z": ("Z",),
}

_DIGIT_PHONEMES: dict[str, Pronunciation] = {
    "0": ("Z", "IH", "R", "OW"),
    "1": ("W", "AH", "N"),
    "2": ("T", "UW"),
    "3": ("TH", "R", "IY"),
    "4": ("F", "AO", "R"),
    "5": ("F", "AY", "V"),
    "6": ("S", "IH", "K", "S"),
    "7": ("S", "EH", "V", "AH", "N"),
    "8": ("EY", "T"),
    "9": ("N", "AY", "N"),
}


def g2p_fallback(word: str) -> Pronunciation:
    """Guess an ARPABET pronunciation for an out-of-vocabulary word.

    Greedy longest-match over the letter-group table, scanning left to
    right at widths 3, 2, then 1.  A final silent ``e`` is dropped when it
    follows a consonant letter.  Digits expand to their spoken forms;
    apostrophes and unknown characters are ignored.
    """
    text = word.lower()
    if (
        len(text) > 2
        and text.endswith("e")
        and text[-2] not in "aeiou"
        and not text.endswith(("dge", "que"))
    ):
        text = text[:-1]
    phones: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _DIGIT_PHONEMES:
            phones.extend(_DIGIT_PHONEMES[ch])
            i += 1
            continue
        for width in (3, 2, 1):
            group = text[i : i + width]
            if group in _LETTER_GROUPS:
                phones.extend(_LETTER_GROUPS[group])
                i += width
                break
        else:
            i += 1
    return tuple(phones)


# --- phrase phonemization ---------------------------------------------------

_TOKEN_RE = re.compile(r"[a-z0-9']+")


def normalize_text(text: str) -> str:
    """Lowercase, drop punctuation except apostrophes, collapse whitespace."""
    return " ".join(_TOKEN_RE.findall(text.lower()))


def phonemize_word(word: str, dictionary: PronouncingDictionary) -> tuple[Pronunciation, ...]:
    """Dictionary pronunciations for *word*, or the fallback guess if absent."""
    prons = dictionary.lookup(word)
    if prons:
        return prons
    guess = g2p_fallback(word)
    return (guess,) if guess else ()


class Phonemizer:
    """Memoizing phrase phonemizer bound to one dictionary and cap.

    Phrases phonemize as the cross product of their words'
    pronunciations.  When the full product would exceed the cap, each
    word keeps only its first few pronunciations under a left-to-right
    budget (earlier words keep more alternatives), so the result length
    never exceeds the cap and the primary pronunciation always survives.

    The all-pairs scanner phonemizes the same words and decorated
    phrases millions of times; the two caches here make that cheap.
    """

    def __init__(
        self,
        dictionary: PronouncingDictionary,
        cap: int = DEFAULT_CROSS_PRODUCT_CAP,
    ):
        if cap < 1:
            raise ValueError("cross-product cap must be >= 1")
        self.dictionary = dictionary
        self.cap = cap
        self._word_cache: dict[str, tuple[Pronunciation, ...]] = {}
        self._phrase_cache: dict[str, tuple[Pronunciation, ...]] = {}

    def word(self, word: str) -> tuple[Pronunciation, ...]:
        cached = self._word_cache.get(word)
        if cached is None:
            cached = phonemize_word(word, self.dictionary)
            self._word_cache[word] = cached
        return cached

    def phrase(self, phrase: str) -> tuple[Pronunciation, ...]:
        key = normalize_text(phrase)
        cached = self._phrase_cache.get(key)
        if cached is None:
            cached = self._phonemize(key.split())
            self._phrase_cache[key] = cached
        return cached

    def _phonemize(self, words: list[str]) -> tuple[Pronunciation, ...]:
        if not words:
            return ()
        per_word: list[tuple[Pronunciation, ...]] = []
        budget = 1
        for w in words:
            prons = self.word(w)
            if not prons:
                continue
            allowed = max(1, self.cap // budget)
            kept = prons[:allowed]
            per_word.append(kept)
            budget *= len(kept)
        if not per_word:
            return ()
        combos = itertools.product(*per_word)
        phrases = tuple(tuple(itertools.chain.from_iterable(c)) for c in combos)
        return phrases[: self.cap]


def phonemize_phrase(
    phrase: str,
    dictionary: PronouncingDictionary,
    cap: int = DEFAULT_CROSS_PRODUCT_CAP,
) -> tuple[Pronunciation, ...]:
    """All phonemizations of *phrase*, capped at *cap* candidates."""
    return Phonemizer(dictionary, cap=cap).phrase(phrase)
