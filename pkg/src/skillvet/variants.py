"""Invocation-name variants an attacker could register.

Users decorate skill names when speaking to an assistant ("open sleep
sounds please", "play some relaxing sounds for me").  Because skill
markets route on longest string match, an attacker who registers the
decorated form hijacks those invocations.  This module generates the
decorated forms for a given name (prefix, suffix, and combined variants,
plus homophone word substitutions) and answers whether one name is such a
paraphrase of another.

Paraphrase matching also handles prefix absorption: a registered name
like "me a dog fact" carries no decoration by itself, but the spoken
command "tell me a dog fact" reconstructs the prefixed variant of "dog
fact".  Prepending each trigger word (the words assistants accept before
an invocation name) to a candidate and rechecking covers this case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import math

from .costmatrix import CostMatrix
from .distance import (
    EPSILON,
    min_banded_distance_over,
    min_distance_over,
)
from .prondict import (
    DEFAULT_CROSS_PRODUCT_CAP,
    Phonemizer,
    PronouncingDictionary,
    normalize_text,
    phonemize_word,
)

PREFIX = "prefix"
SUFFIX = "suffix"
BOTH = "both"
HOMOPHONE = "homophone"

DEFAULT_PREFIXES: tuple[str, ...] = (
    "my", "the", "some", "a", "me a", "me the",
    "tell me a", "play some", "open the", "start my", "mai",
)
DEFAULT_SUFFIXES: tuple[str, ...] = (
    "please", "app", "skill", "for me", "plese", "to",
)

# Words assistants accept between the wake word and an invocation name.
# Used only for prefix absorption in paraphrase_match.
TRIGGER_WORDS: tuple[str, ...] = ("open", "ask", "tell", "play", "start")


class Variant(NamedTuple):
    """A decorated or sound-alike form of a base invocation name."""

    text: str
    kind: str
    source: str


def _clean_entries(entries: Iterable[str], label: str) -> tuple[str, ...]:
    cleaned = []
    for entry in entries:
        norm = normalize_text(entry)
        if not norm:
            raise ValueError(f"empty {label} entry: {entry!r}")
        cleaned.append(norm)
    return tuple(cleaned)


@dataclass(frozen=True)
class VariantConfig:
    """Ordered prefix and suffix word lists used to decorate names.

    Entries are normalized (lowercased, punctuation stripped, whitespace
    collapsed) on construction; an entry that normalizes to nothing is a
    configuration error.
    """

    prefixes: tuple[str, ...] = field(default=DEFAULT_PREFIXES)
    suffixes: tuple[str, ...] = field(default=DEFAULT_SUFFIXES)

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefixes", _clean_entries(self.prefixes, "prefix"))
        object.__setattr__(self, "suffixes", _clean_entries(self.suffixes, "suffix"))

    @classmethod
    def from_dict(cls, data: dict) -> "VariantConfig":
        return cls(
            prefixes=tuple(data.get("prefixes", DEFAULT_PREFIXES)),
            suffixes=tuple(data.get("suffixes", DEFAULT_SUFFIXES)),
        )

    def to_dict(self) -> dict:
        return {"prefixes": list(self.prefixes), "suffixes": list(self.suffixes)}

    @classmethod
    def from_file(cls, path: str) -> "VariantConfig":
        """Load from a TOML or JSON file, chosen by extension."""
        if path.endswith(".toml"):
            import tomli

            with open(path, "rb") as fh:
                return cls.from_dict(tomli.load(fh))
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def generate_variants(name: str, cfg: VariantConfig) -> list[Variant]:
    """Decorated forms of *name*: prefixed, suffixed, and both.

    Emitted in a fixed order (all prefix forms in config order, then all
    suffix forms, then prefix x suffix with the prefix loop outermost)
    and deduplicated by text, keeping the first occurrence.
    """
    base = normalize_text(name)
    if not base:
        raise ValueError(f"invocation name is empty after normalization: {name!r}")
    out: list[Variant] = []
    seen: set[str] = set()

    def emit(text: str, kind: str) -> None:
        if text not in seen:
            seen.add(text)
            out.append(Variant(text, kind, base))

    for p in cfg.prefixes:
        emit(f"{p} {base}", PREFIX)
    for s in cfg.suffixes:
        emit(f"{base} {s}", SUFFIX)
    for p in cfg.prefixes:
        for s in cfg.suffixes:
            emit(f"{p} {base} {s}", BOTH)
    return out


def homophone_variants(
    name: str,
    dictionary: PronouncingDictionary,
    matrix: CostMatrix,
    bound: float,
    lexicon: Optional[Iterable[str]] = None,
) -> list[Variant]:
    """Single-word substitutions by similarly pronounced words.

    For each word of *name*, every *lexicon* word (default: the whole
    dictionary) whose best pronunciation distance to it is at most
    *bound* yields one variant with that word swapped in.  Identical
    spellings are excluded.  Output order: word position, then candidate
    word alphabetically.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    base = normalize_text(name)
    if not base:
        raise ValueError(f"invocation name is empty after normalization: {name!r}")
    words = base.split()
    if lexicon is None:
        candidates = [w.lower() for w in dictionary.words()]
    else:
        candidates = sorted({normalize_text(w) for w in lexicon} - {""})
    out: list[Variant] = []
    for i, word in enumerate(words):
        word_prons = phonemize_word(word, dictionary)
        if not word_prons:
            continue
        for cand in candidates:
            if cand == word or " " in cand:
                continue
            cand_prons = phonemize_word(cand, dictionary)
            if not cand_prons:
                continue
            d = min_banded_distance_over(word_prons, cand_prons, matrix, bound)
            if d <= bound + EPSILON:
                text = " ".join(words[:i] + [cand] + words[i + 1 :])
                out.append(Variant(text, HOMOPHONE, base))
    return out


def paraphrase_candidate_texts(candidate: str) -> list[str]:
    """The candidate itself plus each trigger-word-absorbed reading of it."""
    base = normalize_text(candidate)
    return [base] + [f"{t} {base}" for t in TRIGGER_WORDS]


def paraphrase_distance(
    candidate: str,
    target: str,
    cfg: VariantConfig,
    dictionary: PronouncingDictionary,
    matrix: CostMatrix,
    bound: float,
    phonemizer: Optional[Phonemizer] = None,
    banded: bool = True,
) -> float:
    """Best phonetic distance from *candidate* to any variant of *target*.

    Considers the candidate itself and each trigger-word-absorbed reading
    of it against every generated variant of *target*.  With ``banded``
    the search is pruned to distances at most *bound* and ``math.inf``
    stands for "all variants farther than *bound*"; without it the true
    minimum is computed regardless of *bound* (used by the exhaustive
    scan oracle).
    """
    if phonemizer is None:
        phonemizer = Phonemizer(dictionary)
    variants = generate_variants(target, cfg)
    best = math.inf
    if not variants:
        return best
    variant_prons = [phonemizer.phrase(v.text) for v in variants]
    for text in paraphrase_candidate_texts(candidate):
        cand_prons = phonemizer.phrase(text)
        if not cand_prons:
            continue
        for prons in variant_prons:
            if not prons:
                continue
            if banded:
                d = min_banded_distance_over(cand_prons, prons, matrix, bound)
            else:
                d = min_distance_over(cand_prons, prons, matrix)
            if d < best:
                best = d
    return best


def paraphrase_match(
    candidate: str,
    target: str,
    cfg: VariantConfig,
    dictionary: PronouncingDictionary,
    matrix: CostMatrix,
    bound: float,
    cap: int = DEFAULT_CROSS_PRODUCT_CAP,
) -> bool:
    """True if *candidate* sounds like a decorated variant of *target*.

    A match means some generated variant of *target* lies within *bound*
    phonetic distance of *candidate*, or of a trigger word prepended to
    *candidate* (prefix absorption: "me a dog fact" spoken as "tell me a
    dog fact" reconstructs the "tell me a" variant of "dog fact").
    """
    d = paraphrase_distance(
        candidate,
        target,
        cfg,
        dictionary,
        matrix,
        bound,
        phonemizer=Phonemizer(dictionary, cap=cap),
    )
    return d <= bound + EPSILON
