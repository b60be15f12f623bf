"""ARPABET phoneme inventory and normalization helpers.

The toolkit represents every pronunciation as a sequence of symbols from
the 39-phoneme ARPABET set used by the CMU pronouncing dictionary.  Stress
digits carried by vowels in dictionary entries (``EY1``, ``AH0``) are not
part of the inventory here; they are stripped on the way in so that all
downstream comparisons are stress-insensitive.
"""

from __future__ import annotations

VOWELS: frozenset[str] = frozenset(
    {
        "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
        "EY", "IH", "IY", "OW", "OY", "UH", "UW",
    }
)

CONSONANTS: frozenset[str] = frozenset(
    {
        "B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L", "M", "N",
        "NG", "P", "R", "S", "SH", "T", "TH", "V", "W", "Y", "Z", "ZH",
    }
)

PHONEMES: frozenset[str] = VOWELS | CONSONANTS

# Alignment gap marker used by the cost-matrix builder to record
# insertions and deletions.  It is not a phoneme and never appears in a
# pronunciation; it exists so indel costs can live in the same table as
# substitution costs.
GAP: str = "-"

# Canonical symbol ordering: real phonemes sorted alphabetically, gap last.
# Cost-matrix serialization and the vectorized scanner both rely on this
# order being stable across runs and versions.
SYMBOLS: tuple[str, ...] = tuple(sorted(PHONEMES)) + (GAP,)

SYMBOL_INDEX: dict[str, int] = {s: i for i, s in enumerate(SYMBOLS)}


def strip_stress(symbol: str) -> str:
    """Remove a trailing stress digit (0, 1, or 2) from a vowel symbol."""
    if symbol and symbol[-1] in "012":
        return symbol[:-1]
    return symbol


def is_phoneme(symbol: str) -> bool:
    """True if *symbol* is one of the 39 ARPABET phonemes (no stress digit)."""
    return symbol in PHONEMES


def is_vowel(symbol: str) -> bool:
    return symbol in VOWELS


def is_consonant(symbol: str) -> bool:
    return symbol in CONSONANTS


def normalize_pronunciation(symbols: list[str] | tuple[str, ...]) -> tuple[str, ...]:
    """Uppercase, strip stress digits, and validate a phoneme sequence.

    Raises ``ValueError`` naming the offending symbol if anything outside
    the 39-phoneme inventory remains after stress stripping.
    """
    out = []
    for raw in symbols:
        sym = strip_stress(raw.strip().upper())
        if sym not in PHONEMES:
            raise ValueError(f"not an ARPABET phoneme: {raw!r}")
        out.append(sym)
    return tuple(out)
