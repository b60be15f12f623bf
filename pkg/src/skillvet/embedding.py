"""Sentence relevance: pluggable sentence embeddings plus cosine similarity.

Sentence relevance (SR) between two texts is the absolute cosine
similarity of their embedding vectors, with SR defined as 0 when either
vector is zero.  The detector modules only require the provider
interface (``embed`` and ``dimension``); the built-in baseline is a
deterministic hashed bag of unigrams and bigrams:

- lowercase, tokenize on non-alphanumeric boundaries,
- drop a fixed stop-word list, strip a fixed suffix table,
- hash each token and each adjacent-token bigram into 4096 bins with a
  versioned seed baked into the hashed bytes,
- weight each distinct gram by 1 + ln(term frequency).

The baseline needs no model files and gives identical vectors across
processes, which is what the corpus tests and calibration procedure
rely on.  A learned encoder can be swapped in through the registry
without touching downstream code.
"""

from __future__ import annotations

import math
import re
import zlib
from typing import Iterable, Protocol

import numpy as np

HASH_VERSION = 1
DEFAULT_DIMENSION = 4096

_TOKEN_RE = re.compile(r"[a-z0-9]+")

STOP_WORDS = frozenset(
    """
    a an the and or but not no nor of to in on at by for with from as if
    than then that this these those is are was were be been being am do
    does did doing have has had having i you he she it we they me him
    her us them my your his its our their mine yours so too very just
    can could will would shall should may might must
    what which when where who whom how why some
    s t d ll m re ve
    """.split()
)

# Applied once, longest suffix first; the stem keeps at least 3 letters.
_SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("ingly", ""),
    ("edly", ""),
    ("fully", "ful"),
    ("ness", ""),
    ("ments", "ment"),
    ("ing", ""),
    ("ions", "ion"),
    ("ies", "y"),
    ("ers", "er"),
    ("ed", ""),
    ("ly", ""),
    ("es", ""),
    ("s", ""),
)


def stem(token: str) -> str:
    """Fixed suffix-stripping stemmer; one rule application per token."""
    for suffix, replacement in _SUFFIX_RULES:
        if token.endswith(suffix) and len(token) - len(suffix) >= 3:
            return token[: len(token) - len(suffix)] + replacement
    return token


def tokenize(text: str) -> list[str]:
    """Lowercased, stop-word-filtered, stemmed tokens of *text*."""
    return [
        stem(tok)
        for tok in _TOKEN_RE.findall(text.lower())
        if tok not in STOP_WORDS
    ]


class SentenceVector:
    """A fixed-dimension embedding with its Euclidean norm cached."""

    __slots__ = ("values", "norm")

    def __init__(self, values: np.ndarray):
        self.values = np.asarray(values, dtype=np.float64)
        self.norm = float(np.linalg.norm(self.values))


class EmbeddingProvider(Protocol):
    dimension: int

    def embed(self, text: str) -> SentenceVector: ...


class HashedBagEmbedding:
    """Deterministic hashed unigram+bigram bag-of-words embedding."""

    def __init__(
        self, dimension: int = DEFAULT_DIMENSION, hash_version: int = HASH_VERSION
    ):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        self.dimension = dimension
        self.hash_version = hash_version
        self._prefix = f"v{hash_version}:".encode("ascii")

    def bin_of(self, gram: str) -> int:
        """Hash bin of one unigram or space-joined bigram."""
        return zlib.crc32(self._prefix + gram.encode("utf-8")) % self.dimension

    def grams(self, text: str) -> list[str]:
        tokens = tokenize(text)
        return tokens + [f"{a} {b}" for a, b in zip(tokens, tokens[1:])]

    def embed(self, text: str) -> SentenceVector:
        values = np.zeros(self.dimension, dtype=np.float64)
        counts: dict[str, int] = {}
        for gram in self.grams(text):
            counts[gram] = counts.get(gram, 0) + 1
        for gram, count in counts.items():
            values[self.bin_of(gram)] += 1.0 + math.log(count)
        return SentenceVector(values)


_PROVIDERS = {"baseline": HashedBagEmbedding}


def make_provider(name: str = "baseline", **kwargs) -> EmbeddingProvider:
    """Instantiate a registered embedding provider by config key."""
    try:
        cls = _PROVIDERS[name]
    except KeyError:
        known = ", ".join(sorted(_PROVIDERS))
        raise ValueError(f"unknown embedding provider {name!r} (known: {known})")
    return cls(**kwargs)


def vector_relevance(a: SentenceVector, b: SentenceVector) -> float:
    """Absolute cosine similarity, 0 if either vector is zero."""
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    cos = float(np.dot(a.values, b.values)) / (a.norm * b.norm)
    return min(abs(cos), 1.0)


def sentence_relevance(a: str, b: str, provider: EmbeddingProvider) -> float:
    """SR of two texts: absolute cosine of their embeddings, in [0, 1]."""
    return vector_relevance(provider.embed(a), provider.embed(b))


def max_relevance(text: str, references: Iterable[str], provider: EmbeddingProvider) -> float:
    """Highest SR of *text* against any of *references* (0 if none)."""
    vec = provider.embed(text)
    best = 0.0
    for ref in references:
        best = max(best, vector_relevance(vec, provider.embed(ref)))
    return best
