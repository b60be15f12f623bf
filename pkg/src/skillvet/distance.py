"""Weighted phonetic edit distance between pronunciations and phrases.

The distance between two phoneme sequences is the cheapest global
alignment under a :class:`~skillvet.costmatrix.CostMatrix`: matches are
free, substitutions cost ``WC(a, b)``, and indels cost the symbol's cost
against the gap.  Confusable pairs therefore pull distances down, which is
what lets "cat fax" land close to "cat facts" while "cat map" stays far.

Phrases compare as the minimum distance over the cross product of their
phonemizations, so any pronunciation of one name sounding like any
pronunciation of the other counts.

All threshold comparisons in the package use :data:`EPSILON` slack so a
distance that is mathematically equal to the threshold is never dropped
by floating-point noise.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .arpabet import GAP, SYMBOL_INDEX
from .costmatrix import CostMatrix
from .prondict import (
    DEFAULT_CROSS_PRODUCT_CAP,
    PronouncingDictionary,
    phonemize_phrase,
)

EPSILON = 1e-9


def _indices(phonemes: Sequence[str]) -> list[int]:
    return [SYMBOL_INDEX[p] for p in phonemes]


def weighted_distance(p1: Sequence[str], p2: Sequence[str], matrix: CostMatrix) -> float:
    """Cheapest global alignment cost of two phoneme sequences."""
    m, n = len(p1), len(p2)
    values = matrix.values
    gap = SYMBOL_INDEX[GAP]
    i1, i2 = _indices(p1), _indices(p2)
    indel1 = values[i1, gap] if m else np.empty(0)
    indel2 = values[i2, gap] if n else np.empty(0)
    sub = values[np.ix_(i1, i2)] if m and n else None

    prev = np.concatenate(([0.0], np.cumsum(indel2))) if n else np.zeros(1)
    prev = list(prev)
    for i in range(m):
        cur = [prev[0] + indel1[i]]
        sub_row = sub[i] if n else ()
        for j in range(n):
            cur.append(
                min(
                    prev[j] + sub_row[j],
                    prev[j + 1] + indel1[i],
                    cur[j] + indel2[j],
                )
            )
        prev = cur
    return float(prev[n])


def length_lower_bound(p1: Sequence[str], p2: Sequence[str], matrix: CostMatrix) -> float:
    """Cheap lower bound: the length gap forces that many indels."""
    return abs(len(p1) - len(p2)) * matrix.min_indel_cost()


def banded_distance_at_most(
    p1: Sequence[str], p2: Sequence[str], matrix: CostMatrix, bound: float
) -> float:
    """Exact weighted distance if it is at most *bound*, else ``math.inf``.

    Any cell (i, j) of the alignment table needs at least
    ``|j - i| + |(n - m) - (j - i)|`` indels on a path through it, each
    costing at least the matrix's minimum off-diagonal cost.  Cells where
    that lower bound exceeds *bound* cannot lie on a qualifying path, so
    the computation stays inside a diagonal band.  Distances at most
    *bound* are therefore returned exactly; ``math.inf`` only certifies
    "greater than *bound*", not a value.
    """
    m, n = len(p1), len(p2)
    c_min = matrix.min_nonmatch_cost()
    d_shift = n - m
    if abs(d_shift) * matrix.min_indel_cost() > bound + EPSILON:
        return math.inf
    if c_min > 0:
        if c_min * abs(d_shift) > bound + EPSILON:
            return math.inf
        halfwidth = int((bound + EPSILON) / c_min - abs(d_shift)) // 2
    else:
        halfwidth = max(m, n)
    lo_diag = min(0, d_shift) - halfwidth
    hi_diag = max(0, d_shift) + halfwidth

    values = matrix.values
    gap = SYMBOL_INDEX[GAP]
    i1, i2 = _indices(p1), _indices(p2)
    indel1 = [float(values[k, gap]) for k in i1]
    indel2 = [float(values[k, gap]) for k in i2]

    inf = math.inf
    prev = [inf] * (n + 1)
    prev[0] = 0.0
    total = 0.0
    for j in range(1, min(n, hi_diag) + 1):
        total += indel2[j - 1]
        prev[j] = total
    for i in range(1, m + 1):
        cur = [inf] * (n + 1)
        j_lo = max(0, i + lo_diag)
        j_hi = min(n, i + hi_diag)
        if j_lo > j_hi:
            return inf
        if j_lo == 0:
            cur[0] = prev[0] + indel1[i - 1]
            j_lo = 1
        row1 = values[i1[i - 1]]
        best = cur[0]
        for j in range(j_lo, j_hi + 1):
            c = min(
                prev[j - 1] + row1[i2[j - 1]],
                prev[j] + indel1[i - 1],
                cur[j - 1] + indel2[j - 1],
            )
            cur[j] = c
            if c < best:
                best = c
        if best > bound + EPSILON:
            return inf
        prev = cur
    result = prev[n]
    if result > bound + EPSILON:
        return inf
    return float(result)


def min_distance_over(
    prons1: Sequence[Sequence[str]],
    prons2: Sequence[Sequence[str]],
    matrix: CostMatrix,
) -> float:
    """Minimum weighted distance over all pronunciation pairs."""
    best = math.inf
    for a in prons1:
        for b in prons2:
            d = weighted_distance(a, b, matrix)
            if d < best:
                best = d
                if best == 0.0:
                    return 0.0
    return best


def min_banded_distance_over(
    prons1: Sequence[Sequence[str]],
    prons2: Sequence[Sequence[str]],
    matrix: CostMatrix,
    bound: float,
) -> float:
    """Minimum over pronunciation pairs, bounded; ``math.inf`` if all exceed."""
    best = math.inf
    for a in prons1:
        for b in prons2:
            d = banded_distance_at_most(a, b, matrix, bound)
            if d < best:
                best = d
                if best == 0.0:
                    return 0.0
    return best


def phrase_distance(
    phrase1: str,
    phrase2: str,
    dictionary: PronouncingDictionary,
    matrix: CostMatrix,
    cap: int = DEFAULT_CROSS_PRODUCT_CAP,
) -> float:
    """Minimum weighted distance between any phonemizations of two phrases."""
    prons1 = phonemize_phrase(phrase1, dictionary, cap=cap)
    prons2 = phonemize_phrase(phrase2, dictionary, cap=cap)
    if not prons1 or not prons2:
        return math.inf
    return min_distance_over(prons1, prons2, matrix)
