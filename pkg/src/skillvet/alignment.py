"""Needleman-Wunsch alignment of phoneme sequences under uniform costs.

The cost-matrix builder learns phoneme confusability from optimal edit
paths between alternative pronunciations of the same word.  Those paths
come from this module: global alignment with match cost 0 and
substitution, insertion, and deletion cost 1.

Optimal alignments are frequently ambiguous.  The backtrace resolves ties
with a fixed preference order (match, then substitution, then deletion,
then insertion) so the same input always yields the same path and the
statistics built on top of it are reproducible.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

MATCH = "match"
SUBSTITUTE = "substitute"
DELETE = "delete"
INSERT = "insert"


class AlignmentOp(NamedTuple):
    """One aligned column: *a* from the first sequence, *b* from the second.

    ``a is None`` for insertions and ``b is None`` for deletions; both are
    set for matches and substitutions.
    """

    op: str
    a: Optional[str]
    b: Optional[str]


def uniform_distance(p1: Sequence[str], p2: Sequence[str]) -> int:
    """Levenshtein distance between two phoneme sequences."""
    m, n = len(p1), len(p2)
    if m < n:
        p1, p2, m, n = p2, p1, n, m
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        a = p1[i - 1]
        for j in range(1, n + 1):
            cur[j] = min(
                prev[j - 1] + (0 if a == p2[j - 1] else 1),
                prev[j] + 1,
                cur[j - 1] + 1,
            )
        prev = cur
    return prev[n]


def align_uniform(
    p1: Sequence[str], p2: Sequence[str]
) -> tuple[int, tuple[AlignmentOp, ...]]:
    """Globally align *p1* with *p2*; return (cost, ops).

    Cost counts non-match columns.  Deletions consume from *p1*,
    insertions from *p2*.  Among cost-equal paths the backtrace prefers
    match, then substitution, then deletion, then insertion, making the
    returned path deterministic.
    """
    m, n = len(p1), len(p2)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dp[i][0] = i
    for j in range(1, n + 1):
        dp[0][j] = j
    for i in range(1, m + 1):
        a = p1[i - 1]
        row = dp[i]
        prev = dp[i - 1]
        for j in range(1, n + 1):
            row[j] = min(
                prev[j - 1] + (0 if a == p2[j - 1] else 1),
                prev[j] + 1,
                row[j - 1] + 1,
            )

    ops: list[AlignmentOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            a, b = p1[i - 1], p2[j - 1]
            diag = dp[i - 1][j - 1]
            if a == b and dp[i][j] == diag:
                ops.append(AlignmentOp(MATCH, a, b))
                i, j = i - 1, j - 1
                continue
            if a != b and dp[i][j] == diag + 1:
                ops.append(AlignmentOp(SUBSTITUTE, a, b))
                i, j = i - 1, j - 1
                continue
        if i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            ops.append(AlignmentOp(DELETE, p1[i - 1], None))
            i -= 1
            continue
        ops.append(AlignmentOp(INSERT, None, p2[j - 1]))
        j -= 1
    ops.reverse()
    return dp[m][n], tuple(ops)
