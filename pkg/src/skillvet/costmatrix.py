"""Weighted phoneme-confusion costs learned from pronunciation variants.

Words with several accepted pronunciations ("tomato", "either", "data")
show which phonemes speakers actually exchange.  Aligning each variant
pair under uniform costs and counting what the paths contain yields, for
phonemes a and b:

- F(a): occurrences of a across all aligned paths (matches count on both
  sides, so a match of a with itself adds 2),
- SF(a, b): substitutions of a by b (directed; indels are substitutions
  with the gap symbol).

The weighted cost is then ``WC(a, b) = 1 - (SF(a, b) + SF(b, a)) /
(F(a) + F(b))``: frequently exchanged pairs become cheap, never-exchanged
pairs cost 1.  The diagonal is 0 and the result is symmetric.  Because a
directed substitution adds one occurrence to each side, off-diagonal
costs never fall below 0.5.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .alignment import DELETE, INSERT, MATCH, SUBSTITUTE, AlignmentOp, align_uniform
from .arpabet import GAP, SYMBOL_INDEX, SYMBOLS
from .prondict import PronouncingDictionary

FORMAT_VERSION = 1


@dataclass
class PhonemeStatistics:
    """Accumulated path counts: symbol frequencies and substitution pairs."""

    frequency: Counter = field(default_factory=Counter)
    substitution_frequency: Counter = field(default_factory=Counter)
    pair_count: int = 0

    def accumulate(self, ops: tuple[AlignmentOp, ...]) -> None:
        """Fold one alignment path into the counts."""
        freq = self.frequency
        subst = self.substitution_frequency
        for op, a, b in ops:
            if op == MATCH:
                freq[a] += 2
            elif op == SUBSTITUTE:
                freq[a] += 1
                freq[b] += 1
                subst[(a, b)] += 1
            elif op == DELETE:
                freq[a] += 1
                freq[GAP] += 1
                subst[(a, GAP)] += 1
            elif op == INSERT:
                freq[GAP] += 1
                freq[b] += 1
                subst[(GAP, b)] += 1
            else:
                raise ValueError(f"unknown alignment op: {op!r}")


def collect_statistics(dictionary: PronouncingDictionary) -> PhonemeStatistics:
    """Align every variant pair of every word and accumulate path counts.

    Each unordered pair of pronunciations is aligned once, first listed
    against second listed, so reruns produce identical counts.
    """
    stats = PhonemeStatistics()
    for word in sorted(dictionary.entries):
        prons = dictionary.entries[word]
        for i in range(len(prons)):
            for j in range(i + 1, len(prons)):
                _cost, ops = align_uniform(prons[i], prons[j])
                stats.accumulate(ops)
                stats.pair_count += 1
    return stats


class CostMatrix:
    """Symmetric substitution/indel cost table over the 40 alignment symbols.

    ``values[i, j]`` is the cost of aligning ``SYMBOLS[i]`` with
    ``SYMBOLS[j]``; row and column for the gap symbol hold indel costs.
    """

    def __init__(self, values: np.ndarray, pair_count: int = 0):
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (len(SYMBOLS), len(SYMBOLS)):
            raise ValueError(f"expected {(len(SYMBOLS), len(SYMBOLS))} matrix, got {values.shape}")
        self.values = values
        self.pair_count = pair_count
        self._min_indel: float | None = None
        self._min_nonmatch: float | None = None

    def cost(self, a: str, b: str) -> float:
        """Cost of aligning symbol *a* with symbol *b* (gap allowed)."""
        return float(self.values[SYMBOL_INDEX[a], SYMBOL_INDEX[b]])

    def indel_cost(self, a: str) -> float:
        return self.cost(a, GAP)

    def min_indel_cost(self) -> float:
        if self._min_indel is None:
            gap = SYMBOL_INDEX[GAP]
            col = np.delete(self.values[:, gap], gap)
            self._min_indel = float(col.min())
        return self._min_indel

    def min_nonmatch_cost(self) -> float:
        """Smallest off-diagonal cost; the per-edit lower bound for pruning."""
        if self._min_nonmatch is None:
            off = self.values[~np.eye(len(SYMBOLS), dtype=bool)]
            self._min_nonmatch = float(off.min())
        return self._min_nonmatch

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CostMatrix) and np.array_equal(self.values, other.values)

    # --- serialization ---

    def to_text(self) -> str:
        body_lines = ["\t" + "\t".join(SYMBOLS)]
        for i, sym in enumerate(SYMBOLS):
            cells = "\t".join(repr(float(v)) for v in self.values[i])
            body_lines.append(f"{sym}\t{cells}")
        body = "\n".join(body_lines) + "\n"
        digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
        header = (
            f"# cost-matrix format {FORMAT_VERSION}\n"
            f"# pairs {self.pair_count}\n"
            f"# checksum sha256:{digest}\n"
        )
        return header + body

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())

    @classmethod
    def from_text(cls, text: str) -> "CostMatrix":
        lines = text.splitlines()
        meta: dict[str, str] = {}
        body_start = 0
        for i, line in enumerate(lines):
            if not line.startswith("#"):
                body_start = i
                break
            key, _, value = line[1:].strip().partition(" ")
            meta[key] = value
        else:
            raise ValueError("cost matrix text has no body")
        if meta.get("cost-matrix") != f"format {FORMAT_VERSION}":
            raise ValueError(f"unsupported cost matrix format: {meta.get('cost-matrix')!r}")
        body = "\n".join(lines[body_start:]) + "\n"
        expected = meta.get("checksum", "")
        digest = "sha256:" + hashlib.sha256(body.encode("utf-8")).hexdigest()
        if expected and expected != digest:
            raise ValueError("cost matrix checksum mismatch; file corrupted or edited")
        header = lines[body_start].split("\t")
        if header[1:] != list(SYMBOLS):
            raise ValueError("cost matrix symbol header does not match the ARPABET inventory")
        values = np.ones((len(SYMBOLS), len(SYMBOLS)), dtype=np.float64)
        for line in lines[body_start + 1 :]:
            if not line.strip():
                continue
            cells = line.split("\t")
            sym = cells[0]
            if sym not in SYMBOL_INDEX or len(cells) != len(SYMBOLS) + 1:
                raise ValueError(f"malformed cost matrix row: {line!r}")
            values[SYMBOL_INDEX[sym]] = [float(c) for c in cells[1:]]
        pair_count = int(meta.get("pairs", "0"))
        return cls(values, pair_count=pair_count)

    @classmethod
    def load(cls, path: str) -> "CostMatrix":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def build_matrix_from_statistics(stats: PhonemeStatistics) -> CostMatrix:
    """Apply the weighted-cost formula; unobserved pairs cost 1."""
    n = len(SYMBOLS)
    values = np.ones((n, n), dtype=np.float64)
    freq = stats.frequency
    subst = stats.substitution_frequency
    for i, a in enumerate(SYMBOLS):
        values[i, i] = 0.0
        for j in range(i + 1, n):
            b = SYMBOLS[j]
            exchanged = subst.get((a, b), 0) + subst.get((b, a), 0)
            total = freq.get(a, 0) + freq.get(b, 0)
            if exchanged == 0 or total == 0:
                continue
            cost = 1.0 - exchanged / total
            cost = min(1.0, max(0.0, cost))
            values[i, j] = cost
            values[j, i] = cost
    return CostMatrix(values, pair_count=stats.pair_count)


def build_matrix(dictionary: PronouncingDictionary) -> CostMatrix:
    """Learn a cost matrix from a pronouncing dictionary's variant pairs."""
    return build_matrix_from_statistics(collect_statistics(dictionary))
