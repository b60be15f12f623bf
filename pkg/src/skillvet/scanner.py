"""All-pairs catalog scan for competitive invocation names (CINs).

A CIN is an invocation name close enough to another skill's name to
capture its invocations.  The scan classifies every pair of distinct
normalized names under three relations:

- same-spelling: the normalized names are equal (reported for the skill
  pairs sharing the name; exclusive of the other relations),
- phonetic: best phrase distance at most the threshold,
- paraphrase: one name sounds like a decorated variant of the other
  (checked in both directions; reported on the extension side).

Findings are directed: ``skill_id`` names the skill whose invocation
name competes against ``competitor_id``'s.  A skill "has a CIN" when it
appears as a competitor, so report columns count distinct competitor
ids.

The scan is all-pairs in semantics but not in cost.  Chunked numpy
screens discard pairs whose distance provably exceeds the threshold
before any alignment runs:

- length gap times the cheapest indel cost,
- bigram coverage: 64-bit masks of phoneme-bigram hashes; k edit
  operations can introduce at most 2k new bigrams, so a pair survives
  only if the bigrams every pronunciation of one name must contain are
  nearly covered by the other side's,
- phoneme deficit: each phoneme the target needs but the candidate
  lacks must be created by some operation, and no operation creates
  more than one, so the deficit weighted by per-phoneme creation floors
  lower-bounds the cost.

For the paraphrase relation the candidate side is credited with the
phonemes and bigrams of whichever single trigger word it may absorb,
and the screens run per trigger rather than against their union.  All
budgets are derived from the cost matrix at runtime; a degenerate
matrix (zero-cost edits) disables pruning rather than corrupting it.
``prune=False`` runs the unscreened reference scan used by the
equivalence tests.
"""

from __future__ import annotations

import json
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .arpabet import GAP, SYMBOL_INDEX, SYMBOLS
from .catalog import SkillRecord
from .costmatrix import CostMatrix
from .distance import (
    EPSILON,
    min_banded_distance_over,
    min_distance_over,
    banded_distance_at_most,
    weighted_distance,
)
from .prondict import (
    DEFAULT_CROSS_PRODUCT_CAP,
    Phonemizer,
    PronouncingDictionary,
)
from .variants import (
    TRIGGER_WORDS,
    VariantConfig,
    generate_variants,
    paraphrase_candidate_texts,
)

logger = logging.getLogger(__name__)

SAME_SPELLING = "same-spelling"
PHONETIC = "phonetic"
PARAPHRASE = "paraphrase"

_CHUNK_ROWS = 128

if hasattr(np, "bitwise_count"):
    _popcount_u64 = np.bitwise_count
else:

    def _popcount_u64(a: np.ndarray) -> np.ndarray:
        b = np.ascontiguousarray(a, dtype=np.uint64).view(np.uint8)
        return np.unpackbits(b.reshape(a.shape + (8,)), axis=-1).sum(axis=-1)


@dataclass(frozen=True)
class CinFinding:
    """skill_id's invocation name competes against competitor_id's."""

    skill_id: str
    competitor_id: str
    relation: str
    cost: float

    def to_dict(self) -> dict:
        return {
            "skill_id": self.skill_id,
            "competitor_id": self.competitor_id,
            "relation": self.relation,
            "cost": self.cost,
        }


@dataclass
class ScanReport:
    threshold: float
    skill_count: int
    findings: list[CinFinding]
    excluded: tuple[str, ...] = ()

    def _competitor_counts(self, relations: Optional[set[str]] = None) -> Counter:
        pairs = {
            (f.skill_id, f.competitor_id)
            for f in self.findings
            if relations is None or f.relation in relations
        }
        return Counter(comp for _skill, comp in pairs)

    def to_dict(self) -> dict:
        by_relation = {
            rel: len(self._competitor_counts({rel}))
            for rel in (SAME_SPELLING, PHONETIC, PARAPHRASE)
        }
        competitors_per_skill = self._competitor_counts()
        affected = len(competitors_per_skill)
        avg = (
            sum(competitors_per_skill.values()) / affected if affected else 0.0
        )
        return {
            "threshold": self.threshold,
            "skill_count": self.skill_count,
            "skills_with_cin": {
                "any": affected,
                "excluding_same_spelling": len(
                    self._competitor_counts({PHONETIC, PARAPHRASE})
                ),
                "by_relation": by_relation,
            },
            "cins_per_affected_skill": {
                "avg": avg,
                "max": max(competitors_per_skill.values(), default=0),
            },
            "excluded_skills": list(self.excluded),
            "findings": [f.to_dict() for f in self.findings],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_table(self) -> str:
        d = self.to_dict()
        s = d["skills_with_cin"]
        lines = [
            f"threshold: {d['threshold']}",
            f"skills scanned: {d['skill_count']}",
            f"skills with CIN in market: {s['any']}",
            f"  excluding same spelling: {s['excluding_same_spelling']}",
            f"  by same-spelling: {s['by_relation'][SAME_SPELLING]}",
            f"  by phonetic distance: {s['by_relation'][PHONETIC]}",
            f"  by utterance paraphrasing: {s['by_relation'][PARAPHRASE]}",
            "CINs per affected skill: "
            f"avg {d['cins_per_affected_skill']['avg']:.2f}, "
            f"max {d['cins_per_affected_skill']['max']}",
            f"findings: {len(self.findings)}",
        ]
        if self.excluded:
            lines.append(f"excluded (not phonemizable): {', '.join(self.excluded)}")
        return "\n".join(lines) + "\n"


def _bag(pron: Sequence[str]) -> np.ndarray:
    return np.bincount(
        [SYMBOL_INDEX[s] for s in pron], minlength=len(SYMBOLS)
    ).astype(np.int16)


def _bigram_bit(a: str, b: str) -> int:
    h = SYMBOL_INDEX[a] * len(SYMBOLS) + SYMBOL_INDEX[b]
    return 1 << ((h * 2654435761) % 64)


def _bigram_bits(pron: Sequence[str]) -> int:
    bits = 0
    for a, b in zip(pron, pron[1:]):
        bits |= _bigram_bit(a, b)
    return bits


def _creation_floor(matrix: CostMatrix) -> np.ndarray:
    """Minimum cost of any operation that introduces each symbol."""
    values = np.asarray(matrix.values, dtype=np.float64)
    masked = np.where(np.eye(len(SYMBOLS), dtype=bool), np.inf, values)
    floor = masked.min(axis=0)
    floor[SYMBOL_INDEX[GAP]] = 0.0
    return np.maximum(floor, 0.0)


class _NodeData:
    """Per-name screening arrays over one catalog's unique names."""

    def __init__(self, names: list[str], phonemizer: Phonemizer):
        self.names = names
        n = len(names)
        self.prons: list[tuple] = []
        self.min_len = np.zeros(n, dtype=np.int32)
        self.max_len = np.zeros(n, dtype=np.int32)
        self.bag_min = np.zeros((n, len(SYMBOLS)), dtype=np.int32)
        self.bag_max = np.zeros((n, len(SYMBOLS)), dtype=np.int32)
        self.must_bits = np.zeros(n, dtype=np.uint64)
        self.cover_bits = np.zeros(n, dtype=np.uint64)
        self.first_phonemes: list[frozenset] = []
        for k, name in enumerate(names):
            prons = phonemizer.phrase(name)
            self.prons.append(prons)
            lens = [len(p) for p in prons]
            self.min_len[k] = min(lens)
            self.max_len[k] = max(lens)
            bags = np.stack([_bag(p) for p in prons])
            self.bag_min[k] = bags.min(axis=0)
            self.bag_max[k] = bags.max(axis=0)
            bigram_sets = [
                frozenset(zip(p, p[1:])) for p in prons
            ]
            shared = frozenset.intersection(*bigram_sets)
            union = frozenset().union(*bigram_sets)
            self.must_bits[k] = np.uint64(_or_bits(shared))
            self.cover_bits[k] = np.uint64(_or_bits(union))
            self.first_phonemes.append(frozenset(p[0] for p in prons if p))


def _or_bits(bigrams) -> int:
    bits = 0
    for a, b in bigrams:
        bits |= _bigram_bit(a, b)
    return bits


class _ParaphraseVerifier:
    """Exact paraphrase distance with cached phonemizations.

    Computes the same minimum as
    :func:`skillvet.variants.paraphrase_distance`: candidate texts (the
    name plus trigger-absorbed readings) against every generated variant
    of the target.  A per-combination length/bag screen skips alignments
    whose lower bound already exceeds the threshold; those would come
    back above-bound from the DP anyway, so the minimum is unchanged.
    """

    def __init__(
        self,
        phonemizer: Phonemizer,
        cfg: VariantConfig,
        matrix: CostMatrix,
        bound: float,
        banded: bool = True,
    ):
        self.phonemizer = phonemizer
        self.cfg = cfg
        self.matrix = matrix
        self.bound = bound
        self.banded = banded
        self.min_indel = matrix.min_indel_cost()
        self.create = _creation_floor(matrix)
        self._candidates: dict[str, tuple] = {}
        self._targets: dict[str, tuple] = {}

    def _pron_arrays(self, texts) -> tuple:
        prons = []
        for text in texts:
            prons.extend(self.phonemizer.phrase(text))
        if not prons:
            return (), None, None
        lens = np.array([len(p) for p in prons], dtype=np.int32)
        bags = np.stack([_bag(p) for p in prons]).astype(np.int32)
        return tuple(prons), lens, bags

    def _candidate(self, name: str) -> tuple:
        cached = self._candidates.get(name)
        if cached is None:
            cached = self._pron_arrays(paraphrase_candidate_texts(name))
            self._candidates[name] = cached
        return cached

    def _target(self, name: str) -> tuple:
        cached = self._targets.get(name)
        if cached is None:
            texts = [v.text for v in generate_variants(name, self.cfg)]
            cached = self._pron_arrays(texts)
            self._targets[name] = cached
        return cached

    def distance(self, candidate: str, target: str) -> float:
        cand_prons, cand_lens, cand_bags = self._candidate(candidate)
        var_prons, var_lens, var_bags = self._target(target)
        if not cand_prons or not var_prons:
            return math.inf
        allowance = self.bound + EPSILON
        keep = np.ones((len(cand_prons), len(var_prons)), dtype=bool)
        if self.min_indel > 0:
            gap = np.abs(cand_lens[:, None] - var_lens[None, :])
            keep &= gap * self.min_indel <= allowance
        diff = cand_bags[:, None, :] - var_bags[None, :, :]
        deficit = np.maximum(-diff, 0) @ self.create
        surplus = np.maximum(diff, 0) @ self.create
        keep &= np.maximum(deficit, surplus) <= allowance
        best = math.inf
        for i, j in zip(*np.nonzero(keep)):
            if self.banded:
                d = banded_distance_at_most(
                    cand_prons[i], var_prons[j], self.matrix, self.bound
                )
            else:
                d = weighted_distance(cand_prons[i], var_prons[j], self.matrix)
            if d < best:
                best = d
        return best


def _affix_length_ranges(cfg: VariantConfig, phonemizer: Phonemizer) -> list:
    def length_range(text: str):
        prons = phonemizer.phrase(text)
        if not prons:
            return (0, 0)
        lens = [len(p) for p in prons]
        return (min(lens), max(lens))

    prefix_ranges = [length_range(p) for p in cfg.prefixes]
    suffix_ranges = [length_range(s) for s in cfg.suffixes]
    return (
        prefix_ranges
        + suffix_ranges
        + [
            (pl + sl, ph + sh)
            for pl, ph in prefix_ranges
            for sl, sh in suffix_ranges
        ]
    )


def _affix_rows(cfg: VariantConfig, phonemizer: Phonemizer) -> tuple:
    """Bag and length of every concrete affix reading a variant can add."""
    bags: list[np.ndarray] = []
    lens: list[int] = []

    def add(parts: Sequence[tuple]) -> None:
        bag = np.zeros(len(SYMBOLS), dtype=np.int32)
        total = 0
        for pron in parts:
            bag += _bag(pron).astype(np.int32)
            total += len(pron)
        bags.append(bag)
        lens.append(total)

    prefix_prons = [phonemizer.phrase(p) for p in cfg.prefixes]
    suffix_prons = [phonemizer.phrase(s) for s in cfg.suffixes]
    for prons in prefix_prons:
        for pron in prons:
            add([pron])
    for prons in suffix_prons:
        for pron in prons:
            add([pron])
    for pre in prefix_prons:
        for suf in suffix_prons:
            for p in pre:
                for s in suf:
                    add([p, s])
    if not bags:
        return np.zeros((0, len(SYMBOLS)), np.int32), np.zeros(0, np.int32)
    return np.stack(bags), np.array(lens, dtype=np.int32)


def _screen_pairs(
    nodes: "_NodeData",
    cfg: VariantConfig,
    phonemizer: Phonemizer,
    matrix: CostMatrix,
    threshold: float,
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Sound pair screens.

    Returns (phonetic pairs with i < j, paraphrase (candidate, target)
    ordered pairs).  Every pair that could relate within the threshold
    survives; most that cannot are discarded.
    """
    n = len(nodes.names)
    affix_ranges = _affix_length_ranges(cfg, phonemizer)
    para_enabled = bool(affix_ranges)
    if n == 0:
        return [], []

    c_min = matrix.min_nonmatch_cost()
    min_indel = matrix.min_indel_cost()
    if c_min <= 0 or min_indel <= 0:
        phonetic = [(i, j) for i in range(n) for j in range(i + 1, n)]
        paraphrase = (
            [(i, j) for i in range(n) for j in range(n) if i != j]
            if para_enabled
            else []
        )
        return phonetic, paraphrase

    allowance = threshold + EPSILON
    len_slack = allowance / min_indel
    bit_budget = 2 * int(allowance / c_min)
    create = _creation_floor(matrix)

    # One row per absorbable reading of a trigger word, plus the bare
    # (no trigger) row first.
    trig_bags = [np.zeros(len(SYMBOLS), dtype=np.int32)]
    trig_bits: list[int] = [0]
    trig_last: list[Optional[str]] = [None]
    trig_lens: list[int] = [0]
    max_trig_len = 0
    for trig in TRIGGER_WORDS:
        for pron in phonemizer.phrase(trig):
            trig_bags.append(_bag(pron).astype(np.int32))
            trig_bits.append(_bigram_bits(pron))
            trig_last.append(pron[-1] if pron else None)
            trig_lens.append(len(pron))
            max_trig_len = max(max_trig_len, len(pron))
    trig_bag_max = np.maximum.reduce(trig_bags)

    # Junction bigrams (trigger's last phoneme, candidate's first) per
    # distinct trigger-final phoneme.
    junction: dict[str, np.ndarray] = {}
    for last in sorted({p for p in trig_last if p}):
        arr = np.zeros(n, dtype=np.uint64)
        for k in range(n):
            bits = 0
            for first in nodes.first_phonemes[k]:
                bits |= _bigram_bit(last, first)
            arr[k] = bits
        junction[last] = arr
    trigger_rows = sorted(
        {(bits, last) for bits, last in zip(trig_bits, trig_last)},
        key=lambda r: (r[0], r[1] or ""),
    )

    min_affix = min(lo for lo, _hi in affix_ranges) if para_enabled else 0
    max_affix = max(hi for _lo, hi in affix_ranges) if para_enabled else 0

    # Combination rows for the final paraphrase screen: every concrete
    # (trigger reading, affix reading) a matching alignment could use.
    # combo_bag[r] = affix bag - trigger bag, the net requirement the
    # decoration adds on the target side relative to the candidate side.
    if para_enabled:
        aff_bags, aff_lens = _affix_rows(cfg, phonemizer)
        trig_bag_arr = np.stack(trig_bags)
        trig_len_arr = np.array(trig_lens, dtype=np.int32)
        combo_bag = (
            aff_bags[None, :, :] - trig_bag_arr[:, None, :]
        ).reshape(-1, len(SYMBOLS))
        combo_len = (aff_lens[None, :] - trig_len_arr[:, None]).reshape(-1)

    phonetic: list[tuple[int, int]] = []
    para_cand: list[np.ndarray] = []
    para_targ: list[np.ndarray] = []
    col = np.arange(n)

    for i0 in range(0, n, _CHUNK_ROWS):
        i1 = min(i0 + _CHUNK_ROWS, n)
        rows = np.arange(i0, i1)
        min_i, max_i = nodes.min_len[rows][:, None], nodes.max_len[rows][:, None]
        min_j, max_j = nodes.min_len[None, :], nodes.max_len[None, :]

        # --- phonetic relation: unordered pairs, j > i ---
        gap = np.maximum(0, np.maximum(min_i - max_j, min_j - max_i))
        ok = (gap * min_indel <= allowance) & (col[None, :] > rows[:, None])
        ii, jj = np.nonzero(ok)
        if ii.size:
            gi = rows[ii]
            keep = _popcount_u64(nodes.must_bits[gi] & ~nodes.cover_bits[jj]) <= bit_budget
            keep &= _popcount_u64(nodes.must_bits[jj] & ~nodes.cover_bits[gi]) <= bit_budget
            gi, jj = gi[keep], jj[keep]
            if gi.size:
                fwd = np.maximum(nodes.bag_min[jj] - nodes.bag_max[gi], 0) @ create
                rev = np.maximum(nodes.bag_min[gi] - nodes.bag_max[jj], 0) @ create
                keep = (fwd <= allowance) & (rev <= allowance)
                phonetic.extend(zip(gi[keep].tolist(), jj[keep].tolist()))

        if not para_enabled:
            continue

        # --- paraphrase relation: ordered (candidate=row, target=col) ---
        ok = (
            (min_i <= max_j + max_affix + len_slack)
            & (max_i + max_trig_len >= min_j + min_affix - len_slack)
            & (col[None, :] != rows[:, None])
        )
        ii, jj = np.nonzero(ok)
        if not ii.size:
            continue
        gi = rows[ii]
        must_t = nodes.must_bits[jj]
        cover_c = nodes.cover_bits[gi]
        keep = np.zeros(gi.shape, dtype=bool)
        for bits, last in trigger_rows:
            allowed = cover_c | np.uint64(bits)
            if last is not None:
                allowed = allowed | junction[last][gi]
            keep |= _popcount_u64(must_t & ~allowed) <= bit_budget
        gi, jj = gi[keep], jj[keep]
        if not gi.size:
            continue
        deficit0 = nodes.bag_min[jj] - nodes.bag_max[gi]
        keep = np.maximum(deficit0 - trig_bag_max, 0) @ create <= allowance
        gi, jj, deficit0 = gi[keep], jj[keep], deficit0[keep]
        if not gi.size:
            continue
        keep = np.zeros(gi.shape, dtype=bool)
        for bag in {tb.tobytes(): tb for tb in trig_bags}.values():
            keep |= np.maximum(deficit0 - bag, 0) @ create <= allowance
        para_cand.append(gi[keep])
        para_targ.append(jj[keep])

    paraphrase: list[tuple[int, int]] = []
    if para_enabled and para_cand:
        cand = np.concatenate(para_cand)
        targ = np.concatenate(para_targ)
        paraphrase = _combo_screen(
            nodes,
            cand,
            targ,
            combo_bag,
            combo_len,
            create,
            min_indel,
            allowance,
        )
    return phonetic, paraphrase


def _combo_screen(
    nodes: "_NodeData",
    cand: np.ndarray,
    targ: np.ndarray,
    combo_bag: np.ndarray,
    combo_len: np.ndarray,
    create: np.ndarray,
    min_indel: float,
    allowance: float,
) -> list[tuple[int, int]]:
    """Final paraphrase screen over concrete decoration combinations.

    A surviving alignment uses one trigger reading on the candidate side
    and one affix reading on the target side, so for each candidate the
    rows whose affix phonemes the candidate cannot supply are dead
    regardless of target; the rest are checked with exact per-row bag
    deficits (both directions) and length gaps against each paired
    target.  A pair survives if any row's lower bound fits.
    """
    if not cand.size:
        return []
    order = np.lexsort((targ, cand))
    cand, targ = cand[order], targ[order]
    survivors: list[tuple[int, int]] = []
    starts = np.flatnonzero(np.r_[True, cand[1:] != cand[:-1]])
    bounds = np.r_[starts, cand.size]
    create32 = create.astype(np.float32)
    # The bulk arithmetic runs in float32; the comparison slack covers
    # its rounding so a borderline pair is kept, never dropped.
    allow32 = np.float32(allowance + 1e-2)
    for s, e in zip(bounds[:-1], bounds[1:]):
        c = int(cand[s])
        t_idx = targ[s:e]
        bag_max_c = nodes.bag_max[c]
        floors = np.maximum(combo_bag - bag_max_c, 0) @ create
        rows = np.flatnonzero(floors <= allowance)
        if not rows.size:
            continue
        row_def = (combo_bag[rows] - bag_max_c).astype(np.int16)
        row_sur = combo_bag[rows].astype(np.int16)
        row_len = combo_len[rows]
        base_def = nodes.bag_min[t_idx].astype(np.int16)
        base_sur = (nodes.bag_min[c] - nodes.bag_max[t_idx]).astype(np.int16)
        for k0 in range(0, t_idx.size, 512):
            k1 = min(k0 + 512, t_idx.size)
            block = t_idx[k0:k1]
            kk = k1 - k0
            deficit = np.maximum(
                base_def[k0:k1, None, :] + row_def[None, :, :], 0
            ).astype(np.float32).reshape(kk * rows.size, -1) @ create32
            surplus = np.maximum(
                base_sur[k0:k1, None, :] - row_sur[None, :, :], 0
            ).astype(np.float32).reshape(kk * rows.size, -1) @ create32
            deficit = deficit.reshape(kk, rows.size)
            surplus = surplus.reshape(kk, rows.size)
            # Variant length is target + affix; candidate length is
            # candidate + trigger; combo_len is their net difference.
            gap = np.maximum(
                nodes.min_len[block][:, None] + row_len[None, :]
                - nodes.max_len[c],
                nodes.min_len[c]
                - row_len[None, :]
                - nodes.max_len[block][:, None],
            )
            length_lb = np.maximum(gap, 0) * min_indel
            lb = np.maximum(np.maximum(deficit, surplus), length_lb)
            alive = lb.min(axis=1) <= allow32
            survivors.extend(
                (c, int(t)) for t in block[alive].tolist()
            )
    return survivors


def scan(
    catalog: Sequence[SkillRecord],
    dictionary: PronouncingDictionary,
    matrix: CostMatrix,
    cfg: VariantConfig,
    threshold: float,
    prune: bool = True,
    cap: int = DEFAULT_CROSS_PRODUCT_CAP,
) -> ScanReport:
    """Scan a catalog for competitive invocation names.

    With ``prune`` (the default) pairs are screened before verification;
    findings are identical to ``prune=False``, which verifies every pair
    and exists as the reference for equivalence testing.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    started = time.perf_counter()
    phonemizer = Phonemizer(dictionary, cap=cap)

    node_skills: dict[str, list[str]] = {}
    excluded: list[str] = []
    for record in catalog:
        name = record.normalized_invocation
        if not name or not phonemizer.phrase(name):
            logger.warning(
                "excluding skill %s: invocation name %r is not phonemizable",
                record.id,
                record.invocation_name,
            )
            excluded.append(record.id)
            continue
        node_skills.setdefault(name, []).append(record.id)

    names = sorted(node_skills)
    for name in names:
        node_skills[name].sort()
    findings: list[CinFinding] = []

    for name in names:
        ids = node_skills[name]
        for a in ids:
            for b in ids:
                if a != b:
                    findings.append(CinFinding(a, b, SAME_SPELLING, 0.0))

    nodes = _NodeData(names, phonemizer)
    n = len(names)

    if prune:
        phonetic_pairs, paraphrase_pairs = _screen_pairs(
            nodes, cfg, phonemizer, matrix, threshold
        )
    else:
        phonetic_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        paraphrase_pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    logger.info(
        "scan: %d skills, %d names; verifying %d phonetic and %d paraphrase pairs",
        len(catalog),
        n,
        len(phonetic_pairs),
        len(paraphrase_pairs),
    )

    allowance = threshold + EPSILON
    for i, j in phonetic_pairs:
        if prune:
            d = min_banded_distance_over(
                nodes.prons[i], nodes.prons[j], matrix, threshold
            )
        else:
            d = min_distance_over(nodes.prons[i], nodes.prons[j], matrix)
        if d <= allowance:
            for a in node_skills[names[i]]:
                for b in node_skills[names[j]]:
                    findings.append(CinFinding(a, b, PHONETIC, d))
                    findings.append(CinFinding(b, a, PHONETIC, d))

    verifier = _ParaphraseVerifier(phonemizer, cfg, matrix, threshold, banded=prune)
    for ci, ti in paraphrase_pairs:
        d = verifier.distance(names[ci], names[ti])
        if d <= allowance:
            for a in node_skills[names[ci]]:
                for b in node_skills[names[ti]]:
                    findings.append(CinFinding(a, b, PARAPHRASE, d))

    findings.sort(key=lambda f: (f.skill_id, f.competitor_id, f.relation))
    logger.info(
        "scan finished: %d findings in %.2f s",
        len(findings),
        time.perf_counter() - started,
    )
    return ScanReport(
        threshold=threshold,
        skill_count=len(catalog),
        findings=findings,
        excluded=tuple(excluded),
    )
