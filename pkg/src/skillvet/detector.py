"""Voice-masquerading detection over conversation transcripts.

Two anomaly detectors run over a session between a user and a skill:

- Skill Response Checker (SRC): flags a skill turn that pretends the
  session ended.  A response is ``silent`` when it contains no spoken
  text (empty, whitespace, or only audio markup) and ``mimicry`` when
  its best sentence relevance against a blacklist of system utterances
  exceeds a threshold.
- Utterance Intent Classifier (UIC): flags a user turn that tries to
  switch context (invoke another skill or reach the platform) while the
  current skill is still in session.  Ten sentence-relevance features
  feed a random forest; ties break toward no-switch so a vetting run
  never interrupts on an ambiguous vote.

``detect`` walks a transcript through both and emits alarms with turn
indexes and evidence.  The SRC threshold default follows the published
0.8, but a calibration procedure is included: it checks that every
legitimate response scores below the threshold and every paraphrased
blacklist entry above it, and fails loudly when the embedding provider
cannot separate the two.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .catalog import SkillRecord
from .embedding import EmbeddingProvider, SentenceVector, vector_relevance
from .forest import ForestParams, RandomForest, train_forest
from .prondict import normalize_text
from .variants import VariantConfig, generate_variants

LABEL_SWITCH = "switch"
LABEL_NO_SWITCH = "no-switch"
LABELS = (LABEL_NO_SWITCH, LABEL_SWITCH)

SRC_SILENT = "silent"
SRC_MIMICRY = "mimicry"

KIND_SRC_SILENT = "src-silent"
KIND_SRC_MIMICRY = "src-mimicry"
KIND_UIC_SWITCH = "uic-switch"

SILENT_MARKER = "<silent>"
NAME_SLOT = "<name>"

_TAG_RE = re.compile(r"<[^>]*>")

DEFAULT_SRC_THRESHOLD = 0.8

# Word-level substitutions used to paraphrase blacklist entries during
# threshold calibration (an attacker rewording a system utterance).
# Kept to words that never make up an entry's entire content, so every
# paraphrase retains lexical anchors a bag-of-words provider can see.
DEFAULT_SYNONYMS: tuple[tuple[str, str], ...] = (
    ("goodbye", "bye"),
    ("sorry", "apologies"),
    ("skill", "app"),
    ("okay", "alright"),
    ("now", "right away"),
    ("try", "attempt"),
    ("problem", "issue"),
    ("session", "conversation"),
    ("leaving", "exiting"),
)


class TranscriptError(ValueError):
    """Malformed transcript or label input."""


@dataclass(frozen=True)
class Blacklist:
    """System/termination utterances a masquerading skill may imitate."""

    entries: tuple[str, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if SILENT_MARKER not in entries:
            entries = (SILENT_MARKER,) + entries
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise ValueError("blacklist needs at least one spoken entry")

    @property
    def spoken_entries(self) -> tuple[str, ...]:
        return tuple(e for e in self.entries if e != SILENT_MARKER)

    @classmethod
    def from_file(cls, path: str) -> "Blacklist":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not all(isinstance(e, str) for e in data):
            raise ValueError(f"{path}: blacklist must be a JSON list of strings")
        return cls(tuple(data))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(list(self.entries), fh, indent=2)
            fh.write("\n")


@dataclass(frozen=True)
class SystemCommandList:
    """Platform commands; entries with a ``<name>`` slot expand per skill."""

    entries: tuple[str, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("system command list must be non-empty")
        object.__setattr__(self, "entries", tuple(self.entries))

    def expanded(self, catalog: Sequence[SkillRecord]) -> tuple[str, ...]:
        names = []
        seen = set()
        for record in catalog:
            name = record.invocation_name.strip().lower()
            if name and name not in seen:
                seen.add(name)
                names.append(name)
        out: list[str] = []
        emitted = set()
        for entry in self.entries:
            if NAME_SLOT in entry:
                for name in names:
                    text = entry.replace(NAME_SLOT, name)
                    if text not in emitted:
                        emitted.add(text)
                        out.append(text)
            elif entry not in emitted:
                emitted.add(entry)
                out.append(entry)
        return tuple(out)

    @classmethod
    def from_file(cls, path: str) -> "SystemCommandList":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not all(isinstance(e, str) for e in data):
            raise ValueError(f"{path}: command list must be a JSON list of strings")
        return cls(tuple(data))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(list(self.entries), fh, indent=2)
            fh.write("\n")


@dataclass(frozen=True)
class ConversationTurn:
    role: str  # "user" | "skill"
    text: str
    timestamp: Optional[float] = None

    def __post_init__(self):
        if self.role not in ("user", "skill"):
            raise TranscriptError(f"turn role must be user or skill, got {self.role!r}")
        if self.role == "user" and not self.text.strip():
            raise TranscriptError("user turns must have non-empty text")


@dataclass(frozen=True)
class Transcript:
    session_id: str
    skill: SkillRecord
    turns: tuple[ConversationTurn, ...]

    def __post_init__(self):
        object.__setattr__(self, "turns", tuple(self.turns))
        previous_role = None
        previous_time = -math.inf
        for k, turn in enumerate(self.turns):
            if turn.role == previous_role:
                raise TranscriptError(
                    f"session {self.session_id}: turns must alternate roles "
                    f"(turn {k} repeats {turn.role!r})"
                )
            previous_role = turn.role
            if turn.timestamp is not None:
                if turn.timestamp < previous_time:
                    raise TranscriptError(
                        f"session {self.session_id}: timestamps decrease at turn {k}"
                    )
                previous_time = turn.timestamp


@dataclass(frozen=True)
class Verdict:
    flagged: bool
    reason: Optional[str] = None
    score: float = 0.0


@dataclass(frozen=True)
class Alarm:
    session_id: str
    turn_index: int
    kind: str  # src-silent | src-mimicry | uic-switch
    evidence: dict

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "turn_index": self.turn_index,
            "kind": self.kind,
            "evidence": self.evidence,
        }


FEATURE_NAMES = (
    "max_sr_system_commands",
    "avg_sr_system_commands",
    "contains_invocation_name",
    "sr_prior_response",
    "sr_description_1",
    "sr_description_2",
    "sr_description_3",
    "sr_description_4",
    "sr_description_5",
    "avg_sr_description",
)


@dataclass(frozen=True)
class FeatureVector:
    """The 10 semantic-relevance features of one user utterance."""

    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != 10:
            raise ValueError(f"feature vector must have 10 fields, got {len(values)}")
        if any(not 0.0 <= v <= 1.0 for v in values):
            raise ValueError("all features must lie in [0, 1]")
        if values[2] not in (0.0, 1.0):
            raise ValueError("f3 (invocation-name indicator) must be 0 or 1")
        top5 = values[4:9]
        if any(a < b for a, b in zip(top5, top5[1:])):
            raise ValueError("f5..f9 must be non-increasing")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


def strip_markup(text: str) -> str:
    """Remove audio/SSML tags, keeping any spoken text."""
    return _TAG_RE.sub(" ", text)


def src_check(
    response: str,
    blacklist: Blacklist,
    provider: EmbeddingProvider,
    threshold: float = DEFAULT_SRC_THRESHOLD,
) -> Verdict:
    """Flag a skill response as silent or system-mimicking.

    Silent means no spoken content at all; mimicry means the best SR
    against the blacklist exceeds the threshold (strictly).
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    if not strip_markup(response).strip():
        return Verdict(flagged=True, reason=SRC_SILENT, score=1.0)
    vec = provider.embed(response)
    best = 0.0
    for entry in blacklist.spoken_entries:
        best = max(best, vector_relevance(vec, provider.embed(entry)))
    if best > threshold:
        return Verdict(flagged=True, reason=SRC_MIMICRY, score=best)
    return Verdict(flagged=False, score=best)


class FeatureExtractor:
    """Caches embeddings of the fixed reference texts across utterances."""

    def __init__(
        self,
        syscmds: SystemCommandList,
        catalog: Sequence[SkillRecord],
        provider: EmbeddingProvider,
    ):
        self.provider = provider
        self.commands = syscmds.expanded(catalog)
        self._command_vectors = [provider.embed(c) for c in self.commands]
        self._invocations = sorted(
            {
                tuple(normalize_text(r.invocation_name).split())
                for r in catalog
                if normalize_text(r.invocation_name)
            }
        )
        self._cache: dict[str, SentenceVector] = {}

    def _embed(self, text: str) -> SentenceVector:
        vec = self._cache.get(text)
        if vec is None:
            vec = self.provider.embed(text)
            self._cache[text] = vec
        return vec

    def _contains_invocation(self, utterance: str) -> bool:
        tokens = tuple(normalize_text(utterance).split())
        for name in self._invocations:
            width = len(name)
            if width == 0 or width > len(tokens):
                continue
            for k in range(len(tokens) - width + 1):
                if tokens[k : k + width] == name:
                    return True
        return False

    def extract(
        self,
        utterance: str,
        prior_response: Optional[str],
        skill: SkillRecord,
    ) -> FeatureVector:
        if not utterance.strip():
            raise ValueError("utterance must be non-empty")
        vec = self.provider.embed(utterance)
        command_srs = [vector_relevance(vec, cv) for cv in self._command_vectors]
        f1 = max(command_srs, default=0.0)
        f2 = sum(command_srs) / len(command_srs) if command_srs else 0.0
        f3 = 1.0 if self._contains_invocation(utterance) else 0.0
        f4 = (
            vector_relevance(vec, self._embed(prior_response))
            if prior_response
            else 0.0
        )
        description_srs = sorted(
            (
                vector_relevance(vec, self._embed(sentence))
                for sentence in skill.description
            ),
            reverse=True,
        )
        top5 = (description_srs + [0.0] * 5)[:5]
        f10 = (
            sum(description_srs) / len(description_srs) if description_srs else 0.0
        )
        return FeatureVector((f1, f2, f3, f4, *top5, f10))


def extract_features(
    utterance: str,
    prior_response: Optional[str],
    skill: SkillRecord,
    syscmds: SystemCommandList,
    catalog: Sequence[SkillRecord],
    provider: EmbeddingProvider,
) -> FeatureVector:
    """One-shot feature extraction; build a FeatureExtractor for batches."""
    return FeatureExtractor(syscmds, catalog, provider).extract(
        utterance, prior_response, skill
    )


def uic_classify(fv: FeatureVector, forest: RandomForest) -> tuple[str, float]:
    """Majority-vote label and vote fraction; ties land on no-switch."""
    return forest.predict(fv.as_array())


@dataclass(frozen=True)
class LabeledUtterance:
    utterance: str
    prior_response: Optional[str]
    skill_id: str
    label: str

    def __post_init__(self):
        if self.label not in LABELS:
            raise TranscriptError(
                f"label must be one of {LABELS}, got {self.label!r}"
            )


def load_labeled(path: str, catalog: Sequence[SkillRecord]) -> list[LabeledUtterance]:
    """Read a JSONL labeled-utterance corpus, checking skill references."""
    known = {record.id for record in catalog}
    rows: list[LabeledUtterance] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise TranscriptError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            try:
                row = LabeledUtterance(
                    utterance=data["utterance"],
                    prior_response=data.get("prior_response"),
                    skill_id=data["skill_id"],
                    label=data["label"],
                )
            except KeyError as exc:
                raise TranscriptError(f"{path}:{lineno}: missing field {exc}") from exc
            if row.skill_id not in known:
                raise TranscriptError(
                    f"{path}:{lineno}: unknown skill id {row.skill_id!r}"
                )
            rows.append(row)
    if not rows:
        raise TranscriptError(f"{path}: no labeled utterances")
    return rows


def load_transcripts(path: str, catalog: Sequence[SkillRecord]) -> list[Transcript]:
    """Read JSONL transcripts, resolving each session's skill_id."""
    by_id = {record.id: record for record in catalog}
    sessions: list[Transcript] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise TranscriptError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            try:
                skill_id = data["skill_id"]
                turns = tuple(
                    ConversationTurn(
                        role=t["role"],
                        text=t.get("text", ""),
                        timestamp=t.get("timestamp"),
                    )
                    for t in data["turns"]
                )
                session = Transcript(
                    session_id=data["session_id"],
                    skill=by_id[skill_id],
                    turns=turns,
                )
            except KeyError as exc:
                raise TranscriptError(
                    f"{path}:{lineno}: missing field or unknown skill {exc}"
                ) from exc
            except TranscriptError as exc:
                raise TranscriptError(f"{path}:{lineno}: {exc}") from exc
            sessions.append(session)
    return sessions


def _feature_matrix(
    rows: Sequence[LabeledUtterance],
    catalog: Sequence[SkillRecord],
    syscmds: SystemCommandList,
    provider: EmbeddingProvider,
) -> tuple[np.ndarray, list[str]]:
    by_id = {record.id: record for record in catalog}
    extractor = FeatureExtractor(syscmds, catalog, provider)
    features = [
        extractor.extract(row.utterance, row.prior_response, by_id[row.skill_id]).values
        for row in rows
    ]
    return np.asarray(features, dtype=np.float64), [row.label for row in rows]


def train_uic(
    rows: Sequence[LabeledUtterance],
    catalog: Sequence[SkillRecord],
    syscmds: SystemCommandList,
    provider: EmbeddingProvider,
    params: Optional[ForestParams] = None,
    seed: int = 42,
) -> RandomForest:
    """Train the utterance-intent forest on a labeled corpus."""
    x, labels = _feature_matrix(rows, catalog, syscmds, provider)
    return train_forest(x, labels, params=params, seed=seed)


def evaluate_uic(
    rows: Sequence[LabeledUtterance],
    catalog: Sequence[SkillRecord],
    syscmds: SystemCommandList,
    provider: EmbeddingProvider,
    folds: int = 5,
    params: Optional[ForestParams] = None,
    seed: int = 42,
) -> dict:
    """Stratified k-fold cross-validation; precision/recall for "switch".

    Fold assignment is deterministic: rows are taken in corpus order per
    label and dealt round-robin, so reruns reproduce the same numbers.
    """
    if folds < 2:
        raise ValueError("folds must be >= 2")
    x, labels = _feature_matrix(rows, catalog, syscmds, provider)
    fold_of = np.zeros(len(rows), dtype=np.int64)
    for label in sorted(set(labels)):
        members = [k for k, lab in enumerate(labels) if lab == label]
        for position, k in enumerate(members):
            fold_of[k] = position % folds
    tp = fp = fn = tn = 0
    fold_stats = []
    labels_arr = np.array(labels)
    for fold in range(folds):
        test = fold_of == fold
        train = ~test
        if len(set(labels_arr[train])) < 2 or not test.any():
            raise ValueError(f"fold {fold} lacks both labels; corpus too small")
        forest = train_forest(x[train], list(labels_arr[train]), params=params, seed=seed)
        predicted = [forest.predict(row)[0] for row in x[test]]
        actual = list(labels_arr[test])
        ftp = sum(p == LABEL_SWITCH and a == LABEL_SWITCH for p, a in zip(predicted, actual))
        ffp = sum(p == LABEL_SWITCH and a == LABEL_NO_SWITCH for p, a in zip(predicted, actual))
        ffn = sum(p == LABEL_NO_SWITCH and a == LABEL_SWITCH for p, a in zip(predicted, actual))
        ftn = sum(p == LABEL_NO_SWITCH and a == LABEL_NO_SWITCH for p, a in zip(predicted, actual))
        tp, fp, fn, tn = tp + ftp, fp + ffp, fn + ffn, tn + ftn
        fold_stats.append(
            {
                "fold": fold,
                "test_size": int(test.sum()),
                "precision": ftp / (ftp + ffp) if ftp + ffp else 1.0,
                "recall": ftp / (ftp + ffn) if ftp + ffn else 1.0,
            }
        )
    return {
        "folds": folds,
        "instances": len(rows),
        "precision": tp / (tp + fp) if tp + fp else 1.0,
        "recall": tp / (tp + fn) if tp + fn else 1.0,
        "accuracy": (tp + tn) / len(rows),
        "per_fold": fold_stats,
    }


def detect(
    transcript: Transcript,
    blacklist: Blacklist,
    syscmds: SystemCommandList,
    catalog: Sequence[SkillRecord],
    forest: RandomForest,
    provider: EmbeddingProvider,
    src_threshold: float = DEFAULT_SRC_THRESHOLD,
    extractor: Optional[FeatureExtractor] = None,
) -> list[Alarm]:
    """Run SRC on skill turns and UIC on user turns, in turn order.

    ``prior_response`` for a user turn is the text of the nearest
    preceding skill turn.  Pass a shared ``extractor`` when detecting
    over many transcripts to reuse the reference embeddings.
    """
    if extractor is None:
        extractor = FeatureExtractor(syscmds, catalog, provider)
    alarms: list[Alarm] = []
    prior_response: Optional[str] = None
    for index, turn in enumerate(transcript.turns):
        if turn.role == "skill":
            verdict = src_check(turn.text, blacklist, provider, src_threshold)
            if verdict.flagged:
                alarms.append(
                    Alarm(
                        session_id=transcript.session_id,
                        turn_index=index,
                        kind=KIND_SRC_SILENT
                        if verdict.reason == SRC_SILENT
                        else KIND_SRC_MIMICRY,
                        evidence={"score": verdict.score},
                    )
                )
            prior_response = turn.text
        else:
            fv = extractor.extract(turn.text, prior_response, transcript.skill)
            label, fraction = uic_classify(fv, forest)
            if label == LABEL_SWITCH:
                alarms.append(
                    Alarm(
                        session_id=transcript.session_id,
                        turn_index=index,
                        kind=KIND_UIC_SWITCH,
                        evidence={"vote": fraction},
                    )
                )
    return alarms


@dataclass(frozen=True)
class Calibration:
    """Separation of legitimate responses from paraphrased blacklist entries."""

    max_legitimate: float
    min_paraphrase: float

    @property
    def separable(self) -> bool:
        return self.max_legitimate < self.min_paraphrase

    def check(self, threshold: float) -> None:
        if not self.separable:
            raise ValueError(
                "provider cannot separate corpora: max legitimate SR "
                f"{self.max_legitimate:.4f} >= min paraphrased-blacklist SR "
                f"{self.min_paraphrase:.4f}"
            )
        if not self.max_legitimate <= threshold < self.min_paraphrase:
            raise ValueError(
                f"threshold {threshold} outside calibrated range "
                f"[{self.max_legitimate:.4f}, {self.min_paraphrase:.4f})"
            )


def paraphrase_blacklist(
    blacklist: Blacklist,
    cfg: Optional[VariantConfig] = None,
    synonyms: Sequence[tuple[str, str]] = DEFAULT_SYNONYMS,
) -> list[str]:
    """Reworded blacklist entries standing in for mimicry attacks."""
    texts: list[str] = []
    seen: set[str] = set()

    def add(text: str) -> None:
        cleaned = " ".join(text.split())
        if cleaned and cleaned not in seen:
            seen.add(cleaned)
            texts.append(cleaned)

    cfg = cfg or VariantConfig()
    for entry in blacklist.spoken_entries:
        for variant in generate_variants(entry, cfg):
            add(variant.text)
        lowered = entry.lower()
        for word, replacement in synonyms:
            if re.search(rf"\b{re.escape(word)}\b", lowered):
                add(re.sub(rf"\b{re.escape(word)}\b", replacement, lowered))
    return texts


def calibrate_src(
    legitimate_responses: Iterable[str],
    blacklist: Blacklist,
    provider: EmbeddingProvider,
    cfg: Optional[VariantConfig] = None,
) -> Calibration:
    """Measure the SR separation the SRC threshold must sit inside.

    Legitimate responses are scored by their best SR against the
    blacklist (must stay below the threshold); paraphrased blacklist
    entries likewise (must stay above it).
    """
    entry_vectors = [provider.embed(e) for e in blacklist.spoken_entries]

    def best(text: str) -> float:
        vec = provider.embed(text)
        return max(
            (vector_relevance(vec, ev) for ev in entry_vectors), default=0.0
        )

    max_legit = 0.0
    for response in legitimate_responses:
        if strip_markup(response).strip():
            max_legit = max(max_legit, best(response))
    min_attack = math.inf
    for attack in paraphrase_blacklist(blacklist, cfg=cfg):
        min_attack = min(min_attack, best(attack))
    if min_attack == math.inf:
        raise ValueError("blacklist produced no paraphrased variants")
    return Calibration(max_legitimate=max_legit, min_paraphrase=min_attack)
