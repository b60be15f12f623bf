"""Tests for the shipped corpora: shapes, determinism, and plant construction."""

from __future__ import annotations

from collections import Counter

import pytest

from skillvet.corpus import (
    HOMOPHONE_WORD_PAIRS,
    _NAME_HEADS,
    _NAME_TAILS,
    attack_transcripts,
    benchmark_catalog,
    benign_transcripts,
    default_blacklist,
    default_system_commands,
    detector_catalog,
    legitimate_responses,
    planted_catalog,
    uic_corpus,
)
from skillvet.detector import (
    KIND_SRC_MIMICRY,
    KIND_SRC_SILENT,
    KIND_UIC_SWITCH,
    LABELS,
    NAME_SLOT,
    SILENT_MARKER,
    strip_markup,
)
from skillvet.prondict import normalize_text, phonemize_phrase
from skillvet.variants import generate_variants


class TestPackagedFiles:
    def test_blacklist_has_silent_and_spoken_entries(self, blacklist):
        assert blacklist.entries[0] == SILENT_MARKER
        assert len(blacklist.spoken_entries) >= 15

    def test_system_commands_have_plain_and_template_entries(self, syscmds):
        plain = [e for e in syscmds.entries if NAME_SLOT not in e]
        templates = [e for e in syscmds.entries if NAME_SLOT in e]
        assert len(plain) >= 30
        assert len(templates) >= 5

    def test_loaders_are_deterministic(self):
        assert default_blacklist() == default_blacklist()
        assert default_system_commands() == default_system_commands()


class TestDetectorCatalog:
    def test_ten_distinct_skills(self, catalog10):
        assert len(catalog10) == 10
        assert len({record.id for record in catalog10}) == 10
        assert len({record.invocation_name for record in catalog10}) == 10

    def test_records_are_fully_populated(self, catalog10):
        for record in catalog10:
            assert record.display_name
            assert normalize_text(record.invocation_name)
            assert len(record.description) == 4
            assert record.category


class TestBenignCorpus:
    def test_ten_sessions_with_61_user_utterances(self):
        transcripts = benign_transcripts()
        assert [t.session_id for t in transcripts] == [
            f"benign-{k:02d}" for k in range(1, 11)
        ]
        user_turns = sum(
            sum(turn.role == "user" for turn in t.turns) for t in transcripts
        )
        assert user_turns == 61

    def test_sessions_start_and_end_with_skill_turns(self):
        for transcript in benign_transcripts():
            assert transcript.turns[0].role == "skill"
            assert transcript.turns[-1].role == "skill"

    def test_legitimate_responses_are_spoken_skill_turns(self):
        responses = legitimate_responses()
        skill_turns = sum(
            sum(turn.role == "skill" for turn in t.turns)
            for t in benign_transcripts()
        )
        assert len(responses) == skill_turns
        assert all(strip_markup(text).strip() for text in responses)

    def test_builder_is_deterministic(self):
        assert benign_transcripts() == benign_transcripts()


class TestAttackCorpus:
    def test_25_attacks_with_one_expected_alarm_each(self):
        transcripts, expected = attack_transcripts()
        assert len(transcripts) == 25
        assert len(expected) == 25
        kinds = Counter(entry["kind"] for entry in expected)
        assert kinds[KIND_UIC_SWITCH] == 15
        assert kinds[KIND_SRC_SILENT] == 5
        assert kinds[KIND_SRC_MIMICRY] == 5

    def test_each_attack_changes_exactly_one_turn(self):
        base_by_id = {t.session_id: t for t in benign_transcripts()}
        transcripts, expected = attack_transcripts()
        for transcript, entry in zip(transcripts, expected):
            assert transcript.session_id == entry["session_id"]
            base = next(
                b
                for b in base_by_id.values()
                if b.skill.id == transcript.skill.id
            )
            changed = [
                k
                for k, (ours, theirs) in enumerate(zip(transcript.turns, base.turns))
                if ours.text != theirs.text
            ]
            assert changed == [entry["turn_index"]]

    def test_expected_kind_matches_substituted_text(self):
        transcripts, expected = attack_transcripts()
        blacklist = default_blacklist()
        for transcript, entry in zip(transcripts, expected):
            turn = transcript.turns[entry["turn_index"]]
            if entry["kind"] == KIND_UIC_SWITCH:
                assert turn.role == "user"
            elif entry["kind"] == KIND_SRC_SILENT:
                assert turn.role == "skill"
                assert not strip_markup(turn.text).strip()
            else:
                assert turn.role == "skill"
                assert turn.text in blacklist.spoken_entries

    def test_builder_is_deterministic(self):
        assert attack_transcripts() == attack_transcripts()


class TestUicCorpus:
    def test_balanced_and_large_enough(self):
        rows = uic_corpus()
        assert len(rows) >= 400
        counts = Counter(row.label for row in rows)
        assert len(counts) == 2
        assert len(set(counts.values())) == 1

    def test_rows_are_well_formed(self, catalog10):
        known = {record.id for record in catalog10}
        seen = set()
        for row in uic_corpus():
            assert row.label in LABELS
            assert row.skill_id in known
            assert row.utterance.strip()
            key = (row.utterance, row.skill_id)
            assert key not in seen
            seen.add(key)

    def test_builder_is_deterministic(self):
        assert uic_corpus() == uic_corpus()


class TestPlantedCatalog:
    def test_shape_and_manifest(self):
        catalog, expected = planted_catalog()
        assert len(catalog) == 200
        assert len({record.id for record in catalog}) == 200
        assert len(expected) == 20
        relations = Counter(entry["relation"] for entry in expected)
        assert relations == {"same-spelling": 4, "phonetic": 8, "paraphrase": 8}

    def test_manifest_ids_resolve(self):
        catalog, expected = planted_catalog()
        by_id = {record.id: record for record in catalog}
        for entry in expected:
            assert entry["skill_id"] in by_id
            assert entry["competitor_id"] in by_id
            assert entry["skill_id"] != entry["competitor_id"]

    def test_same_spelling_plants_share_names(self):
        catalog, expected = planted_catalog()
        by_id = {record.id: record for record in catalog}
        for entry in expected:
            if entry["relation"] != "same-spelling":
                continue
            attacker = by_id[entry["skill_id"]]
            victim = by_id[entry["competitor_id"]]
            assert normalize_text(attacker.invocation_name) == normalize_text(
                victim.invocation_name
            )

    def test_phonetic_plants_are_homophones(self, dictionary):
        catalog, expected = planted_catalog()
        by_id = {record.id: record for record in catalog}
        for entry in expected:
            if entry["relation"] != "phonetic":
                continue
            attacker = by_id[entry["skill_id"]]
            victim = by_id[entry["competitor_id"]]
            assert attacker.invocation_name != victim.invocation_name
            shared = set(phonemize_phrase(attacker.invocation_name, dictionary)) & set(
                phonemize_phrase(victim.invocation_name, dictionary)
            )
            assert shared, (attacker.invocation_name, victim.invocation_name)

    def test_paraphrase_plants_are_exact_variants(self, variant_config):
        catalog, expected = planted_catalog()
        by_id = {record.id: record for record in catalog}
        for entry in expected:
            if entry["relation"] != "paraphrase":
                continue
            attacker = by_id[entry["skill_id"]]
            victim = by_id[entry["competitor_id"]]
            variants = {
                v.text for v in generate_variants(victim.invocation_name, variant_config)
            }
            assert normalize_text(attacker.invocation_name) in variants

    def test_planted_names_unique_in_background(self):
        catalog, expected = planted_catalog()
        by_id = {record.id: record for record in catalog}
        names = Counter(normalize_text(r.invocation_name) for r in catalog)
        for entry in expected:
            attacker = by_id[entry["skill_id"]]
            victim = by_id[entry["competitor_id"]]
            if entry["relation"] == "same-spelling":
                assert names[normalize_text(attacker.invocation_name)] == 2
            else:
                assert names[normalize_text(attacker.invocation_name)] == 1
                assert names[normalize_text(victim.invocation_name)] == 1

    def test_too_small_size_rejected(self):
        with pytest.raises(ValueError):
            planted_catalog(size=40)

    def test_builder_is_deterministic(self):
        first_catalog, first_expected = planted_catalog()
        second_catalog, second_expected = planted_catalog()
        assert first_catalog == second_catalog
        assert first_expected == second_expected

    def test_different_seeds_differ(self):
        first, _ = planted_catalog(seed=1)
        second, _ = planted_catalog(seed=2)
        assert first != second


class TestBenchmarkCatalog:
    def test_shape_and_determinism(self):
        catalog = benchmark_catalog(size=300)
        assert len(catalog) == 300
        assert len({record.id for record in catalog}) == 300
        assert catalog == benchmark_catalog(size=300)

    def test_name_vocabulary_is_in_dictionary(self, dictionary):
        missing = [
            word
            for word in (*_NAME_HEADS, *_NAME_TAILS)
            if word not in dictionary
        ]
        assert missing == []

    def test_homophone_pairs_are_in_dictionary(self, dictionary):
        for word_a, word_b in HOMOPHONE_WORD_PAIRS:
            for word in (*word_a.split(), *word_b.split()):
                assert word in dictionary, word
