"""End-to-end CLI tests: exit codes, config handling, atomic output, determinism."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from skillvet.catalog import SkillRecord, save_catalog
from skillvet.corpus import (
    attack_transcripts,
    benign_transcripts,
    detector_catalog,
    planted_catalog,
    save_labels,
    save_transcripts,
    uic_corpus,
)

CLEAN_NAMES = (
    "cat facts",
    "space trivia",
    "piano songs",
    "recipe helper",
    "workout coach",
)


def run_cli(*argv, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "skillvet.cli", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture(scope="module")
def cli_env(tmp_path_factory, matrix):
    root = tmp_path_factory.mktemp("cli")
    paths = {
        "matrix": str(root / "wc.tsv"),
        "clean": str(root / "clean.jsonl"),
        "planted": str(root / "planted.jsonl"),
        "catalog": str(root / "skills.jsonl"),
        "labels": str(root / "labels.jsonl"),
        "attacks": str(root / "attacks.jsonl"),
        "benign": str(root / "benign.jsonl"),
        "model": str(root / "forest.json"),
        "root": str(root),
    }
    matrix.save(paths["matrix"])
    save_catalog(
        [
            SkillRecord(id=f"c{k}", display_name=name.title(), invocation_name=name)
            for k, name in enumerate(CLEAN_NAMES)
        ],
        paths["clean"],
    )
    planted, _ = planted_catalog(size=60)
    save_catalog(planted, paths["planted"])
    save_catalog(detector_catalog(), paths["catalog"])
    save_labels(uic_corpus(), paths["labels"])
    attacks, _ = attack_transcripts()
    save_transcripts(attacks, paths["attacks"])
    save_transcripts(benign_transcripts(), paths["benign"])
    train = run_cli(
        "train-uic",
        "--data",
        paths["labels"],
        "--catalog",
        paths["catalog"],
        "--seed",
        "42",
        "--out",
        paths["model"],
    )
    assert train.returncode == 0, train.stderr
    return paths


class TestUsageErrors:
    def test_unknown_subcommand_is_64(self):
        assert run_cli("frobnicate").returncode == 64

    def test_unknown_flag_is_64(self):
        assert run_cli("scan", "--bogus").returncode == 64

    def test_missing_required_flag_is_64(self):
        assert run_cli("train-uic").returncode == 64

    def test_no_subcommand_is_64(self):
        assert run_cli().returncode == 64


class TestValidationErrors:
    def test_missing_input_file_is_1(self, cli_env):
        proc = run_cli(
            "detect",
            "--transcripts",
            "/nonexistent.jsonl",
            "--model",
            cli_env["model"],
            "--catalog",
            cli_env["catalog"],
        )
        assert proc.returncode == 1
        assert "error" in proc.stderr

    def test_negative_scan_threshold_is_1(self, cli_env):
        proc = run_cli(
            "scan",
            "--catalog",
            cli_env["clean"],
            "--matrix",
            cli_env["matrix"],
            "--threshold",
            "-1",
        )
        assert proc.returncode == 1

    def test_scan_without_catalog_is_1(self, cli_env):
        proc = run_cli("scan", "--matrix", cli_env["matrix"])
        assert proc.returncode == 1
        assert "catalog" in proc.stderr


class TestScan:
    def test_clean_catalog_exits_0_with_empty_findings(self, cli_env):
        proc = run_cli(
            "scan",
            "--catalog",
            cli_env["clean"],
            "--matrix",
            cli_env["matrix"],
            "--threshold",
            "0",
        )
        assert proc.returncode == 0, proc.stderr
        report = json.loads(proc.stdout)
        assert report["findings"] == []

    def test_planted_catalog_exits_2(self, cli_env):
        proc = run_cli(
            "scan",
            "--catalog",
            cli_env["planted"],
            "--matrix",
            cli_env["matrix"],
            "--threshold",
            "0",
        )
        assert proc.returncode == 2
        assert json.loads(proc.stdout)["findings"]

    def test_threshold_monotonicity(self, cli_env):
        counts = {}
        for threshold in ("0", "1"):
            proc = run_cli(
                "scan",
                "--catalog",
                cli_env["planted"],
                "--matrix",
                cli_env["matrix"],
                "--threshold",
                threshold,
            )
            counts[threshold] = len(json.loads(proc.stdout)["findings"])
        assert counts["1"] >= counts["0"]

    def test_rerun_is_byte_identical_across_hash_seeds(self, cli_env):
        outputs = []
        for hash_seed in ("0", "1"):
            proc = run_cli(
                "scan",
                "--catalog",
                cli_env["planted"],
                "--matrix",
                cli_env["matrix"],
                "--threshold",
                "0",
                env_extra={"PYTHONHASHSEED": hash_seed},
            )
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1]


class TestDetect:
    def test_attack_corpus_exits_2_with_25_alarms(self, cli_env):
        proc = run_cli(
            "detect",
            "--transcripts",
            cli_env["attacks"],
            "--model",
            cli_env["model"],
            "--catalog",
            cli_env["catalog"],
        )
        assert proc.returncode == 2, proc.stderr
        payload = json.loads(proc.stdout)
        assert payload["alarm_count"] == 25
        assert len(payload["alarms"]) == 25

    def test_benign_corpus_exits_0_with_no_alarms(self, cli_env):
        proc = run_cli(
            "detect",
            "--transcripts",
            cli_env["benign"],
            "--model",
            cli_env["model"],
            "--catalog",
            cli_env["catalog"],
        )
        assert proc.returncode == 0, proc.stderr
        assert json.loads(proc.stdout)["alarm_count"] == 0


class TestTraining:
    def test_model_files_are_byte_identical_across_hash_seeds(self, cli_env, tmp_path):
        files = []
        for hash_seed in ("0", "1"):
            out = str(tmp_path / f"forest-{hash_seed}.json")
            proc = run_cli(
                "train-uic",
                "--data",
                cli_env["labels"],
                "--catalog",
                cli_env["catalog"],
                "--seed",
                "42",
                "--out",
                out,
                env_extra={"PYTHONHASHSEED": hash_seed},
            )
            assert proc.returncode == 0, proc.stderr
            files.append(open(out, "rb").read())
        assert files[0] == files[1]
        assert files[0] == open(cli_env["model"], "rb").read()

    def test_eval_uic_reports_metrics(self, cli_env, tmp_path):
        subset = str(tmp_path / "subset.jsonl")
        lines = open(cli_env["labels"]).read().splitlines()[:120]
        with open(subset, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        proc = run_cli(
            "eval-uic",
            "--data",
            subset,
            "--catalog",
            cli_env["catalog"],
            "--folds",
            "3",
            "--trees",
            "15",
        )
        assert proc.returncode == 0, proc.stderr
        metrics = json.loads(proc.stdout)
        assert metrics["folds"] == 3
        assert metrics["instances"] == 120
        assert 0.0 <= metrics["precision"] <= 1.0
        assert 0.0 <= metrics["recall"] <= 1.0


class TestOutputsAndConfig:
    def test_out_flag_writes_atomically(self, cli_env, tmp_path):
        out = tmp_path / "variants.json"
        proc = run_cli("variants", "sleep sounds", "--out", str(out))
        assert proc.returncode == 0
        assert proc.stdout == ""
        payload = json.loads(out.read_text())
        assert payload["name"] == "sleep sounds"
        assert all({"text", "kind"} == set(v) for v in payload["variants"])
        leftovers = [p for p in tmp_path.iterdir() if p.suffix == ".tmp"]
        assert leftovers == []

    def test_build_matrix_stdout_matches_file(self, cli_env, tmp_path):
        out = tmp_path / "wc.tsv"
        to_file = run_cli("build-matrix", "--out", str(out))
        to_stdout = run_cli("build-matrix")
        assert to_file.returncode == to_stdout.returncode == 0
        assert to_stdout.stdout == out.read_text()

    def test_distance_reports_cost_and_phonemizations(self, cli_env):
        proc = run_cli(
            "distance", "cat fax", "cat facts", "--matrix", cli_env["matrix"]
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["cost"] == 0.0
        assert payload["phonemizations"]["a"]
        assert payload["phonemizations"]["b"]

    def test_verbose_logs_to_stderr_not_stdout(self, cli_env):
        proc = run_cli(
            "--verbose",
            "scan",
            "--catalog",
            cli_env["clean"],
            "--matrix",
            cli_env["matrix"],
            "--threshold",
            "0",
        )
        assert proc.returncode == 0
        json.loads(proc.stdout)
        assert "skills scanned" in proc.stderr

    def test_config_supplies_defaults_and_flags_win(self, cli_env, tmp_path):
        config = tmp_path / "settings.toml"
        config.write_text(
            "catalog = {catalog!r}\n"
            "matrix = {matrix!r}\n"
            "scan_threshold = 0.0\n".format(
                catalog=cli_env["planted"], matrix=cli_env["matrix"]
            )
        )
        from_config = run_cli("--config", str(config), "scan")
        assert from_config.returncode == 2, from_config.stderr
        threshold = json.loads(from_config.stdout)["threshold"]
        assert threshold == 0.0
        overridden = run_cli(
            "--config",
            str(config),
            "scan",
            "--catalog",
            cli_env["clean"],
        )
        assert overridden.returncode == 0, overridden.stderr
        assert json.loads(overridden.stdout)["findings"] == []

    def test_json_config_accepted(self, cli_env, tmp_path):
        config = tmp_path / "settings.json"
        config.write_text(
            json.dumps({"catalog": cli_env["clean"], "matrix": cli_env["matrix"]})
        )
        proc = run_cli("--config", str(config), "scan", "--threshold", "0")
        assert proc.returncode == 0, proc.stderr

    def test_unknown_config_key_is_1(self, cli_env, tmp_path):
        config = tmp_path / "settings.toml"
        config.write_text("mystery = 3\n")
        proc = run_cli("--config", str(config), "variants", "cat facts")
        assert proc.returncode == 1
        assert "mystery" in proc.stderr

    def test_config_with_missing_path_is_1(self, cli_env, tmp_path):
        config = tmp_path / "settings.toml"
        config.write_text('catalog = "/nonexistent.jsonl"\n')
        proc = run_cli("--config", str(config), "scan")
        assert proc.returncode == 1

    def test_config_threshold_range_checked(self, cli_env, tmp_path):
        config = tmp_path / "settings.toml"
        config.write_text("src_threshold = 1.5\n")
        proc = run_cli("--config", str(config), "variants", "cat facts")
        assert proc.returncode == 1
