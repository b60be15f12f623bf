"""Command-line interface binding every pipeline in the package.

Subcommands: ``build-matrix``, ``distance``, ``variants``, ``scan``,
``train-uic``, ``eval-uic``, ``detect``.  Machine output is JSON on
standard output or, with ``--out``, written atomically (temp file then
rename) so a crashed run never leaves a partial artifact.  Logs go to
standard error only.

Exit codes: 0 success with nothing to report, 2 findings or alarms
present, 1 input/validation error, 64 usage error.

Settings can come from a TOML or JSON config file (``--config``); flags
override config values, and built-in defaults (packaged dictionary,
blacklist, and command list) fill whatever remains.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
import time
from typing import Optional, Sequence

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from .catalog import load_catalog
from .costmatrix import CostMatrix, build_matrix
from .detector import (
    Blacklist,
    DEFAULT_SRC_THRESHOLD,
    FeatureExtractor,
    SystemCommandList,
    detect,
    evaluate_uic,
    load_labeled,
    load_transcripts,
    train_uic,
)
from .distance import phrase_distance
from .embedding import make_provider
from .forest import ForestParams, RandomForest
from .prondict import (
    PronouncingDictionary,
    load_default_dictionary,
    load_dictionary,
    phonemize_phrase,
)
from .scanner import scan
from .variants import VariantConfig, generate_variants

logger = logging.getLogger("skillvet")

EXIT_CLEAN = 0
EXIT_ERROR = 1
EXIT_FINDINGS = 2
EXIT_USAGE = 64

DEFAULT_SCAN_THRESHOLD = 1.0

# Recognized config-file keys and the flag each one backs.
_CONFIG_PATH_KEYS = (
    "dictionary",
    "matrix",
    "catalog",
    "blacklist",
    "syscmds",
    "variants",
)
_CONFIG_VALUE_KEYS = ("scan_threshold", "src_threshold", "provider", "seed")


class CliError(Exception):
    """Input or validation problem; reported on stderr, exit 1."""


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional 64 exit code for usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".skillvet-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        _write_atomic(out, text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _load_config(path: str) -> dict:
    with open(path, "rb") as fh:
        raw = fh.read()
    if path.endswith(".toml"):
        data = tomllib.loads(raw.decode("utf-8"))
    elif path.endswith(".json"):
        data = json.loads(raw.decode("utf-8"))
    else:
        raise CliError(f"{path}: config must be a .toml or .json file")
    if not isinstance(data, dict):
        raise CliError(f"{path}: config must be a table/object")
    known = set(_CONFIG_PATH_KEYS) | set(_CONFIG_VALUE_KEYS)
    unknown = sorted(set(data) - known)
    if unknown:
        raise CliError(f"{path}: unknown config keys: {', '.join(unknown)}")
    for key in _CONFIG_PATH_KEYS:
        if key in data:
            if not isinstance(data[key], str):
                raise CliError(f"{path}: {key} must be a path string")
            if not os.path.exists(data[key]):
                raise CliError(f"{path}: {key} path does not exist: {data[key]}")
    if "scan_threshold" in data:
        if not isinstance(data["scan_threshold"], (int, float)) or data[
            "scan_threshold"
        ] < 0:
            raise CliError(f"{path}: scan_threshold must be a number >= 0")
    if "src_threshold" in data:
        value = data["src_threshold"]
        if not isinstance(value, (int, float)) or not 0 < value <= 1:
            raise CliError(f"{path}: src_threshold must be in (0, 1]")
    if "provider" in data and not isinstance(data["provider"], str):
        raise CliError(f"{path}: provider must be a string")
    if "seed" in data and not isinstance(data["seed"], int):
        raise CliError(f"{path}: seed must be an integer")
    return data


def _setting(args: argparse.Namespace, config: dict, key: str, default=None):
    """Flag value if given, else config value, else the default."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return default


def _get_dictionary(args, config) -> PronouncingDictionary:
    path = _setting(args, config, "dictionary")
    if path is None:
        return load_default_dictionary()
    return load_dictionary(path, strict=getattr(args, "strict", False))


def _get_matrix(args, config, dictionary: PronouncingDictionary) -> CostMatrix:
    path = _setting(args, config, "matrix")
    if path is None:
        return build_matrix(dictionary)
    return CostMatrix.load(path)


def _get_variant_config(args, config) -> VariantConfig:
    path = _setting(args, config, "variants")
    if path is None:
        return VariantConfig()
    return VariantConfig.from_file(path)


def _get_catalog(args, config):
    path = _setting(args, config, "catalog")
    if path is None:
        raise CliError("a catalog is required (--catalog or config key 'catalog')")
    return load_catalog(path)


def _get_blacklist(args, config) -> Blacklist:
    path = _setting(args, config, "blacklist")
    if path is None:
        from .corpus import default_blacklist

        return default_blacklist()
    return Blacklist.from_file(path)


def _get_syscmds(args, config) -> SystemCommandList:
    path = _setting(args, config, "syscmds")
    if path is None:
        from .corpus import default_system_commands

        return default_system_commands()
    return SystemCommandList.from_file(path)


def _get_provider(args, config):
    return make_provider(_setting(args, config, "provider", "baseline"))


def _forest_params(args) -> Optional[ForestParams]:
    if args.trees is None and args.max_features is None and args.min_leaf is None:
        return None
    defaults = ForestParams()
    return ForestParams(
        n_trees=args.trees if args.trees is not None else defaults.n_trees,
        max_features=args.max_features,
        min_leaf=args.min_leaf if args.min_leaf is not None else defaults.min_leaf,
    )


def cmd_build_matrix(args, config) -> int:
    dictionary = _get_dictionary(args, config)
    matrix = build_matrix(dictionary)
    logger.info(
        "built matrix from %d dictionary words (%d aligned pairs)",
        len(dictionary),
        matrix.pair_count,
    )
    _emit(matrix.to_text(), args.out)
    return EXIT_CLEAN


def cmd_distance(args, config) -> int:
    dictionary = _get_dictionary(args, config)
    matrix = _get_matrix(args, config, dictionary)
    prons_a = phonemize_phrase(args.phrase_a, dictionary)
    prons_b = phonemize_phrase(args.phrase_b, dictionary)
    if not prons_a:
        raise CliError(f"phrase not phonemizable: {args.phrase_a!r}")
    if not prons_b:
        raise CliError(f"phrase not phonemizable: {args.phrase_b!r}")
    cost = phrase_distance(args.phrase_a, args.phrase_b, dictionary, matrix)
    payload = {
        "phrase_a": args.phrase_a,
        "phrase_b": args.phrase_b,
        "cost": cost,
        "phonemizations": {
            "a": [" ".join(p) for p in prons_a],
            "b": [" ".join(p) for p in prons_b],
        },
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_CLEAN


def cmd_variants(args, config) -> int:
    cfg = _get_variant_config(args, config)
    variants = generate_variants(args.name, cfg)
    payload = {
        "name": args.name,
        "variants": [{"text": v.text, "kind": v.kind} for v in variants],
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_CLEAN


def cmd_scan(args, config) -> int:
    catalog = _get_catalog(args, config)
    dictionary = _get_dictionary(args, config)
    matrix = _get_matrix(args, config, dictionary)
    cfg = _get_variant_config(args, config)
    threshold = _setting(args, config, "threshold")
    if threshold is None:
        threshold = config.get("scan_threshold", DEFAULT_SCAN_THRESHOLD)
    if threshold < 0:
        raise CliError("scan threshold must be >= 0")
    started = time.perf_counter()
    report = scan(
        catalog,
        dictionary,
        matrix,
        cfg,
        threshold=threshold,
        prune=not args.exhaustive,
    )
    logger.info(
        "scanned %d skills in %.1fs", report.skill_count, time.perf_counter() - started
    )
    for line in report.to_table().rstrip("\n").split("\n"):
        logger.info("%s", line)
    _emit(report.to_json(), args.out)
    return EXIT_FINDINGS if report.findings else EXIT_CLEAN


def cmd_train_uic(args, config) -> int:
    catalog = _get_catalog(args, config)
    provider = _get_provider(args, config)
    syscmds = _get_syscmds(args, config)
    rows = load_labeled(args.data, catalog)
    seed = _setting(args, config, "seed", 42)
    forest = train_uic(
        rows, catalog, syscmds, provider, params=_forest_params(args), seed=seed
    )
    logger.info(
        "trained %d trees on %d labeled utterances (seed %d)",
        forest.params.n_trees,
        len(rows),
        seed,
    )
    _emit(forest.to_json(), args.out)
    return EXIT_CLEAN


def cmd_eval_uic(args, config) -> int:
    catalog = _get_catalog(args, config)
    provider = _get_provider(args, config)
    syscmds = _get_syscmds(args, config)
    rows = load_labeled(args.data, catalog)
    seed = _setting(args, config, "seed", 42)
    metrics = evaluate_uic(
        rows,
        catalog,
        syscmds,
        provider,
        folds=args.folds,
        params=_forest_params(args),
        seed=seed,
    )
    logger.info(
        "%d-fold CV on %d instances: precision %.4f recall %.4f",
        metrics["folds"],
        metrics["instances"],
        metrics["precision"],
        metrics["recall"],
    )
    _emit(json.dumps(metrics, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_CLEAN


def cmd_detect(args, config) -> int:
    catalog = _get_catalog(args, config)
    provider = _get_provider(args, config)
    blacklist = _get_blacklist(args, config)
    syscmds = _get_syscmds(args, config)
    forest = RandomForest.load(args.model)
    transcripts = load_transcripts(args.transcripts, catalog)
    src_threshold = _setting(args, config, "src_threshold", DEFAULT_SRC_THRESHOLD)
    if not 0 < src_threshold <= 1:
        raise CliError("src threshold must be in (0, 1]")
    extractor = FeatureExtractor(syscmds, catalog, provider)
    alarms = []
    turns = 0
    started = time.perf_counter()
    for transcript in transcripts:
        turns += len(transcript.turns)
        alarms.extend(
            detect(
                transcript,
                blacklist,
                syscmds,
                catalog,
                forest,
                provider,
                src_threshold=src_threshold,
                extractor=extractor,
            )
        )
    elapsed = time.perf_counter() - started
    if turns:
        logger.info(
            "checked %d sessions (%d turns) in %.2fs, %.3f ms per turn",
            len(transcripts),
            turns,
            elapsed,
            1000.0 * elapsed / turns,
        )
    payload = {
        "sessions": len(transcripts),
        "alarm_count": len(alarms),
        "alarms": [alarm.to_dict() for alarm in alarms],
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_FINDINGS if alarms else EXIT_CLEAN


def build_parser() -> _Parser:
    parser = _Parser(
        prog="skillvet",
        description=(
            "Vet a voice-assistant skill market: scan catalogs for "
            "competitive invocation names and check conversation "
            "transcripts for masquerading."
        ),
    )
    parser.add_argument(
        "--config",
        help="TOML or JSON settings file; flags override its values",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="log progress details to stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--out", help="write JSON here (atomic) instead of stdout")
        return p

    p = add(
        "build-matrix",
        cmd_build_matrix,
        "derive the phoneme substitution-cost matrix from a dictionary",
    )
    p.add_argument("--dict", dest="dictionary", help="CMU-format dictionary path")
    p.add_argument(
        "--strict",
        action="store_true",
        help="reject malformed dictionary lines instead of skipping them",
    )

    p = add(
        "distance",
        cmd_distance,
        "weighted phonetic distance between two phrases",
    )
    p.add_argument("phrase_a")
    p.add_argument("phrase_b")
    p.add_argument("--dict", dest="dictionary", help="CMU-format dictionary path")
    p.add_argument("--matrix", help="cost-matrix TSV (default: build from dictionary)")

    p = add("variants", cmd_variants, "list spoken variants of an invocation name")
    p.add_argument("name")
    p.add_argument(
        "--variants",
        dest="variants",
        help="variant-generation config file (TOML or JSON)",
    )

    p = add("scan", cmd_scan, "all-pairs competitive-invocation-name scan")
    p.add_argument("--catalog", help="skill catalog JSONL")
    p.add_argument("--dict", dest="dictionary", help="CMU-format dictionary path")
    p.add_argument("--matrix", help="cost-matrix TSV (default: build from dictionary)")
    p.add_argument(
        "--variants", dest="variants", help="variant-generation config file"
    )
    p.add_argument(
        "--threshold",
        type=float,
        help=f"phonetic distance threshold (default {DEFAULT_SCAN_THRESHOLD})",
    )
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help="verify every pair without pruning (slow; for cross-checks)",
    )

    p = add("train-uic", cmd_train_uic, "train the utterance-intent forest")
    p.add_argument("--data", required=True, help="labeled utterances JSONL")
    p.add_argument("--catalog", help="skill catalog JSONL")
    p.add_argument("--syscmds", help="system command list JSON")
    p.add_argument("--seed", type=int, help="training seed (default 42)")
    p.add_argument("--trees", type=int, help="number of trees (default 100)")
    p.add_argument("--max-features", type=int, help="features tried per split")
    p.add_argument("--min-leaf", type=int, help="minimum samples per leaf")
    p.add_argument("--provider", help="embedding provider key (default baseline)")

    p = add("eval-uic", cmd_eval_uic, "cross-validate the utterance-intent forest")
    p.add_argument("--data", required=True, help="labeled utterances JSONL")
    p.add_argument("--catalog", help="skill catalog JSONL")
    p.add_argument("--syscmds", help="system command list JSON")
    p.add_argument("--folds", type=int, default=5, help="fold count (default 5)")
    p.add_argument("--seed", type=int, help="training seed (default 42)")
    p.add_argument("--trees", type=int, help="number of trees (default 100)")
    p.add_argument("--max-features", type=int, help="features tried per split")
    p.add_argument("--min-leaf", type=int, help="minimum samples per leaf")
    p.add_argument("--provider", help="embedding provider key (default baseline)")

    p = add("detect", cmd_detect, "run the masquerading detector over transcripts")
    p.add_argument("--transcripts", required=True, help="session transcripts JSONL")
    p.add_argument("--model", required=True, help="trained forest JSON")
    p.add_argument("--catalog", help="skill catalog JSONL")
    p.add_argument("--blacklist", help="response blacklist JSON")
    p.add_argument("--syscmds", help="system command list JSON")
    p.add_argument(
        "--src-threshold",
        dest="src_threshold",
        type=float,
        help=f"response-mimicry threshold (default {DEFAULT_SRC_THRESHOLD})",
    )
    p.add_argument("--provider", help="embedding provider key (default baseline)")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = _load_config(args.config) if args.config else {}
        return args.handler(args, config)
    except CliError as exc:
        print(f"skillvet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"skillvet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
