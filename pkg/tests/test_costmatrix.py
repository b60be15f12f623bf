import numpy as np
import pytest

from skillvet.alignment import align_uniform
from skillvet.arpabet import GAP, SYMBOLS
from skillvet.costmatrix import (
    CostMatrix,
    PhonemeStatistics,
    build_matrix,
    build_matrix_from_statistics,
    collect_statistics,
)
from skillvet.prondict import parse_dictionary

TOMATO = ["TOMATO  T AH0 M EY1 T OW2", "TOMATO(1)  T AH0 M AA1 T OW2"]


def test_tomato_statistics():
    stats = collect_statistics(parse_dictionary(TOMATO))
    assert stats.pair_count == 1
    # One substitution column EY->AA; every other column is a match
    # counting its phoneme twice.
    assert stats.frequency["EY"] == 1
    assert stats.frequency["AA"] == 1
    assert stats.frequency["T"] == 4
    assert stats.frequency["AH"] == 2
    assert stats.frequency["M"] == 2
    assert stats.frequency["OW"] == 2
    assert stats.substitution_frequency[("EY", "AA")] == 1
    assert ("AA", "EY") not in stats.substitution_frequency


def test_tomato_weighted_cost_is_half():
    m = build_matrix(parse_dictionary(TOMATO))
    assert m.cost("EY", "AA") == 0.5
    assert m.cost("AA", "EY") == 0.5
    assert m.cost("T", "T") == 0.0
    assert m.cost("K", "S") == 1.0  # unobserved pair
    assert m.pair_count == 1


def test_indel_statistics_from_variant_pair():
    stats = collect_statistics(
        parse_dictionary(["FACTS  F AE1 K T S", "FACTS(1)  F AE1 K S"])
    )
    assert stats.substitution_frequency[("T", GAP)] == 1
    assert stats.frequency[GAP] == 1
    assert stats.frequency["T"] == 1
    m = build_matrix_from_statistics(stats)
    # WC(T, gap) = 1 - 1 / (1 + 1)
    assert m.cost("T", GAP) == 0.5


def test_accumulate_rejects_unknown_op():
    stats = PhonemeStatistics()
    with pytest.raises(ValueError):
        stats.accumulate((("transpose", "A", "B"),))


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        CostMatrix(np.ones((3, 3)))


def test_built_matrix_properties(matrix):
    v = matrix.values
    assert v.shape == (40, 40)
    assert np.array_equal(v, v.T)
    assert np.all(np.diag(v) == 0.0)
    assert np.all(v >= 0.0) and np.all(v <= 1.0)
    # A directed substitution contributes one occurrence to each side, so
    # no observed off-diagonal cost can fall below 1/2.
    off = v[~np.eye(40, dtype=bool)]
    assert off.min() >= 0.5
    assert matrix.min_nonmatch_cost() == off.min()
    gap_col = np.delete(v[:, SYMBOLS.index(GAP)], SYMBOLS.index(GAP))
    assert matrix.min_indel_cost() == gap_col.min()


def test_build_is_deterministic(dictionary):
    assert build_matrix(dictionary) == build_matrix(dictionary)


def test_serialization_round_trip(matrix):
    text = matrix.to_text()
    again = CostMatrix.from_text(text)
    assert np.array_equal(again.values, matrix.values)
    assert again.pair_count == matrix.pair_count
    assert again.to_text() == text


def test_save_load(tmp_path, matrix):
    path = tmp_path / "wc.tsv"
    matrix.save(str(path))
    assert CostMatrix.load(str(path)) == matrix


def test_checksum_detects_tampering(matrix, tmp_path):
    path = tmp_path / "wc.tsv"
    matrix.save(str(path))
    text = path.read_text()
    tampered = text.replace("0.5", "0.4", 1)
    assert tampered != text
    path.write_text(tampered)
    with pytest.raises(ValueError, match="checksum"):
        CostMatrix.load(str(path))


def test_unknown_format_version_rejected(matrix):
    text = matrix.to_text().replace("format 1", "format 99", 1)
    with pytest.raises(ValueError, match="format"):
        CostMatrix.from_text(text)


def test_alignment_feeds_statistics_consistently():
    # Accumulating the same alignment twice doubles every count.
    _cost, ops = align_uniform(("T", "AH"), ("T", "IY"))
    once = PhonemeStatistics()
    once.accumulate(ops)
    twice = PhonemeStatistics()
    twice.accumulate(ops)
    twice.accumulate(ops)
    assert {k: 2 * v for k, v in once.frequency.items()} == dict(twice.frequency)
