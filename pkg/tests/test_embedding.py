"""Tests for the hashed bag-of-grams embedding and sentence relevance."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skillvet.embedding import (
    DEFAULT_DIMENSION,
    HashedBagEmbedding,
    SentenceVector,
    make_provider,
    max_relevance,
    sentence_relevance,
    stem,
    tokenize,
    vector_relevance,
)


@pytest.fixture(scope="module")
def provider():
    return HashedBagEmbedding()


class TestTokenize:
    def test_lowercases_and_splits_on_non_alphanumerics(self):
        assert tokenize("Open Sleep-Sounds!") == ["open", "sleep", "sound"]

    def test_drops_stop_words(self):
        assert tokenize("tell me the weather") == ["tell", "weather"]

    def test_numbers_kept(self):
        assert "42" in tokenize("the answer is 42")

    def test_empty_text(self):
        assert tokenize("") == []
        assert tokenize("   \t ") == []

    def test_stop_words_only(self):
        assert tokenize("is it a the of") == []


class TestStem:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("sounds", "sound"),
            ("facts", "fact"),
            ("opened", "open"),
            ("opening", "open"),
            ("stories", "story"),
            ("quickly", "quick"),
            ("cat", "cat"),
        ],
    )
    def test_common_suffixes(self, word, expected):
        assert stem(word) == expected

    def test_short_words_untouched(self):
        # Stripping would leave fewer than three letters.
        assert stem("res") == "res"
        assert stem("is") == "is"

    def test_single_application(self):
        # One rule fires, longest suffix first, never a second pass.
        assert stem("meetings") == "meeting"


class TestEmbed:
    def test_deterministic_across_calls(self, provider):
        a = provider.embed("open sleep sounds please")
        b = provider.embed("open sleep sounds please")
        assert np.array_equal(a.values, b.values)
        assert a.norm == b.norm

    def test_empty_text_zero_vector(self, provider):
        vec = provider.embed("")
        assert vec.norm == 0.0
        assert not vec.values.any()

    def test_stopword_only_text_zero_vector(self, provider):
        assert provider.embed("is it the a").norm == 0.0

    def test_word_order_changes_bigrams_only(self, provider):
        a = provider.embed("open sleep sounds")
        b = provider.embed("sounds sleep open")
        unigram_bins = {
            HashedBagEmbedding().bin_of(token) for token in ("open", "sleep", "sound")
        }
        for k in unigram_bins:
            assert a.values[k] == b.values[k]
        assert not np.array_equal(a.values, b.values)

    def test_term_frequency_weighting(self, provider):
        single = provider.embed("cat")
        double = provider.embed("cat cat")
        k = HashedBagEmbedding().bin_of("cat")
        assert single.values[k] == pytest.approx(1.0)
        assert double.values[k] == pytest.approx(1.0 + math.log(2.0))

    def test_dimension(self, provider):
        assert provider.embed("anything").values.shape == (DEFAULT_DIMENSION,)


class TestSentenceRelevance:
    def test_self_relevance_is_one(self, provider):
        assert sentence_relevance("cat facts", "cat facts", provider) == pytest.approx(
            1.0
        )

    def test_symmetry(self, provider):
        a = "tell me a cat fact"
        b = "daily cat facts and trivia"
        assert sentence_relevance(a, b, provider) == pytest.approx(
            sentence_relevance(b, a, provider)
        )

    def test_range(self, provider):
        pairs = [
            ("open sleep sounds", "sleep sounds please"),
            ("weather forecast", "cat facts"),
            ("", "something"),
            ("a b c", "c b a"),
        ]
        for a, b in pairs:
            sr = sentence_relevance(a, b, provider)
            assert 0.0 <= sr <= 1.0

    def test_zero_vector_relevance_is_zero(self, provider):
        assert sentence_relevance("", "cat facts", provider) == 0.0
        assert sentence_relevance("the a of", "cat facts", provider) == 0.0

    def test_disjoint_collision_free_vocabulary(self, provider):
        # Hand-picked words whose unigram and bigram bins do not collide,
        # so orthogonality is exact, not approximate.
        a, b = "zebra quartz", "violin ember"
        grams_a = {"zebra", "quartz", "zebra quartz"}
        grams_b = {"violin", "ember", "violin ember"}
        bins_a = {HashedBagEmbedding().bin_of(g) for g in grams_a}
        bins_b = {HashedBagEmbedding().bin_of(g) for g in grams_b}
        assert not bins_a & bins_b, "pick different words: hash collision"
        assert sentence_relevance(a, b, provider) == 0.0

    def test_scale_invariance_at_vector_level(self, provider):
        a = provider.embed("open sleep sounds")
        b = provider.embed("sleep sounds please")
        base = vector_relevance(a, b)
        for c in (0.5, 3.0, 1e6):
            scaled = SentenceVector(a.values * c)
            assert vector_relevance(scaled, b) == pytest.approx(base, abs=1e-12)

    def test_negative_cosine_maps_into_range(self):
        a = SentenceVector(np.array([1.0, 0.0]))
        b = SentenceVector(np.array([-1.0, 0.0]))
        assert vector_relevance(a, b) == pytest.approx(1.0)

    @given(
        st.text(alphabet="abcdefg ", max_size=30),
        st.text(alphabet="abcdefg ", max_size=30),
    )
    def test_relevance_properties_random_text(self, a, b):
        provider = HashedBagEmbedding()
        sr_ab = sentence_relevance(a, b, provider)
        sr_ba = sentence_relevance(b, a, provider)
        assert 0.0 <= sr_ab <= 1.0
        assert sr_ab == pytest.approx(sr_ba)


class TestMaxRelevance:
    def test_picks_best_reference(self, provider):
        refs = ["weather forecast", "cat facts", "sleep sounds"]
        assert max_relevance("cat facts please", refs, provider) == pytest.approx(
            sentence_relevance("cat facts please", "cat facts", provider)
        )

    def test_empty_reference_list(self, provider):
        assert max_relevance("anything", [], provider) == 0.0


class TestProviderRegistry:
    def test_baseline_available(self):
        provider = make_provider("baseline")
        assert isinstance(provider, HashedBagEmbedding)

    def test_unknown_provider_rejected(self):
        with pytest.raises(ValueError, match="baseline"):
            make_provider("snli-bilstm")
