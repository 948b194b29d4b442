"""Linear-order heuristic: windows, boosters, but-clauses, normalization."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from treesent import (
    HeuristicConfig,
    Lexicon,
    PolarityLabel,
    Sentence,
    Token,
    classify_normalized,
    normalize,
    score_heuristic,
    score_review_heuristic,
)
from treesent.baseline import heuristic_hits, parse_heuristic_config, raw_valence
from treesent.errors import ConfigError

LEX = Lexicon(
    sentiment={"clean": 2.0, "bad": -2.0, "like": 1.0},
    intensifiers={"very": 0.25},
    negators=frozenset({"not", "nothing"}),
)

CFG = HeuristicConfig()


def _chain(*forms: str) -> Sentence:
    """Flat left-to-right chain; the heuristic ignores tree shape anyway."""
    tokens = tuple(
        Token(
            id=i,
            form=form,
            lemma=form.lower(),
            upos="X",
            feats={},
            head=i - 1,
            deprel="root" if i == 1 else "dep",
        )
        for i, form in enumerate(forms, start=1)
    )
    return Sentence(tokens=tokens, source_id="b1")


def test_single_hit_normalization():
    assert score_heuristic(_chain("clean"), LEX, CFG) == pytest.approx(2 / math.sqrt(19))


def test_negation_within_window_flips_once():
    assert raw_valence(_chain("not", "clean"), LEX, CFG) == pytest.approx(2 * -0.74)
    assert score_heuristic(_chain("not", "clean"), LEX, CFG) == pytest.approx(
        -1.48 / math.sqrt(1.48**2 + 15)
    )


def test_two_negators_in_window_still_flip_once():
    assert raw_valence(_chain("not", "nothing", "clean"), LEX, CFG) == pytest.approx(-1.48)


def test_negator_outside_window_is_ignored():
    sent = _chain("not", "a", "b", "c", "clean")
    assert raw_valence(sent, LEX, CFG) == pytest.approx(2.0)


def test_negator_after_hit_is_ignored():
    assert raw_valence(_chain("clean", "not"), LEX, CFG) == pytest.approx(2.0)


def test_booster_applies_before_negation_factor():
    assert raw_valence(_chain("very", "clean"), LEX, CFG) == pytest.approx(2 + 0.293)
    assert raw_valence(_chain("not", "very", "clean"), LEX, CFG) == pytest.approx(
        (2 + 0.293) * -0.74
    )


def test_booster_is_sign_aligned():
    assert raw_valence(_chain("very", "bad"), LEX, CFG) == pytest.approx(-2 - 0.293)


def test_but_reweights_both_sides():
    sent = _chain("clean", "but", "bad")
    hits = heuristic_hits(sent, LEX, CFG)
    assert [h.adjusted for h in hits] == [pytest.approx(2 * 0.5), pytest.approx(-2 * 1.5)]
    assert raw_valence(sent, LEX, CFG) == pytest.approx(1 - 3)


def test_spanish_but_lemma_recognized():
    lexicon = Lexicon(sentiment={"bueno": 2.0, "malo": -2.0})
    sent = _chain("bueno", "pero", "malo")
    assert raw_valence(sent, lexicon, CFG) == pytest.approx(2 * 0.5 + -2 * 1.5)


def test_window_is_linear_not_structural():
    # same bag of lemmas, different order, different score
    before = raw_valence(_chain("not", "clean"), LEX, CFG)
    after = raw_valence(_chain("clean", "not"), LEX, CFG)
    assert before != after


def test_no_hits_scores_zero():
    assert score_heuristic(_chain("the", "x"), LEX, CFG) == 0.0


def test_review_accumulates_raw_then_normalizes_once():
    sentences = [_chain("clean"), _chain("not", "clean")]
    total = score_review_heuristic(sentences, LEX, CFG)
    raw = 2.0 + 2 * -0.74
    assert total == pytest.approx(normalize(raw, 15.0))
    assert total != pytest.approx(
        normalize(2.0, 15.0) + normalize(2 * -0.74, 15.0)
    )


def test_classify_normalized_band_edges():
    assert classify_normalized(0.05, CFG) is PolarityLabel.POSITIVE
    assert classify_normalized(0.049, CFG) is PolarityLabel.NEUTRAL
    assert classify_normalized(-0.05, CFG) is PolarityLabel.NEGATIVE
    assert classify_normalized(0.0, CFG) is PolarityLabel.NEUTRAL


@given(x=st.floats(min_value=-1e6, max_value=1e6))
def test_normalize_is_odd_and_bounded(x):
    assert normalize(-x, 15.0) == -normalize(x, 15.0)
    assert abs(normalize(x, 15.0)) < 1.0


@given(
    x=st.floats(min_value=-1e3, max_value=1e3),
    step=st.floats(min_value=0.0, max_value=10.0),
)
def test_normalize_is_nondecreasing(x, step):
    assert normalize(x, 15.0) <= normalize(x + step, 15.0) + 1e-12


def test_config_validation():
    with pytest.raises(ConfigError):
        HeuristicConfig(negation_window=0)
    with pytest.raises(ConfigError):
        HeuristicConfig(normalization_alpha=0.0)
    with pytest.raises(ConfigError):
        HeuristicConfig(neutral_band=1.0)


def test_parse_config_overrides_and_comments():
    text = "# tuned\nnegation_window = 2\nnegation_factor = -0.5\n"
    config = parse_heuristic_config(text)
    assert config.negation_window == 2
    assert config.negation_factor == -0.5
    assert config.booster_increment == 0.293


def test_parse_config_rejects_unknown_key_and_bad_value():
    with pytest.raises(ConfigError):
        parse_heuristic_config("negation_windw = 2\n")
    with pytest.raises(ConfigError):
        parse_heuristic_config("negation_window = soon\n")
    with pytest.raises(ConfigError):
        parse_heuristic_config("negation_window\n")


def test_wider_window_catches_distant_negator():
    wide = HeuristicConfig(negation_window=4)
    sent = _chain("not", "a", "b", "c", "clean")
    assert raw_valence(sent, LEX, wide) == pytest.approx(-1.48)
