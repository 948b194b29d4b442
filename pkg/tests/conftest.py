"""Shared fixtures: bundled lexica, parse files, and the review corpus."""

from __future__ import annotations

from pathlib import Path

import pytest

from treesent import (
    Lexicon,
    Review,
    Sentence,
    attach_parses,
    load_corpus,
    load_lexicon,
    parse_conllu_file,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def es_lexicon() -> Lexicon:
    return load_lexicon(
        FIXTURES / "lexica" / "es_sentiment.tsv",
        FIXTURES / "lexica" / "es_intensifiers.tsv",
        FIXTURES / "lexica" / "es_negators.txt",
    )


@pytest.fixture(scope="session")
def en_lexicon() -> Lexicon:
    return load_lexicon(
        FIXTURES / "lexica" / "en_sentiment.tsv",
        FIXTURES / "lexica" / "en_intensifiers.tsv",
        FIXTURES / "lexica" / "en_negators.txt",
    )


@pytest.fixture(scope="session")
def en_baseline_lexicon(en_lexicon: Lexicon) -> Lexicon:
    # same booster and negator resources as the compositional run
    base = load_lexicon(FIXTURES / "lexica" / "en_baseline.tsv")
    return Lexicon(
        sentiment=base.sentiment,
        intensifiers=en_lexicon.intensifiers,
        negators=en_lexicon.negators,
    )


@pytest.fixture(scope="session")
def spanish_examples() -> dict[str, Sentence]:
    doc = parse_conllu_file(FIXTURES / "conllu" / "spanish_examples.conllu")
    return {sentence.source_id: sentence for sentence in doc}


@pytest.fixture(scope="session")
def review_corpus() -> list[Review]:
    reviews = load_corpus(FIXTURES / "corpus" / "reviews.jsonl")
    parses = parse_conllu_file(FIXTURES / "conllu" / "reviews.conllu")
    return attach_parses(reviews, parses)


@pytest.fixture(scope="session")
def suite_corpus() -> list[Review]:
    reviews = load_corpus(FIXTURES / "corpus" / "coordination_suite.jsonl")
    parses = parse_conllu_file(FIXTURES / "conllu" / "coordination_suite.conllu")
    return attach_parses(reviews, parses)
