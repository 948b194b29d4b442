"""Review corpus ingestion, gold aggregation, and evaluation subsets.

The corpus file holds one JSON record per line with a review id, the
review text, and a list of opinion expressions, each carrying a
positive or negative polarity. Field spellings of the public
structured-sentiment releases are accepted alongside our own (sent_id
for review_id, Polarity/Polar_expression inside opinions); holder and
target spans are read and dropped. Dependency parses arrive separately
as CoNLL-U whose sentence ids follow ``<review_id>:<k>``.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .conllu import Sentence
from .errors import AlignmentError, CorpusError
from .lexicon import Lexicon
from .scoring import COORDINATION_DEPRELS, PolarityLabel

log = logging.getLogger(__name__)

_WS = re.compile(r"\s+")


@dataclass(frozen=True)
class OpinionExpression:
    polarity: PolarityLabel
    expression_text: str = ""


@dataclass(frozen=True)
class Review:
    review_id: str
    text: str
    opinions: tuple[OpinionExpression, ...] = ()
    sentences: tuple[Sentence, ...] = ()


def _parse_polarity(raw: object) -> PolarityLabel:
    if not isinstance(raw, str):
        raise ValueError(f"polarity must be a string, got {raw!r}")
    word = raw.strip().lower().split()[-1] if raw.strip() else ""
    if word == "positive":
        return PolarityLabel.POSITIVE
    if word == "negative":
        return PolarityLabel.NEGATIVE
    raise ValueError(f"unsupported polarity value {raw!r}")


def _parse_opinion(raw: object) -> OpinionExpression:
    if not isinstance(raw, dict):
        raise ValueError(f"opinion must be an object, got {raw!r}")
    polarity = raw.get("polarity", raw.get("Polarity"))
    if polarity is None:
        raise ValueError("opinion lacks a polarity field")
    expression = raw.get("expression", raw.get("expression_text", ""))
    if not expression:
        polar_expression = raw.get("Polar_expression")
        if isinstance(polar_expression, list) and polar_expression:
            texts = polar_expression[0]
            if isinstance(texts, list):
                expression = " ".join(str(t) for t in texts)
            else:
                expression = str(texts)
    return OpinionExpression(_parse_polarity(polarity), str(expression))


def parse_corpus(text: str, *, name: str = "<corpus>") -> list[Review]:
    """Load reviews from JSON-lines text.

    Bad records are skipped with a logged diagnostic; duplicates by
    review id keep the first occurrence; review text is whitespace
    normalized and empty-text records are dropped.
    """
    reviews: list[Review] = []
    seen: set[str] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            if not isinstance(record, dict):
                raise ValueError("record is not an object")
            review_id = record.get("review_id", record.get("sent_id"))
            if not review_id or not isinstance(review_id, str):
                raise ValueError("missing review_id")
            body = _WS.sub(" ", str(record.get("text", ""))).strip()
            if not body:
                raise ValueError("empty text")
            raw_opinions = record.get("opinions", [])
            if not isinstance(raw_opinions, list):
                raise ValueError("opinions must be a list")
            opinions = tuple(_parse_opinion(op) for op in raw_opinions)
        except json.JSONDecodeError as exc:
            log.warning("%s: line %d: record skipped: invalid JSON: %s", name, line_no, exc)
            continue
        except ValueError as exc:
            log.warning("%s: line %d: record skipped: %s", name, line_no, exc)
            continue
        if review_id in seen:
            log.warning("%s: line %d: duplicate review_id %r skipped", name, line_no, review_id)
            continue
        seen.add(review_id)
        reviews.append(Review(review_id=review_id, text=body, opinions=opinions))
    return reviews


def load_corpus(path) -> list[Review]:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_corpus(handle.read(), name=str(path))
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file: {exc}") from exc


def split_sent_id(sent_id: str) -> tuple[str, int | None]:
    """``rev42:3`` -> (rev42, 3); ids without a numeric tail stay whole."""
    head, sep, tail = sent_id.rpartition(":")
    if sep and tail.isdigit():
        return head, int(tail)
    return sent_id, None


def attach_parses(reviews: Sequence[Review], sentences: Iterable[Sentence]) -> list[Review]:
    """Join CoNLL-U sentences onto reviews by their sent_id prefix.

    Sentence order within a review follows the document. A sentence
    whose review id has no corpus record is an alignment failure.
    """
    by_review: dict[str, list[Sentence]] = {}
    known = {review.review_id for review in reviews}
    for sentence in sentences:
        review_id, _ = split_sent_id(sentence.source_id)
        if review_id not in known:
            raise AlignmentError(
                f"sentence {sentence.source_id!r} has no corpus record {review_id!r}"
            )
        by_review.setdefault(review_id, []).append(sentence)
    return [
        replace(review, sentences=tuple(by_review.get(review.review_id, ())))
        for review in reviews
    ]


def ensure_parsed(reviews: Sequence[Review]) -> Sequence[Review]:
    """Fail on the first review that has no attached parse."""
    for review in reviews:
        if not review.sentences:
            raise AlignmentError(f"review {review.review_id!r} has no parsed sentences")
    return reviews


def filter_subjective(reviews: Sequence[Review]) -> list[Review]:
    """Keep reviews with at least one opinion expression."""
    return [review for review in reviews if review.opinions]


def aggregate_gold(opinions: Sequence[OpinionExpression]) -> PolarityLabel:
    """Majority polarity of the opinion list; an exact tie is neutral."""
    if not opinions:
        raise ValueError("cannot aggregate an empty opinion list")
    positive = sum(1 for op in opinions if op.polarity is PolarityLabel.POSITIVE)
    negative = len(opinions) - positive
    if positive > negative:
        return PolarityLabel.POSITIVE
    if negative > positive:
        return PolarityLabel.NEGATIVE
    return PolarityLabel.NEUTRAL


def subset_negation(reviews: Sequence[Review], lexicon: Lexicon) -> list[Review]:
    """Reviews containing at least one negator token."""
    ensure_parsed(reviews)
    return [
        review
        for review in reviews
        if any(lexicon.is_negator(tok) for sentence in review.sentences for tok in sentence)
    ]


def subset_coordination(reviews: Sequence[Review]) -> list[Review]:
    """Reviews containing a coordination relation (conj or cc)."""
    ensure_parsed(reviews)
    return [
        review
        for review in reviews
        if any(
            tok.base_deprel in COORDINATION_DEPRELS
            for sentence in review.sentences
            for tok in sentence
        )
    ]
