"""Sentiment, intensifier, and negator lexica.

File formats are deliberately small: tab-separated ``lemma<TAB>value``
for scored entries, one lemma per line for negators. Lookup is by
case-folded lemma with a fall back to the surface form, so parses with
sparse lemmatization still match.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from .conllu import Token
from .errors import LexiconError

log = logging.getLogger(__name__)

SENTIMENT_MIN = -5.0
SENTIMENT_MAX = 5.0


def parse_scored_tsv(text: str, *, name: str = "<lexicon>") -> dict[str, float]:
    """Read ``lemma<TAB>value`` rows; duplicate lemma: last row wins."""
    entries: dict[str, float] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(
                f"{name}: line {line_no}: expected 'lemma<TAB>value', got {line!r}"
            )
        lemma, raw = parts[0].strip().lower(), parts[1].strip()
        try:
            value = float(raw)
        except ValueError:
            raise LexiconError(
                f"{name}: line {line_no}: {raw!r} is not a number"
            ) from None
        if lemma in entries:
            log.warning(
                "%s: line %d: duplicate entry %r, last value wins", name, line_no, lemma
            )
        entries[lemma] = value
    return entries


def parse_sentiment_tsv(text: str, *, name: str = "<sentiment>") -> dict[str, float]:
    entries = parse_scored_tsv(text, name=name)
    for lemma, value in entries.items():
        if value == 0:
            raise LexiconError(f"{name}: sentiment entry {lemma!r} has value 0")
        if not SENTIMENT_MIN <= value <= SENTIMENT_MAX:
            raise LexiconError(
                f"{name}: sentiment entry {lemma!r} is outside "
                f"[{SENTIMENT_MIN:g}, {SENTIMENT_MAX:g}]: {value}"
            )
    return entries


def parse_intensifier_tsv(text: str, *, name: str = "<intensifiers>") -> dict[str, float]:
    entries = parse_scored_tsv(text, name=name)
    for lemma, strength in entries.items():
        if strength <= -1:
            raise LexiconError(
                f"{name}: intensifier {lemma!r} has strength <= -1: {strength}"
            )
    return entries


def parse_negator_list(text: str, *, name: str = "<negators>") -> frozenset[str]:
    words = {
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    }
    if not words:
        raise LexiconError(f"{name}: no entries")
    return frozenset(words)


@dataclass(frozen=True)
class Lexicon:
    """Word resources driving both scorers.

    Sentiment values are nonzero on a [-5, +5] scale; intensifier
    strengths are > -1 so the (1 + strength) factor keeps its sign.
    With negator_feature_rule set, a token also counts as a negator
    when it carries the morphological feature Polarity=Neg.
    """

    sentiment: Mapping[str, float]
    intensifiers: Mapping[str, float] = field(default_factory=dict)
    negators: frozenset[str] = frozenset()
    negator_feature_rule: bool = True

    def __post_init__(self):
        for lemma, value in self.sentiment.items():
            if value == 0 or not SENTIMENT_MIN <= value <= SENTIMENT_MAX:
                raise LexiconError(
                    f"sentiment entry {lemma!r} must be nonzero in "
                    f"[{SENTIMENT_MIN:g}, {SENTIMENT_MAX:g}], got {value}"
                )
        for lemma, strength in self.intensifiers.items():
            if strength <= -1:
                raise LexiconError(
                    f"intensifier {lemma!r} has strength <= -1: {strength}"
                )

    def _lookup(self, table: Mapping[str, float], token: Token) -> float | None:
        if token.lemma and token.lemma.lower() in table:
            return table[token.lemma.lower()]
        if token.form.lower() in table:
            return table[token.form.lower()]
        return None

    def sentiment_of(self, token: Token) -> float | None:
        return self._lookup(self.sentiment, token)

    def intensity_of(self, token: Token) -> float | None:
        return self._lookup(self.intensifiers, token)

    def is_negator(self, token: Token) -> bool:
        if token.lemma.lower() in self.negators or token.form.lower() in self.negators:
            return True
        return self.negator_feature_rule and token.feats.get("Polarity") == "Neg"


def _read(path) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def load_lexicon(
    sentiment_path,
    intensifier_path=None,
    negator_path=None,
    *,
    negator_feature_rule: bool = True,
) -> Lexicon:
    """Read lexicon files; intensifier and negator files are optional."""
    return Lexicon(
        sentiment=parse_sentiment_tsv(_read(sentiment_path), name=str(sentiment_path)),
        intensifiers=(
            parse_intensifier_tsv(_read(intensifier_path), name=str(intensifier_path))
            if intensifier_path
            else {}
        ),
        negators=(
            parse_negator_list(_read(negator_path), name=str(negator_path))
            if negator_path
            else frozenset()
        ),
        negator_feature_rule=negator_feature_rule,
    )
