"""Non-compositional heuristic baseline.

Scores a sentence by linear token order alone: each lexicon hit is
boosted by nearby intensifier words, flipped once if any negator sits
in the preceding window, reweighted around a "but"/"pero" pivot, and
the summed valence is squashed into (-1, +1). Tree structure is never
consulted; that contrast is the point of the baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Iterable

from .conllu import Sentence, Token
from .errors import ConfigError
from .lexicon import Lexicon
from .scoring import PolarityLabel

BUT_LEMMAS = frozenset({"but", "pero"})


@dataclass(frozen=True)
class HeuristicConfig:
    negation_window: int = 3
    negation_factor: float = -0.74
    booster_increment: float = 0.293
    but_before_weight: float = 0.5
    but_after_weight: float = 1.5
    normalization_alpha: float = 15.0
    neutral_band: float = 0.05

    def __post_init__(self):
        if self.negation_window < 1:
            raise ConfigError(f"negation_window must be >= 1, got {self.negation_window}")
        if self.normalization_alpha <= 0:
            raise ConfigError(
                f"normalization_alpha must be > 0, got {self.normalization_alpha}"
            )
        if not 0 <= self.neutral_band < 1:
            raise ConfigError(f"neutral_band must be in [0, 1), got {self.neutral_band}")


def parse_heuristic_config(text: str, *, name: str = "<config>") -> HeuristicConfig:
    """Read ``key = value`` lines overriding the defaults."""
    known = {f.name for f in fields(HeuristicConfig)}
    overrides: dict[str, float | int] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key or not raw:
            raise ConfigError(f"{name}: line {line_no}: expected 'key = value', got {line!r}")
        if key not in known:
            raise ConfigError(f"{name}: line {line_no}: unknown option {key!r}")
        try:
            overrides[key] = int(raw) if key == "negation_window" else float(raw)
        except ValueError:
            raise ConfigError(
                f"{name}: line {line_no}: {raw!r} is not a number"
            ) from None
    return HeuristicConfig(**overrides)


def load_heuristic_config(path) -> HeuristicConfig:
    with open(path, encoding="utf-8") as handle:
        return parse_heuristic_config(handle.read(), name=str(path))


@dataclass(frozen=True)
class LexiconHit:
    """One scored token with its window-adjusted valence."""

    token_id: int
    form: str
    base: float
    adjusted: float


def _but_position(tokens: Iterable[Token]) -> int | None:
    for tok in tokens:
        if tok.lemma.lower() in BUT_LEMMAS or tok.form.lower() in BUT_LEMMAS:
            return tok.id
    return None


def heuristic_hits(
    sentence: Sentence, lexicon: Lexicon, config: HeuristicConfig = HeuristicConfig()
) -> list[LexiconHit]:
    """Per-hit valences after booster, negation, and but adjustments.

    Boosters add toward the hit's sign first, then one negation flip
    applies to the boosted value, then the but-side weight scales it.
    """
    tokens = sentence.tokens
    but_id = _but_position(tokens)
    hits: list[LexiconHit] = []
    for index, tok in enumerate(tokens):
        base = lexicon.sentiment_of(tok)
        if base is None:
            continue
        window = tokens[max(0, index - config.negation_window) : index]
        valence = base
        for prior in window:
            if lexicon.intensity_of(prior) is not None:
                valence += math.copysign(config.booster_increment, valence)
        if any(lexicon.is_negator(prior) for prior in window):
            valence *= config.negation_factor
        if but_id is not None:
            if tok.id < but_id:
                valence *= config.but_before_weight
            elif tok.id > but_id:
                valence *= config.but_after_weight
        hits.append(LexiconHit(tok.id, tok.form, base, valence))
    return hits


def raw_valence(
    sentence: Sentence, lexicon: Lexicon, config: HeuristicConfig = HeuristicConfig()
) -> float:
    """Unnormalized valence sum; the unit reviews accumulate over."""
    return sum(hit.adjusted for hit in heuristic_hits(sentence, lexicon, config))


def normalize(x: float, alpha: float) -> float:
    return x / math.sqrt(x * x + alpha)


def score_heuristic(
    sentence: Sentence, lexicon: Lexicon, config: HeuristicConfig = HeuristicConfig()
) -> float:
    """Normalized sentence score in (-1, +1)."""
    return normalize(raw_valence(sentence, lexicon, config), config.normalization_alpha)


def score_review_heuristic(
    sentences: Iterable[Sentence],
    lexicon: Lexicon,
    config: HeuristicConfig = HeuristicConfig(),
) -> float:
    """Review score: raw valences summed across sentences, squashed once."""
    total = sum(raw_valence(s, lexicon, config) for s in sentences)
    return normalize(total, config.normalization_alpha)


def classify_normalized(
    score: float, config: HeuristicConfig = HeuristicConfig()
) -> PolarityLabel:
    if score >= config.neutral_band:
        return PolarityLabel.POSITIVE
    if score <= -config.neutral_band:
        return PolarityLabel.NEGATIVE
    return PolarityLabel.NEUTRAL
