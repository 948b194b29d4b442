"""Compositional polarity scoring over dependency trees.

A sentiment word contributes its lexicon score, scaled by (1 + b) for
each intensifier among its direct children. Contributions travel up the
tree branch by branch (deepest first); a negator child of a branch
shifts the score it meets there by a constant 4 toward (and possibly
past) zero. Coordination handling is switchable:

* coordination_fix on: every coordination conjunct is scored as an
  independent subtree, so a negator can only affect sentiment inside
  its own conjunct; conjunct totals are then combined.
* coordination_fix off: one whole-tree pass in which sentiment
  contributions stay separate streams, so a negator shifts every
  stream that has reached its branch, wherever it originated. This
  reproduces the behavior the fixed version is measured against.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .conllu import HeadChildMap, Sentence, branch_order, build_head_child_map
from .lexicon import Lexicon

log = logging.getLogger(__name__)

NEGATION_SHIFT = 4.0

COORDINATION_DEPRELS = frozenset({"conj", "cc"})


class PolarityLabel(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


class ElementType(str, Enum):
    SENTIMENT = "sentiment"
    INTENSIFIER = "intensifier"
    NEGATOR = "negator"
    PLAIN = "plain"


@dataclass(frozen=True)
class AnnotatedToken:
    """A token labeled with its scoring role.

    element_score is present exactly for sentiment tokens; intensifier
    strength lives in its own field.
    """

    token_id: int
    element_type: ElementType
    element_score: float | None = None
    intensity: float | None = None

    def __post_init__(self):
        has_score = self.element_score is not None
        if (self.element_type is ElementType.SENTIMENT) != has_score:
            raise ValueError("element_score is required iff element_type is sentiment")
        if has_score and (self.element_score == 0 or abs(self.element_score) > 5):
            raise ValueError(f"element_score out of range: {self.element_score}")
        if (self.element_type is ElementType.INTENSIFIER) != (self.intensity is not None):
            raise ValueError("intensity is required iff element_type is intensifier")


@dataclass(frozen=True)
class ScorerOptions:
    coordination_fix: bool = True
    aggregation: str = "sum"

    def __post_init__(self):
        if self.aggregation not in ("sum", "mean"):
            raise ValueError(f"aggregation must be 'sum' or 'mean', got {self.aggregation!r}")


@dataclass(frozen=True)
class PolarityScore:
    """Final sentence value plus the per-branch trace behind it.

    contributing_branches lists (head id, accumulated score at that
    branch) in evaluation order, closed by (0, final value) whenever the
    sentence contains at least one sentiment word.
    """

    value: float
    contributing_branches: tuple[tuple[int, float], ...] = ()


def annotate(sentence: Sentence, lexicon: Lexicon) -> list[AnnotatedToken]:
    """Label each token with exactly one scoring role.

    Negator status wins over a sentiment reading, and sentiment wins
    over intensifier; overlaps are warned about, not rejected.
    """
    out: list[AnnotatedToken] = []
    for tok in sentence:
        score = lexicon.sentiment_of(tok)
        strength = lexicon.intensity_of(tok)
        if lexicon.is_negator(tok):
            if score is not None or strength is not None:
                log.warning(
                    "token %d %r is a negator and also has a scored entry; negator wins",
                    tok.id,
                    tok.form,
                )
            out.append(AnnotatedToken(tok.id, ElementType.NEGATOR))
        elif score is not None:
            if strength is not None:
                log.warning(
                    "token %d %r is in both the sentiment and intensifier lexica; "
                    "sentiment wins",
                    tok.id,
                    tok.form,
                )
            out.append(AnnotatedToken(tok.id, ElementType.SENTIMENT, element_score=score))
        elif strength is not None:
            out.append(AnnotatedToken(tok.id, ElementType.INTENSIFIER, intensity=strength))
        else:
            out.append(AnnotatedToken(tok.id, ElementType.PLAIN))
    return out


def branch_score(a: float, b: float, negated: bool) -> float:
    """Score one branch: a*(1+b), shifted by -4*sign(a) when negated."""
    if a == 0:
        raise ValueError("sentiment score a must be nonzero")
    if b <= -1:
        raise ValueError(f"intensifier strength must be > -1, got {b}")
    value = a * (1 + b)
    if negated:
        value -= math.copysign(NEGATION_SHIFT, a)
    return value


def _shift(value: float) -> float:
    """One negation step: constant move toward (and past) zero."""
    if value == 0:
        return 0.0
    return value - math.copysign(NEGATION_SHIFT, value)


def _aggregate(values: Sequence[float], aggregation: str) -> float:
    if aggregation == "mean":
        return sum(values) / len(values)
    return sum(values)


def conjunct_partition(sentence: Sentence, head_map: HeadChildMap) -> list[frozenset[int]]:
    """Split token ids into coordination conjuncts.

    A token belongs to the conjunct of its nearest ancestor-or-self
    whose relation is `conj`; everything else is the base conjunct.
    Base conjunct first, then conjuncts by ascending root id.
    """
    heads = {tok.id: tok.head for tok in sentence}
    conj_roots = {tok.id for tok in sentence if tok.base_deprel == "conj"}
    assignment: dict[int, int] = {}

    def owner(token_id: int) -> int:
        node = token_id
        path = []
        while node != 0 and node not in assignment:
            if node in conj_roots:
                break
            path.append(node)
            node = heads[node]
        key = assignment[node] if node in assignment else (node if node != 0 else 0)
        for visited in path:
            assignment[visited] = key
        assignment[token_id] = key
        return key

    groups: dict[int, set[int]] = {}
    for tok in sentence:
        groups.setdefault(owner(tok.id), set()).add(tok.id)
    ordered = sorted(groups, key=lambda key: (key != 0, key))
    return [frozenset(groups[key]) for key in ordered]


def _leaf_streams(annot: AnnotatedToken) -> list[float]:
    if annot.element_type is ElementType.SENTIMENT:
        return [annot.element_score]
    return []


def _score_subtree(
    annots: Mapping[int, AnnotatedToken],
    head_map: HeadChildMap,
    members: frozenset[int] | None,
    collect_at: int,
    merge: bool,
    aggregation: str,
) -> tuple[list[float], list[tuple[int, float]]]:
    """Bottom-up branch loop over (a subtree of) the sentence.

    Returns the sentiment streams that reached collect_at and the
    per-branch trace. With merge on, streams meeting in a branch are
    combined before negation, so each negator shifts one accumulated
    value; with merge off, each negator shifts every stream separately.
    """
    node_streams: dict[int, list[float]] = {}
    trace: list[tuple[int, float]] = []
    for head, children in branch_order(head_map):
        if head == 0 or (members is not None and head not in members):
            continue
        kids = [c for c in children if members is None or c in members]
        own = annots[head]
        factor = 1.0
        negators = 0
        streams: list[float] = []
        for child in kids:
            child_annot = annots[child]
            if child_annot.element_type is ElementType.INTENSIFIER:
                factor *= 1 + child_annot.intensity
            elif child_annot.element_type is ElementType.NEGATOR:
                negators += 1
        if own.element_type is ElementType.SENTIMENT:
            streams.append(own.element_score * factor)
        for child in kids:
            streams.extend(node_streams.get(child, _leaf_streams(annots[child])))
        if streams:
            if merge and len(streams) > 1:
                streams = [_aggregate(streams, aggregation)]
            for _ in range(negators):
                streams = [_shift(s) for s in streams]
            trace.append((head, _aggregate(streams, aggregation)))
        node_streams[head] = streams
    collected = node_streams.get(collect_at, _leaf_streams(annots[collect_at]))
    return collected, trace


def score_sentence(
    sentence: Sentence, lexicon: Lexicon, options: ScorerOptions = ScorerOptions()
) -> PolarityScore:
    """Compositional polarity score of one sentence."""
    annots = {a.token_id: a for a in annotate(sentence, lexicon)}
    head_map = build_head_child_map(sentence)
    trace: list[tuple[int, float]] = []
    if options.coordination_fix:
        conjunct_values: list[float] = []
        for part in conjunct_partition(sentence, head_map):
            root_of_part = next(
                tok_id for tok_id in part if sentence.token(tok_id).head not in part
            )
            streams, part_trace = _score_subtree(
                annots, head_map, part, root_of_part, True, options.aggregation
            )
            trace.extend(part_trace)
            if streams:
                conjunct_values.append(_aggregate(streams, options.aggregation))
        value = _aggregate(conjunct_values, options.aggregation) if conjunct_values else 0.0
    else:
        streams, trace = _score_subtree(
            annots, head_map, None, head_map.root_id, False, options.aggregation
        )
        value = _aggregate(streams, options.aggregation) if streams else 0.0
    if any(a.element_type is ElementType.SENTIMENT for a in annots.values()):
        trace.append((0, value))
    return PolarityScore(value=value, contributing_branches=tuple(trace))


def score_review(
    sentences: Sequence[Sentence],
    lexicon: Lexicon,
    options: ScorerOptions = ScorerOptions(),
) -> tuple[float, list[PolarityScore]]:
    """Sum of sentence scores plus the per-sentence details."""
    details = [score_sentence(s, lexicon, options) for s in sentences]
    return sum(d.value for d in details), details


def classify(score: PolarityScore | float) -> PolarityLabel:
    """Three-way label with the threshold at exactly zero."""
    value = score.value if isinstance(score, PolarityScore) else score
    if value > 0:
        return PolarityLabel.POSITIVE
    if value < 0:
        return PolarityLabel.NEGATIVE
    return PolarityLabel.NEUTRAL
