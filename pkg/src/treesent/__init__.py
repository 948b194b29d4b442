"""Dependency-tree sentiment scoring with a window-heuristic baseline.

The package exposes three layers:

* parsing and lexicon loading (:mod:`treesent.conllu`, :mod:`treesent.lexicon`),
* the scorers themselves (:mod:`treesent.scoring`, :mod:`treesent.baseline`)
  plus corpus handling and side-by-side evaluation
  (:mod:`treesent.corpus`, :mod:`treesent.evaluation`),
* an HTTP service (:mod:`treesent.service`) and a CLI that talks to it.

A small alternative-semantics interpreter lives in :mod:`treesent.focus`.
"""

from .baseline import (
    HeuristicConfig,
    classify_normalized,
    load_heuristic_config,
    normalize,
    score_heuristic,
    score_review_heuristic,
)
from .conllu import (
    HeadChildMap,
    Sentence,
    Token,
    branch_order,
    build_head_child_map,
    parse_conllu,
    parse_conllu_file,
    serialize,
    token_depths,
)
from .corpus import (
    Review,
    aggregate_gold,
    attach_parses,
    filter_subjective,
    load_corpus,
    parse_corpus,
    subset_coordination,
    subset_negation,
)
from .errors import (
    AlignmentError,
    ConfigError,
    ConlluParseError,
    ConlluStructureError,
    CorpusError,
    EvaluationError,
    FocusConstraintError,
    FocusSyntaxError,
    FocusTypeError,
    InputError,
    LexiconError,
    TreesentError,
)
from .evaluation import EvalReport, PredictionRecord, emit_report, run_comparison
from .lexicon import Lexicon, load_lexicon
from .scoring import (
    AnnotatedToken,
    ElementType,
    PolarityLabel,
    PolarityScore,
    ScorerOptions,
    annotate,
    branch_score,
    classify,
    conjunct_partition,
    score_review,
    score_sentence,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "AnnotatedToken",
    "ConfigError",
    "ConlluParseError",
    "ConlluStructureError",
    "CorpusError",
    "ElementType",
    "EvalReport",
    "EvaluationError",
    "FocusConstraintError",
    "FocusSyntaxError",
    "FocusTypeError",
    "HeadChildMap",
    "HeuristicConfig",
    "InputError",
    "Lexicon",
    "LexiconError",
    "PolarityLabel",
    "PolarityScore",
    "PredictionRecord",
    "Review",
    "ScorerOptions",
    "Sentence",
    "Token",
    "TreesentError",
    "aggregate_gold",
    "annotate",
    "attach_parses",
    "branch_order",
    "branch_score",
    "build_head_child_map",
    "classify",
    "classify_normalized",
    "conjunct_partition",
    "emit_report",
    "filter_subjective",
    "load_corpus",
    "load_heuristic_config",
    "load_lexicon",
    "normalize",
    "parse_conllu",
    "parse_conllu_file",
    "parse_corpus",
    "run_comparison",
    "score_heuristic",
    "score_review",
    "score_review_heuristic",
    "score_sentence",
    "serialize",
    "subset_coordination",
    "subset_negation",
    "token_depths",
    "__version__",
]
