"""Request and response bodies for the scoring service.

The service is stateless: requests carry file contents, not paths, so
any client that can read its own files can talk to a remote instance.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class LexiconFields(BaseModel):
    sentiment_lex: str = Field(description="sentiment TSV contents: lemma<TAB>score")
    intensifier_lex: str | None = None
    negator_lex: str | None = None
    negator_feature_rule: bool = True


class ScoreRequest(LexiconFields):
    conllu: str
    coordination_fix: bool = True
    aggregation: Literal["sum", "mean"] = "sum"


class BranchEntry(BaseModel):
    head: int
    score: float


class SentenceScore(BaseModel):
    sentence_id: str
    score: float
    label: str
    branches: list[BranchEntry]


class ScoreResponse(BaseModel):
    sentences: list[SentenceScore]


class EvaluateRequest(LexiconFields):
    corpus: str
    conllu: str
    baseline_lex: str
    baseline_config: str | None = None
    aggregation: Literal["sum", "mean"] = "sum"


class PredictionEntry(BaseModel):
    review_id: str
    gold: str
    comp_label: str
    comp_score: float
    base_label: str
    base_score: float
    condition: str


class ReportEntry(BaseModel):
    dataset: str
    method: str
    n: int
    accuracy_comp: float
    accuracy_base: float
    condition_counts: dict[str, int]
    per_review: list[PredictionEntry]


class EvaluateResponse(BaseModel):
    reports: list[ReportEntry]
    summary_csv: str
    detail_jsonl: str


class SubsetsRequest(BaseModel):
    corpus: str
    conllu: str
    negator_lex: str | None = None
    negator_feature_rule: bool = True


class SubsetsResponse(BaseModel):
    n_records: int
    n_subjective: int
    datasets: dict[str, list[str]]


class FocusRequest(BaseModel):
    expressions: str = Field(description="one s-expression per line")
    model: str = Field(description="JSON model: individuals, predicates, contexts")


class FocusResult(BaseModel):
    expression: str
    ordinary: str
    ordinary_true: bool
    focus_set: list[str]
    inferences: list[str]


class FocusResponse(BaseModel):
    results: list[FocusResult]


class HealthResponse(BaseModel):
    status: str
    version: str
