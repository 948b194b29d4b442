"""Corpus evaluation: accuracies, disagreement conditions, reports.

Each report pairs one compositional variant (coordination fix on or
off) with the heuristic baseline over one dataset, so the four
disagreement conditions are properties of that pairing:

    C1 compositional wrong, baseline right
    C2 both wrong
    C3 baseline wrong, compositional right
    C4 both right

The summary table carries one row per (dataset, method) cell; the
baseline row repeats per dataset with its condition columns blank,
since conditions describe a pairing, not a single method.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from .baseline import (
    HeuristicConfig,
    classify_normalized,
    heuristic_hits,
    score_review_heuristic,
)
from .corpus import Review, aggregate_gold
from .errors import EvaluationError
from .lexicon import Lexicon
from .scoring import PolarityLabel, ScorerOptions, classify, score_review

CONDITIONS = ("C1", "C2", "C3", "C4")
COMP_METHODS = ("comp_modified", "comp_original")
EMPTY_MARK = "empty"


@dataclass(frozen=True)
class PredictionRecord:
    review_id: str
    gold: PolarityLabel
    comp_label: PolarityLabel
    comp_score: float
    base_label: PolarityLabel
    base_score: float
    comp_branches: tuple = ()
    base_hits: tuple = ()


def condition_bucket(record: PredictionRecord) -> str:
    comp_right = record.comp_label == record.gold
    base_right = record.base_label == record.gold
    if comp_right:
        return "C4" if base_right else "C3"
    return "C1" if base_right else "C2"


def accuracy(records: Sequence[PredictionRecord], *, of: str = "comp") -> float:
    if not records:
        raise EvaluationError("cannot compute accuracy of an empty record list")
    if of == "comp":
        correct = sum(1 for r in records if r.comp_label == r.gold)
    else:
        correct = sum(1 for r in records if r.base_label == r.gold)
    return correct / len(records)


@dataclass(frozen=True)
class EvalReport:
    dataset_name: str
    method: str
    n: int
    accuracy_comp: float
    accuracy_base: float
    condition_counts: Mapping[str, int]
    per_review: tuple[PredictionRecord, ...]

    def __post_init__(self):
        counts = self.condition_counts
        assert sum(counts.values()) == self.n
        if self.n:
            assert self.accuracy_comp == (counts["C3"] + counts["C4"]) / self.n
            assert self.accuracy_base == (counts["C1"] + counts["C4"]) / self.n

    @classmethod
    def from_records(
        cls, dataset_name: str, method: str, records: Sequence[PredictionRecord]
    ) -> "EvalReport":
        counts = {c: 0 for c in CONDITIONS}
        for record in records:
            counts[condition_bucket(record)] += 1
        n = len(records)
        return cls(
            dataset_name=dataset_name,
            method=method,
            n=n,
            accuracy_comp=(counts["C3"] + counts["C4"]) / n if n else 0.0,
            accuracy_base=(counts["C1"] + counts["C4"]) / n if n else 0.0,
            condition_counts=counts,
            per_review=tuple(records),
        )


def predict_review(
    review: Review,
    lexicon: Lexicon,
    baseline_lexicon: Lexicon,
    options: ScorerOptions,
    config: HeuristicConfig,
) -> PredictionRecord:
    comp_value, details = score_review(review.sentences, lexicon, options)
    base_value = score_review_heuristic(review.sentences, baseline_lexicon, config)
    branches = tuple(
        (sentence.source_id, detail.contributing_branches)
        for sentence, detail in zip(review.sentences, details)
    )
    hits = tuple(
        (sentence.source_id, hit.token_id, hit.form, hit.adjusted)
        for sentence in review.sentences
        for hit in heuristic_hits(sentence, baseline_lexicon, config)
    )
    return PredictionRecord(
        review_id=review.review_id,
        gold=aggregate_gold(review.opinions),
        comp_label=classify(comp_value),
        comp_score=comp_value,
        base_label=classify_normalized(base_value, config),
        base_score=base_value,
        comp_branches=branches,
        base_hits=hits,
    )


def run_comparison(
    subsets: Mapping[str, Sequence[Review]],
    lexicon: Lexicon,
    baseline_lexicon: Lexicon,
    config: HeuristicConfig = HeuristicConfig(),
    aggregation: str = "sum",
) -> list[EvalReport]:
    """One report per (compositional variant, dataset), reviews sorted by id."""
    reports: list[EvalReport] = []
    for dataset_name in sorted(subsets):
        reviews = sorted(subsets[dataset_name], key=lambda r: r.review_id)
        for method in sorted(COMP_METHODS):
            options = ScorerOptions(
                coordination_fix=(method == "comp_modified"), aggregation=aggregation
            )
            records = [
                predict_review(review, lexicon, baseline_lexicon, options, config)
                for review in reviews
            ]
            reports.append(EvalReport.from_records(dataset_name, method, records))
    return reports


def _baseline_rows(reports: Sequence[EvalReport]) -> dict[str, float]:
    """Baseline accuracy per dataset, asserted identical across pairings."""
    per_dataset: dict[str, float] = {}
    for report in reports:
        seen = per_dataset.setdefault(report.dataset_name, report.accuracy_base)
        assert seen == report.accuracy_base
    return per_dataset


def emit_summary_csv(reports: Sequence[EvalReport]) -> str:
    """Rows: dataset, method, n, accuracy, C1..C4; n=0 flagged empty."""
    ns = {report.dataset_name: report.n for report in reports}
    rows = []
    for report in reports:
        accuracy_cell = f"{report.accuracy_comp:.6f}" if report.n else EMPTY_MARK
        rows.append(
            [report.dataset_name, report.method, report.n, accuracy_cell]
            + ([report.condition_counts[c] for c in CONDITIONS] if report.n else [""] * 4)
        )
    for dataset_name, base_accuracy in _baseline_rows(reports).items():
        accuracy_cell = f"{base_accuracy:.6f}" if ns[dataset_name] else EMPTY_MARK
        rows.append([dataset_name, "baseline", ns[dataset_name], accuracy_cell, "", "", "", ""])
    rows.sort(key=lambda row: (row[0], row[1]))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["dataset", "method", "n", "accuracy", "C1", "C2", "C3", "C4"])
    writer.writerows(rows)
    return out.getvalue()


def emit_detail_jsonl(reports: Sequence[EvalReport]) -> str:
    """One JSON line per (dataset, pairing, review) with explanations."""
    lines = []
    for report in sorted(reports, key=lambda r: (r.dataset_name, r.method)):
        for record in sorted(report.per_review, key=lambda r: r.review_id):
            lines.append(
                json.dumps(
                    {
                        "dataset": report.dataset_name,
                        "method": report.method,
                        "review_id": record.review_id,
                        "gold": record.gold.value,
                        "comp_score": record.comp_score,
                        "comp_label": record.comp_label.value,
                        "base_score": record.base_score,
                        "base_label": record.base_label.value,
                        "condition": condition_bucket(record),
                        "comp_branches": [
                            [sid, [[head, score] for head, score in branches]]
                            for sid, branches in record.comp_branches
                        ],
                        "base_hits": [list(hit) for hit in record.base_hits],
                    },
                    ensure_ascii=False,
                )
            )
    return "\n".join(lines) + ("\n" if lines else "")


def emit_report(reports: Sequence[EvalReport], out_dir) -> tuple[str, str]:
    """Write summary.csv and detail.jsonl under out_dir; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    summary_path = os.path.join(out_dir, "summary.csv")
    detail_path = os.path.join(out_dir, "detail.jsonl")
    with open(summary_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(emit_summary_csv(reports))
    with open(detail_path, "w", encoding="utf-8") as handle:
        handle.write(emit_detail_jsonl(reports))
    return summary_path, detail_path
