"""HTTP face of the scoring engine.

Error mapping: malformed inputs (lexica, CoNLL-U, corpus records,
expressions, request bodies) answer 400; failures that arise while
evaluating well-formed inputs (alignment gaps, constraint violations)
answer 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..baseline import HeuristicConfig, parse_heuristic_config
from ..conllu import parse_conllu
from ..corpus import (
    attach_parses,
    ensure_parsed,
    filter_subjective,
    parse_corpus,
    subset_coordination,
    subset_negation,
)
from ..errors import EvaluationError, FocusConstraintError, InputError
from ..evaluation import (
    condition_bucket,
    emit_detail_jsonl,
    emit_summary_csv,
    run_comparison,
)
from ..focus import (
    Group,
    Ind,
    exhaustive_inference,
    interpret,
    parse_expressions,
    parse_model,
    render,
    render_set,
    truth,
)
from ..lexicon import (
    Lexicon,
    parse_intensifier_tsv,
    parse_negator_list,
    parse_sentiment_tsv,
)
from ..scoring import ScorerOptions, classify, score_sentence
from .models import (
    BranchEntry,
    EvaluateRequest,
    EvaluateResponse,
    FocusRequest,
    FocusResponse,
    FocusResult,
    HealthResponse,
    LexiconFields,
    PredictionEntry,
    ReportEntry,
    ScoreRequest,
    ScoreResponse,
    SentenceScore,
    SubsetsRequest,
    SubsetsResponse,
)


def _build_lexicon(fields: LexiconFields) -> Lexicon:
    return Lexicon(
        sentiment=parse_sentiment_tsv(fields.sentiment_lex, name="sentiment-lex"),
        intensifiers=(
            parse_intensifier_tsv(fields.intensifier_lex, name="intensifier-lex")
            if fields.intensifier_lex
            else {}
        ),
        negators=(
            parse_negator_list(fields.negator_lex, name="negator-lex")
            if fields.negator_lex
            else frozenset()
        ),
        negator_feature_rule=fields.negator_feature_rule,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="treesent", version=__version__)

    @app.exception_handler(InputError)
    async def input_error(request: Request, exc: InputError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def request_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(EvaluationError)
    async def evaluation_error(request: Request, exc: EvaluationError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(FocusConstraintError)
    async def constraint_error(request: Request, exc: FocusConstraintError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/score", response_model=ScoreResponse)
    async def score(request: ScoreRequest) -> ScoreResponse:
        lexicon = _build_lexicon(request)
        options = ScorerOptions(
            coordination_fix=request.coordination_fix, aggregation=request.aggregation
        )
        sentences = []
        for sentence in parse_conllu(request.conllu):
            result = score_sentence(sentence, lexicon, options)
            sentences.append(
                SentenceScore(
                    sentence_id=sentence.source_id,
                    score=result.value,
                    label=classify(result).value,
                    branches=[
                        BranchEntry(head=head, score=value)
                        for head, value in result.contributing_branches
                    ],
                )
            )
        return ScoreResponse(sentences=sentences)

    @app.post("/subsets", response_model=SubsetsResponse)
    async def subsets(request: SubsetsRequest) -> SubsetsResponse:
        lexicon = Lexicon(
            sentiment={},
            negators=(
                parse_negator_list(request.negator_lex, name="negator-lex")
                if request.negator_lex
                else frozenset()
            ),
            negator_feature_rule=request.negator_feature_rule,
        )
        reviews = parse_corpus(request.corpus, name="corpus")
        attached = attach_parses(reviews, parse_conllu(request.conllu))
        subjective = filter_subjective(attached)
        ensure_parsed(subjective)
        return SubsetsResponse(
            n_records=len(reviews),
            n_subjective=len(subjective),
            datasets={
                "all": [r.review_id for r in subjective],
                "negation": [r.review_id for r in subset_negation(subjective, lexicon)],
                "coordination": [r.review_id for r in subset_coordination(subjective)],
            },
        )

    @app.post("/evaluate", response_model=EvaluateResponse)
    async def evaluate(request: EvaluateRequest) -> EvaluateResponse:
        lexicon = _build_lexicon(request)
        baseline_lexicon = Lexicon(
            sentiment=parse_sentiment_tsv(request.baseline_lex, name="baseline-lex"),
            intensifiers=lexicon.intensifiers,
            negators=lexicon.negators,
            negator_feature_rule=lexicon.negator_feature_rule,
        )
        config = (
            parse_heuristic_config(request.baseline_config, name="baseline-config")
            if request.baseline_config
            else HeuristicConfig()
        )
        reviews = parse_corpus(request.corpus, name="corpus")
        attached = attach_parses(reviews, parse_conllu(request.conllu))
        subjective = filter_subjective(attached)
        ensure_parsed(subjective)
        subsets = {
            "all": subjective,
            "negation": subset_negation(subjective, lexicon),
            "coordination": subset_coordination(subjective),
        }
        reports = run_comparison(
            subsets, lexicon, baseline_lexicon, config, request.aggregation
        )
        return EvaluateResponse(
            reports=[
                ReportEntry(
                    dataset=report.dataset_name,
                    method=report.method,
                    n=report.n,
                    accuracy_comp=report.accuracy_comp,
                    accuracy_base=report.accuracy_base,
                    condition_counts=dict(report.condition_counts),
                    per_review=[
                        PredictionEntry(
                            review_id=record.review_id,
                            gold=record.gold.value,
                            comp_label=record.comp_label.value,
                            comp_score=record.comp_score,
                            base_label=record.base_label.value,
                            base_score=record.base_score,
                            condition=condition_bucket(record),
                        )
                        for record in report.per_review
                    ],
                )
                for report in reports
            ],
            summary_csv=emit_summary_csv(reports),
            detail_jsonl=emit_detail_jsonl(reports),
        )

    @app.post("/focus", response_model=FocusResponse)
    async def focus(request: FocusRequest) -> FocusResponse:
        model = parse_model(request.model, name="model")
        results = []
        for source, expr in parse_expressions(request.expressions):
            value = interpret(expr, model)
            is_prop = not isinstance(value.ordinary, (Ind, Group))
            ordinary_true = is_prop and truth(value.ordinary, model)
            inferences = (
                render_set(exhaustive_inference(value, model), model)
                if ordinary_true
                else []
            )
            results.append(
                FocusResult(
                    expression=source,
                    ordinary=render(value.ordinary, model),
                    ordinary_true=ordinary_true,
                    focus_set=render_set(value.focus_set, model),
                    inferences=inferences,
                )
            )
        return FocusResponse(results=results)

    return app
