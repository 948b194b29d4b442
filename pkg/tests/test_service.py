"""HTTP endpoints: payload wiring, response shapes, error mapping."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from treesent import __version__
from treesent.service.app import create_app


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app())


@pytest.fixture(scope="module")
def es_payload(fixtures_dir) -> dict:
    lex = fixtures_dir / "lexica"
    return {
        "sentiment_lex": (lex / "es_sentiment.tsv").read_text(encoding="utf-8"),
        "intensifier_lex": (lex / "es_intensifiers.tsv").read_text(encoding="utf-8"),
        "negator_lex": (lex / "es_negators.txt").read_text(encoding="utf-8"),
        "conllu": (fixtures_dir / "conllu" / "spanish_examples.conllu").read_text(
            encoding="utf-8"
        ),
    }


@pytest.fixture(scope="module")
def en_payload(fixtures_dir) -> dict:
    lex = fixtures_dir / "lexica"
    return {
        "sentiment_lex": (lex / "en_sentiment.tsv").read_text(encoding="utf-8"),
        "intensifier_lex": (lex / "en_intensifiers.tsv").read_text(encoding="utf-8"),
        "negator_lex": (lex / "en_negators.txt").read_text(encoding="utf-8"),
        "baseline_lex": (lex / "en_baseline.tsv").read_text(encoding="utf-8"),
        "corpus": (fixtures_dir / "corpus" / "reviews.jsonl").read_text(encoding="utf-8"),
        "conllu": (fixtures_dir / "conllu" / "reviews.conllu").read_text(encoding="utf-8"),
    }


@pytest.fixture(scope="module")
def focus_payload(fixtures_dir) -> dict:
    focus = fixtures_dir / "focus"
    return {
        "expressions": (focus / "examples.sexp").read_text(encoding="utf-8"),
        "model": (focus / "model_jmp.json").read_text(encoding="utf-8"),
    }


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}


def test_score_worked_examples(client, es_payload):
    response = client.post("/score", json=es_payload)
    assert response.status_code == 200
    sentences = {s["sentence_id"]: s for s in response.json()["sentences"]}
    assert sentences["we1"]["score"] == 1.0
    assert sentences["we1"]["label"] == "positive"
    assert sentences["we2"]["score"] == pytest.approx(-1.5)
    assert sentences["we2"]["branches"] == [
        {"head": 6, "score": 2.5},
        {"head": 4, "score": -1.5},
        {"head": 0, "score": -1.5},
    ]
    assert sentences["coord"]["score"] == 3.5


def test_score_without_coordination_fix(client, es_payload):
    response = client.post("/score", json={**es_payload, "coordination_fix": False})
    sentences = {s["sentence_id"]: s for s in response.json()["sentences"]}
    assert sentences["coord"]["score"] == -0.5
    assert sentences["coord"]["label"] == "negative"


def test_score_rejects_malformed_conllu(client, es_payload):
    response = client.post("/score", json={**es_payload, "conllu": "1\tonly\tthree\n"})
    assert response.status_code == 400
    assert "line 1" in response.json()["detail"]


def test_score_rejects_bad_lexicon(client, es_payload):
    response = client.post("/score", json={**es_payload, "sentiment_lex": "flat\t0\n"})
    assert response.status_code == 400


def test_missing_field_is_a_client_error(client):
    response = client.post("/score", json={"conllu": ""})
    assert response.status_code == 400


def test_subsets(client, en_payload):
    payload = {
        "corpus": en_payload["corpus"],
        "conllu": en_payload["conllu"],
        "negator_lex": en_payload["negator_lex"],
    }
    response = client.post("/subsets", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["n_records"] == 14
    assert body["n_subjective"] == 13
    assert body["datasets"]["negation"] == [
        "r02", "r03", "r05", "r08", "r09", "r10", "r11", "r13", "r14",
    ]
    assert body["datasets"]["coordination"] == ["r03", "r04", "r07", "r11", "r12", "r14"]


def test_evaluate(client, en_payload):
    response = client.post("/evaluate", json=en_payload)
    assert response.status_code == 200
    body = response.json()
    assert len(body["reports"]) == 6
    by_key = {(r["dataset"], r["method"]): r for r in body["reports"]}
    assert by_key[("all", "comp_modified")]["accuracy_comp"] == pytest.approx(10 / 13)
    assert by_key[("all", "comp_modified")]["accuracy_base"] == pytest.approx(9 / 13)
    assert by_key[("negation", "comp_modified")]["n"] == 9
    assert body["summary_csv"].startswith("dataset,method,n,accuracy,C1,C2,C3,C4\n")
    assert len(body["detail_jsonl"].splitlines()) == 2 * (13 + 6 + 9)
    record = by_key[("all", "comp_modified")]["per_review"][0]
    assert record["review_id"] == "r01"
    assert record["condition"] == "C4"


def test_evaluate_with_config_override(client, en_payload):
    # a huge dead zone turns every baseline call neutral; only the two
    # neutral-gold reviews remain correct
    payload = {**en_payload, "baseline_config": "neutral_band = 0.9\n"}
    response = client.post("/evaluate", json=payload)
    by_key = {(r["dataset"], r["method"]): r for r in response.json()["reports"]}
    assert by_key[("all", "comp_modified")]["accuracy_base"] == pytest.approx(2 / 13)


def test_evaluate_rejects_unaligned_parses(client, en_payload):
    extra = "# sent_id = ghost:1\n1\tx\tx\tX\t_\t_\t0\troot\t_\t_\n"
    payload = {**en_payload, "conllu": en_payload["conllu"] + "\n" + extra}
    response = client.post("/evaluate", json=payload)
    assert response.status_code == 422
    assert "ghost" in response.json()["detail"]


def test_evaluate_rejects_bad_config(client, en_payload):
    payload = {**en_payload, "baseline_config": "neutral_band = 2\n"}
    response = client.post("/evaluate", json=payload)
    assert response.status_code == 400


def test_focus_endpoint(client, focus_payload):
    response = client.post("/focus", json=focus_payload)
    assert response.status_code == 200
    results = response.json()["results"]
    assert len(results) == 4
    plain = results[0]
    assert plain["ordinary"] == "John left"
    assert plain["ordinary_true"] is True
    assert plain["focus_set"] == ["John left", "Mary left", "Peter left"]
    assert plain["inferences"] == ["Mary did not leave", "Peter did not leave"]
    negated = results[1]
    assert negated["ordinary_true"] is False
    assert negated["inferences"] == []
    collapsed = results[2]
    assert collapsed["focus_set"] == ["John left"]
    pairs = results[3]
    assert len(pairs["focus_set"]) == 3


def test_focus_bare_entity_is_not_a_proposition(client, focus_payload):
    payload = {**focus_payload, "expressions": "(focus John)"}
    response = client.post("/focus", json=payload)
    assert response.status_code == 200
    result = response.json()["results"][0]
    assert result["ordinary"] == "John"
    assert result["ordinary_true"] is False
    assert sorted(result["focus_set"]) == ["John", "Mary", "Peter"]


def test_focus_maps_errors(client, focus_payload):
    bad_expr = {**focus_payload, "expressions": "(focus John"}
    assert client.post("/focus", json=bad_expr).status_code == 400
    bad_model = {**focus_payload, "model": "{nope"}
    assert client.post("/focus", json=bad_model).status_code == 400
    violation = {
        **focus_payload,
        "expressions": "(squiggle C_other (left (focus John)))",
    }
    response = client.post("/focus", json=violation)
    assert response.status_code == 422
    assert "C_other" in response.json()["detail"]
