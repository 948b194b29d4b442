"""Command-line client for the scoring service.

Every command reads local files, builds a request, and posts it to the HTTP
service: an in-process application instance by default, or a running server
when ``--server`` is given. Exit codes follow a stable contract: 0 on
success, 1 on evaluation-level failures, 2 on usage or input errors.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json
from pathlib import Path
from typing import Any

import click
import httpx

from .service import create_app

_TIMEOUT = 120.0

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
    help="Plain table or structured JSON records.",
)
aggregation_option = click.option(
    "--aggregation",
    type=click.Choice(["sum", "mean"]),
    default="sum",
    show_default=True,
    help="How branch values combine into a sentence score.",
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(str(exc)) from exc


def _post(server: str | None, path: str, payload: dict[str, Any]) -> dict[str, Any]:
    """Send one request, mapping HTTP 400 to exit 2 and HTTP 422 to exit 1."""

    async def call() -> httpx.Response:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=_TIMEOUT) as client:
                return await client.post(path, json=payload)
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=_TIMEOUT
        ) as client:
            return await client.post(path, json=payload)

    try:
        response = asyncio.run(call())
    except httpx.HTTPError as exc:
        raise click.ClickException(f"service unreachable: {exc}") from exc
    if response.status_code == 400:
        raise click.UsageError(str(response.json().get("detail", response.text)))
    if response.status_code == 422:
        raise click.ClickException(str(response.json().get("detail", response.text)))
    if response.status_code >= 500:
        raise click.ClickException(f"service error {response.status_code}: {response.text}")
    return response.json()


def _print_table(rows: list[list[str]]) -> None:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _lexicon_payload(
    sentiment_lex: str, intensifier_lex: str | None, negator_lex: str | None
) -> dict[str, Any]:
    payload: dict[str, Any] = {"sentiment_lex": _read(sentiment_lex)}
    if intensifier_lex:
        payload["intensifier_lex"] = _read(intensifier_lex)
    if negator_lex:
        payload["negator_lex"] = _read(negator_lex)
    return payload


@click.group()
@click.option(
    "--server",
    envvar=None,
    default=None,
    metavar="URL",
    help="Base URL of a running service; default runs the service in-process.",
)
@click.version_option(package_name="treesent")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Dependency-tree sentiment scoring, evaluation, and focus-semantics demo."""
    ctx.obj = server


@main.command()
@click.option("--conllu", required=True, type=click.Path(), help="Parsed sentences to score.")
@click.option("--sentiment-lex", required=True, type=click.Path())
@click.option("--intensifier-lex", type=click.Path(), default=None)
@click.option("--negator-lex", type=click.Path(), default=None)
@click.option(
    "--coordination-fix",
    type=click.Choice(["on", "off"]),
    default="on",
    show_default=True,
    help="Score coordinated clauses independently (on) or as one tree (off).",
)
@aggregation_option
@format_option
@click.pass_obj
def score(
    server: str | None,
    conllu: str,
    sentiment_lex: str,
    intensifier_lex: str | None,
    negator_lex: str | None,
    coordination_fix: str,
    aggregation: str,
    fmt: str,
) -> None:
    """Score each sentence in a CoNLL-U file."""
    payload = _lexicon_payload(sentiment_lex, intensifier_lex, negator_lex)
    payload.update(
        conllu=_read(conllu),
        coordination_fix=coordination_fix == "on",
        aggregation=aggregation,
    )
    data = _post(server, "/score", payload)
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    rows = [["sentence_id", "score", "label", "branches"]]
    for entry in data["sentences"]:
        trace = " ".join(f"{b['head']}:{b['score']:g}" for b in entry["branches"])
        rows.append([entry["sentence_id"], f"{entry['score']:g}", entry["label"], trace])
    if len(rows) > 1:
        _print_table(rows)


@main.command()
@click.option("--corpus", required=True, type=click.Path(), help="Review records, one JSON per line.")
@click.option("--conllu", required=True, type=click.Path(), help="Parses aligned by sent_id = <review>:<k>.")
@click.option("--sentiment-lex", required=True, type=click.Path())
@click.option("--intensifier-lex", type=click.Path(), default=None)
@click.option("--negator-lex", type=click.Path(), default=None)
@click.option("--baseline-lex", required=True, type=click.Path())
@click.option("--baseline-config", type=click.Path(), default=None)
@aggregation_option
@click.option("--out-dir", required=True, type=click.Path(file_okay=False))
@format_option
@click.pass_obj
def evaluate(
    server: str | None,
    corpus: str,
    conllu: str,
    sentiment_lex: str,
    intensifier_lex: str | None,
    negator_lex: str | None,
    baseline_lex: str,
    baseline_config: str | None,
    aggregation: str,
    out_dir: str,
    fmt: str,
) -> None:
    """Compare tree scoring against the heuristic baseline and write reports."""
    payload = _lexicon_payload(sentiment_lex, intensifier_lex, negator_lex)
    payload.update(
        corpus=_read(corpus),
        conllu=_read(conllu),
        baseline_lex=_read(baseline_lex),
        aggregation=aggregation,
    )
    if baseline_config:
        payload["baseline_config"] = _read(baseline_config)
    data = _post(server, "/evaluate", payload)
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    (target / "summary.csv").write_text(data["summary_csv"], encoding="utf-8")
    (target / "detail.jsonl").write_text(data["detail_jsonl"], encoding="utf-8")
    if fmt == "json":
        click.echo(json.dumps({"reports": data["reports"]}, indent=2))
    else:
        rows = list(csv.reader(io.StringIO(data["summary_csv"])))
        _print_table(rows)
    click.echo(f"wrote {target / 'summary.csv'} and {target / 'detail.jsonl'}", err=True)


@main.command()
@click.option("--corpus", required=True, type=click.Path())
@click.option("--conllu", required=True, type=click.Path())
@click.option("--negator-lex", type=click.Path(), default=None)
@format_option
@click.pass_obj
def subsets(
    server: str | None,
    corpus: str,
    conllu: str,
    negator_lex: str | None,
    fmt: str,
) -> None:
    """List the evaluation datasets: all subjective reviews, negation, coordination."""
    payload: dict[str, Any] = {"corpus": _read(corpus), "conllu": _read(conllu)}
    if negator_lex:
        payload["negator_lex"] = _read(negator_lex)
    data = _post(server, "/subsets", payload)
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    click.echo(f"records: {data['n_records']}  subjective: {data['n_subjective']}")
    for name in sorted(data["datasets"]):
        ids = data["datasets"][name]
        click.echo(f"{name} (n={len(ids)}): {' '.join(ids)}")


@main.command()
@click.argument("expr_file", type=click.Path())
@click.argument("model_file", type=click.Path())
@format_option
@click.pass_obj
def focus(server: str | None, expr_file: str, model_file: str, fmt: str) -> None:
    """Interpret focus-marked expressions against a model.

    EXPR_FILE holds one s-expression per line; MODEL_FILE is a JSON model
    with individuals, predicate extensions, and context sets.
    """
    payload = {"expressions": _read(expr_file), "model": _read(model_file)}
    data = _post(server, "/focus", payload)
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    for result in data["results"]:
        truth_mark = "true" if result["ordinary_true"] else "false"
        click.echo(result["expression"])
        click.echo(f"  ordinary: {result['ordinary']} [{truth_mark}]")
        click.echo("  focus set:")
        for member in result["focus_set"]:
            click.echo(f"    {member}")
        if result["inferences"]:
            click.echo("  inferences:")
            for line in result["inferences"]:
                click.echo(f"    {line}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
