"""Command line entry points: serve, expand, render, idf."""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

import click

from .expansion import ExpansionConfig, expand as expand_op
from .kg import load_kg
from .lexicon import load_lexicon
from .keywords import compute_idf, write_idf_table
from .projection import emit_svg
from .session import Engine, EngineResources, default_data_dir


@click.group()
def main():
    """Mappa Mundi: interactive mind-map synthesis engine."""


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--data",
    "data_dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Engine data directory (default: $MAPPA_DATA or bundled fixtures).",
)
@click.option(
    "--sessions",
    "sessions_dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Directory for session event logs.",
)
def serve(port, host, data_dir, sessions_dir):
    """Run the HTTP session service."""
    import uvicorn

    from .server import create_app

    resources = EngineResources.load(data_dir)
    if sessions_dir is None:
        sessions_dir = Path(tempfile.mkdtemp(prefix="mappa-sessions-"))
    engine = Engine(resources, sessions_dir)
    click.echo(f"session logs: {sessions_dir}", err=True)
    uvicorn.run(create_app(engine), host=host, port=port)


@main.command("expand")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True), default=None)
@click.option("--kg", "kg_path", type=click.Path(exists=True), default=None)
@click.option("--word", required=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of a table.")
def expand_cmd(lexicon_path, kg_path, word, seed, as_json):
    """Expand one keyword through every channel and print the candidates."""
    data = default_data_dir()
    lex = load_lexicon(lexicon_path or data / "lexicon.tsv")
    kg = load_kg(kg_path or data / "kg.tsv")
    candidates = expand_op(word, lex, kg, ExpansionConfig(seed=seed))
    if as_json:
        click.echo(
            json.dumps(
                [
                    {
                        "word": c.word,
                        "channel": c.channel.value,
                        "relation": c.relation,
                        "similarity": c.similarity,
                    }
                    for c in candidates
                ],
                ensure_ascii=False,
            )
        )
    else:
        for c in candidates:
            click.echo(f"{c.channel.value:12s} {c.similarity:6.3f}  {c.word}  ({c.relation})")


@main.command()
@click.option("--log", "log_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--data", "data_dir", type=click.Path(exists=True, file_okay=False), default=None)
def render(log_path, out_path, data_dir):
    """Replay a session event log and write the map as SVG."""
    resources = EngineResources.load(data_dir)
    engine = Engine(resources, Path(tempfile.mkdtemp(prefix="mappa-render-")))
    session = engine.replay(log_path)
    svg = emit_svg(session.scene(), resources.manifest)
    Path(out_path).write_text(svg, encoding="utf-8")
    click.echo(f"wrote {out_path} ({len(session.graph.nodes)} nodes)", err=True)


@main.command()
@click.option("--corpus", type=click.Path(exists=True, file_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def idf(corpus, out_path):
    """Compute smoothed idf weights from a directory of plain-text documents."""
    docs = []
    for path in sorted(Path(corpus).glob("*")):
        if path.is_file():
            docs.append(path.read_text(encoding="utf-8"))
    if not docs:
        click.echo("no documents found in corpus directory", err=True)
        sys.exit(1)
    table = compute_idf(docs)
    write_idf_table(table, out_path)
    click.echo(f"wrote {out_path} ({len(table)} words from {len(docs)} documents)", err=True)


if __name__ == "__main__":
    main()
