"""The ``atlas`` command line interface.

Exit codes: 0 on success, 1 when the catalog has error-level findings (or
a command otherwise fails), 2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import analytics
from .catalog import Finding
from .dcat import export_dcat
from .errors import AtlasError, CatalogValidationError, ParseError
from .query import parse_query, evaluate_query
from .snapshot import load_snapshot
from .taxonomy import Dimension


def _print_findings(findings: list[Finding]) -> None:
    for finding in findings:
        click.echo(str(finding), err=True)


def _load(directory: str):
    """Load a snapshot or exit 1 with every finding printed."""
    try:
        return load_snapshot(directory)
    except CatalogValidationError as exc:
        _print_findings(exc.findings)
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except (ParseError, AtlasError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@click.group()
def main() -> None:
    """Explore and serve engineering-design dataset catalogs."""


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
def validate(directory: str) -> None:
    """Validate a catalog; exit 1 on error-level findings."""
    snapshot = _load(directory)
    _print_findings(list(snapshot.diagnostics))
    click.echo(
        f"ok: {len(snapshot.store.datasets)} datasets, "
        f"{len(snapshot.diagnostics)} warning(s), "
        f"hash {snapshot.content_hash[:12]}"
    )


def _parse_heatmap_spec(spec: str) -> tuple[Dimension, Dimension]:
    parts = spec.split("x", 1)
    if len(parts) != 2:
        raise click.UsageError("--heatmap expects <dim>x<dim>, e.g. domainxlifecycle")
    try:
        return Dimension(parts[0]), Dimension(parts[1])
    except ValueError:
        raise click.UsageError(
            f"dimensions must be one of {[d.value for d in Dimension]}"
        ) from None


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--heatmap", "heatmap_spec", default=None, metavar="<dim>x<dim>")
def stats(directory: str, heatmap_spec: str | None) -> None:
    """Print catalog totals, optionally with a cross-tabulation heatmap."""
    snapshot = _load(directory)
    years = [p.year for p in snapshot.store.publications.values()]
    click.echo(f"datasets:      {len(snapshot.store.datasets)}")
    click.echo(f"publications:  {len(snapshot.store.publications)}")
    click.echo(f"tools:         {len(snapshot.store.tools)}")
    click.echo(f"organizations: {len(snapshot.store.organizations)}")
    if years:
        click.echo(f"year range:    {min(years)}-{max(years)}")
    if heatmap_spec is None:
        return
    row_dim, col_dim = _parse_heatmap_spec(heatmap_spec)
    try:
        matrix = analytics.heatmap(snapshot, row_dim, col_dim)
    except AtlasError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    labels = {t.id: t.label for t in snapshot.taxonomy.terms()}
    width = max((len(labels[r]) for r in matrix.rows), default=8) + 2
    marks = {"desert": ".", "sparse": "-", "normal": "+", "oasis": "*"}
    click.echo("")
    click.echo(" " * width + "  ".join(labels[c][:14].ljust(14) for c in matrix.cols))
    for r, row in enumerate(matrix.cells):
        cells = "  ".join(
            f"{count} ({marks[matrix.cell_labels[r][c]]})".ljust(14)
            for c, count in enumerate(row)
        )
        click.echo(labels[matrix.rows[r]].ljust(width) + cells)
    click.echo("\nlegend: . desert  - sparse  + normal  * oasis")


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("-q", "--query", "query_text", required=True, help="Query text.")
def query(directory: str, query_text: str) -> None:
    """Run a FIND query against a catalog."""
    snapshot = _load(directory)
    try:
        parsed = parse_query(query_text)
        result = evaluate_query(snapshot, parsed)
    except AtlasError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(
        json.dumps(
            {"kind": parsed.kind.value, "total": result.total, "ids": list(result.ids)},
            indent=2,
        )
    )


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option(
    "--format",
    "export_format",
    type=click.Choice(["dcat", "graph"]),
    required=True,
)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def export(directory: str, export_format: str, output: str | None) -> None:
    """Export the catalog as DCAT JSON or a node-link graph document."""
    snapshot = _load(directory)
    if export_format == "dcat":
        payload = export_dcat(snapshot)
    else:
        payload = analytics.graph_export(snapshot).to_dict()
    text = json.dumps(payload, indent=2)
    if output is None:
        click.echo(text)
    else:
        Path(output).write_text(text + "\n", encoding="utf-8")
        click.echo(f"wrote {output}", err=True)


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--ui",
    "ui_dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Serve a built web UI from this directory at /.",
)
def serve(directory: str, port: int, host: str, ui_dir: str | None) -> None:
    """Serve the HTTP API (and optionally the web UI) for a catalog."""
    _load(directory)  # fail fast with findings before binding the port
    from .api import serve as run_server

    run_server(directory, port=port, host=host, static_dir=ui_dir)


if __name__ == "__main__":
    main()
