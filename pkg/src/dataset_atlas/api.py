"""Read-mostly HTTP API over a catalog snapshot.

All endpoints read from one published snapshot; POST /api/reload builds a
replacement off to the side and swaps the reference atomically, so
concurrent readers either see the old catalog or the new one, never a
half-loaded state. Responses are serialized with ``json.dumps`` directly
so library results and API bodies are byte-identical.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import analytics
from .dcat import scholar_url
from .errors import (
    AtlasError,
    CatalogValidationError,
    ParseError,
    QuerySyntaxError,
)
from .query import parse_query, evaluate_query
from .search import FacetSelection, apply_facets, facet_counts
from .snapshot import CatalogSnapshot, load_snapshot
from .taxonomy import Dimension


class SnapshotStore:
    """Holds the currently published snapshot and performs atomic reloads."""

    def __init__(self, directory: Path):
        self.directory = directory
        self._lock = threading.Lock()
        self._current = load_snapshot(directory)

    @property
    def current(self) -> CatalogSnapshot:
        return self._current

    def reload(self) -> CatalogSnapshot:
        # Build the new snapshot fully before publishing it; the lock only
        # serializes writers, readers keep using the old reference.
        fresh = load_snapshot(self.directory)
        with self._lock:
            self._current = fresh
        return fresh


def _json(payload, status_code: int = 200) -> Response:
    return Response(
        content=json.dumps(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error(code: str, message: str, status: int, position: dict | None = None) -> Response:
    body: dict = {"error": {"code": code, "message": message}}
    if position is not None:
        body["error"]["position"] = position
    return _json(body, status_code=status)


def _parse_facet_params(facets: str | None, q: str | None) -> FacetSelection:
    terms: dict[Dimension, set[str]] = {}
    if facets:
        for chunk in facets.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if ":" not in chunk:
                raise ValueError(f"facet {chunk!r} must look like dimension:term")
            dim_name, term_id = chunk.split(":", 1)
            try:
                dimension = Dimension(dim_name)
            except ValueError:
                raise ValueError(f"unknown dimension {dim_name!r}") from None
            terms.setdefault(dimension, set()).add(term_id)
    return FacetSelection(
        terms={d: frozenset(v) for d, v in terms.items()},
        text=q or None,
    )


def _classification_entries(snapshot: CatalogSnapshot, record) -> list[dict]:
    return [
        {
            "id": term_id,
            "label": snapshot.taxonomy.term(term_id).label,
            "dimension": snapshot.taxonomy.term(term_id).dimension.value,
        }
        for term_id in record.classifications
    ]


def _dataset_summary(snapshot: CatalogSnapshot, dataset_id: str) -> dict:
    record = snapshot.store.datasets[dataset_id]
    return {
        "id": record.id,
        "title": record.title,
        "description": record.description,
        "license": record.license,
        "license_open": record.license_open,
        "doi": record.doi,
        "source_url": record.source_url,
        "classifications": _classification_entries(snapshot, record),
        "quality": record.quality.to_dict() if record.quality else None,
    }


def _neighbors_by_kind(snapshot: CatalogSnapshot, node_id: str) -> dict:
    """Adjacent nodes grouped by direction then edge kind, ids sorted."""
    grouped: dict[str, dict[str, list[dict]]] = {"outgoing": {}, "incoming": {}}
    graph = snapshot.graph
    for direction, edges in (
        ("outgoing", graph.out_edges(node_id)),
        ("incoming", graph.in_edges(node_id)),
    ):
        for edge in edges:
            other_id = edge.dst if direction == "outgoing" else edge.src
            other = graph.node(other_id)
            grouped[direction].setdefault(edge.kind.value, []).append(
                {"id": other.id, "kind": other.kind.value, "label": other.label}
            )
    for direction in grouped:
        for kind in grouped[direction]:
            grouped[direction][kind].sort(key=lambda n: n["id"])
    return grouped


def create_app(directory: str | Path, static_dir: str | Path | None = None) -> FastAPI:
    """Build the API app for one catalog directory.

    Raises the underlying load error when the catalog is invalid, so a
    server refuses to start on a broken catalog. When ``static_dir`` is
    given, its files are served at ``/`` (for the bundled web explorer).
    """
    store = SnapshotStore(Path(directory))
    app = FastAPI(title="dataset-atlas", docs_url=None, redoc_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(QuerySyntaxError)
    async def _syntax_error(request: Request, exc: QuerySyntaxError):
        return _error(
            "syntax-error",
            str(exc),
            400,
            position={"line": exc.line, "column": exc.column},
        )

    @app.exception_handler(AtlasError)
    async def _atlas_error(request: Request, exc: AtlasError):
        code = {
            "UnknownTermError": "unknown-term",
            "WrongDimensionError": "wrong-dimension",
            "UnknownNodeError": "unknown-node",
            "UnknownFieldError": "unknown-field",
            "UnknownEdgeKindError": "unknown-edge-kind",
            "AmbiguousLabelError": "ambiguous-label",
            "SameDimensionError": "same-dimension",
            "BadDepthError": "bad-depth",
        }.get(type(exc).__name__, "bad-request")
        return _error(code, str(exc), 400)

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return _error("bad-request", str(exc), 400)

    @app.get("/api/stats")
    def stats():
        snapshot = store.current
        years = [p.year for p in snapshot.store.publications.values()]
        return _json(
            {
                "datasets": len(snapshot.store.datasets),
                "publications": len(snapshot.store.publications),
                "tools": len(snapshot.store.tools),
                "organizations": len(snapshot.store.organizations),
                "year_range": [min(years), max(years)] if years else None,
            }
        )

    @app.get("/api/taxonomy")
    def taxonomy():
        return _json(store.current.taxonomy.to_doc())

    @app.get("/api/datasets")
    def datasets(facets: str | None = None, q: str | None = None):
        snapshot = store.current
        selection = _parse_facet_params(facets, q)
        result = apply_facets(snapshot, selection)
        return _json(
            {
                "total": result.total,
                "datasets": [_dataset_summary(snapshot, d) for d in result.ids],
            }
        )

    @app.get("/api/datasets/{dataset_id}")
    def dataset_detail(dataset_id: str):
        snapshot = store.current
        record = snapshot.store.datasets.get(dataset_id)
        if record is None:
            return _error("unknown-dataset", f"no dataset {dataset_id!r}", 404)
        payload = record.to_dict()
        payload["quality"] = record.quality.to_dict() if record.quality else None
        payload["scholar_url"] = scholar_url(record)
        payload["classifications"] = _classification_entries(snapshot, record)
        payload["neighbors"] = _neighbors_by_kind(snapshot, dataset_id)
        return _json(payload)

    @app.get("/api/facets")
    def facets_endpoint(facets: str | None = None, q: str | None = None):
        snapshot = store.current
        selection = _parse_facet_params(facets, q)
        return _json({"counts": facet_counts(snapshot, selection)})

    @app.get("/api/heatmap")
    def heatmap_endpoint(rows: str = "domain", cols: str = "lifecycle", depth: int = 1):
        snapshot = store.current
        try:
            row_dim, col_dim = Dimension(rows), Dimension(cols)
        except ValueError:
            return _error("unknown-dimension", f"bad dimension in {rows!r}/{cols!r}", 400)
        matrix = analytics.heatmap(snapshot, row_dim, col_dim, depth=depth)
        return _json(matrix.to_dict(snapshot))

    @app.get("/api/graph")
    def graph_endpoint(layers: str | None = None):
        snapshot = store.current
        if layers is None:
            selected = analytics.GRAPH_LAYERS
        else:
            selected = tuple(s for s in (part.strip() for part in layers.split(",")) if s)
        export = analytics.graph_export(snapshot, selected)
        return _json(export.to_dict())

    @app.post("/api/query")
    async def query_endpoint(request: Request):
        snapshot = store.current
        try:
            body = await request.json()
        except Exception:
            return _error("bad-request", "body must be JSON", 400)
        if not isinstance(body, dict) or not isinstance(body.get("q"), str):
            return _error("bad-request", 'body must look like {"q": "FIND ..."}', 400)
        query = parse_query(body["q"])
        result = evaluate_query(snapshot, query)
        return _json(
            {"kind": query.kind.value, "total": result.total, "ids": list(result.ids)}
        )

    @app.post("/api/reload")
    def reload_endpoint():
        previous = store.current.content_hash
        try:
            fresh = store.reload()
        except (CatalogValidationError, ParseError) as exc:
            return _error("invalid-catalog", str(exc), 400)
        return _json(
            {
                "reloaded": True,
                "content_hash": fresh.content_hash,
                "changed": fresh.content_hash != previous,
            }
        )

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(
    directory: str | Path,
    port: int = 8000,
    host: str = "127.0.0.1",
    static_dir: str | Path | None = None,
) -> None:
    """Run the API with uvicorn; raises on an invalid catalog."""
    import uvicorn

    app = create_app(directory, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
