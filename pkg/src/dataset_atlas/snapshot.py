"""Immutable catalog snapshots.

A snapshot bundles everything one load produced: taxonomy, records, the
typed graph, a precomputed facet index, and a content hash over the input
files. Reads never mutate a snapshot; refreshing a catalog means loading
a new snapshot and swapping the reference.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .catalog import Finding, RecordStore, build_graph, compute_quality, load_catalog
from .graph import Graph
from .taxonomy import Taxonomy, load_taxonomy


@dataclass(frozen=True)
class CatalogSnapshot:
    """One fully loaded catalog, safe for unlimited concurrent readers."""

    source_dir: Path
    taxonomy: Taxonomy
    graph: Graph
    store: RecordStore
    #: term id -> frozen set of dataset ids classified at or below the term
    facet_index: Mapping[str, frozenset[str]]
    diagnostics: tuple[Finding, ...]
    content_hash: str
    loaded_at: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc), compare=False
    )

    @property
    def dataset_ids(self) -> list[str]:
        """Sorted dataset ids; the default result ordering everywhere."""
        return sorted(self.store.datasets)


def catalog_files(directory: str | Path) -> list[Path]:
    """The input files covered by the content hash, in a stable order."""
    directory = Path(directory)
    files = [directory / "taxonomy.json"]
    datasets_dir = directory / "datasets"
    if datasets_dir.is_dir():
        files.extend(sorted(datasets_dir.glob("*.json")))
    for name in ("publications.json", "tools.json", "organizations.json"):
        path = directory / name
        if path.exists():
            files.append(path)
    return files


def content_hash(directory: str | Path) -> str:
    """SHA-256 over relative paths and bytes of every catalog input file."""
    directory = Path(directory)
    digest = hashlib.sha256()
    for path in catalog_files(directory):
        digest.update(str(path.relative_to(directory)).encode("utf-8"))
        digest.update(b"\0")
        digest.update(path.read_bytes() if path.exists() else b"")
        digest.update(b"\0")
    return digest.hexdigest()


def _facet_index(taxonomy: Taxonomy, store: RecordStore) -> Mapping[str, frozenset[str]]:
    classifications = {
        record.id: set(record.classifications) for record in store.datasets.values()
    }
    return MappingProxyType(
        {
            term_id: frozenset(datasets)
            for term_id, datasets in taxonomy.dataset_sets(classifications).items()
        }
    )


def load_snapshot(directory: str | Path) -> CatalogSnapshot:
    """Load taxonomy plus catalog from ``directory`` into one snapshot.

    Raises the same errors as ``load_taxonomy`` / ``load_catalog``.
    """
    directory = Path(directory)
    taxonomy = load_taxonomy(directory / "taxonomy.json")
    graph, store, diagnostics = load_catalog(directory, taxonomy)
    return CatalogSnapshot(
        source_dir=directory,
        taxonomy=taxonomy,
        graph=graph,
        store=store,
        facet_index=_facet_index(taxonomy, store),
        diagnostics=tuple(diagnostics),
        content_hash=content_hash(directory),
    )


def build_snapshot(taxonomy: Taxonomy, store: RecordStore) -> CatalogSnapshot:
    """Assemble a snapshot from in-memory records, no directory involved.

    Records are taken as already validated; quality scores are computed
    here when missing. The content hash covers a canonical JSON dump of
    the taxonomy and records.
    """
    for record in store.datasets.values():
        if record.quality is None:
            record.quality = compute_quality(record, taxonomy)
    payload = json.dumps(
        {
            "taxonomy": taxonomy.to_doc(),
            "datasets": [r.to_dict() for r in store.datasets.values()],
            "publications": [p.to_dict() for p in store.publications.values()],
            "tools": [t.to_dict() for t in store.tools.values()],
            "organizations": [o.to_dict() for o in store.organizations.values()],
        },
        sort_keys=True,
    )
    return CatalogSnapshot(
        source_dir=Path("."),
        taxonomy=taxonomy,
        graph=build_graph(taxonomy, store),
        store=store,
        facet_index=_facet_index(taxonomy, store),
        diagnostics=(),
        content_hash=hashlib.sha256(payload.encode("utf-8")).hexdigest(),
    )
