"""Interoperability exports: DCAT-style catalog JSON and Scholar links.

The export is plain JSON that borrows DCAT vocabulary for its keys rather
than a full RDF serialization; that keeps the catalog consumable by other
tools without dragging in a triple store.
"""

from __future__ import annotations

from urllib.parse import quote

from .errors import EmptyTitleError
from .records import DatasetRecord
from .snapshot import CatalogSnapshot

SCHOLAR_BASE = "https://scholar.google.com/scholar?q="


def scholar_url(record: DatasetRecord) -> str:
    """Google Scholar search link for the dataset's title."""
    title = record.title.strip()
    if not title:
        raise EmptyTitleError(f"dataset {record.id!r} has no title to search for")
    return SCHOLAR_BASE + quote(title, safe="")


def _keywords(snapshot: CatalogSnapshot, record: DatasetRecord) -> list[str]:
    """Labels of every classification term and its ancestors, sorted."""
    labels: set[str] = set()
    for term_id in record.classifications:
        labels.add(snapshot.taxonomy.term(term_id).label)
        for ancestor in snapshot.taxonomy.ancestors(term_id):
            labels.add(snapshot.taxonomy.term(ancestor).label)
    return sorted(labels)


def export_dcat(snapshot: CatalogSnapshot) -> dict:
    """One catalog record plus one entry per dataset, ordered by id."""
    entries = []
    for dataset_id in snapshot.dataset_ids:
        record = snapshot.store.datasets[dataset_id]
        entry: dict = {
            "@type": "dcat:Dataset",
            "dct:identifier": record.doi if record.doi is not None else record.id,
            "dct:title": record.title,
            "dct:description": record.description,
            "dcat:landingPage": record.source_url,
            "dct:license": record.license,
            "dcat:keyword": _keywords(snapshot, record),
        }
        if record.temporal_coverage is not None:
            start, end = record.temporal_coverage
            entry["dct:temporal"] = {
                "dcat:startDate": str(start),
                "dcat:endDate": str(end),
            }
        entries.append(entry)
    return {
        "@type": "dcat:Catalog",
        "dct:title": "Engineering design dataset catalog",
        "dct:description": (
            f"Faceted catalog of {len(entries)} engineering datasets "
            "classified by domain, lifecycle stage, data type, and format."
        ),
        "dct:identifier": snapshot.content_hash,
        "dcat:dataset": entries,
    }
