"""Catalog ingestion: validate records, score quality, assemble the graph.

A catalog directory holds ``taxonomy.json``, one dataset record per file
under ``datasets/``, and ``publications.json`` / ``tools.json`` /
``organizations.json`` arrays. Loading validates everything, computes
quality scores, and wires every declared relationship into a typed graph.
Error-level findings abort the load, but only after the whole catalog has
been checked, so one report lists every problem.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urlparse

from .errors import CatalogValidationError, ParseError
from .graph import Edge, EdgeKind, Graph, Node, NodeKind, is_valid_slug
from .records import (
    SCORING_VERSION,
    DatasetRecord,
    OrganizationRecord,
    PROVENANCE_KINDS,
    PublicationRecord,
    QualityScores,
    ToolRecord,
    VALIDATION_STATUSES,
    dataset_from_dict,
    organization_from_dict,
    publication_from_dict,
    tool_from_dict,
)
from .taxonomy import Dimension, Taxonomy

DOI_PATTERN = re.compile(r"^10\.\d+/\S+$")

#: The nine recommended metadata fields counted by the completeness score.
RECOMMENDED_FIELDS = (
    "title",
    "description",
    "source_url",
    "license",
    "doi",
    "size_description",
    "temporal_coverage",
    "provenance",
    "classification",
)


@dataclass(frozen=True)
class Finding:
    """One validation outcome; ``level`` is ``error`` or ``warning``."""

    level: str
    code: str
    message: str
    subject: str

    def __str__(self) -> str:
        return f"[{self.level}] {self.subject}: {self.code}: {self.message}"


@dataclass
class RecordStore:
    """All parsed records of one catalog, keyed by id."""

    datasets: dict[str, DatasetRecord] = field(default_factory=dict)
    publications: dict[str, PublicationRecord] = field(default_factory=dict)
    tools: dict[str, ToolRecord] = field(default_factory=dict)
    organizations: dict[str, OrganizationRecord] = field(default_factory=dict)


def _url_ok(url: str) -> bool:
    parts = urlparse(url)
    return bool(parts.scheme) and bool(parts.netloc)


def validate_record(record: DatasetRecord, taxonomy: Taxonomy) -> list[Finding]:
    """Check one dataset record against its invariants.

    Malformed ids, URLs, DOIs, temporal ranges, and provenance are
    error-level; a missing classification dimension is only a warning so
    partially described real-world datasets still load.
    """
    findings: list[Finding] = []

    def err(code: str, message: str) -> None:
        findings.append(Finding("error", code, message, record.id))

    def warn(code: str, message: str) -> None:
        findings.append(Finding("warning", code, message, record.id))

    if not is_valid_slug(record.id):
        err("bad-slug", f"id {record.id!r} is not a lowercase slug")
    if not record.title.strip():
        err("missing-title", "title must be non-empty")
    if not record.source_url.strip():
        err("missing-source-url", "source_url must be non-empty")
    elif not _url_ok(record.source_url):
        err("bad-url", f"source_url {record.source_url!r} is not a valid URL")
    if record.doi is not None and not DOI_PATTERN.match(record.doi):
        err("bad-doi", f"doi {record.doi!r} does not match 10.<digits>/<suffix>")
    if record.temporal_coverage is not None:
        start, end = record.temporal_coverage
        if start > end:
            err("bad-temporal", f"start year {start} is after end year {end}")

    if record.provenance is not None:
        prov = record.provenance
        if prov.kind not in PROVENANCE_KINDS:
            err("bad-provenance", f"kind must be one of {PROVENANCE_KINDS}")
        elif prov.kind == "synthetic" and not (prov.generation_method or "").strip():
            err("bad-provenance", "synthetic datasets must state a generation_method")
        if prov.validation_status is not None and prov.validation_status not in VALIDATION_STATUSES:
            err(
                "bad-provenance",
                f"validation_status must be one of {VALIDATION_STATUSES}",
            )

    covered: set[Dimension] = set()
    for term_id in record.classifications:
        if term_id not in taxonomy:
            err("unknown-term", f"classification {term_id!r} is not in the taxonomy")
        else:
            covered.add(taxonomy.term(term_id).dimension)
    for dimension in Dimension:
        if dimension not in covered:
            warn(
                f"missing-dimension:{dimension.value}",
                f"no {dimension.value} classification",
            )
    return findings


def _has_full_classification(record: DatasetRecord, taxonomy: Taxonomy) -> bool:
    covered = {
        taxonomy.term(t).dimension for t in record.classifications if t in taxonomy
    }
    return covered == set(Dimension)


def _format_interop_score(record: DatasetRecord, taxonomy: Taxonomy) -> float:
    """Interoperability from the format classification.

    Machine-friendly structure scores highest; specialized formats score
    half; unstructured-only (or unclassified) scores zero. The tiers key
    off the canonical format root ids shipped with the seed taxonomy.
    """
    format_terms = [
        t
        for t in record.classifications
        if t in taxonomy and taxonomy.term(t).dimension is Dimension.FORMAT
    ]
    for root in ("structured", "semi-structured"):
        if root in taxonomy and any(
            taxonomy.is_at_or_below(t, root) for t in format_terms
        ):
            return 1.0
    if "domain-specific" in taxonomy and any(
        taxonomy.is_at_or_below(t, "domain-specific") for t in format_terms
    ):
        return 0.5
    return 0.0


def _provenance_fully_populated(record: DatasetRecord) -> bool:
    prov = record.provenance
    if prov is None or prov.kind not in PROVENANCE_KINDS:
        return False
    if prov.kind == "real":
        return True
    return bool(
        (prov.generation_method or "").strip()
        and prov.simulation_tools
        and prov.validation_status
    )


def compute_quality(record: DatasetRecord, taxonomy: Taxonomy) -> QualityScores:
    """Score documentation completeness and the FAIR components.

    completeness: populated share of the nine recommended fields (the
    ninth being a full four-dimension classification).
    F: mean of has-doi and completeness. A: mean of http(s) source URL and
    license presence. I: format tier (see ``_format_interop_score``).
    R: mean of open license and fully populated provenance.
    """
    populated = {
        "title": bool(record.title.strip()),
        "description": bool(record.description.strip()),
        "source_url": bool(record.source_url.strip()),
        "license": bool(record.license.strip()),
        "doi": record.doi is not None,
        "size_description": bool(record.size_description.strip()),
        "temporal_coverage": record.temporal_coverage is not None,
        "provenance": record.provenance is not None,
        "classification": _has_full_classification(record, taxonomy),
    }
    completeness = sum(populated.values()) / len(RECOMMENDED_FIELDS)

    has_doi = 1.0 if record.doi is not None else 0.0
    fair_f = (has_doi + completeness) / 2

    scheme = urlparse(record.source_url).scheme
    reachable = 1.0 if scheme in ("http", "https") else 0.0
    has_license = 1.0 if record.license.strip() else 0.0
    fair_a = (reachable + has_license) / 2

    fair_i = _format_interop_score(record, taxonomy)

    open_license = 1.0 if record.license_open else 0.0
    prov_complete = 1.0 if _provenance_fully_populated(record) else 0.0
    fair_r = (open_license + prov_complete) / 2

    return QualityScores(
        completeness=completeness,
        fair_f=fair_f,
        fair_a=fair_a,
        fair_i=fair_i,
        fair_r=fair_r,
        scoring_version=SCORING_VERSION,
    )


# -- loading ---------------------------------------------------------------


def _read_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def _read_array(path: Path, what: str) -> list:
    if not path.exists():
        return []
    doc = _read_json(path)
    if not isinstance(doc, list):
        raise ParseError(f"{path}: {what} file must hold a JSON array")
    return doc


def _dedupe(
    values: list[str], subject: str, what: str, findings: list[Finding]
) -> list[str]:
    seen: set[str] = set()
    out: list[str] = []
    for v in values:
        if v in seen:
            findings.append(
                Finding("warning", "duplicate-reference", f"{what} lists {v!r} twice", subject)
            )
            continue
        seen.add(v)
        out.append(v)
    return out


def load_catalog(
    directory: str | Path, taxonomy: Taxonomy
) -> tuple[Graph, RecordStore, list[Finding]]:
    """Load a catalog directory against an already validated taxonomy.

    Returns the assembled graph, the record store, and the warning-level
    diagnostics. Raises ParseError on unreadable files and
    CatalogValidationError (carrying *all* findings) when any error-level
    finding is present.
    """
    directory = Path(directory)
    findings: list[Finding] = []
    store = RecordStore()

    datasets_dir = directory / "datasets"
    dataset_files = sorted(datasets_dir.glob("*.json")) if datasets_dir.is_dir() else []
    parsed_datasets: list[DatasetRecord] = []
    for path in dataset_files:
        doc = _read_json(path)
        parsed_datasets.append(dataset_from_dict(doc, str(path)))

    publications = [
        publication_from_dict(raw, "publications.json")
        for raw in _read_array(directory / "publications.json", "publications")
    ]
    tools = [
        tool_from_dict(raw, "tools.json")
        for raw in _read_array(directory / "tools.json", "tools")
    ]
    organizations = [
        organization_from_dict(raw, "organizations.json")
        for raw in _read_array(directory / "organizations.json", "organizations")
    ]

    # Ids must be unique across every record type and the taxonomy.
    seen_ids: set[str] = {t.id for t in taxonomy.terms()}
    all_records = (
        [(r.id, "dataset") for r in parsed_datasets]
        + [(r.id, "publication") for r in publications]
        + [(r.id, "tool") for r in tools]
        + [(r.id, "organization") for r in organizations]
    )
    for record_id, kind in all_records:
        if record_id in seen_ids:
            findings.append(
                Finding(
                    "error",
                    "duplicate-id",
                    f"{kind} id collides with another record or taxonomy term",
                    record_id,
                )
            )
        seen_ids.add(record_id)

    for record in parsed_datasets:
        findings.extend(validate_record(record, taxonomy))
        store.datasets[record.id] = record
    for pub in publications:
        if not is_valid_slug(pub.id):
            findings.append(Finding("error", "bad-slug", f"id {pub.id!r}", pub.id))
        if not pub.title.strip():
            findings.append(Finding("error", "missing-title", "empty title", pub.id))
        if not 1000 <= pub.year <= 9999:
            findings.append(
                Finding("error", "bad-year", f"{pub.year} is not a 4-digit year", pub.id)
            )
        if pub.doi is not None and not DOI_PATTERN.match(pub.doi):
            findings.append(Finding("error", "bad-doi", f"doi {pub.doi!r}", pub.id))
        store.publications[pub.id] = pub
    for tool in tools:
        if not is_valid_slug(tool.id):
            findings.append(Finding("error", "bad-slug", f"id {tool.id!r}", tool.id))
        if not tool.name.strip():
            findings.append(Finding("error", "missing-name", "empty name", tool.id))
        store.tools[tool.id] = tool
    for org in organizations:
        if not is_valid_slug(org.id):
            findings.append(Finding("error", "bad-slug", f"id {org.id!r}", org.id))
        if not org.name.strip():
            findings.append(Finding("error", "missing-name", "empty name", org.id))
        store.organizations[org.id] = org

    # Reference checks; every declared relationship must point at a record
    # that exists and has the right type.
    def check_refs(subject: str, refs: list[str], target: dict, what: str) -> None:
        for ref in refs:
            if ref not in target:
                findings.append(
                    Finding(
                        "error",
                        "unknown-reference",
                        f"{what} {ref!r} is not defined anywhere in the catalog",
                        subject,
                    )
                )

    for record in store.datasets.values():
        record.used_in = _dedupe(record.used_in, record.id, "used_in", findings)
        record.derived_from = _dedupe(
            record.derived_from, record.id, "derived_from", findings
        )
        check_refs(record.id, record.used_in, store.publications, "publication")
        check_refs(record.id, record.derived_from, store.datasets, "dataset")
        if record.id in record.derived_from:
            findings.append(
                Finding("error", "self-reference", "dataset derived from itself", record.id)
            )
        if record.maintained_by is not None:
            check_refs(
                record.id, [record.maintained_by], store.organizations, "organization"
            )
    for tool in store.tools.values():
        tool.compatible_formats = _dedupe(
            tool.compatible_formats, tool.id, "compatible_formats", findings
        )
        tool.processes = _dedupe(tool.processes, tool.id, "processes", findings)
        tool.validated_on = _dedupe(tool.validated_on, tool.id, "validated_on", findings)
        for term_id in tool.compatible_formats:
            if term_id not in taxonomy:
                findings.append(
                    Finding("error", "unknown-term", f"format {term_id!r}", tool.id)
                )
            elif taxonomy.term(term_id).dimension is not Dimension.FORMAT:
                findings.append(
                    Finding(
                        "error",
                        "wrong-dimension",
                        f"compatible_formats {term_id!r} is not a format term",
                        tool.id,
                    )
                )
        check_refs(tool.id, tool.processes, store.datasets, "dataset")
        check_refs(tool.id, tool.validated_on, store.datasets, "dataset")

    if any(f.level == "error" for f in findings):
        raise CatalogValidationError(findings)

    for record in store.datasets.values():
        record.quality = compute_quality(record, taxonomy)

    graph = build_graph(taxonomy, store)
    return graph, store, findings


def build_graph(taxonomy: Taxonomy, store: RecordStore) -> Graph:
    """Assemble the typed graph from validated records."""
    graph = Graph()
    for term in taxonomy.terms():
        graph.add_node(
            Node(
                id=term.id,
                kind=NodeKind.TAXONOMY_TERM,
                label=term.label,
                attributes={"dimension": term.dimension.value},
            )
        )
    for term in taxonomy.terms():
        if term.parent is not None:
            graph.add_edge(Edge(term.parent, EdgeKind.PARENT_OF, term.id))

    for record in store.datasets.values():
        graph.add_node(Node(record.id, NodeKind.DATASET, record.title))
    for pub in store.publications.values():
        graph.add_node(Node(pub.id, NodeKind.PUBLICATION, pub.title))
    for tool in store.tools.values():
        graph.add_node(Node(tool.id, NodeKind.TOOL, tool.name))
    for org in store.organizations.values():
        graph.add_node(Node(org.id, NodeKind.ORGANIZATION, org.name))

    for record in store.datasets.values():
        for term_id in record.classifications:
            graph.add_edge(Edge(record.id, EdgeKind.CLASSIFIED_AS, term_id))
        for pub_id in record.used_in:
            graph.add_edge(Edge(record.id, EdgeKind.USED_IN, pub_id))
        for parent_id in record.derived_from:
            graph.add_edge(Edge(record.id, EdgeKind.DERIVED_FROM, parent_id))
        if record.maintained_by is not None:
            graph.add_edge(Edge(record.id, EdgeKind.MAINTAINED_BY, record.maintained_by))
    for tool in store.tools.values():
        for term_id in tool.compatible_formats:
            graph.add_edge(Edge(tool.id, EdgeKind.COMPATIBLE_WITH, term_id))
        for dataset_id in tool.processes:
            graph.add_edge(Edge(tool.id, EdgeKind.PROCESSES, dataset_id))
        for dataset_id in tool.validated_on:
            graph.add_edge(Edge(tool.id, EdgeKind.VALIDATED_ON, dataset_id))
    return graph


def export_catalog(
    directory: str | Path, taxonomy: Taxonomy, store: RecordStore
) -> None:
    """Write a catalog back out in the directory layout ``load_catalog`` reads.

    Loading the exported directory again reproduces the same graph and the
    same quality scores (scores are recomputed, not persisted).
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "datasets").mkdir(exist_ok=True)

    def dump(path: Path, payload) -> None:
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")

    dump(directory / "taxonomy.json", taxonomy.to_doc())
    for record in store.datasets.values():
        dump(directory / "datasets" / f"{record.id}.json", record.to_dict())
    dump(
        directory / "publications.json",
        [p.to_dict() for p in store.publications.values()],
    )
    dump(directory / "tools.json", [t.to_dict() for t in store.tools.values()])
    dump(
        directory / "organizations.json",
        [o.to_dict() for o in store.organizations.values()],
    )
