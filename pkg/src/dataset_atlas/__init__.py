"""Knowledge-graph-backed catalog and faceted explorer for engineering
design datasets."""

from importlib import resources
from pathlib import Path

from .analytics import (
    GraphExport,
    HeatmapMatrix,
    SunburstNode,
    classify_cells,
    dataset_influence,
    graph_export,
    heatmap,
    sunburst,
)
from .catalog import (
    Finding,
    RecordStore,
    compute_quality,
    export_catalog,
    load_catalog,
    validate_record,
)
from .dcat import export_dcat, scholar_url
from .graph import Edge, EdgeKind, Graph, Node, NodeKind
from .query import Query, evaluate_query, parse_query, pretty, run_query
from .records import (
    DatasetRecord,
    OrganizationRecord,
    ProvenanceInfo,
    PublicationRecord,
    QualityScores,
    ToolRecord,
)
from .search import FacetSelection, ResultSet, apply_facets, facet_counts
from .snapshot import CatalogSnapshot, build_snapshot, load_snapshot
from .taxonomy import Dimension, Taxonomy, Term, load_taxonomy

__version__ = "0.1.0"


def seed_dir() -> Path:
    """Path of the bundled full seed catalog."""
    return Path(str(resources.files(__name__) / "data" / "seed"))


def exemplar_dir() -> Path:
    """Path of the bundled three-dataset exemplar catalog."""
    return Path(str(resources.files(__name__) / "data" / "exemplar"))


__all__ = [
    "CatalogSnapshot",
    "DatasetRecord",
    "Dimension",
    "Edge",
    "EdgeKind",
    "FacetSelection",
    "Finding",
    "Graph",
    "GraphExport",
    "HeatmapMatrix",
    "Node",
    "NodeKind",
    "OrganizationRecord",
    "ProvenanceInfo",
    "PublicationRecord",
    "QualityScores",
    "Query",
    "RecordStore",
    "ResultSet",
    "SunburstNode",
    "Taxonomy",
    "Term",
    "ToolRecord",
    "apply_facets",
    "build_snapshot",
    "classify_cells",
    "compute_quality",
    "dataset_influence",
    "evaluate_query",
    "export_catalog",
    "export_dcat",
    "facet_counts",
    "graph_export",
    "heatmap",
    "load_catalog",
    "load_snapshot",
    "load_taxonomy",
    "parse_query",
    "pretty",
    "run_query",
    "scholar_url",
    "seed_dir",
    "sunburst",
    "exemplar_dir",
    "validate_record",
]
