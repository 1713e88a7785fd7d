"""Gap analytics and visualization data.

Everything here is a pure read over a snapshot: the cross-tabulation
heatmap with desert/oasis cell labels, hierarchical sunburst counts, the
node-link export behind the graph view, and a simple degree-based
influence ranking.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from statistics import median
from typing import Iterable, Sequence

from .errors import BadDepthError, BadThresholdsError, SameDimensionError
from .graph import NodeKind
from .snapshot import CatalogSnapshot
from .taxonomy import Dimension

CellLabel = str  # "desert" | "sparse" | "normal" | "oasis"

#: Layer names accepted by graph_export: the four term dimensions plus the
#: three non-dataset record kinds. Dataset nodes are always present.
GRAPH_LAYERS = (
    "domain",
    "lifecycle",
    "datatype",
    "format",
    "tools",
    "publications",
    "organizations",
)


@dataclass(frozen=True)
class HeatmapMatrix:
    """Counts of datasets per (row term, column term) pair."""

    row_dimension: Dimension
    col_dimension: Dimension
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]
    cell_labels: tuple[tuple[CellLabel, ...], ...]

    def to_dict(self, snapshot: CatalogSnapshot | None = None) -> dict:
        out = {
            "row_dimension": self.row_dimension.value,
            "col_dimension": self.col_dimension.value,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "cells": [list(row) for row in self.cells],
            "cell_labels": [list(row) for row in self.cell_labels],
        }
        if snapshot is not None:
            out["row_labels"] = [snapshot.taxonomy.term(t).label for t in self.rows]
            out["col_labels"] = [snapshot.taxonomy.term(t).label for t in self.cols]
        return out


@dataclass(frozen=True)
class SunburstNode:
    """One taxonomy term with its rolled-up dataset count and children."""

    term: str
    label: str
    count: int
    children: tuple["SunburstNode", ...]

    def to_dict(self) -> dict:
        return {
            "term": self.term,
            "label": self.label,
            "count": self.count,
            "children": [c.to_dict() for c in self.children],
        }


@dataclass(frozen=True)
class GraphExport:
    """Node-link data for the network view; degrees come from the full graph."""

    nodes: tuple[dict, ...]
    links: tuple[dict, ...]
    layers: frozenset[str]

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "links": list(self.links)}


def _percentile(values: Sequence[float], pct: float) -> float:
    """Linear-interpolation percentile of already collected values."""
    ordered = sorted(values)
    if not ordered:
        return 0.0
    if len(ordered) == 1:
        return float(ordered[0])
    rank = pct / 100 * (len(ordered) - 1)
    low = int(rank)
    frac = rank - low
    if low + 1 >= len(ordered):
        return float(ordered[-1])
    return ordered[low] + frac * (ordered[low + 1] - ordered[low])


def classify_cells(
    matrix: HeatmapMatrix,
    desert_max: int = 0,
    oasis_min: float | None = None,
) -> HeatmapMatrix:
    """Label every cell as desert, sparse, normal, or oasis.

    Cells at or under ``desert_max`` are deserts; cells at or over
    ``oasis_min`` are oases. By default the oasis cutoff is the 90th
    percentile of nonzero cells, but never under 3. Everything in between
    is sparse when under the nonzero-cell median, normal otherwise.
    """
    flat = [c for row in matrix.cells for c in row]
    nonzero = [c for c in flat if c > 0]
    if oasis_min is None:
        oasis_min = max(3.0, _percentile(nonzero, 90))
    if desert_max >= oasis_min:
        raise BadThresholdsError(
            f"desert_max ({desert_max}) must be below oasis_min ({oasis_min})"
        )
    mid = median(nonzero) if nonzero else 0.0

    def label(count: int) -> CellLabel:
        if count <= desert_max:
            return "desert"
        if count >= oasis_min:
            return "oasis"
        return "sparse" if count < mid else "normal"

    labels = tuple(tuple(label(c) for c in row) for row in matrix.cells)
    return replace(matrix, cell_labels=labels)


def heatmap(
    snapshot: CatalogSnapshot,
    row_dim: Dimension,
    col_dim: Dimension,
    depth: int = 1,
) -> HeatmapMatrix:
    """Cross-tabulate two dimensions at the given hierarchy depth.

    A dataset lands in cell (r, c) when it has at least one classification
    at or below r and one at or below c; it is counted once per cell.
    Returned cells already carry default desert/oasis labels.
    """
    if row_dim is col_dim:
        raise SameDimensionError("row and column dimensions must differ")
    if depth < 1:
        raise BadDepthError(f"depth must be >= 1, got {depth}")
    rows = tuple(snapshot.taxonomy.terms_at_depth(row_dim, depth))
    cols = tuple(snapshot.taxonomy.terms_at_depth(col_dim, depth))
    cells = tuple(
        tuple(
            len(snapshot.facet_index[r] & snapshot.facet_index[c]) for c in cols
        )
        for r in rows
    )
    blank = tuple(tuple("desert" for _ in cols) for _ in rows)
    matrix = HeatmapMatrix(
        row_dimension=row_dim,
        col_dimension=col_dim,
        rows=rows,
        cols=cols,
        cells=cells,
        cell_labels=blank,
    )
    return classify_cells(matrix)


def sunburst(snapshot: CatalogSnapshot, dimension: Dimension) -> list[SunburstNode]:
    """The dimension's term forest with rolled-up counts per ring segment."""

    def build(term_id: str) -> SunburstNode:
        term = snapshot.taxonomy.term(term_id)
        return SunburstNode(
            term=term_id,
            label=term.label,
            count=len(snapshot.facet_index[term_id]),
            children=tuple(build(c) for c in snapshot.taxonomy.children(term_id)),
        )

    return [build(root) for root in snapshot.taxonomy.roots(dimension)]


_KIND_LAYER = {
    NodeKind.TOOL: "tools",
    NodeKind.PUBLICATION: "publications",
    NodeKind.ORGANIZATION: "organizations",
}


def graph_export(
    snapshot: CatalogSnapshot, layers: Iterable[str] = GRAPH_LAYERS
) -> GraphExport:
    """Node-link JSON data restricted to the switched-on layers.

    Dataset nodes always appear; taxonomy terms appear per-dimension and
    the other kinds per their layer. Links are kept only between included
    nodes, but each node's degree reflects the full unfiltered graph.
    """
    layer_set = frozenset(layers)
    unknown = layer_set - set(GRAPH_LAYERS)
    if unknown:
        raise ValueError(f"unknown graph layers: {sorted(unknown)}")

    included: list[dict] = []
    included_ids: set[str] = set()
    for node in snapshot.graph.nodes():
        if node.kind is NodeKind.DATASET:
            keep = True
        elif node.kind is NodeKind.TAXONOMY_TERM:
            keep = node.attributes.get("dimension") in layer_set
        else:
            keep = _KIND_LAYER[node.kind] in layer_set
        if not keep:
            continue
        entry = {
            "id": node.id,
            "kind": node.kind.value,
            "label": node.label,
            "degree": snapshot.graph.degree(node.id),
        }
        if "dimension" in node.attributes:
            entry["dimension"] = node.attributes["dimension"]
        included.append(entry)
        included_ids.add(node.id)

    links = [
        {"source": e.src, "target": e.dst, "kind": e.kind.value}
        for e in sorted(
            snapshot.graph.edges(), key=lambda e: (e.src, e.kind.value, e.dst)
        )
        if e.src in included_ids and e.dst in included_ids
    ]
    return GraphExport(nodes=tuple(included), links=tuple(links), layers=layer_set)


def dataset_influence(
    snapshot: CatalogSnapshot, top_k: int
) -> list[tuple[str, int]]:
    """Most-connected datasets: descending degree, ties by id."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    ranked = sorted(
        ((d, snapshot.graph.degree(d)) for d in snapshot.dataset_ids),
        key=lambda pair: (-pair[1], pair[0]),
    )
    return ranked[:top_k]
