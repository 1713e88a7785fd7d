"""Heatmap, cell labeling, sunburst, graph export, and influence tests."""

from __future__ import annotations

import random

import pytest

from dataset_atlas import (
    Dimension,
    classify_cells,
    dataset_influence,
    graph_export,
    heatmap,
    sunburst,
)
from dataset_atlas.analytics import GRAPH_LAYERS, HeatmapMatrix, _percentile
from dataset_atlas.errors import (
    BadDepthError,
    BadThresholdsError,
    SameDimensionError,
)
from helpers import make_dataset, make_taxonomy, random_catalog, random_taxonomy, snapshot_of


def cell(matrix, row_id: str, col_id: str) -> int:
    return matrix.cells[matrix.rows.index(row_id)][matrix.cols.index(col_id)]


def label(matrix, row_id: str, col_id: str) -> str:
    return matrix.cell_labels[matrix.rows.index(row_id)][matrix.cols.index(col_id)]


class TestHeatmap:
    def test_exemplar_cross_tab(self, exemplar_snapshot):
        matrix = heatmap(exemplar_snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
        assert cell(matrix, "aerospace", "operations-maintenance") == 1
        assert cell(matrix, "cross-domain", "detailed-design") == 1
        assert cell(matrix, "cross-domain", "requirements-definition") == 1
        total = sum(c for row in matrix.cells for c in row)
        assert total == 3

    def test_same_dimension_rejected(self, exemplar_snapshot):
        with pytest.raises(SameDimensionError):
            heatmap(exemplar_snapshot, Dimension.DOMAIN, Dimension.DOMAIN)

    def test_bad_depth(self, exemplar_snapshot):
        with pytest.raises(BadDepthError):
            heatmap(exemplar_snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE, depth=0)

    def test_empty_catalog_all_zero(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None)],
                "lifecycle": [("b", None)],
                "datatype": [("c", None)],
                "format": [("d", None)],
            }
        )
        matrix = heatmap(snapshot_of(taxonomy, []), Dimension.DOMAIN, Dimension.LIFECYCLE)
        assert all(c == 0 for row in matrix.cells for c in row)
        assert all(lab == "desert" for row in matrix.cell_labels for lab in row)

    def test_disposal_column_is_desert_on_seed(self, seed_snapshot):
        matrix = heatmap(seed_snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
        col = matrix.cols.index("disposal-end-of-life")
        assert all(row[col] == 0 for row in matrix.cells)
        assert all(labels[col] == "desert" for labels in matrix.cell_labels)

    def test_phm_oasis_on_seed(self, seed_snapshot):
        matrix = heatmap(seed_snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
        assert label(matrix, "manufacturing", "operations-maintenance") == "oasis"
        assert cell(matrix, "manufacturing", "operations-maintenance") == 3

    def test_depth_two_uses_child_terms(self, seed_snapshot):
        matrix = heatmap(
            seed_snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE, depth=2
        )
        assert "propulsion-systems" in matrix.rows
        assert "aerospace" not in matrix.rows
        assert matrix.cols == ()  # lifecycle has no depth-2 terms

    def test_dataset_counted_once_per_cell(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None), ("a1", "a"), ("a2", "a")],
                "lifecycle": [("l", None)],
                "datatype": [("t", None)],
                "format": [("f", None)],
            }
        )
        snapshot = snapshot_of(taxonomy, [make_dataset("d", ["a1", "a2", "l"])])
        matrix = heatmap(snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
        assert cell(matrix, "a", "l") == 1

    def test_marginals_bounded_by_rollup(self):
        # Row sums can only exceed the row's roll-up count through datasets
        # spanning several top-level column terms; with at most one column
        # root per dataset the two are equal.
        rng = random.Random(31)
        for _ in range(25):
            taxonomy, _ = random_taxonomy(rng)
            records = random_catalog(rng, taxonomy, max_datasets=12)
            snapshot = snapshot_of(taxonomy, records)
            matrix = heatmap(snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
            col_roots_per_dataset = {
                record.id: sum(
                    1 for c in matrix.cols if record.id in snapshot.facet_index[c]
                )
                for record in records
            }
            for r_i, row_term in enumerate(matrix.rows):
                row_sum = sum(matrix.cells[r_i])
                with_col = sum(
                    1
                    for record in records
                    if record.id in snapshot.facet_index[row_term]
                    and col_roots_per_dataset[record.id] >= 1
                )
                assert row_sum >= with_col
                if all(n <= 1 for n in col_roots_per_dataset.values()):
                    assert row_sum == with_col


class TestClassifyCells:
    def make_matrix(self, cells) -> HeatmapMatrix:
        rows = tuple(f"r{i}" for i in range(len(cells)))
        cols = tuple(f"c{i}" for i in range(len(cells[0]) if cells else 0))
        return HeatmapMatrix(
            row_dimension=Dimension.DOMAIN,
            col_dimension=Dimension.LIFECYCLE,
            rows=rows,
            cols=cols,
            cells=tuple(tuple(row) for row in cells),
            cell_labels=tuple(tuple("desert" for _ in row) for row in cells),
        )

    def test_all_zero_all_desert(self):
        matrix = classify_cells(self.make_matrix([[0, 0], [0, 0]]))
        assert all(lab == "desert" for row in matrix.cell_labels for lab in row)

    def test_bad_thresholds(self):
        with pytest.raises(BadThresholdsError):
            classify_cells(self.make_matrix([[1]]), desert_max=5, oasis_min=3)

    def test_explicit_thresholds(self):
        matrix = classify_cells(
            self.make_matrix([[0, 1, 2, 5]]), desert_max=0, oasis_min=5
        )
        assert matrix.cell_labels[0] == ("desert", "sparse", "normal", "oasis")

    def test_default_oasis_floor_of_three(self):
        matrix = classify_cells(self.make_matrix([[0, 1, 3]]))
        assert matrix.cell_labels[0][2] == "oasis"

    def test_labels_partition_cells(self):
        rng = random.Random(8)
        for _ in range(30):
            cells = [
                [rng.randint(0, 10) for _ in range(rng.randint(1, 5))]
                for _ in range(rng.randint(1, 5))
            ]
            width = len(cells[0])
            cells = [row[:width] for row in cells]
            matrix = classify_cells(self.make_matrix(cells))
            for row in matrix.cell_labels:
                for lab in row:
                    assert lab in ("desert", "sparse", "normal", "oasis")

    def test_percentile_linear(self):
        assert _percentile([1, 2, 3, 4], 50) == 2.5
        assert _percentile([1], 90) == 1.0
        assert _percentile([], 90) == 0.0
        assert _percentile([0, 10], 90) == 9.0


class TestSunburst:
    def test_exemplar_domain(self, exemplar_snapshot):
        roots = {n.term: n for n in sunburst(exemplar_snapshot, Dimension.DOMAIN)}
        assert roots["aerospace"].count == 1
        assert roots["cross-domain"].count == 2

    def test_chain_rolls_up(self, exemplar_snapshot):
        roots = {n.term: n for n in sunburst(exemplar_snapshot, Dimension.DOMAIN)}
        aero = roots["aerospace"]
        propulsion = aero.children[0]
        turbofan = propulsion.children[0]
        assert (aero.count, propulsion.count, turbofan.count) == (1, 1, 1)

    def test_unclassified_dimension_zero_counts(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None), ("a1", "a")],
                "lifecycle": [("l", None)],
                "datatype": [("t", None)],
                "format": [("f", None)],
            }
        )
        snapshot = snapshot_of(taxonomy, [make_dataset("d", ["l"])])
        roots = sunburst(snapshot, Dimension.DOMAIN)
        assert roots[0].count == 0
        assert roots[0].children[0].count == 0

    def test_matches_rollup_counts(self, seed_snapshot):
        classifications = {
            r.id: set(r.classifications) for r in seed_snapshot.store.datasets.values()
        }
        counts = seed_snapshot.taxonomy.rollup_counts(classifications)

        def walk(node):
            assert node.count == counts[node.term]
            for child in node.children:
                walk(child)

        for dimension in Dimension:
            for root in sunburst(seed_snapshot, dimension):
                walk(root)


class TestGraphExport:
    def test_domain_only_excludes_other_dimensions(self, seed_snapshot):
        export = graph_export(seed_snapshot, {"domain"})
        dims = {n.get("dimension") for n in export.nodes if n["kind"] == "taxonomy_term"}
        assert dims == {"domain"}
        kinds = {n["kind"] for n in export.nodes}
        assert kinds == {"dataset", "taxonomy_term"}

    def test_all_layers_match_full_graph(self, seed_snapshot):
        export = graph_export(seed_snapshot, GRAPH_LAYERS)
        assert len(export.nodes) == seed_snapshot.graph.node_count
        assert len(export.links) == seed_snapshot.graph.edge_count

    def test_links_restricted_to_included_nodes(self, seed_snapshot):
        export = graph_export(seed_snapshot, {"tools"})
        ids = {n["id"] for n in export.nodes}
        for link in export.links:
            assert link["source"] in ids and link["target"] in ids

    def test_empty_layers_datasets_only(self, seed_snapshot):
        export = graph_export(seed_snapshot, set())
        assert {n["kind"] for n in export.nodes} == {"dataset"}
        assert export.links == ()  # seed has no derived_from edges

    def test_degree_from_full_graph(self, seed_snapshot):
        export = graph_export(seed_snapshot, set())
        by_id = {n["id"]: n for n in export.nodes}
        assert by_id["c-mapss"]["degree"] == seed_snapshot.graph.degree("c-mapss")
        assert by_id["c-mapss"]["degree"] == 9

    def test_cmapss_connects_all_dimensions_and_kinds(self, seed_snapshot):
        export = graph_export(seed_snapshot, GRAPH_LAYERS)
        touching = {
            link["target"] for link in export.links if link["source"] == "c-mapss"
        } | {link["source"] for link in export.links if link["target"] == "c-mapss"}
        dims = {
            n["dimension"]
            for n in export.nodes
            if n["id"] in touching and n["kind"] == "taxonomy_term"
        }
        assert dims == {"domain", "lifecycle", "datatype", "format"}
        assert "pyphm" in touching
        assert "nasa" in touching
        assert "saxena-2008" in touching

    def test_unknown_layer_rejected(self, seed_snapshot):
        with pytest.raises(ValueError):
            graph_export(seed_snapshot, {"nope"})


class TestInfluence:
    def test_c_mapss_ranks_first_on_seed(self, seed_snapshot):
        ranked = dataset_influence(seed_snapshot, 3)
        assert ranked[0][0] == "c-mapss"

    def test_single_dataset(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None)],
                "lifecycle": [("l", None)],
                "datatype": [("t", None)],
                "format": [("f", None)],
            }
        )
        snapshot = snapshot_of(taxonomy, [make_dataset("only", ["a"])])
        assert dataset_influence(snapshot, 1) == [("only", 1)]

    def test_tie_breaks_by_id(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None)],
                "lifecycle": [("l", None)],
                "datatype": [("t", None)],
                "format": [("f", None)],
            }
        )
        snapshot = snapshot_of(
            taxonomy, [make_dataset("zeta", ["a"]), make_dataset("alpha", ["a"])]
        )
        assert [d for d, _ in dataset_influence(snapshot, 5)] == ["alpha", "zeta"]

    def test_top_k_truncates(self, seed_snapshot):
        assert len(dataset_influence(seed_snapshot, 4)) == 4
        assert len(dataset_influence(seed_snapshot, 99)) == 11

    def test_bad_top_k(self, seed_snapshot):
        with pytest.raises(ValueError):
            dataset_influence(seed_snapshot, 0)
