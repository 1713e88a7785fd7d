"""DCAT export and Scholar link tests."""

from __future__ import annotations

import pytest

from dataset_atlas import DatasetRecord, export_dcat, scholar_url
from dataset_atlas.errors import EmptyTitleError
from helpers import make_taxonomy, snapshot_of


class TestScholarUrl:
    def test_percent_encoding(self):
        record = DatasetRecord(id="c-mapss", title="NASA C-MAPSS")
        assert (
            scholar_url(record)
            == "https://scholar.google.com/scholar?q=NASA%20C-MAPSS"
        )

    def test_ampersand_encoded(self):
        record = DatasetRecord(id="x", title="Bits & Pieces")
        assert "%26" in scholar_url(record)
        assert "&" not in scholar_url(record).split("?q=")[1]

    def test_empty_title(self):
        with pytest.raises(EmptyTitleError):
            scholar_url(DatasetRecord(id="x", title="   "))


class TestExportDcat:
    def test_exemplar_has_three_entries(self, exemplar_snapshot):
        doc = export_dcat(exemplar_snapshot)
        assert doc["@type"] == "dcat:Catalog"
        assert len(doc["dcat:dataset"]) == 3
        # entries ordered by dataset id: abc-cad, c-mapss, pure
        titles = [e["dct:title"] for e in doc["dcat:dataset"]]
        assert titles == ["ABC CAD Dataset", "NASA C-MAPSS", "PURE Requirements"]

    def test_empty_catalog(self):
        taxonomy = make_taxonomy(
            {
                "domain": [("a", None)],
                "lifecycle": [("l", None)],
                "datatype": [("t", None)],
                "format": [("f", None)],
            }
        )
        doc = export_dcat(snapshot_of(taxonomy, []))
        assert doc["dcat:dataset"] == []

    def test_c_mapss_keywords_include_ancestors(self, exemplar_snapshot):
        doc = export_dcat(exemplar_snapshot)
        entry = next(
            e for e in doc["dcat:dataset"] if e["dct:title"] == "NASA C-MAPSS"
        )
        keywords = entry["dcat:keyword"]
        assert "Aerospace" in keywords
        assert "Operations & Maintenance" in keywords
        assert "Turbofan Engines" in keywords
        assert keywords == sorted(keywords)

    def test_required_fields_present(self, seed_snapshot):
        doc = export_dcat(seed_snapshot)
        for entry in doc["dcat:dataset"]:
            for key in (
                "dct:identifier",
                "dct:title",
                "dct:description",
                "dcat:landingPage",
                "dct:license",
                "dcat:keyword",
            ):
                assert key in entry

    def test_doi_preferred_as_identifier(self, seed_snapshot):
        doc = export_dcat(seed_snapshot)
        pure = next(e for e in doc["dcat:dataset"] if e["dct:title"] == "PURE Requirements")
        assert pure["dct:identifier"] == "10.5281/zenodo.1414117"
        cmapss = next(e for e in doc["dcat:dataset"] if e["dct:title"] == "NASA C-MAPSS")
        assert cmapss["dct:identifier"] == "c-mapss"

    def test_temporal_block(self, seed_snapshot):
        doc = export_dcat(seed_snapshot)
        nbi = next(
            e for e in doc["dcat:dataset"] if e["dct:title"] == "National Bridge Inventory"
        )
        assert nbi["dct:temporal"] == {
            "dcat:startDate": "1992",
            "dcat:endDate": "2024",
        }
