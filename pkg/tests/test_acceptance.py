"""Acceptance suite: one test per release criterion, at full scale.

Every test prints a single PASS line on success (run with ``-s`` to see
them); a failure reads as the criterion name plus the usual assertion
diff. The whole suite exercises only the Python package and its HTTP
API; nothing here needs the web frontend.
"""

from __future__ import annotations

import json
import random
import time

from fastapi.testclient import TestClient

from dataset_atlas import (
    Dimension,
    FacetSelection,
    apply_facets,
    evaluate_query,
    export_catalog,
    facet_counts,
    heatmap,
    load_snapshot,
    parse_query,
    pretty,
    seed_dir,
    exemplar_dir,
)
from dataset_atlas.api import create_app
from dataset_atlas.errors import QuerySyntaxError
from dataset_atlas.query import FacetPred, FieldPred, Query, make_and, make_or
from dataset_atlas.graph import NodeKind

from helpers import (
    oracle_apply_facets,
    oracle_rollup,
    random_catalog,
    random_selection,
    random_taxonomy,
    snapshot_of,
)
from test_graph import run_edge_fuzz
from test_query import MALFORMED_CORPUS, random_query


def report(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def test_seed_catalog_ships_named_datasets_and_loads_fast():
    expected = {
        "c-mapss",
        "abc-cad",
        "pure",
        "cwru",
        "pronostia",
        "xjtu-sy",
        "kitti",
        "waymo-open",
        "nuscenes",
        "materials-project",
        "nbi",
    }
    started = time.perf_counter()
    snapshot = load_snapshot(seed_dir())
    elapsed = time.perf_counter() - started
    assert expected <= set(snapshot.store.datasets)
    assert len(snapshot.store.datasets) >= 10
    assert all(f.level != "error" for f in snapshot.diagnostics)
    assert snapshot.diagnostics == ()
    assert elapsed < 1.0, f"seed load took {elapsed:.3f}s"
    report("seed-catalog")


def test_exemplar_uniqueness_queries():
    cases = [
        (FacetSelection.of(lifecycle={"requirements-definition"}), ("pure",)),
        (FacetSelection.of(datatype={"geometric-structural"}), ("abc-cad",)),
        (FacetSelection.of(domain={"aerospace"}), ("c-mapss",)),
    ]
    for directory in (exemplar_dir(), seed_dir()):
        snapshot = load_snapshot(directory)
        for selection, expected in cases:
            assert apply_facets(snapshot, selection).ids == expected
    report("exemplar-uniqueness")


def test_gap_analysis_deserts_and_oases():
    snapshot = load_snapshot(seed_dir())
    matrix = heatmap(snapshot, Dimension.DOMAIN, Dimension.LIFECYCLE)
    disposal = matrix.cols.index("disposal-end-of-life")
    assert all(labels[disposal] == "desert" for labels in matrix.cell_labels)
    om = matrix.cols.index("operations-maintenance")
    om_labels = [labels[om] for labels in matrix.cell_labels]
    assert om_labels.count("oasis") >= 1
    # the oasis really is the PHM cluster
    manufacturing = matrix.rows.index("manufacturing")
    assert matrix.cell_labels[manufacturing][om] == "oasis"
    report("gap-analysis")


def _selection_to_query(selection: FacetSelection) -> Query:
    clauses = []
    for dimension in Dimension:
        terms = selection.terms.get(dimension) or frozenset()
        if terms:
            clauses.append(
                make_or([FacetPred(dimension, t) for t in sorted(terms)])
            )
    if selection.text:
        clauses.append(
            make_or(
                [
                    FieldPred("title", "~", selection.text),
                    FieldPred("description", "~", selection.text),
                ]
            )
        )
    where = make_and(clauses) if clauses else None
    return Query(kind=NodeKind.DATASET, where=where)


def test_facet_dsl_oracle_equivalence_thousand_pairs():
    rng = random.Random(20240)
    started = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        taxonomy, parent_map = random_taxonomy(rng, max_terms=30)
        records = random_catalog(rng, taxonomy, max_datasets=20)
        snapshot = snapshot_of(taxonomy, records)
        term_dims = {t.id: t.dimension for t in taxonomy.terms()}
        selection = random_selection(rng, taxonomy)

        expected = oracle_apply_facets(records, parent_map, term_dims, selection)
        via_facets = list(apply_facets(snapshot, selection).ids)
        via_dsl = list(
            evaluate_query(snapshot, _selection_to_query(selection)).ids
        )
        if not (expected == via_facets == via_dsl):
            mismatches += 1
    elapsed = time.perf_counter() - started
    assert mismatches == 0
    assert elapsed < 10.0, f"equivalence sweep took {elapsed:.2f}s"
    report("facet-dsl-equivalence")


def test_graph_schema_fuzz_ten_thousand_attempts():
    accepted, rejected = run_edge_fuzz(10_000, seed=1234)
    assert accepted + rejected == 10_000
    assert accepted > 0 and rejected > 0
    report("graph-schema-fuzz")


def test_rollup_matches_brute_force_five_hundred_instances():
    rng = random.Random(777)
    for _ in range(500):
        taxonomy, parent_map = random_taxonomy(rng, max_terms=20)
        term_ids = list(parent_map)
        classifications = {
            f"d{i}": {rng.choice(term_ids) for _ in range(rng.randint(1, 4))}
            for i in range(rng.randint(0, 10))
        }
        assert taxonomy.rollup_counts(classifications) == oracle_rollup(
            parent_map, classifications
        )
    report("rollup-correctness")


def test_parser_round_trip_and_malformed_corpus():
    rng = random.Random(3)
    for _ in range(200):
        query = random_query(rng)
        printed = pretty(query)
        assert parse_query(printed) == query, printed
    assert len(MALFORMED_CORPUS) == 50
    for text in MALFORMED_CORPUS:
        try:
            parse_query(text)
        except QuerySyntaxError as exc:
            assert exc.line >= 1 and exc.column >= 1
        else:
            raise AssertionError(f"parsed malformed query: {text!r}")
    report("parser")


def test_catalog_round_trip_isomorphic(tmp_path):
    for directory in (exemplar_dir(), seed_dir()):
        original = load_snapshot(directory)
        out = tmp_path / f"export-{directory.name}"
        export_catalog(out, original.taxonomy, original.store)
        again = load_snapshot(out)
        assert again.graph.edges() == original.graph.edges()
        assert {(n.id, n.kind, n.label) for n in again.graph.nodes()} == {
            (n.id, n.kind, n.label) for n in original.graph.nodes()
        }
        for dataset_id, record in original.store.datasets.items():
            assert again.store.datasets[dataset_id].quality == record.quality
    report("catalog-round-trip")


def test_api_facet_counts_contract_fifty_selections():
    snapshot = load_snapshot(seed_dir())
    client = TestClient(create_app(seed_dir()))
    rng = random.Random(4242)
    for _ in range(50):
        selection = random_selection(rng, snapshot.taxonomy)
        params = {}
        chunks = [
            f"{dim.value}:{term}"
            for dim, terms in sorted(selection.terms.items(), key=lambda kv: kv[0].value)
            for term in sorted(terms)
        ]
        if chunks:
            params["facets"] = ",".join(chunks)
        if selection.text:
            params["q"] = selection.text
        response = client.get("/api/facets", params=params)
        assert response.status_code == 200
        expected = json.dumps({"counts": facet_counts(snapshot, selection)}).encode()
        assert response.content == expected
    report("api-contract")
