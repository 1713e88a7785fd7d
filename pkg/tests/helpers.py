"""Shared test utilities: tiny builders, random generators, and the
brute-force oracles the randomized suites compare against.

The oracles deliberately reimplement semantics from scratch on plain
dicts (parent maps, record lists) so they stay independent of the code
under test.
"""

from __future__ import annotations

import random
from typing import Mapping, Sequence

from dataset_atlas import (
    DatasetRecord,
    Dimension,
    FacetSelection,
    RecordStore,
    Taxonomy,
    Term,
    build_snapshot,
)

DIMENSIONS = list(Dimension)


def make_taxonomy(spec: Mapping[str, Sequence[tuple[str, str | None]]]) -> Taxonomy:
    """Build a taxonomy from ``{"domain": [("id", parent_or_None), ...], ...}``.

    Labels are derived from ids; dimensions not mentioned stay empty.
    """
    terms = []
    for dim_name, entries in spec.items():
        dimension = Dimension(dim_name)
        for term_id, parent in entries:
            terms.append(
                Term(
                    id=term_id,
                    dimension=dimension,
                    label=term_id.replace("-", " ").title(),
                    parent=parent,
                )
            )
    return Taxonomy(terms)


def make_dataset(record_id: str, classifications: list[str], **kwargs) -> DatasetRecord:
    defaults = dict(
        title=record_id.upper(),
        description=f"test dataset {record_id}",
        source_url=f"https://example.org/{record_id}",
        license="CC BY 4.0",
        license_open=True,
    )
    defaults.update(kwargs)
    return DatasetRecord(id=record_id, classifications=classifications, **defaults)


def snapshot_of(taxonomy: Taxonomy, datasets: list[DatasetRecord]):
    store = RecordStore(datasets={d.id: d for d in datasets})
    return build_snapshot(taxonomy, store)


# -- random instances --------------------------------------------------------


def random_taxonomy(rng: random.Random, max_terms: int = 30) -> tuple[Taxonomy, dict[str, str | None]]:
    """A random 4-dimension forest plus its parent map for oracle use."""
    parent_map: dict[str, str | None] = {}
    terms: list[Term] = []
    total = rng.randint(8, max_terms)
    per_dim = [[] for _ in DIMENSIONS]
    for i in range(total):
        dim_index = i % len(DIMENSIONS) if i < 4 else rng.randrange(len(DIMENSIONS))
        term_id = f"t{i}-{DIMENSIONS[dim_index].value[:3]}"
        existing = per_dim[dim_index]
        parent = rng.choice(existing) if existing and rng.random() < 0.6 else None
        parent_map[term_id] = parent
        terms.append(
            Term(term_id, DIMENSIONS[dim_index], f"Term {i} {DIMENSIONS[dim_index].value}", parent)
        )
        existing.append(term_id)
    return Taxonomy(terms), parent_map


def random_catalog(
    rng: random.Random, taxonomy: Taxonomy, max_datasets: int = 20
) -> list[DatasetRecord]:
    term_ids_by_dim = {
        d: [t.id for t in taxonomy.terms_in(d)] for d in DIMENSIONS
    }
    datasets = []
    for i in range(rng.randint(1, max_datasets)):
        labels: list[str] = []
        for dim in DIMENSIONS:
            pool = term_ids_by_dim[dim]
            if not pool:
                continue
            for _ in range(rng.choice([0, 1, 1, 2])):
                labels.append(rng.choice(pool))
        record_id = f"ds-{i}"
        datasets.append(
            make_dataset(
                record_id,
                sorted(set(labels)),
                title=f"Dataset {i} {rng.choice(['alpha', 'beta', 'gamma'])}",
                description=rng.choice(["sensor data", "cad shapes", "field logs"]),
            )
        )
    return datasets


def random_selection(rng: random.Random, taxonomy: Taxonomy) -> FacetSelection:
    terms: dict[Dimension, frozenset[str]] = {}
    for dim in DIMENSIONS:
        pool = [t.id for t in taxonomy.terms_in(dim)]
        if pool and rng.random() < 0.5:
            picked = rng.sample(pool, k=min(len(pool), rng.randint(1, 3)))
            terms[dim] = frozenset(picked)
    text = rng.choice([None, None, None, "alpha", "sensor", "zzz-no-match"])
    return FacetSelection(terms=terms, text=text)


# -- oracles -----------------------------------------------------------------


def oracle_at_or_below(parent_map: Mapping[str, str | None], term: str, ancestor: str) -> bool:
    cur: str | None = term
    while cur is not None:
        if cur == ancestor:
            return True
        cur = parent_map[cur]
    return False


def oracle_rollup(
    parent_map: Mapping[str, str | None],
    classifications: Mapping[str, set[str]],
) -> dict[str, int]:
    """Count per term by scanning every (dataset, term) pair."""
    counts = {}
    for term in parent_map:
        hit = {
            ds
            for ds, labels in classifications.items()
            if any(oracle_at_or_below(parent_map, lab, term) for lab in labels)
        }
        counts[term] = len(hit)
    return counts


def oracle_apply_facets(
    records: Sequence[DatasetRecord],
    parent_map: Mapping[str, str | None],
    term_dims: Mapping[str, Dimension],
    selection: FacetSelection,
) -> list[str]:
    """Set-scan implementation of the faceted-matching rule."""
    out = []
    for record in records:
        ok = True
        for dim, wanted in selection.terms.items():
            if not wanted:
                continue
            # Parents never cross dimensions, so scanning every label is
            # equivalent to restricting to the selected dimension first.
            if not any(
                oracle_at_or_below(parent_map, lab, sel)
                for lab in record.classifications
                for sel in wanted
            ):
                ok = False
                break
        if ok and selection.text:
            needle = selection.text.casefold()
            if needle not in record.title.casefold() and needle not in record.description.casefold():
                ok = False
        if ok:
            out.append(record.id)
    return sorted(out)


def oracle_facet_counts(
    records: Sequence[DatasetRecord],
    parent_map: Mapping[str, str | None],
    term_dims: Mapping[str, Dimension],
    selection: FacetSelection,
) -> dict[str, int]:
    counts: dict[str, int] = {}
    for term, dim in term_dims.items():
        reduced = FacetSelection(
            terms={d: s for d, s in selection.terms.items() if d is not dim},
            text=selection.text,
        )
        base = oracle_apply_facets(records, parent_map, term_dims, reduced)
        by_id = {r.id: r for r in records}
        counts[term] = sum(
            1
            for ds in base
            if any(
                oracle_at_or_below(parent_map, lab, term)
                for lab in by_id[ds].classifications
            )
        )
    return counts
