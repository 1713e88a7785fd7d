"""Faceted dataset filtering with live drill-down counts.

Selections OR terms within a dimension and AND across dimensions; a term
matches any dataset classified at or below it. Facet counts follow the
standard convention of excluding a dimension's own selection so sibling
options stay discoverable while drilling down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import UnknownTermError, WrongDimensionError
from .snapshot import CatalogSnapshot
from .taxonomy import Dimension


@dataclass(frozen=True)
class FacetSelection:
    """Per-dimension selected term sets plus an optional free-text query."""

    terms: Mapping[Dimension, frozenset[str]] = field(default_factory=dict)
    text: str | None = None

    @classmethod
    def of(cls, text: str | None = None, **dims: set[str] | frozenset[str]) -> "FacetSelection":
        """Convenience constructor keyed by dimension value names."""
        return cls(
            terms={Dimension(name): frozenset(values) for name, values in dims.items()},
            text=text,
        )


@dataclass(frozen=True)
class ResultSet:
    """Matching node ids, sorted ascending; ranking is future work."""

    ids: tuple[str, ...]
    total: int

    @classmethod
    def from_ids(cls, ids) -> "ResultSet":
        ordered = tuple(sorted(ids))
        return cls(ids=ordered, total=len(ordered))


def _validate_selection(snapshot: CatalogSnapshot, selection: FacetSelection) -> None:
    for dimension, term_ids in selection.terms.items():
        for term_id in term_ids:
            if term_id not in snapshot.taxonomy:
                raise UnknownTermError(f"no taxonomy term {term_id!r}")
            actual = snapshot.taxonomy.term(term_id).dimension
            if actual is not dimension:
                raise WrongDimensionError(
                    f"term {term_id!r} is a {actual.value} term, "
                    f"selected under {dimension.value}"
                )


def _text_matches(snapshot: CatalogSnapshot, dataset_id: str, text: str) -> bool:
    record = snapshot.store.datasets[dataset_id]
    needle = text.casefold()
    return needle in record.title.casefold() or needle in record.description.casefold()


def _apply(
    snapshot: CatalogSnapshot,
    selection: FacetSelection,
    skip_dimension: Dimension | None = None,
) -> set[str]:
    matching = set(snapshot.store.datasets)
    for dimension, term_ids in selection.terms.items():
        if dimension is skip_dimension or not term_ids:
            continue
        hits: set[str] = set()
        for term_id in term_ids:
            hits |= snapshot.facet_index[term_id]
        matching &= hits
    if selection.text:
        matching = {d for d in matching if _text_matches(snapshot, d, selection.text)}
    return matching


def apply_facets(snapshot: CatalogSnapshot, selection: FacetSelection) -> ResultSet:
    """Datasets matching the selection (OR within, AND across dimensions)."""
    _validate_selection(snapshot, selection)
    return ResultSet.from_ids(_apply(snapshot, selection))


def facet_counts(
    snapshot: CatalogSnapshot, selection: FacetSelection
) -> dict[str, int]:
    """Drill-down count for every taxonomy term under the selection.

    A term's count is how many datasets would match if the user added it:
    all selections in *other* dimensions (plus free text) apply, its own
    dimension's selection does not. Counts roll descendants up, so parents
    count each dataset once no matter how many descendant labels it has.
    """
    _validate_selection(snapshot, selection)
    base_by_dimension = {
        dimension: _apply(snapshot, selection, skip_dimension=dimension)
        for dimension in Dimension
    }
    counts: dict[str, int] = {}
    for term in snapshot.taxonomy.terms():
        base = base_by_dimension[term.dimension]
        counts[term.id] = len(snapshot.facet_index[term.id] & base)
    return counts
