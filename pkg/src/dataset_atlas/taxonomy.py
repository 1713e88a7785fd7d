"""Four-dimension hierarchical classification scheme.

Datasets are classified along four independent dimensions (engineering
domain, lifecycle stage, data type, data format), each organized as a
forest of single-parent terms. Counting rolls classifications up parent
chains so a dataset labeled at a leaf is visible at every ancestor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import AbstractSet, Mapping, Sequence

from .errors import (
    AmbiguousLabelError,
    CrossDimensionParentError,
    CycleDetectedError,
    DuplicateTermIdError,
    ParseError,
    UnknownParentError,
    UnknownTermError,
)
from .graph import is_valid_slug


class Dimension(str, Enum):
    """The four classification dimensions."""

    DOMAIN = "domain"
    LIFECYCLE = "lifecycle"
    DATATYPE = "datatype"
    FORMAT = "format"


@dataclass(frozen=True)
class Term:
    """One taxonomy entry; ``parent`` is a term id in the same dimension."""

    id: str
    dimension: Dimension
    label: str
    parent: str | None = None


class Taxonomy:
    """An immutable, validated forest of terms across the four dimensions.

    Term order follows declaration order, which the shipped taxonomy files
    use to keep e.g. lifecycle stages in their natural sequence.
    """

    def __init__(self, terms: Sequence[Term]):
        self._terms: dict[str, Term] = {}
        self._children: dict[str, list[str]] = {}
        for term in terms:
            if not is_valid_slug(term.id):
                raise ParseError(f"term id {term.id!r} is not a valid slug")
            if not term.label:
                raise ParseError(f"term {term.id!r} has an empty label")
            if term.id in self._terms:
                raise DuplicateTermIdError(f"duplicate term id {term.id!r}")
            self._terms[term.id] = term
            self._children[term.id] = []
        for term in self._terms.values():
            if term.parent is None:
                continue
            parent = self._terms.get(term.parent)
            if parent is None:
                raise UnknownParentError(
                    f"term {term.id!r} names unknown parent {term.parent!r}"
                )
            if parent.dimension is not term.dimension:
                raise CrossDimensionParentError(
                    f"term {term.id!r} ({term.dimension.value}) has parent "
                    f"{parent.id!r} ({parent.dimension.value})"
                )
            self._children[term.parent].append(term.id)
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        cleared: set[str] = set()
        for start in self._terms:
            chain: list[str] = []
            seen: set[str] = set()
            cur: str | None = start
            while cur is not None and cur not in cleared:
                if cur in seen:
                    cycle = chain[chain.index(cur):] + [cur]
                    raise CycleDetectedError(cycle)
                seen.add(cur)
                chain.append(cur)
                cur = self._terms[cur].parent
            cleared.update(chain)

    # -- lookup -------------------------------------------------------

    def __contains__(self, term_id: str) -> bool:
        return term_id in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def term(self, term_id: str) -> Term:
        try:
            return self._terms[term_id]
        except KeyError:
            raise UnknownTermError(f"no taxonomy term {term_id!r}") from None

    def terms(self) -> list[Term]:
        """All terms in declaration order."""
        return list(self._terms.values())

    def terms_in(self, dimension: Dimension) -> list[Term]:
        return [t for t in self._terms.values() if t.dimension is dimension]

    def roots(self, dimension: Dimension) -> list[str]:
        return [
            t.id
            for t in self._terms.values()
            if t.dimension is dimension and t.parent is None
        ]

    def children(self, term_id: str) -> list[str]:
        self.term(term_id)
        return list(self._children[term_id])

    def resolve(self, dimension: Dimension, text: str) -> str:
        """Resolve ``text`` as a term id or (case-insensitive) exact label.

        Id matches win; label matching is restricted to the dimension and
        must be unique.
        """
        term = self._terms.get(text)
        if term is not None and term.dimension is dimension:
            return term.id
        wanted = text.casefold()
        hits = [
            t.id
            for t in self._terms.values()
            if t.dimension is dimension and t.label.casefold() == wanted
        ]
        if len(hits) > 1:
            raise AmbiguousLabelError(
                f"label {text!r} matches several {dimension.value} terms: {hits}"
            )
        if not hits:
            raise UnknownTermError(
                f"no {dimension.value} term with id or label {text!r}"
            )
        return hits[0]

    # -- hierarchy ----------------------------------------------------

    def ancestors(self, term_id: str) -> list[str]:
        """Ancestor ids, nearest first, root last; empty for roots."""
        term = self.term(term_id)
        chain: list[str] = []
        cur = term.parent
        while cur is not None:
            chain.append(cur)
            cur = self._terms[cur].parent
        return chain

    def depth(self, term_id: str) -> int:
        return len(self.ancestors(term_id))

    def is_at_or_below(self, term_id: str, ancestor: str) -> bool:
        """True iff ``ancestor`` is ``term_id`` itself or one of its ancestors."""
        self.term(ancestor)
        if term_id == ancestor:
            self.term(term_id)
            return True
        return ancestor in self.ancestors(term_id)

    def terms_at_depth(self, dimension: Dimension, depth: int) -> list[str]:
        """Term ids of a dimension sitting exactly ``depth - 1`` levels below a root."""
        return [
            t.id
            for t in self._terms.values()
            if t.dimension is dimension and self.depth(t.id) == depth - 1
        ]

    # -- roll-up ------------------------------------------------------

    def dataset_sets(
        self, classifications: Mapping[str, AbstractSet[str]]
    ) -> dict[str, set[str]]:
        """For every term, the set of datasets classified at or below it.

        ``classifications`` maps dataset id to its set of term ids. A
        dataset reaches a term through any of its labels, but lands in
        each term's set at most once.
        """
        sets: dict[str, set[str]] = {tid: set() for tid in self._terms}
        for dataset_id, term_ids in classifications.items():
            for term_id in term_ids:
                if term_id not in self._terms:
                    raise UnknownTermError(f"no taxonomy term {term_id!r}")
                cur: str | None = term_id
                while cur is not None:
                    sets[cur].add(dataset_id)
                    cur = self._terms[cur].parent
        return sets

    def rollup_counts(
        self, classifications: Mapping[str, AbstractSet[str]]
    ) -> dict[str, int]:
        """Distinct-dataset count at or below every term."""
        return {tid: len(s) for tid, s in self.dataset_sets(classifications).items()}

    # -- serialization ------------------------------------------------

    def to_doc(self) -> dict:
        """The JSON document shape the loader accepts."""
        dims: dict[str, list[dict]] = {d.value: [] for d in Dimension}
        for term in self._terms.values():
            entry: dict = {"id": term.id, "label": term.label}
            if term.parent is not None:
                entry["parent"] = term.parent
            dims[term.dimension.value].append(entry)
        return {"dimensions": dims}


def load_taxonomy(source: dict | str | Path) -> Taxonomy:
    """Load and validate a taxonomy from a dict or a JSON file path.

    The document must look like ``{"dimensions": {"domain": [...], ...}}``
    with exactly the four dimension keys, each listing ``{"id", "label",
    "parent"?}`` entries.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ParseError(f"taxonomy file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from None
    else:
        doc = source

    if not isinstance(doc, dict) or not isinstance(doc.get("dimensions"), dict):
        raise ParseError("taxonomy document must have a 'dimensions' mapping")
    dims = doc["dimensions"]
    expected = {d.value for d in Dimension}
    if set(dims) != expected:
        raise ParseError(
            f"dimension keys must be exactly {sorted(expected)}, got {sorted(dims)}"
        )

    terms: list[Term] = []
    for dim in Dimension:
        entries = dims[dim.value]
        if not isinstance(entries, list):
            raise ParseError(f"dimension {dim.value!r} must hold a list of terms")
        for entry in entries:
            if not isinstance(entry, dict) or "id" not in entry or "label" not in entry:
                raise ParseError(
                    f"every {dim.value} term needs at least 'id' and 'label'"
                )
            parent = entry.get("parent")
            if parent is not None and not isinstance(parent, str):
                raise ParseError(f"term {entry['id']!r}: parent must be a string")
            terms.append(
                Term(
                    id=str(entry["id"]),
                    dimension=dim,
                    label=str(entry["label"]),
                    parent=parent,
                )
            )
    return Taxonomy(terms)
