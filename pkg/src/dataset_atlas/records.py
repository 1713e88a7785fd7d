"""Catalog record types and their JSON (de)serialization.

Field names in the JSON files are the lower_snake_case attribute names
used here. ``from_dict`` is deliberately forgiving about optional fields
(missing means absent) but strict about shapes, so a malformed file fails
fast with a ParseError instead of producing a half-built record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import ParseError

PROVENANCE_KINDS = ("real", "synthetic")
VALIDATION_STATUSES = ("unvalidated", "partially-validated", "validated")

#: Version tag emitted next to quality scores so downstream consumers can
#: detect a change in the scoring rules.
SCORING_VERSION = 1


@dataclass(frozen=True)
class ProvenanceInfo:
    """Origin of the data; synthetic datasets must say how they were made."""

    kind: str
    generation_method: str | None = None
    simulation_tools: tuple[str, ...] | None = None
    validation_status: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.generation_method is not None:
            out["generation_method"] = self.generation_method
        if self.simulation_tools is not None:
            out["simulation_tools"] = list(self.simulation_tools)
        if self.validation_status is not None:
            out["validation_status"] = self.validation_status
        return out


@dataclass(frozen=True)
class QualityScores:
    """Documentation completeness plus the four FAIR component scores."""

    completeness: float
    fair_f: float
    fair_a: float
    fair_i: float
    fair_r: float
    scoring_version: int = SCORING_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "completeness": self.completeness,
            "fair_f": self.fair_f,
            "fair_a": self.fair_a,
            "fair_i": self.fair_i,
            "fair_r": self.fair_r,
            "scoring_version": self.scoring_version,
        }


@dataclass
class DatasetRecord:
    """Full dataset metadata as declared in one ``datasets/*.json`` file.

    Relationship fields (``used_in``, ``derived_from``, ``maintained_by``)
    are declared here, on the owning record; ``quality`` is computed at
    load time and never read from the file.
    """

    id: str
    title: str
    description: str = ""
    source_url: str = ""
    license: str = ""
    license_open: bool = False
    doi: str | None = None
    size_description: str = ""
    size_bytes: int | None = None
    temporal_coverage: tuple[int, int] | None = None
    classifications: list[str] = field(default_factory=list)
    used_in: list[str] = field(default_factory=list)
    derived_from: list[str] = field(default_factory=list)
    maintained_by: str | None = None
    provenance: ProvenanceInfo | None = None
    quality: QualityScores | None = None

    def to_dict(self) -> dict[str, Any]:
        """Source-field dict for export; computed quality is not included."""
        out: dict[str, Any] = {
            "id": self.id,
            "title": self.title,
            "description": self.description,
            "source_url": self.source_url,
            "license": self.license,
            "license_open": self.license_open,
            "size_description": self.size_description,
            "classifications": list(self.classifications),
            "used_in": list(self.used_in),
            "derived_from": list(self.derived_from),
        }
        if self.doi is not None:
            out["doi"] = self.doi
        if self.size_bytes is not None:
            out["size_bytes"] = self.size_bytes
        if self.temporal_coverage is not None:
            out["temporal_coverage"] = list(self.temporal_coverage)
        if self.maintained_by is not None:
            out["maintained_by"] = self.maintained_by
        if self.provenance is not None:
            out["provenance"] = self.provenance.to_dict()
        return out


@dataclass
class PublicationRecord:
    id: str
    title: str
    year: int
    venue: str | None = None
    doi: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "title": self.title, "year": self.year}
        if self.venue is not None:
            out["venue"] = self.venue
        if self.doi is not None:
            out["doi"] = self.doi
        return out


@dataclass
class ToolRecord:
    """A software package, with the relationships it owns."""

    id: str
    name: str
    url: str | None = None
    compatible_formats: list[str] = field(default_factory=list)
    processes: list[str] = field(default_factory=list)
    validated_on: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "name": self.name,
            "compatible_formats": list(self.compatible_formats),
            "processes": list(self.processes),
            "validated_on": list(self.validated_on),
        }
        if self.url is not None:
            out["url"] = self.url
        return out


@dataclass
class OrganizationRecord:
    id: str
    name: str
    url: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "name": self.name}
        if self.url is not None:
            out["url"] = self.url
        return out


# -- parsing helpers -------------------------------------------------------


def _require(raw: dict, key: str, where: str) -> Any:
    if key not in raw:
        raise ParseError(f"{where}: missing required field {key!r}")
    return raw[key]


def _opt_str(raw: dict, key: str, where: str) -> str | None:
    value = raw.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise ParseError(f"{where}: field {key!r} must be a string")
    return value


def _str_list(raw: dict, key: str, where: str) -> list[str]:
    value = raw.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{where}: field {key!r} must be a list of strings")
    return list(value)


def provenance_from_dict(raw: dict, where: str) -> ProvenanceInfo:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: provenance must be an object")
    kind = _require(raw, "kind", where)
    tools = raw.get("simulation_tools")
    if tools is not None and (
        not isinstance(tools, list) or not all(isinstance(t, str) for t in tools)
    ):
        raise ParseError(f"{where}: simulation_tools must be a list of strings")
    return ProvenanceInfo(
        kind=str(kind),
        generation_method=_opt_str(raw, "generation_method", where),
        simulation_tools=tuple(tools) if tools is not None else None,
        validation_status=_opt_str(raw, "validation_status", where),
    )


def dataset_from_dict(raw: dict, where: str) -> DatasetRecord:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: dataset record must be an object")
    record_id = str(_require(raw, "id", where))
    coverage = raw.get("temporal_coverage")
    if coverage is not None:
        if (
            not isinstance(coverage, (list, tuple))
            or len(coverage) != 2
            or not all(isinstance(y, int) for y in coverage)
        ):
            raise ParseError(
                f"{where}: temporal_coverage must be a [start_year, end_year] pair"
            )
        coverage = (coverage[0], coverage[1])
    size_bytes = raw.get("size_bytes")
    if size_bytes is not None and (not isinstance(size_bytes, int) or size_bytes < 0):
        raise ParseError(f"{where}: size_bytes must be a non-negative integer")
    provenance = raw.get("provenance")
    return DatasetRecord(
        id=record_id,
        title=str(_require(raw, "title", where)),
        description=str(raw.get("description", "")),
        source_url=str(raw.get("source_url", "")),
        license=str(raw.get("license", "")),
        license_open=bool(raw.get("license_open", False)),
        doi=_opt_str(raw, "doi", where),
        size_description=str(raw.get("size_description", "")),
        size_bytes=size_bytes,
        temporal_coverage=coverage,
        classifications=_str_list(raw, "classifications", where),
        used_in=_str_list(raw, "used_in", where),
        derived_from=_str_list(raw, "derived_from", where),
        maintained_by=_opt_str(raw, "maintained_by", where),
        provenance=provenance_from_dict(provenance, where) if provenance is not None else None,
    )


def publication_from_dict(raw: dict, where: str) -> PublicationRecord:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: publication record must be an object")
    year = _require(raw, "year", where)
    if not isinstance(year, int):
        raise ParseError(f"{where}: year must be an integer")
    return PublicationRecord(
        id=str(_require(raw, "id", where)),
        title=str(_require(raw, "title", where)),
        year=year,
        venue=_opt_str(raw, "venue", where),
        doi=_opt_str(raw, "doi", where),
    )


def tool_from_dict(raw: dict, where: str) -> ToolRecord:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: tool record must be an object")
    return ToolRecord(
        id=str(_require(raw, "id", where)),
        name=str(_require(raw, "name", where)),
        url=_opt_str(raw, "url", where),
        compatible_formats=_str_list(raw, "compatible_formats", where),
        processes=_str_list(raw, "processes", where),
        validated_on=_str_list(raw, "validated_on", where),
    )


def organization_from_dict(raw: dict, where: str) -> OrganizationRecord:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: organization record must be an object")
    return OrganizationRecord(
        id=str(_require(raw, "id", where)),
        name=str(_require(raw, "name", where)),
        url=_opt_str(raw, "url", where),
    )
