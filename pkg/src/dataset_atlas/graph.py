"""Typed in-memory property graph with kind-constrained edges.

Nodes are one of five kinds (datasets, taxonomy terms, publications,
tools, organizations) and every edge kind pins down which node kinds may
appear at each endpoint. Construction is single-writer; once a graph is
published as part of a catalog snapshot it must be treated as immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Literal

from .errors import (
    CrossDimensionParentError,
    DuplicateEdgeError,
    DuplicateIdError,
    InvalidSlugError,
    KindMismatchError,
    MissingEndpointError,
    NonFormatCompatibilityError,
    SelfLoopError,
    UnknownNodeError,
)

SLUG_PATTERN = re.compile(r"^[a-z0-9][a-z0-9-]*$")

Direction = Literal["outgoing", "incoming", "both"]


class NodeKind(str, Enum):
    """The five entity kinds a catalog graph may contain."""

    DATASET = "dataset"
    TAXONOMY_TERM = "taxonomy_term"
    PUBLICATION = "publication"
    TOOL = "tool"
    ORGANIZATION = "organization"


class EdgeKind(str, Enum):
    """The eight relationship kinds between catalog entities."""

    CLASSIFIED_AS = "classified_as"
    PARENT_OF = "parent_of"
    USED_IN = "used_in"
    COMPATIBLE_WITH = "compatible_with"
    DERIVED_FROM = "derived_from"
    VALIDATED_ON = "validated_on"
    PROCESSES = "processes"
    MAINTAINED_BY = "maintained_by"


#: Allowed (source kinds, destination kinds) per edge kind. CompatibleWith
#: additionally requires the destination term to sit in the format
#: dimension, and ParentOf requires both terms to share a dimension.
EDGE_ENDPOINTS: dict[EdgeKind, tuple[frozenset[NodeKind], frozenset[NodeKind]]] = {
    EdgeKind.CLASSIFIED_AS: (
        frozenset({NodeKind.DATASET}),
        frozenset({NodeKind.TAXONOMY_TERM}),
    ),
    EdgeKind.PARENT_OF: (
        frozenset({NodeKind.TAXONOMY_TERM}),
        frozenset({NodeKind.TAXONOMY_TERM}),
    ),
    EdgeKind.USED_IN: (
        frozenset({NodeKind.DATASET}),
        frozenset({NodeKind.PUBLICATION}),
    ),
    EdgeKind.COMPATIBLE_WITH: (
        frozenset({NodeKind.TOOL}),
        frozenset({NodeKind.TAXONOMY_TERM}),
    ),
    EdgeKind.DERIVED_FROM: (
        frozenset({NodeKind.DATASET}),
        frozenset({NodeKind.DATASET}),
    ),
    EdgeKind.VALIDATED_ON: (
        frozenset({NodeKind.PUBLICATION, NodeKind.TOOL}),
        frozenset({NodeKind.DATASET}),
    ),
    EdgeKind.PROCESSES: (
        frozenset({NodeKind.TOOL}),
        frozenset({NodeKind.DATASET}),
    ),
    EdgeKind.MAINTAINED_BY: (
        frozenset({NodeKind.DATASET}),
        frozenset({NodeKind.ORGANIZATION}),
    ),
}


def is_valid_slug(value: str) -> bool:
    """True if ``value`` is a lowercase alphanumeric-plus-hyphen slug."""
    return bool(SLUG_PATTERN.match(value))


@dataclass(frozen=True)
class Node:
    """A graph node: slug id, kind, display label, and an attribute bag.

    Taxonomy term nodes carry their dimension under ``attributes["dimension"]``;
    the graph relies on it for the parent and compatibility checks.
    """

    id: str
    kind: NodeKind
    label: str
    attributes: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Edge:
    """A directed typed edge; at most one per (src, kind, dst) triple."""

    src: str
    kind: EdgeKind
    dst: str


class Graph:
    """Mutable builder for (and read interface to) the catalog graph."""

    def __init__(self) -> None:
        self._nodes: dict[str, Node] = {}
        self._edges: set[Edge] = set()
        self._out: dict[str, set[Edge]] = {}
        self._in: dict[str, set[Edge]] = {}

    # -- nodes --------------------------------------------------------

    def add_node(self, node: Node) -> None:
        """Insert a node; rejects malformed slugs, duplicates, empty labels."""
        if not is_valid_slug(node.id):
            raise InvalidSlugError(f"node id {node.id!r} is not a valid slug")
        if node.id in self._nodes:
            raise DuplicateIdError(f"node {node.id!r} already exists")
        if not node.label:
            raise ValueError(f"node {node.id!r} has an empty label")
        self._nodes[node.id] = node
        self._out[node.id] = set()
        self._in[node.id] = set()

    def remove_node(self, node_id: str) -> None:
        """Remove a node and cascade all of its incident edges."""
        node = self.node(node_id)
        for edge in list(self._out[node.id]) + list(self._in[node.id]):
            self.remove_edge(edge)
        del self._nodes[node.id]
        del self._out[node.id]
        del self._in[node.id]

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNodeError(f"no node {node_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._nodes

    def nodes(self) -> Iterable[Node]:
        """All nodes in insertion order."""
        return self._nodes.values()

    def nodes_of_kind(self, kind: NodeKind) -> list[str]:
        """Sorted ids of all nodes of the given kind."""
        return sorted(n.id for n in self._nodes.values() if n.kind is kind)

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    # -- edges --------------------------------------------------------

    def add_edge(self, edge: Edge) -> None:
        """Insert an edge after checking every schema constraint.

        Check order: endpoints exist, no self-loop, kind table, dimension
        rules for ParentOf / CompatibleWith, then duplicate detection.
        """
        if edge.src not in self._nodes:
            raise MissingEndpointError(f"edge source {edge.src!r} not in graph")
        if edge.dst not in self._nodes:
            raise MissingEndpointError(f"edge destination {edge.dst!r} not in graph")
        if edge.src == edge.dst:
            raise SelfLoopError(f"self-loop on {edge.src!r} ({edge.kind.value})")

        src, dst = self._nodes[edge.src], self._nodes[edge.dst]
        allowed_src, allowed_dst = EDGE_ENDPOINTS[edge.kind]
        if src.kind not in allowed_src or dst.kind not in allowed_dst:
            raise KindMismatchError(
                f"{edge.kind.value} cannot connect {src.kind.value} -> {dst.kind.value}"
            )

        if edge.kind is EdgeKind.PARENT_OF:
            src_dim = src.attributes.get("dimension")
            dst_dim = dst.attributes.get("dimension")
            if src_dim is None or src_dim != dst_dim:
                raise CrossDimensionParentError(
                    f"parent_of between dimensions {src_dim!r} and {dst_dim!r}"
                )
        if edge.kind is EdgeKind.COMPATIBLE_WITH:
            if dst.attributes.get("dimension") != "format":
                raise NonFormatCompatibilityError(
                    f"compatible_with target {dst.id!r} is not a format term"
                )

        if edge in self._edges:
            raise DuplicateEdgeError(
                f"duplicate edge ({edge.src}, {edge.kind.value}, {edge.dst})"
            )
        self._edges.add(edge)
        self._out[edge.src].add(edge)
        self._in[edge.dst].add(edge)

    def remove_edge(self, edge: Edge) -> None:
        if edge not in self._edges:
            raise UnknownNodeError(
                f"no edge ({edge.src}, {edge.kind.value}, {edge.dst})"
            )
        self._edges.discard(edge)
        self._out[edge.src].discard(edge)
        self._in[edge.dst].discard(edge)

    def has_edge(self, edge: Edge) -> bool:
        return edge in self._edges

    def edges(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    # -- traversal ----------------------------------------------------

    def neighbors(
        self,
        node_id: str,
        kind: EdgeKind | None = None,
        direction: Direction = "both",
    ) -> list[str]:
        """Neighbor ids along (optionally kind-filtered) edges, sorted, unique."""
        self.node(node_id)
        found: set[str] = set()
        if direction in ("outgoing", "both"):
            for edge in self._out[node_id]:
                if kind is None or edge.kind is kind:
                    found.add(edge.dst)
        if direction in ("incoming", "both"):
            for edge in self._in[node_id]:
                if kind is None or edge.kind is kind:
                    found.add(edge.src)
        return sorted(found)

    def out_edges(self, node_id: str, kind: EdgeKind | None = None) -> list[Edge]:
        self.node(node_id)
        edges = (e for e in self._out[node_id] if kind is None or e.kind is kind)
        return sorted(edges, key=lambda e: (e.kind.value, e.dst))

    def in_edges(self, node_id: str, kind: EdgeKind | None = None) -> list[Edge]:
        self.node(node_id)
        edges = (e for e in self._in[node_id] if kind is None or e.kind is kind)
        return sorted(edges, key=lambda e: (e.kind.value, e.src))

    def degree(self, node_id: str) -> int:
        """Count of incident edges, incoming plus outgoing."""
        self.node(node_id)
        return len(self._out[node_id]) + len(self._in[node_id])
