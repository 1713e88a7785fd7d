"""Exception hierarchy shared across the package."""

from __future__ import annotations


class AtlasError(Exception):
    """Base class for all catalog engine errors."""


# --- graph ----------------------------------------------------------------


class GraphError(AtlasError):
    """Base class for graph construction and lookup errors."""


class InvalidSlugError(GraphError):
    """Node id does not match the slug pattern."""


class DuplicateIdError(GraphError):
    """A node with this id already exists."""


class UnknownNodeError(GraphError):
    """Referenced node id is not in the graph."""


class MissingEndpointError(GraphError):
    """Edge endpoint does not exist in the graph."""


class SelfLoopError(GraphError):
    """Edge source and destination are the same node."""


class KindMismatchError(GraphError):
    """Edge endpoints violate the kind constraint table."""


class CrossDimensionParentError(GraphError):
    """Parent link between taxonomy terms of different dimensions."""


class NonFormatCompatibilityError(GraphError):
    """Compatibility edge targets a term outside the format dimension."""


class DuplicateEdgeError(GraphError):
    """An identical (src, kind, dst) edge already exists."""


# --- taxonomy -------------------------------------------------------------


class TaxonomyError(AtlasError):
    """Base class for taxonomy loading and lookup errors."""


class DuplicateTermIdError(TaxonomyError):
    """Two terms share the same id."""


class UnknownParentError(TaxonomyError):
    """A term names a parent that is not defined anywhere."""


class UnknownTermError(TaxonomyError):
    """Referenced term id is not in the taxonomy."""


class CycleDetectedError(TaxonomyError):
    """Parent chain loops back on itself."""

    def __init__(self, cycle: list[str]):
        super().__init__(f"parent cycle: {' -> '.join(cycle)}")
        self.cycle = cycle


class WrongDimensionError(TaxonomyError):
    """Term belongs to a different dimension than required."""


class AmbiguousLabelError(TaxonomyError):
    """A label lookup matched more than one term."""


# --- catalog --------------------------------------------------------------


class ParseError(AtlasError):
    """Input document is not syntactically or structurally valid."""


class CatalogValidationError(AtlasError):
    """Catalog loading found error-level problems.

    Carries the complete findings list (errors and warnings) so callers
    can report everything at once rather than the first failure.
    """

    def __init__(self, findings):
        self.findings = list(findings)
        errors = [f for f in self.findings if f.level == "error"]
        super().__init__(
            f"catalog has {len(errors)} error-level finding(s); "
            f"{len(self.findings)} total"
        )


# --- query DSL ------------------------------------------------------------


class QueryError(AtlasError):
    """Base class for query parsing and evaluation errors."""


class QuerySyntaxError(QueryError):
    """Malformed query text, with position and expected-token hints."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        hint = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at line {line}, column {column}{hint}")


class UnknownFieldError(QueryError):
    """Field predicate names a field the target record kind lacks."""


class UnknownEdgeKindError(QueryError):
    """Edge predicate names a relationship that does not exist."""


# --- analytics ------------------------------------------------------------


class SameDimensionError(AtlasError):
    """Heatmap rows and columns must use different dimensions."""


class BadDepthError(AtlasError):
    """Heatmap depth must be a positive integer."""


class BadThresholdsError(AtlasError):
    """Desert threshold must stay below the oasis threshold."""


# --- service --------------------------------------------------------------


class EmptyTitleError(AtlasError):
    """Scholar links need a non-empty title."""
