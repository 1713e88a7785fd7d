"""The structured graph-query language: parser, printer, evaluator.

Queries select one node kind and filter it with a boolean predicate tree::

    FIND dataset WHERE domain <= "Aerospace" AND license_open = "true"

Predicates come in three shapes: taxonomy containment (``dim <= "term"``,
matching at or below the term), relationship tests (``used_in ANY`` or
``used_in "some-id"`` on outgoing edges), and field comparisons
(``=``, ``!=``, case-insensitive substring ``~``). NOT binds tighter than
AND, which binds tighter than OR; keywords are case-insensitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    QuerySyntaxError,
    UnknownEdgeKindError,
    UnknownFieldError,
    UnknownNodeError,
)
from .graph import Edge, EdgeKind, NodeKind
from .records import (
    DatasetRecord,
    OrganizationRecord,
    PublicationRecord,
    ToolRecord,
)
from .search import ResultSet
from .snapshot import CatalogSnapshot
from .taxonomy import Dimension

KEYWORDS = {"FIND", "WHERE", "AND", "OR", "NOT", "ANY"}
TARGET_KINDS = {
    "dataset": NodeKind.DATASET,
    "publication": NodeKind.PUBLICATION,
    "tool": NodeKind.TOOL,
    "organization": NodeKind.ORGANIZATION,
}
DIMENSION_NAMES = {d.value: d for d in Dimension}
EDGE_KIND_NAMES = {k.value: k for k in EdgeKind}
FIELD_OPS = ("=", "!=", "~")

#: Queryable fields per target kind. ``provenance`` exposes the
#: real/synthetic kind flag of a dataset's provenance record.
QUERYABLE_FIELDS: dict[NodeKind, tuple[str, ...]] = {
    NodeKind.DATASET: (
        "id",
        "title",
        "description",
        "source_url",
        "license",
        "license_open",
        "doi",
        "size_description",
        "size_bytes",
        "provenance",
    ),
    NodeKind.PUBLICATION: ("id", "title", "year", "venue", "doi"),
    NodeKind.TOOL: ("id", "name", "url"),
    NodeKind.ORGANIZATION: ("id", "name", "url"),
}


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class FieldPred:
    field: str
    op: str
    value: str


@dataclass(frozen=True)
class FacetPred:
    """Containment test; ``term`` is the raw string (id or label) as typed."""

    dimension: Dimension
    term: str


@dataclass(frozen=True)
class EdgePred:
    """Outgoing-edge test; ``target`` is None for the ANY form."""

    kind: EdgeKind
    target: str | None


@dataclass(frozen=True)
class Not:
    item: "Pred"


@dataclass(frozen=True)
class And:
    items: tuple["Pred", ...]


@dataclass(frozen=True)
class Or:
    items: tuple["Pred", ...]


Pred = Union[FieldPred, FacetPred, EdgePred, Not, And, Or]


@dataclass(frozen=True)
class Query:
    kind: NodeKind
    where: Pred | None


def make_and(items: list[Pred]) -> Pred:
    """Conjunction in canonical form: flattened, singletons unwrapped."""
    flat: list[Pred] = []
    for item in items:
        flat.extend(item.items) if isinstance(item, And) else flat.append(item)
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def make_or(items: list[Pred]) -> Pred:
    flat: list[Pred] = []
    for item in items:
        flat.extend(item.items) if isinstance(item, Or) else flat.append(item)
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


# -- lexer -------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    type: str  # KEYWORD | IDENT | STRING | OP | LPAREN | RPAREN | EOF
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        start_col = col
        if ch == "(":
            tokens.append(Token("LPAREN", "(", line, start_col))
            i, col = i + 1, col + 1
        elif ch == ")":
            tokens.append(Token("RPAREN", ")", line, start_col))
            i, col = i + 1, col + 1
        elif ch == '"':
            value = []
            i, col = i + 1, col + 1
            while True:
                if i >= n or text[i] == "\n":
                    raise QuerySyntaxError("unterminated string", line, start_col, ('"',))
                if text[i] == "\\":
                    if i + 1 >= n:
                        raise QuerySyntaxError(
                            "dangling backslash in string", line, col, ()
                        )
                    value.append(text[i + 1])
                    i, col = i + 2, col + 2
                elif text[i] == '"':
                    i, col = i + 1, col + 1
                    break
                else:
                    value.append(text[i])
                    i, col = i + 1, col + 1
            tokens.append(Token("STRING", "".join(value), line, start_col))
        elif ch == "<" and i + 1 < n and text[i + 1] == "=":
            tokens.append(Token("OP", "<=", line, start_col))
            i, col = i + 2, col + 2
        elif ch == "!" and i + 1 < n and text[i + 1] == "=":
            tokens.append(Token("OP", "!=", line, start_col))
            i, col = i + 2, col + 2
        elif ch == "=":
            tokens.append(Token("OP", "=", line, start_col))
            i, col = i + 1, col + 1
        elif ch == "~":
            tokens.append(Token("OP", "~", line, start_col))
            i, col = i + 1, col + 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word.upper() in KEYWORDS:
                tokens.append(Token("KEYWORD", word.upper(), line, start_col))
            else:
                tokens.append(Token("IDENT", word, line, start_col))
            col += j - i
            i = j
        else:
            raise QuerySyntaxError(f"unexpected character {ch!r}", line, start_col, ())
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.kind: NodeKind | None = None

    @property
    def cur(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.cur
        self.pos += 1
        return token

    def fail(self, message: str, expected: tuple[str, ...]) -> None:
        token = self.cur
        raise QuerySyntaxError(message, token.line, token.column, expected)

    def expect_keyword(self, word: str) -> None:
        if self.cur.type != "KEYWORD" or self.cur.value != word:
            self.fail(f"expected {word}", (word,))
        self.advance()

    def parse(self) -> Query:
        self.expect_keyword("FIND")
        if self.cur.type != "IDENT" or self.cur.value.lower() not in TARGET_KINDS:
            self.fail("expected a target kind", tuple(sorted(TARGET_KINDS)))
        self.kind = TARGET_KINDS[self.advance().value.lower()]
        where: Pred | None = None
        if self.cur.type == "KEYWORD" and self.cur.value == "WHERE":
            self.advance()
            where = self.expr()
        if self.cur.type != "EOF":
            self.fail(f"unexpected {self.cur.value!r} after query", ("end of query",))
        return Query(kind=self.kind, where=where)

    def expr(self) -> Pred:
        items = [self.and_expr()]
        while self.cur.type == "KEYWORD" and self.cur.value == "OR":
            self.advance()
            items.append(self.and_expr())
        return make_or(items)

    def and_expr(self) -> Pred:
        items = [self.unary()]
        while self.cur.type == "KEYWORD" and self.cur.value == "AND":
            self.advance()
            items.append(self.unary())
        return make_and(items)

    def unary(self) -> Pred:
        if self.cur.type == "KEYWORD" and self.cur.value == "NOT":
            self.advance()
            return Not(self.unary())
        if self.cur.type == "LPAREN":
            self.advance()
            inner = self.expr()
            if self.cur.type != "RPAREN":
                self.fail("unbalanced parenthesis", (")",))
            self.advance()
            return inner
        if self.cur.type == "IDENT":
            return self.pred(self.advance())
        self.fail(f"expected a predicate, got {self.cur.value or self.cur.type!r}",
                  ("NOT", "(", "a predicate"))
        raise AssertionError("unreachable")

    def expect_string(self) -> str:
        if self.cur.type != "STRING":
            self.fail("expected a quoted string", ("a string",))
        return self.advance().value

    def pred(self, ident: Token) -> Pred:
        name = ident.value.lower()
        nxt = self.cur
        if nxt.type == "OP" and nxt.value == "<=":
            if name not in DIMENSION_NAMES:
                self.fail(
                    f"operator <= applies to taxonomy dimensions, not {ident.value!r}",
                    tuple(sorted(DIMENSION_NAMES)),
                )
            self.advance()
            return FacetPred(DIMENSION_NAMES[name], self.expect_string())
        if nxt.type == "STRING" or (nxt.type == "KEYWORD" and nxt.value == "ANY"):
            if name not in EDGE_KIND_NAMES:
                raise UnknownEdgeKindError(
                    f"{ident.value!r} is not a relationship kind "
                    f"(line {ident.line}, column {ident.column})"
                )
            if nxt.type == "KEYWORD":
                self.advance()
                return EdgePred(EDGE_KIND_NAMES[name], None)
            return EdgePred(EDGE_KIND_NAMES[name], self.expect_string())
        if nxt.type == "OP" and nxt.value in FIELD_OPS:
            assert self.kind is not None
            if name not in QUERYABLE_FIELDS[self.kind]:
                raise UnknownFieldError(
                    f"{self.kind.value} records have no field {ident.value!r} "
                    f"(line {ident.line}, column {ident.column})"
                )
            op = self.advance().value
            return FieldPred(name, op, self.expect_string())
        self.fail(
            f"incomplete predicate after {ident.value!r}",
            ("<=", "=", "!=", "~", "ANY", "a string"),
        )
        raise AssertionError("unreachable")


def parse_query(text: str) -> Query:
    """Parse query text; syntax errors carry line, column, and expectations."""
    return _Parser(_tokenize(text)).parse()


# -- printer -----------------------------------------------------------------

_PREC = {Or: 1, And: 2, Not: 3}


def _quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _pp(pred: Pred, min_prec: int) -> str:
    if isinstance(pred, Or):
        text = " OR ".join(_pp(p, 2) for p in pred.items)
    elif isinstance(pred, And):
        text = " AND ".join(_pp(p, 3) for p in pred.items)
    elif isinstance(pred, Not):
        return _wrap(f"NOT {_pp(pred.item, 3)}", 3, min_prec)
    elif isinstance(pred, FacetPred):
        return f"{pred.dimension.value} <= {_quote(pred.term)}"
    elif isinstance(pred, EdgePred):
        target = "ANY" if pred.target is None else _quote(pred.target)
        return f"{pred.kind.value} {target}"
    else:
        return f"{pred.field} {pred.op} {_quote(pred.value)}"
    return _wrap(text, _PREC[type(pred)], min_prec)


def _wrap(text: str, prec: int, min_prec: int) -> str:
    return f"({text})" if prec < min_prec else text


def pretty(query: Query) -> str:
    """Canonical text form; reparsing it yields an identical AST."""
    head = f"FIND {query.kind.value}"
    if query.where is None:
        return head
    return f"{head} WHERE {_pp(query.where, 1)}"


# -- evaluator ---------------------------------------------------------------


def _dataset_field(record: DatasetRecord, name: str) -> str | None:
    if name == "license_open":
        return "true" if record.license_open else "false"
    if name == "size_bytes":
        return None if record.size_bytes is None else str(record.size_bytes)
    if name == "provenance":
        return None if record.provenance is None else record.provenance.kind
    return getattr(record, name)


def _plain_field(record, name: str) -> str | None:
    value = getattr(record, name)
    if value is None:
        return None
    return str(value)


def _field_value(snapshot: CatalogSnapshot, kind: NodeKind, node_id: str, name: str) -> str | None:
    if kind is NodeKind.DATASET:
        return _dataset_field(snapshot.store.datasets[node_id], name)
    if kind is NodeKind.PUBLICATION:
        return _plain_field(snapshot.store.publications[node_id], name)
    if kind is NodeKind.TOOL:
        return _plain_field(snapshot.store.tools[node_id], name)
    return _plain_field(snapshot.store.organizations[node_id], name)


def _universe(snapshot: CatalogSnapshot, kind: NodeKind) -> set[str]:
    stores = {
        NodeKind.DATASET: snapshot.store.datasets,
        NodeKind.PUBLICATION: snapshot.store.publications,
        NodeKind.TOOL: snapshot.store.tools,
        NodeKind.ORGANIZATION: snapshot.store.organizations,
    }
    return set(stores[kind])


def _eval(snapshot: CatalogSnapshot, kind: NodeKind, universe: set[str], pred: Pred) -> set[str]:
    if isinstance(pred, And):
        result = universe
        for item in pred.items:
            result = result & _eval(snapshot, kind, universe, item)
        return result
    if isinstance(pred, Or):
        result: set[str] = set()
        for item in pred.items:
            result |= _eval(snapshot, kind, universe, item)
        return result
    if isinstance(pred, Not):
        return universe - _eval(snapshot, kind, universe, pred.item)
    if isinstance(pred, FacetPred):
        term_id = snapshot.taxonomy.resolve(pred.dimension, pred.term)
        return snapshot.facet_index[term_id] & universe
    if isinstance(pred, EdgePred):
        if pred.target is None:
            return {
                node_id
                for node_id in universe
                if snapshot.graph.out_edges(node_id, pred.kind)
            }
        if not snapshot.graph.has_node(pred.target):
            raise UnknownNodeError(f"no node {pred.target!r}")
        return {
            node_id
            for node_id in universe
            if snapshot.graph.has_edge(Edge(node_id, pred.kind, pred.target))
        }
    # field predicate
    if pred.op == "=":
        return {
            n for n in universe
            if _field_value(snapshot, kind, n, pred.field) == pred.value
        }
    if pred.op == "!=":
        return universe - {
            n for n in universe
            if _field_value(snapshot, kind, n, pred.field) == pred.value
        }
    needle = pred.value.casefold()
    out: set[str] = set()
    for n in universe:
        value = _field_value(snapshot, kind, n, pred.field)
        if value is not None and needle in value.casefold():
            out.add(n)
    return out


def evaluate_query(snapshot: CatalogSnapshot, query: Query) -> ResultSet:
    """Evaluate a parsed query against a snapshot; ids come back sorted."""
    universe = _universe(snapshot, query.kind)
    if query.where is None:
        return ResultSet.from_ids(universe)
    return ResultSet.from_ids(_eval(snapshot, query.kind, universe, query.where))


def run_query(snapshot: CatalogSnapshot, text: str) -> ResultSet:
    """Parse and evaluate in one step."""
    return evaluate_query(snapshot, parse_query(text))
