"""Text formats: ``.lpg`` graph files and element expressions.

Graph files are line oriented::

    # Toeplitz graph
    vertex v w
    edge c : v -> v
    edge e : v -> w
    bundle b : v -> w

Expressions are sums of terms, each an optional rational followed by
juxtaposed factors; ``*`` is postfix involution and binds tightest::

    3/2 e1 e2* + v1 - (c c)*
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .algebra import Element
from .graph import EdgeRef, Graph, GraphError

IDENT = r"[A-Za-z_][A-Za-z0-9_.]*"
_IDENT_RE = re.compile(IDENT + r"\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownIdentifier(ParseError):
    pass


# -- graph files ------------------------------------------------------------

_LINE_TOKEN = re.compile(rf"\s*(?:(?P<arrow>->)|(?P<colon>:)|(?P<ident>{IDENT})|(?P<bad>\S))")


def _line_tokens(text: str, lineno: int) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _LINE_TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastgroup
        col = m.start(kind) + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", lineno, col)
        out.append((kind, m.group(kind), col))
        pos = m.end()
    return out


def parse_graph(text: str) -> Graph:
    vertices, edges, bundles = [], [], []
    declared = set()
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _line_tokens(raw, lineno)
        kind, word, col = toks[0]
        if kind != "ident" or word not in ("vertex", "edge", "bundle"):
            raise ParseError(f"expected 'vertex', 'edge' or 'bundle', got {word!r}", lineno, col)
        if word == "vertex":
            if len(toks) < 2:
                raise ParseError("vertex declaration needs at least one name", lineno, len(raw) + 1)
            for k, val, c in toks[1:]:
                if k != "ident":
                    raise ParseError(f"expected vertex name, got {val!r}", lineno, c)
                if val in declared or val in names:
                    raise ParseError(f"vertex {val!r} declared twice", lineno, c)
                declared.add(val)
                vertices.append(val)
            continue
        shape = ["ident", "colon", "ident", "arrow", "ident"]
        body = toks[1:]
        for i, want in enumerate(shape):
            if i >= len(body):
                raise ParseError(f"incomplete {word} declaration", lineno, len(raw) + 1)
            if body[i][0] != want:
                raise ParseError(f"unexpected {body[i][1]!r}", lineno, body[i][2])
        if len(body) > len(shape):
            raise ParseError(f"unexpected {body[len(shape)][1]!r}", lineno, body[len(shape)][2])
        name, src, dst = body[0], body[2], body[4]
        if name[1] in names or name[1] in declared:
            raise ParseError(f"id {name[1]!r} declared twice", lineno, name[2])
        for _, v, c in (src, dst):
            if v not in declared:
                raise ParseError(f"undeclared vertex {v!r}", lineno, c)
        names.add(name[1])
        (edges if word == "edge" else bundles).append((name[1], src[1], dst[1]))
    return Graph(vertices, edges, bundles)


def format_graph(g: Graph, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" if h else "#" for h in header.splitlines())
    if g.vertices:
        lines.append("vertex " + " ".join(g.vertices))
    lines.extend(f"edge {e.name} : {e.source} -> {e.target}" for e in g.edges)
    lines.extend(f"bundle {b.name} : {b.source} -> {b.target}" for b in g.bundles)
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    import sys
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- expressions -------------------------------------------------------------

_EXPR_TOKEN = re.compile(rf"\s*(?:(?P<int>\d+)|(?P<ident>{IDENT})|(?P<op>[-+*/()\[\]])|(?P<bad>\S))")


class _ExprParser:
    def __init__(self, g: Graph, text: str):
        self.g = g
        self.text = text
        self.toks = []
        pos = 0
        while True:
            m = _EXPR_TOKEN.match(text, pos)
            if m is None:
                break
            kind = m.lastgroup
            if kind == "bad":
                raise ParseError(f"unexpected character {m.group(kind)!r}", 1, m.start(kind) + 1)
            self.toks.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()
        self.toks.append(("end", "", len(text) + 1))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            shown = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise ParseError(f"expected {value!r}, got {shown}", 1, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Element:
        x = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", 1, col)
        return x

    def expr(self) -> Element:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def _starts_factor(self, tok) -> bool:
        return tok[0] == "ident" or tok[1] == "("

    def term(self) -> Element:
        coeff = None
        if self.peek()[0] == "int":
            num = int(self.take()[1])
            den = 1
            if self.peek()[1] == "/":
                self.take()
                kind, val, col = self.take()
                if kind != "int":
                    raise ParseError("expected denominator", 1, col)
                den = int(val)
                if den == 0:
                    raise ParseError("zero denominator", 1, col)
            coeff = Fraction(num, den)
        if not self._starts_factor(self.peek()):
            if coeff is None:
                kind, val, col = self.peek()
                shown = repr(val) if kind != "end" else "end of input"
                raise ParseError(f"expected a term, got {shown}", 1, col)
            return Element.unit(self.g).scale(coeff)
        x = self.factor()
        while self._starts_factor(self.peek()):
            x = x * self.factor()
        return x.scale(coeff) if coeff is not None else x

    def factor(self) -> Element:
        if self.peek()[1] == "(":
            self.take()
            x = self.expr()
            self.take(")")
        else:
            x = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            x = x.star()
        return x

    def atom(self) -> Element:
        kind, name, col = self.take()
        g = self.g
        if self.peek()[1] == "[":
            self.take()
            k, val, c = self.take()
            if k != "int":
                raise ParseError("expected bundle index", 1, c)
            self.take("]")
            if not g.has_bundle(name):
                raise UnknownIdentifier(f"unknown bundle {name!r}", 1, col)
            if int(val) < 1:
                raise ParseError("bundle indices start at 1", 1, c)
            return Element.edge(g, EdgeRef(name, int(val)))
        if g.has_vertex(name):
            return Element.vertex(g, name)
        if g.has_edge(name):
            return Element.edge(g, EdgeRef(name))
        if g.has_bundle(name):
            raise ParseError(f"bundle {name!r} needs an index, e.g. {name}[1]", 1, col)
        raise UnknownIdentifier(f"unknown identifier {name!r}", 1, col)


def parse_element(g: Graph, text: str) -> Element:
    """Parse an expression over ``g`` into a normalized element.

    >>> from leavitt.corpus import TOEPLITZ
    >>> str(parse_element(TOEPLITZ, "c c*"))
    'v - e e*'
    """
    return _ExprParser(g, text).parse()


def is_identifier(s: str) -> bool:
    return bool(_IDENT_RE.match(s))


__all__ = ["ParseError", "UnknownIdentifier", "parse_graph", "format_graph", "load_graph",
           "parse_element", "GraphError", "is_identifier"]
