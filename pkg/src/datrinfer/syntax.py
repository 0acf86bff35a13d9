"""Reading and writing DATR theories (``.dtr``) and observation files (``.ext``).

Definitional sentences use ``==``, extensional sentences use ``=``::

    VERB:
        <mor past> == ("<mor root>" _ed)
        <mor pres tense> == "<mor root>".
    Fels: <plur nom> = (fels _n).

``%`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from typing import Iterator, List, NamedTuple

from .model import (
    Extensional,
    Query,
    Ref,
    Sentence,
    Theory,
    format_path,
    format_rhs,
)


class DatrSyntaxError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


class Token(NamedTuple):
    kind: str  # NODE ATOM == = : . < > ( ) " EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>%[^\n]*)
  | (?P<NODE>[A-Z][A-Za-z0-9_]*)
  | (?P<ATOM>[a-z0-9_][A-Za-z0-9_]*)
  | (?P<punct>==|[=:.<>()"])
""", re.VERBOSE)


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise DatrSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        column = pos - line_start + 1
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind == "punct":
            yield Token(match.group(), match.group(), line, column)
        elif kind in ("NODE", "ATOM"):
            yield Token(kind, match.group(), line, column)
        pos = match.end()
    yield Token("EOF", "", line, pos - line_start + 1)


_DESCRIBE = {"NODE": "node name", "ATOM": "atom", "EOF": "end of input"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, expected: str):
        tok = self.tok
        found = _DESCRIBE.get(tok.kind, repr(tok.text))
        if tok.kind in ("NODE", "ATOM"):
            found += f" {tok.text!r}"
        raise DatrSyntaxError(f"expected {expected}, found {found}", tok.line, tok.column)

    def expect(self, kind: str, expected: str = None) -> Token:
        if self.tok.kind != kind:
            self.fail(expected or _DESCRIBE.get(kind, repr(kind)))
        return self.advance()

    def path(self) -> tuple:
        self.expect("<", "'<'")
        atoms = []
        while self.tok.kind == "ATOM":
            atoms.append(self.advance().text)
        self.expect(">", "atom or '>'")
        return tuple(atoms)

    def item(self, quoted: bool = False):
        tok = self.tok
        if tok.kind == "ATOM" and not quoted:
            return self.advance().text
        if tok.kind == "NODE":
            node = self.advance().text
            if self.tok.kind == ":" and self.peek().kind == "<":
                self.advance()
                return Ref(node=node, path=self.path(), quoted=quoted)
            return Ref(node=node, quoted=quoted)
        if tok.kind == "<":
            return Ref(path=self.path(), quoted=quoted)
        if tok.kind == '"' and not quoted:
            self.advance()
            ref = self.item(quoted=True)
            self.expect('"', "closing '\"'")
            return ref
        self.fail("node, path or quoted descriptor" if quoted else "atom or descriptor")

    def rhs(self) -> tuple:
        if self.tok.kind != "(":
            return (self.item(),)
        self.advance()
        items = []
        while self.tok.kind != ")":
            if self.tok.kind == "EOF":
                self.fail("')'")
            items.append(self.item())
        if not items:
            self.fail("at least one item before ')'")
        self.advance()
        return tuple(items)

    def value(self) -> tuple:
        """Right-hand side of an extensional sentence: atoms only."""
        start = self.tok
        rhs = self.rhs()
        if not all(isinstance(item, str) for item in rhs):
            raise DatrSyntaxError(
                "extensional sentences take atomic values only", start.line, start.column)
        return rhs


def parse_theory(text: str) -> Theory:
    """Parse DATR source text into a :class:`Theory`."""
    p = _Parser(text)
    sentences: List[Sentence] = []
    seen: dict = {}
    while p.tok.kind != "EOF":
        node = p.expect("NODE", "node name").text
        p.expect(":", "':'")
        while True:
            start = p.tok
            path = p.path()
            p.expect("==", "'=='")
            rhs = p.rhs()
            key = (node, path)
            if key in seen:
                first = seen[key]
                raise DatrSyntaxError(
                    f"{node}:{format_path(path)} defined twice "
                    f"(first at line {first.line}, column {first.column})",
                    start.line, start.column)
            seen[key] = start
            sentences.append(Sentence(node, path, rhs))
            if p.tok.kind == ".":
                p.advance()
                break
            if p.tok.kind != "<":
                p.fail("'<' or '.'")
    return Theory(sentences)


def parse_extensional(text: str) -> List[Extensional]:
    """Parse ``Node: <path> = value.`` lines into extensional sentences."""
    p = _Parser(text)
    out = []
    while p.tok.kind != "EOF":
        node = p.expect("NODE", "node name").text
        p.expect(":", "':'")
        path = p.path()
        p.expect("=", "'='")
        value = p.value()
        p.expect(".", "'.'")
        out.append(Extensional(node, path, value))
    return out


def parse_query(text: str) -> Query:
    """Parse a single ``Node:<path>`` query."""
    p = _Parser(text)
    node = p.expect("NODE", "node name").text
    p.expect(":", "':'")
    path = p.path()
    if p.tok.kind == ".":
        p.advance()
    p.expect("EOF")
    return Query(node, path)


def parse_queries(text: str) -> List[Query]:
    """Parse a list of queries.

    Accepts bare ``Node:<path>`` forms (optionally ending in ``.``) as well as
    full extensional sentences, whose values are ignored.
    """
    p = _Parser(text)
    out = []
    while p.tok.kind != "EOF":
        node = p.expect("NODE", "node name").text
        p.expect(":", "':'")
        out.append(Query(node, p.path()))
        if p.tok.kind == "=":
            p.advance()
            p.value()
        if p.tok.kind == ".":
            p.advance()
    return out


def print_theory(theory: Theory) -> str:
    """Render a theory; nodes keep insertion order, longest paths first."""
    chunks = []
    for node in theory.nodes:
        entries = sorted(theory.node_table(node).items(), key=lambda kv: (-len(kv[0]), kv[0]))
        lines = [f"    {format_path(path)} == {format_rhs(rhs)}" for path, rhs in entries]
        chunks.append(f"{node}:\n" + "\n".join(lines) + ".\n")
    return "\n".join(chunks)


def print_extensional(data) -> str:
    return "".join(f"{sentence}.\n" for sentence in data)
