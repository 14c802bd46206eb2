"""Tokenizer and recursive-descent parser for the diagram language.

Accepted forms::

    diagram P : 1 -> 1        # line form; one statement per line
    node m m
    wire in1 -> m.in2

    diagram idmap : 1 -> 1 { wire in1 -> out1 }     # braced form, ';' also separates

Structural problems found after parsing (unknown kinds, doubly used or
dangling ports, gaps in free-port numbering) raise ``DiagramError``;
lexical and grammatical ones raise ``DiagramSyntaxError`` with a position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DiagramError, DiagramSyntaxError
from .ast import KINDS, DiagramAST, Node, Port, Wire, validate

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>\#[^\n]*)|(?P<nl>\n)|(?P<arrow>->)|(?P<num>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[:.{};])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, num, arrow, punct, sep, eof
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise DiagramSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            tokens.append(Token("sep", "\n", line, col))
            line, line_start = line + 1, m.end()
        elif kind == "punct" and m.group() == ";":
            tokens.append(Token("sep", ";", line, col))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, col))  # type: ignore[arg-type]
        pos = m.end()
    tokens.append(Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None) -> DiagramSyntaxError:
        t = tok or self.tok
        return DiagramSyntaxError(msg, t.line, t.column)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise self.error(f"expected {what or text or kind}, found {found}")
        return self.advance()

    def skip_seps(self) -> None:
        while self.tok.kind == "sep":
            self.advance()

    def end_statement(self, braced: bool) -> None:
        t = self.tok
        if t.kind in ("sep", "eof") or (braced and t.text == "}"):
            return
        raise self.error(f"unexpected {t.text!r} after statement")

    def parse(self) -> DiagramAST:
        self.skip_seps()
        self.expect("ident", "diagram", "'diagram' header")
        name = self.expect("ident", what="diagram name").text
        self.expect("punct", ":")
        n_in = int(self.expect("num", what="input count").text)
        self.expect("arrow", what="'->'")
        n_out = int(self.expect("num", what="output count").text)
        braced = False
        if self.tok.text == "{":
            self.advance()
            braced = True
        else:
            self.end_statement(False)

        nodes: list[Node] = []
        wires: list[Wire] = []
        while True:
            self.skip_seps()
            t = self.tok
            if t.kind == "eof":
                if braced:
                    raise self.error("missing '}'")
                break
            if braced and t.text == "}":
                self.advance()
                self.skip_seps()
                if self.tok.kind != "eof":
                    raise self.error(f"unexpected {self.tok.text!r} after closing '}}'")
                break
            if t.kind != "ident":
                raise self.error(f"expected 'node' or 'wire', found {t.text!r}")
            if t.text == "diagram":
                raise self.error("only one 'diagram' header is allowed")
            if t.text == "node":
                nodes.append(self.node())
            elif t.text == "wire":
                wires.append(self.wire())
            else:
                raise self.error(f"expected 'node' or 'wire', found {t.text!r}")
            self.end_statement(braced)
        return validate(DiagramAST(name, n_in, n_out, tuple(nodes), tuple(wires)))

    def node(self) -> Node:
        kw = self.advance()
        nid = self.expect("ident", what="node id").text
        kt = self.expect("ident", what="node kind")
        endo = None
        if kt.text == "endo":
            self.expect("punct", ":", "':' after endo")
            endo = self.expect("ident", what="endo name").text
        elif kt.text not in KINDS:
            raise DiagramError(f"unknown node kind {kt.text!r} (line {kt.line}, column {kt.column})")
        return Node(nid, kt.text, endo, kw.line)

    def port(self) -> Port:
        first = self.expect("ident", what="port")
        if self.tok.text == ".":
            self.advance()
            name = self.expect("ident", what="port name").text
            return Port(first.text, name)
        return Port(None, first.text)

    def wire(self) -> Wire:
        kw = self.advance()
        src = self.port()
        self.expect("arrow", what="'->'")
        dst = self.port()
        return Wire(src, dst, kw.line)


def parse_diagram(text: str) -> DiagramAST:
    """Parse and validate one diagram."""
    return _Parser(text).parse()
