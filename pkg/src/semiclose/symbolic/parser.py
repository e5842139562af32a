"""Recursive-descent parser for the constructor language.

Grammar (whitespace-insensitive, ``*`` left-associative)::

    expr   := atom ("*" atom)*
    atom   := "(" expr ")"
            | "Table" "(" path ")"
            | "C" "(" int ")" | "M" "(" int "," int ")"
            | "OmegaChain" | "NullOmega"
            | "Prufer" "(" int ")" | "FreeComm" "(" int ")"
            | "Sum" "(" "omega" "," expr ")"
            | "Zero" "(" expr ")" | "One" "(" expr ")"
"""

from __future__ import annotations

import re
from pathlib import Path

from .. import kernel
from .ast import (
    Cyclic, FreeComm, InvalidArgument, Monogenic, Node, NullOmega, OmegaChain,
    One, Product, Prufer, SumOmega, Table, Zero,
)


class DSLSyntaxError(SyntaxError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text[:pos]}<!>{text[pos:]}")


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),*]))")


class _Parser:
    def __init__(self, text: str, base_dir: Path | None):
        self.text = text
        self.pos = 0
        self.base_dir = base_dir

    def error(self, message, pos=None):
        raise DSLSyntaxError(message, self.text, self.pos if pos is None else pos)

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos:]
            if rest.strip():
                self.error("unexpected character", self.pos + len(rest) - len(rest.lstrip()))
            return None, None, len(self.text)
        kind = m.lastgroup
        return kind, m.group(kind), m.end()

    def next(self):
        kind, value, end = self.peek()
        if kind is None:
            self.error("unexpected end of input")
        start = self.pos
        self.pos = end
        return kind, value, start

    def expect(self, value):
        kind, got, start = self.next()
        if got != value:
            self.error(f"expected {value!r}, found {got!r}", start)

    def integer(self) -> int:
        kind, value, start = self.next()
        if kind != "int":
            self.error(f"expected an integer, found {value!r}", start)
        return int(value)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] is not None:
            self.error("trailing input")
        return node

    def expr(self) -> Node:
        node = self.atom()
        while self.peek()[1] == "*":
            self.next()
            node = Product(node, self.atom())
        return node

    def atom(self) -> Node:
        kind, value, start = self.next()
        if value == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind != "name":
            self.error(f"unexpected {value!r}", start)
        try:
            return self.constructor(value, start)
        except InvalidArgument as exc:
            raise InvalidArgument(f"{exc} (at position {start})") from None

    def constructor(self, name: str, start: int) -> Node:
        if name == "OmegaChain":
            return OmegaChain()
        if name == "NullOmega":
            return NullOmega()
        if name == "Table":
            return self.table()
        if name in ("C", "Prufer", "FreeComm"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return {"C": Cyclic, "Prufer": Prufer, "FreeComm": FreeComm}[name](n)
        if name == "M":
            self.expect("(")
            i = self.integer()
            self.expect(",")
            p = self.integer()
            self.expect(")")
            return Monogenic(i, p)
        if name == "Sum":
            self.expect("(")
            kind, value, pos = self.next()
            if value != "omega":
                self.error("Sum expects 'omega' as its first argument", pos)
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return SumOmega(inner)
        if name in ("Zero", "One"):
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return (Zero if name == "Zero" else One)(inner)
        self.error(f"unknown constructor {name!r}", start)

    def table(self) -> Node:
        self.expect("(")
        depth, i = 1, self.pos
        while i < len(self.text) and depth:
            depth += {"(": 1, ")": -1}.get(self.text[i], 0)
            i += 1
        if depth:
            self.error("unterminated Table(...)")
        raw = self.text[self.pos:i - 1].strip()
        if not raw:
            self.error("Table needs a path")
        path = Path(raw)
        if not path.is_absolute() and self.base_dir is not None:
            path = self.base_dir / path
        try:
            S = kernel.load(path)
        except OSError as exc:
            raise InvalidArgument(f"cannot read table {raw!r}: {exc.strerror}") from None
        self.pos = i
        return Table(S, raw)


def parse_dsl(text: str, base_dir=None) -> Node:
    """Parse ``text`` into a constructor term.

    Relative ``Table`` paths resolve against ``base_dir`` (default: cwd).
    """
    return _Parser(text, Path(base_dir) if base_dir else None).parse()
