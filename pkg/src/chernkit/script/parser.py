"""Recursive-descent parser and static checks for chernkit scripts.

Grammar::

    script = {stmt}
    stmt   = "let" ident "=" expr ";"
           | "print" expr ";"
           | "assert" expr ("==" | "!=") expr ";"
    expr   = term {("+" | "-") term}
    term   = factor {"*" factor}
    factor = atom ["^" int] | "-" factor
    atom   = int | ident | ident "(" [expr {"," expr}] ")" | "(" expr ")"
           | "[" [["-"] int {"," ["-"] int}] "]"
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import Token, tokenize


class ParseError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class StaticError(ParseError):
    """Use-before-define, rebinding, or an unknown function name."""


@dataclass(frozen=True)
class Node:
    line: int = field(default=0, compare=False, kw_only=True)
    column: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class ListLit(Node):
    items: tuple


@dataclass(frozen=True)
class Ident(Node):
    name: str


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Paren(Node):
    inner: Node


@dataclass(frozen=True)
class Let(Node):
    name: str
    expr: Node


@dataclass(frozen=True)
class Print(Node):
    expr: Node


@dataclass(frozen=True)
class Assert(Node):
    left: Node
    op: str
    right: Node


@dataclass(frozen=True)
class Script:
    statements: tuple


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        if tok.kind == "error":
            message = f"unexpected character {tok.lexeme!r}"
        raise ParseError(message, tok.line, tok.column)

    def at(self, lexeme: str) -> bool:
        return self.tok.kind in ("punct", "keyword") and self.tok.lexeme == lexeme

    def expect(self, lexeme: str) -> Token:
        if not self.at(lexeme):
            self.error(f"expected '{lexeme}'")
        return self.advance()

    # statements ---------------------------------------------------------

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self) -> Node:
        tok = self.tok
        pos = dict(line=tok.line, column=tok.column)
        if self.at("let"):
            self.advance()
            if self.tok.kind != "ident":
                self.error("expected identifier")
            name = self.advance().lexeme
            self.expect("=")
            expr = self.expr()
            self.expect(";")
            return Let(name, expr, **pos)
        if self.at("print"):
            self.advance()
            expr = self.expr()
            self.expect(";")
            return Print(expr, **pos)
        if self.at("assert"):
            self.advance()
            left = self.expr()
            if not (self.at("==") or self.at("!=")):
                self.error("expected '==' or '!='")
            op = self.advance().lexeme
            right = self.expr()
            self.expect(";")
            return Assert(left, op, right, **pos)
        self.error("expected 'let', 'print' or 'assert'")

    # expressions --------------------------------------------------------

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            node = BinOp(op.lexeme, node, self.term(), line=op.line, column=op.column)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at("*"):
            op = self.advance()
            node = BinOp("*", node, self.factor(), line=op.line, column=op.column)
        return node

    def factor(self) -> Node:
        if self.at("-"):
            op = self.advance()
            return Neg(self.factor(), line=op.line, column=op.column)
        node = self.atom()
        if self.at("^"):
            op = self.advance()
            if self.tok.kind != "int":
                self.error("expected integer exponent")
            exp = self.advance()
            node = BinOp("^", node, IntLit(int(exp.lexeme), line=exp.line, column=exp.column),
                         line=op.line, column=op.column)
        return node

    def atom(self) -> Node:
        tok = self.tok
        pos = dict(line=tok.line, column=tok.column)
        if tok.kind == "int":
            self.advance()
            return IntLit(int(tok.lexeme), **pos)
        if tok.kind == "ident":
            self.advance()
            if not self.at("("):
                return Ident(tok.lexeme, **pos)
            self.advance()
            args = []
            if not self.at(")"):
                args.append(self.expr())
                while self.at(","):
                    self.advance()
                    args.append(self.expr())
            self.expect(")")
            return Call(tok.lexeme, tuple(args), **pos)
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Paren(inner, **pos)
        if self.at("["):
            self.advance()
            items = []
            if not self.at("]"):
                items.append(self.list_int())
                while self.at(","):
                    self.advance()
                    items.append(self.list_int())
            self.expect("]")
            return ListLit(tuple(items), **pos)
        self.error("expected expression")

    def list_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            self.error("expected integer")
        return sign * int(self.advance().lexeme)


def parse(source: str) -> Script:
    return Parser(source).script()


def parse_expression(source: str) -> Node:
    p = Parser(source)
    node = p.expr()
    if p.tok.kind != "eof":
        p.error("unexpected input after expression")
    return node


def check(script: Script, builtins) -> None:
    """Reject use-before-define, rebinding and calls to unknown functions."""
    defined: set = set()
    for stmt in script.statements:
        if isinstance(stmt, Let):
            check_expr(stmt.expr, defined, builtins)
            if stmt.name in defined:
                raise StaticError(f"'{stmt.name}' is already defined", stmt.line, stmt.column)
            defined.add(stmt.name)
        elif isinstance(stmt, Print):
            check_expr(stmt.expr, defined, builtins)
        else:
            check_expr(stmt.left, defined, builtins)
            check_expr(stmt.right, defined, builtins)


def check_expr(node: Node, defined, builtins) -> None:
    if isinstance(node, Ident):
        if node.name not in defined:
            raise StaticError(f"undefined variable '{node.name}'", node.line, node.column)
    elif isinstance(node, Call):
        if node.name not in builtins:
            raise StaticError(f"unknown function '{node.name}'", node.line, node.column)
        for arg in node.args:
            check_expr(arg, defined, builtins)
    elif isinstance(node, BinOp):
        check_expr(node.left, defined, builtins)
        check_expr(node.right, defined, builtins)
    elif isinstance(node, Neg):
        check_expr(node.operand, defined, builtins)
    elif isinstance(node, Paren):
        check_expr(node.inner, defined, builtins)


def to_source(node) -> str:
    """Print form; parsing it again gives a structurally equal tree."""
    if isinstance(node, Script):
        return "\n".join(to_source(s) for s in node.statements) + ("\n" if node.statements else "")
    if isinstance(node, Let):
        return f"let {node.name} = {to_source(node.expr)};"
    if isinstance(node, Print):
        return f"print {to_source(node.expr)};"
    if isinstance(node, Assert):
        return f"assert {to_source(node.left)} {node.op} {to_source(node.right)};"
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, ListLit):
        return "[" + ", ".join(str(i) for i in node.items) + "]"
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Call):
        return f"{node.name}(" + ", ".join(to_source(a) for a in node.args) + ")"
    if isinstance(node, BinOp):
        if node.op == "^":
            return f"{to_source(node.left)}^{to_source(node.right)}"
        return f"{to_source(node.left)} {node.op} {to_source(node.right)}"
    if isinstance(node, Neg):
        return f"-{to_source(node.operand)}"
    if isinstance(node, Paren):
        return f"({to_source(node.inner)})"
    raise TypeError(f"not a syntax node: {node!r}")
