"""Tokenizer for the chernkit script language."""

from __future__ import annotations

from dataclasses import dataclass

KEYWORDS = frozenset({"let", "print", "assert"})
PUNCT2 = ("==", "!=")
PUNCT1 = "=;,()[]+-*^"


@dataclass(frozen=True)
class Token:
    kind: str  # ident | int | punct | keyword | error | eof
    lexeme: str
    line: int
    column: int

    def __str__(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.lexeme)


def tokenize(source: str) -> list:
    """Total lexer: unknown characters become ``error`` tokens."""
    tokens = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            tokens.append(Token("keyword" if word in KEYWORDS else "ident", word, line, start))
        elif ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], line, start))
        elif source[i:i + 2] in PUNCT2:
            j = i + 2
            tokens.append(Token("punct", source[i:j], line, start))
        elif ch in PUNCT1:
            j = i + 1
            tokens.append(Token("punct", ch, line, start))
        else:
            j = i + 1
            tokens.append(Token("error", ch, line, start))
        col += j - i
        i = j
    tokens.append(Token("eof", "", line, col))
    return tokens
