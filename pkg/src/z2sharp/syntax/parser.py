"""Recursive-descent parser for the ASCII concrete syntax.

Precedence, tightest first: ``!``, ``&`` (left), ``|`` (left), ``->``
(right), ``<->`` (left). A quantifier body extends as far right as
possible. ``*`` binds tighter than ``+``; both associate to the left.
Rank postfixes ``^(n)`` and ``^[n]`` attach only to parenthesized formulas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, RankError
from .ast import (
    Add, And, Const, Eq, ExistsNum, ExistsSet, ForallNum, ForallSet, Iff,
    Implies, Lt, Mem, Mul, Not, NumVar, Or, RankOp, is_number_name, is_set_name,
)
from .flavor import S, W, sr, wr

KEYWORDS = {"forall", "exists"}
MEMBERSHIP_WORDS = {"in_s": "s", "in_w": "w"}

_NAME_RE = re.compile(r"[^\W\d]\w*")
_CONST_RE = re.compile(r"([01])_([sw])")
_PAREN_RANK_RE = re.compile(r"\(\s*(-?\d+)\s*\)")
_BRACKET_RANK_RE = re.compile(r"\[\s*([^\]]*?)\s*\]")
_INT_RE = re.compile(r"-?\d+")
_SIMPLE = [
    ("<->", "IFF"), ("->", "IMP"), ("!", "NOT"), ("&", "AND"), ("|", "OR"),
    ("(", "LP"), (")", "RP"), (".", "DOT"), ("+", "PLUS"), ("*", "STAR"),
]


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    value: object
    pos: int


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None, cls=ParseError):
        pos = self.pos if pos is None else pos
        return make_error(self.text, message, pos, cls)

    def _rank_value(self, raw: str, pos: int) -> int:
        if not _INT_RE.fullmatch(raw.strip()):
            raise self.error(f"malformed rank {raw!r}", pos, RankError)
        value = int(raw)
        if value < 0:
            raise self.error(f"negative rank {value}", pos, RankError)
        return value

    def flavor_suffix(self, base: str):
        """Read an optional ``(n)`` / ``[n]`` after a flavor letter."""
        if base == "s":
            return S
        text, pos = self.text, self.pos
        if pos < len(text) and text[pos] == "[":
            m = _BRACKET_RANK_RE.match(text, pos)
            if not m:
                raise self.error("unterminated strict rank", pos, RankError)
            self.pos = m.end()
            return sr(self._rank_value(m.group(1), pos))
        if pos < len(text) and text[pos] == "(":
            m = _PAREN_RANK_RE.match(text, pos)
            if m:
                self.pos = m.end()
                return wr(self._rank_value(m.group(1), pos))
        return W

    def tokens(self) -> list[Token]:
        out: list[Token] = []
        text = self.text
        while True:
            while self.pos < len(text) and text[self.pos].isspace():
                self.pos += 1
            start = self.pos
            if start >= len(text):
                out.append(Token("EOF", None, start))
                return out
            ch = text[start]
            if ch in "=<" and not text.startswith("<->", start):
                self.pos += 1
                if self.pos >= len(text) or text[self.pos] not in "sw":
                    raise self.error(f"relation {ch!r} needs a flavor s or w", start)
                base = text[self.pos]
                self.pos += 1
                flavor = self.flavor_suffix(base)
                out.append(Token("REL", ("eq" if ch == "=" else "lt", flavor), start))
                continue
            if ch == "^":
                self.pos += 1
                while self.pos < len(text) and text[self.pos].isspace():
                    self.pos += 1
                p = self.pos
                m = _PAREN_RANK_RE.match(text, p)
                if m:
                    self.pos = m.end()
                    out.append(Token("RANK", wr(self._rank_value(m.group(1), p)), start))
                    continue
                m = _BRACKET_RANK_RE.match(text, p)
                if m:
                    self.pos = m.end()
                    out.append(Token("RANK", sr(self._rank_value(m.group(1), p)), start))
                    continue
                raise self.error("rank operator needs (n) or [n]", p, RankError)
            m = _CONST_RE.match(text, start)
            if m:
                self.pos = m.end()
                flavor = self.flavor_suffix(m.group(2))
                out.append(Token("CONST", (int(m.group(1)), flavor), start))
                continue
            m = _NAME_RE.match(text, start)
            if m:
                word = m.group(0)
                self.pos = m.end()
                if word in MEMBERSHIP_WORDS:
                    flavor = self.flavor_suffix(MEMBERSHIP_WORDS[word])
                    out.append(Token("REL", ("in", flavor), start))
                elif word in KEYWORDS:
                    out.append(Token(word.upper(), word, start))
                else:
                    out.append(Token("NAME", word, start))
                continue
            for lexeme, kind in _SIMPLE:
                if text.startswith(lexeme, start):
                    self.pos += len(lexeme)
                    out.append(Token(kind, lexeme, start))
                    break
            else:
                raise self.error(f"unexpected character {ch!r}", start)


def make_error(text: str, message: str, pos: int, cls=ParseError):
    byte_offset = len(text[:pos].encode("utf-8"))
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    if cls is ParseError:
        return ParseError(message, offset=byte_offset, line=line, column=column, text=text)
    return cls(message, offset=byte_offset, line=line, column=column)


class _Backtrack(Exception):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _Lexer(text).tokens()
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else repr(self.text[tok.pos:tok.pos + 12])
        return make_error(self.text, f"{message}, found {found}", tok.pos)

    def take(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            raise self.error(f"expected {kind}")
        self.i += 1
        return tok

    # formulas

    def formula(self):
        left = self.implication()
        while self.tok.kind == "IFF":
            self.i += 1
            left = Iff(left, self.implication())
        return left

    def implication(self):
        left = self.disjunction()
        if self.tok.kind == "IMP":
            self.i += 1
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.tok.kind == "OR":
            self.i += 1
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.tok.kind == "AND":
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self):
        kind = self.tok.kind
        if kind == "NOT":
            self.i += 1
            return Not(self.unary())
        if kind in ("FORALL", "EXISTS"):
            self.i += 1
            name_tok = self.take("NAME")
            name = name_tok.value
            self.take("DOT")
            body = self.formula()
            if is_number_name(name):
                cls = ForallNum if kind == "FORALL" else ExistsNum
            elif is_set_name(name):
                cls = ForallSet if kind == "FORALL" else ExistsSet
            else:
                raise self.error("variable names start with a lowercase or uppercase letter", name_tok)
            return cls(name, body)
        return self.primary()

    def primary(self):
        if self.tok.kind == "LP":
            start = self.i
            try:
                return self.atom(backtrack=True)
            except _Backtrack:
                self.i = start
            self.take("LP")
            body = self.formula()
            self.take("RP")
            while self.tok.kind == "RANK":
                body = RankOp(body, self.tok.value)
                self.i += 1
            return body
        return self.atom(backtrack=False)

    def atom(self, backtrack: bool):
        try:
            left = self.term()
        except ParseError:
            if backtrack:
                raise _Backtrack
            raise
        tok = self.tok
        if tok.kind != "REL":
            if backtrack:
                raise _Backtrack
            raise self.error("expected a relation")
        self.i += 1
        rel, flavor = tok.value
        if rel == "in":
            name_tok = self.take("NAME")
            if not is_set_name(name_tok.value):
                raise self.error("membership needs a set variable (uppercase)", name_tok)
            return Mem(left, name_tok.value, flavor)
        right = self.term()
        return (Eq if rel == "eq" else Lt)(left, right, flavor)

    # terms

    def term(self):
        left = self.product()
        while self.tok.kind == "PLUS":
            self.i += 1
            left = Add(left, self.product())
        return left

    def product(self):
        left = self.factor()
        while self.tok.kind == "STAR":
            self.i += 1
            left = Mul(left, self.factor())
        return left

    def factor(self):
        tok = self.tok
        if tok.kind == "CONST":
            self.i += 1
            return Const(*tok.value)
        if tok.kind == "NAME":
            if not is_number_name(tok.value):
                raise self.error("terms use number variables (lowercase)")
            self.i += 1
            return NumVar(tok.value)
        if tok.kind == "LP":
            self.i += 1
            inner = self.term()
            self.take("RP")
            return inner
        raise self.error("expected a term")


def parse(text: str):
    """Parse a formula. Raises ParseError (a SyntaxError) or RankError."""
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "EOF":
        raise p.error("unexpected trailing input")
    return f


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    if p.tok.kind != "EOF":
        raise p.error("unexpected trailing input")
    return t
