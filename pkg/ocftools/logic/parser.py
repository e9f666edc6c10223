# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""parser.py - parse formulas and conditionals from text

Formula grammar, loosest binding first:
    formula  := or ("->" formula)?          (right-associative)
    or       := and ("|" and)*
    and      := not ("&" not)*
    not      := "!" not | primary
    primary  := ATOM | "top" | "bot" | "(" formula ")"

A conditional is written (B | A). In conditional position exactly one top-level "|" is
the separator, so a disjunction inside B or A has to be parenthesized, e.g.
((a | b) | c). The outer parentheses may be left off: "f | b" is also (f|b).
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from ocftools.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Conditional,
    Formula,
    Implies,
    Not,
    Or,
)
from ocftools.logic.signature import LogicError, Signature

_token_re = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>->|[!&|(),]))"
)


class ParseError(LogicError):
    """error raised for malformed formula, conditional or descriptor text"""

    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(message)

    def __str__(self):
        if self.position is None:
            return self.message
        s = f"{self.message} (at position {self.position})"
        if self.text is not None and "\n" not in self.text:
            s += f"\n  {self.text}\n  {' ' * self.position}^"
        return s


class UnknownAtomError(ParseError):
    """error raised when text uses an atom that isn't declared in the signature"""

    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", an operator like "&", or "eof"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    """split text into tokens, the last token is always an "eof" token"""
    tokens = []
    pos = 0
    length = len(text)
    while True:
        while pos < length and text[pos].isspace():
            pos += 1
        if pos >= length:
            break
        m = _token_re.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.group("ident") is not None:
            tokens.append(Token("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(Token("eof", "", length))
    return tokens


class TokenParser:
    """recursive-descent parser over a token list

    All parse methods work on the span [self.pos, self.limit). Higher-level grammars
    (descriptors) reuse this class and its span helpers.
    """

    def __init__(self, text: str, sig: Optional[Signature]):
        self.text = text
        self.sig = sig
        self.tokens = tokenize(text)
        self.pos = 0
        self.limit = len(self.tokens) - 1  # index of eof

    # --- token access ---

    def peek(self) -> Token:
        if self.pos >= self.limit:
            return Token("eof", "", self.tokens[self.limit].pos)
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self.error(f"expected {kind!r}, found {self.describe(tok)}", tok)
        return self.advance()

    def error(self, message, tok=None) -> ParseError:
        if tok is None:
            tok = self.peek()
        return ParseError(message, tok.pos, self.text)

    @staticmethod
    def describe(tok):
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def matching_paren(self, index: int) -> int:
        """index of the ")" matching the "(" at index, within the current limit"""
        depth = 0
        for i in range(index, self.limit):
            kind = self.tokens[i].kind
            if kind == "(":
                depth += 1
            elif kind == ")":
                depth -= 1
                if depth == 0:
                    return i
        raise ParseError("unbalanced '('", self.tokens[index].pos, self.text)

    def top_level(self, kind: str, start: int, end: int) -> List[int]:
        """indices of tokens of kind at parenthesis depth 0 within [start, end)"""
        found = []
        depth = 0
        for i in range(start, end):
            k = self.tokens[i].kind
            if k == "(":
                depth += 1
            elif k == ")":
                depth -= 1
                if depth < 0:
                    raise ParseError("unbalanced ')'", self.tokens[i].pos, self.text)
            elif k == kind and depth == 0:
                found.append(i)
        return found

    # --- formulas ---

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "->":
            self.advance()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.peek().kind == "|":
            self.advance()
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.negation()
        while self.peek().kind == "&":
            self.advance()
            result = And(result, self.negation())
        return result

    def negation(self) -> Formula:
        if self.peek().kind == "!":
            self.advance()
            return Not(self.negation())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            self.advance()
            if tok.text == "top":
                return TOP
            if tok.text == "bot":
                return BOT
            if self.sig is not None and tok.text not in self.sig:
                raise UnknownAtomError(
                    f"atom {tok.text!r} is not declared in the signature ({self.sig})",
                    tok.pos,
                    self.text,
                )
            return Atom(tok.text)
        raise self.error(f"expected a formula, found {self.describe(tok)}", tok)

    def formula_span(self, start: int, end: int) -> Formula:
        """parse tokens [start, end) as exactly one formula"""
        saved = self.pos, self.limit
        self.pos, self.limit = start, end
        try:
            if self.peek().kind == "eof":
                raise self.error("expected a formula, found nothing")
            f = self.formula()
            if self.pos != end:
                raise self.error(f"unexpected {self.describe(self.peek())}")
            return f
        finally:
            self.pos, self.limit = saved

    # --- conditionals ---

    def conditional_span(self, start: int, end: int, allow_sugar: bool) -> Conditional:
        """parse tokens [start, end) as a conditional

        allow_sugar: if True, a plain formula A is read as the conditional (A|top)
        """
        if start >= end:
            tok = self.tokens[start] if start < len(self.tokens) else self.tokens[-1]
            raise ParseError(
                "expected a conditional, found nothing", tok.pos, self.text
            )
        bars = self.top_level("|", start, end)
        if not bars and self.tokens[start].kind == "(":
            close = self.matching_paren(start)
            if close == end - 1:
                inner_bars = self.top_level("|", start + 1, close)
                if inner_bars:
                    start, end, bars = start + 1, close, inner_bars
        if len(bars) > 1:
            raise ParseError(
                "more than one top-level '|' in a conditional, parenthesize "
                "disjunctions inside (B|A)",
                self.tokens[bars[1]].pos,
                self.text,
            )
        if len(bars) == 1:
            consequent = self.formula_span(start, bars[0])
            antecedent = self.formula_span(bars[0] + 1, end)
            return Conditional(consequent, antecedent)
        if allow_sugar:
            return Conditional(self.formula_span(start, end), TOP)
        raise ParseError(
            "expected a conditional like (B|A)", self.tokens[start].pos, self.text
        )


def parse_formula(text: str, sig: Signature) -> Formula:
    """parse text as a formula over sig

    raises ParseError on malformed input, UnknownAtomError on undeclared atoms
    """
    parser = TokenParser(text, sig)
    return parser.formula_span(0, parser.limit)


def parse_conditional(text: str, sig: Signature) -> Conditional:
    """parse text like "(f|b)" as a conditional over sig"""
    parser = TokenParser(text, sig)
    return parser.conditional_span(0, parser.limit, allow_sugar=False)


def parse_conditional_list(text: str, sig: Signature) -> List[Conditional]:
    """parse comma-separated conditionals like "(p|b),(f|p)"; empty text gives []"""
    parser = TokenParser(text, sig)
    if parser.limit == 0:
        return []
    conds = []
    start = 0
    for comma in parser.top_level(",", 0, parser.limit) + [parser.limit]:
        conds.append(parser.conditional_span(start, comma, allow_sugar=False))
        start = comma + 1
    return conds
