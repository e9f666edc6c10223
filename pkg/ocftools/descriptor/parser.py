# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""parser.py - parse descriptors from text

Descriptor grammar, loosest binding first:
    descriptor := "" | element ("," element)*
    element    := dand ("|" dand)*
    dand       := dnot ("&" dnot)*
    dnot       := "!" dnot | dprimary
    dprimary   := "B" "(" conditional-or-formula ")" | "(" element ")"

Inside B(...) the conditional rules of the formula parser apply: one top-level "|"
separates consequent and antecedent, and a plain formula A means (A|top).
"""

from ocftools.descriptor.descriptor import (
    AtomicDescriptor,
    DescAnd,
    DescNot,
    DescOr,
    Descriptor,
    MolecularDescriptor,
)
from ocftools.logic.parser import TokenParser
from ocftools.logic.signature import Signature

BELIEF_KEYWORD = "B"


class DescriptorParser(TokenParser):
    """TokenParser extended with the descriptor-level grammar"""

    def element(self) -> MolecularDescriptor:
        result = self.dand()
        while self.peek().kind == "|":
            self.advance()
            result = DescOr(result, self.dand())
        return result

    def dand(self) -> MolecularDescriptor:
        result = self.dnot()
        while self.peek().kind == "&":
            self.advance()
            result = DescAnd(result, self.dnot())
        return result

    def dnot(self) -> MolecularDescriptor:
        if self.peek().kind == "!":
            self.advance()
            return DescNot(self.dnot())
        return self.dprimary()

    def dprimary(self) -> MolecularDescriptor:
        tok = self.peek()
        if tok.kind == "ident" and tok.text == BELIEF_KEYWORD:
            self.advance()
            if self.peek().kind != "(":
                raise self.error(f"expected '(' after {BELIEF_KEYWORD}")
            open_index = self.pos
            close_index = self.matching_paren(open_index)
            cond = self.conditional_span(open_index + 1, close_index, allow_sugar=True)
            self.pos = close_index + 1
            return AtomicDescriptor(cond)
        if tok.kind == "(":
            self.advance()
            inner = self.element()
            self.expect(")")
            return inner
        raise self.error(
            f"expected {BELIEF_KEYWORD}(...), '!' or '(', found {self.describe(tok)}",
            tok,
        )

    def element_span(self, start: int, end: int) -> MolecularDescriptor:
        """parse tokens [start, end) as exactly one molecular descriptor"""
        saved = self.pos, self.limit
        self.pos, self.limit = start, end
        try:
            if self.peek().kind == "eof":
                raise self.error("expected a descriptor element, found nothing")
            m = self.element()
            if self.pos != end:
                raise self.error(f"unexpected {self.describe(self.peek())}")
            return m
        finally:
            self.pos, self.limit = saved


def parse_descriptor(text: str, sig: Signature) -> Descriptor:
    """parse text like "B(p|b), !B(f|p)" as a Descriptor over sig

    Empty (or blank) text is the empty descriptor.
    raises ParseError on malformed input, UnknownAtomError on undeclared atoms
    """
    parser = DescriptorParser(text, sig)
    if parser.limit == 0:
        return Descriptor(sig)
    elements = []
    start = 0
    for comma in parser.top_level(",", 0, parser.limit) + [parser.limit]:
        elements.append(parser.element_span(start, comma))
        start = comma + 1
    return Descriptor(sig, elements)
