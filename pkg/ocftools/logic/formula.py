# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""formula.py - propositional formulas, conditionals and their semantics

Formulas are immutable ASTs. Their semantics is computed two ways: evaluate() gives the
truth value in one world, model_mask() gives the whole model set at once as a bitmask
over canonical world indices (bit k set iff world k is a model). Anything that compares
formulas (deduplication keys etc.) compares model masks, never syntax.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

from ocftools.logic.signature import LogicError, Signature, SignatureTooLarge, World

# binding strength used by the printer, higher binds tighter
_PREC_IMPLIES, _PREC_OR, _PREC_AND, _PREC_NOT, _PREC_ATOM = range(1, 6)

_ascii_symbols = {
    "not": "!",
    "and": " & ",
    "or": " | ",
    "implies": " -> ",
    "top": "top",
    "bot": "bot",
}
_unicode_symbols = {
    "not": "¬",
    "and": "∧",
    "or": " ∨ ",
    "implies": " → ",
    "top": "⊤",
    "bot": "⊥",
}


class Formula:
    """base class of formula AST nodes"""

    __slots__ = ()

    def evaluate(self, world: World) -> bool:
        raise NotImplementedError

    def _mask(self, sig: Signature) -> int:
        raise NotImplementedError

    # sugar for building formulas in code: ~a, a & b, a | b
    def __invert__(self):
        return Not(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def evaluate(self, world):
        return world.truth(self.name)

    def _mask(self, sig):
        try:
            return _atom_masks(sig)[sig.position(self.name)]
        except KeyError:
            raise LogicError(f"atom {self.name!r} is not in signature {sig}") from None


@dataclass(frozen=True)
class Top(Formula):
    def evaluate(self, world):
        return True

    def _mask(self, sig):
        return sig.full_mask


@dataclass(frozen=True)
class Bot(Formula):
    def evaluate(self, world):
        return False

    def _mask(self, sig):
        return 0


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    def evaluate(self, world):
        return not self.operand.evaluate(world)

    def _mask(self, sig):
        return sig.full_mask ^ self.operand._mask(sig)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def evaluate(self, world):
        return self.left.evaluate(world) and self.right.evaluate(world)

    def _mask(self, sig):
        return self.left._mask(sig) & self.right._mask(sig)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def evaluate(self, world):
        return self.left.evaluate(world) or self.right.evaluate(world)

    def _mask(self, sig):
        return self.left._mask(sig) | self.right._mask(sig)


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def evaluate(self, world):
        return (not self.left.evaluate(world)) or self.right.evaluate(world)

    def _mask(self, sig):
        return (sig.full_mask ^ self.left._mask(sig)) | self.right._mask(sig)


TOP = Top()
BOT = Bot()


@lru_cache(maxsize=64)
def _atom_masks(sig: Signature) -> Tuple[int, ...]:
    """model mask of each atom of sig, in declaration order"""
    masks = []
    for name in sig.atoms:
        mask = 0
        for world in sig.worlds():
            if world.truth(name):
                mask |= 1 << world.index
        masks.append(mask)
    return tuple(masks)


def evaluate(f: Formula, world: World) -> bool:
    """classical truth value of f in world"""
    return f.evaluate(world)


@lru_cache(maxsize=4096)
def _cached_mask(f: Formula, sig: Signature) -> int:
    return f._mask(sig)


def model_mask(f: Formula, sig: Signature) -> int:
    """return the models of f as a bitmask over canonical world indices"""
    if len(sig) > sig.limit:
        raise SignatureTooLarge(f"signature has {len(sig)} atoms, limit {sig.limit}")
    return _cached_mask(f, sig)


def mask_worlds(mask: int, sig: Signature) -> Tuple[World, ...]:
    """return the worlds whose indices are set in mask, in canonical order"""
    return tuple(w for w in sig.worlds() if (mask >> w.index) & 1)


def models(f: Formula, sig: Signature) -> Tuple[World, ...]:
    """return Mod(f) over sig in canonical world order"""
    return mask_worlds(model_mask(f, sig), sig)


def world_formula(world: World) -> Formula:
    """the complete conjunction that has world as its only model"""
    conj = None
    for name in world.sig.atoms:
        lit = Atom(name) if world.truth(name) else Not(Atom(name))
        conj = lit if conj is None else And(conj, lit)
    return conj


def disjoin(formulas) -> Formula:
    """left-nested disjunction of formulas, Bot if there are none"""
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return BOT if result is None else result


def format_formula(f: Formula, symbols: bool = False) -> str:
    """print f with minimal parentheses

    symbols=False prints the input grammar (re-parseable), symbols=True prints with
    logic symbols for human consumption
    """
    sym = _unicode_symbols if symbols else _ascii_symbols
    return _format(f, sym)[0]


def disjuncts(f: Formula) -> Tuple[Formula, ...]:
    """the operands of a (nested) disjunction, f itself if it isn't one"""
    if isinstance(f, Or):
        return disjuncts(f.left) + disjuncts(f.right)
    return (f,)


def format_dnf(f: Formula, symbols: bool = False) -> str:
    """print f as a disjunction, parenthesizing every disjunct but literals

    A formula that isn't a disjunction prints as format_formula() does.
    """
    parts = disjuncts(f)
    if len(parts) == 1:
        return format_formula(f, symbols)
    sym = _unicode_symbols if symbols else _ascii_symbols
    return sym["or"].join(_wrap(d, sym, _PREC_NOT) for d in parts)


def _format(f, sym):
    """return (text, precedence) of f"""
    if isinstance(f, Atom):
        return f.name, _PREC_ATOM
    if isinstance(f, Top):
        return sym["top"], _PREC_ATOM
    if isinstance(f, Bot):
        return sym["bot"], _PREC_ATOM
    if isinstance(f, Not):
        text = _wrap(f.operand, sym, _PREC_NOT)
        return sym["not"] + text, _PREC_NOT

    if isinstance(f, Implies):
        # right-associative
        left = _wrap(f.left, sym, _PREC_IMPLIES + 1)
        right = _wrap(f.right, sym, _PREC_IMPLIES)
        return left + sym["implies"] + right, _PREC_IMPLIES
    if isinstance(f, (And, Or)):
        prec, op = (_PREC_AND, "and") if isinstance(f, And) else (_PREC_OR, "or")
        # left-associative
        left = _wrap(f.left, sym, prec)
        right = _wrap(f.right, sym, prec + 1)
        return left + sym[op] + right, prec
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f, sym, min_prec):
    text, prec = _format(f, sym)
    return text if prec >= min_prec else f"({text})"


class Verdict(Enum):
    """three-valued evaluation of a conditional in a world"""

    VERIFIES = "v"
    FALSIFIES = "f"
    NOT_APPLICABLE = "n"


@dataclass(frozen=True)
class Conditional:
    """the conditional (consequent | antecedent)

    Read "if antecedent then usually consequent".
    """

    consequent: Formula
    antecedent: Formula

    def verifying_mask(self, sig: Signature) -> int:
        """models of antecedent & consequent"""
        return model_mask(self.antecedent, sig) & model_mask(self.consequent, sig)

    def falsifying_mask(self, sig: Signature) -> int:
        """models of antecedent & !consequent"""
        return model_mask(self.antecedent, sig) & ~model_mask(self.consequent, sig)

    def key(self, sig: Signature) -> Tuple[int, int]:
        """semantic identity of this conditional over sig"""
        return self.verifying_mask(sig), self.falsifying_mask(sig)

    def negated(self) -> "Conditional":
        """(!B|A) for (B|A)"""
        return Conditional(Not(self.consequent), self.antecedent)

    def format(self, symbols: bool = False) -> str:
        # any disjunction inside either side is parenthesized
        sym = _unicode_symbols if symbols else _ascii_symbols
        cons = _wrap(self.consequent, sym, _PREC_AND)
        ante = _wrap(self.antecedent, sym, _PREC_AND)
        return f"({cons}|{ante})"

    def __str__(self):
        return self.format()


def verdict(c: Conditional, world: World) -> Verdict:
    """de Finetti verdict of c in world"""
    if not c.antecedent.evaluate(world):
        return Verdict.NOT_APPLICABLE
    if c.consequent.evaluate(world):
        return Verdict.VERIFIES
    return Verdict.FALSIFIES
