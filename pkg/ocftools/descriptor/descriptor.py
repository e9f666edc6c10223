# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""descriptor.py - belief descriptors and their semantics over OCFs

An atomic descriptor B(B|A) says "(B|A) is believed". Molecular descriptors combine
atomic ones with !, & and |. A (composite) Descriptor is an ordered set of molecular
descriptors that holds iff all of its elements hold. A propositional atomic descriptor
B(A) is stored as B(A|top).

A descriptor is elementary if every element is a literal: B(c) or !B(c). Only elementary
descriptors can be used as revision inputs; any descriptor can be checked with holds().
"""

import warnings
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ocftools.logic.formula import Conditional, Top, format_formula
from ocftools.logic.signature import Signature
from ocftools.miscutils.errors import OcfToolsError, OcfToolsWarning
from ocftools.ranking.ocf import OCF

# binding strength of the descriptor-level connectives, higher binds tighter
_PREC_OR, _PREC_AND, _PREC_NOT, _PREC_ATOM = range(1, 5)


class DescriptorError(OcfToolsError):
    """base class for descriptor related errors"""

    pass


class NotElementaryError(DescriptorError):
    """error raised when an elementary descriptor is required but not given"""

    pass


class DuplicateElementWarning(OcfToolsWarning):
    """warning when a descriptor element is dropped as a semantic duplicate"""

    pass


class MolecularDescriptor:
    """base class of descriptor tree nodes"""

    __slots__ = ()

    def holds(self, kappa: OCF) -> bool:
        raise NotImplementedError

    def conditionals(self) -> Iterator[Conditional]:
        """yield every conditional in this tree, left to right, duplicates included"""
        raise NotImplementedError

    def key(self, sig: Signature) -> tuple:
        """semantic identity: tree shape with each conditional replaced by its key"""
        raise NotImplementedError

    def format(self, symbols: bool = False) -> str:
        return _format(self, symbols)[0]

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class AtomicDescriptor(MolecularDescriptor):
    """B(cond): cond is accepted"""

    cond: Conditional

    def holds(self, kappa):
        return kappa.accepts_conditional_belief(self.cond)

    def conditionals(self):
        yield self.cond

    def key(self, sig):
        return ("B", self.cond.key(sig))


@dataclass(frozen=True)
class DescNot(MolecularDescriptor):
    operand: MolecularDescriptor

    def holds(self, kappa):
        return not self.operand.holds(kappa)

    def conditionals(self):
        yield from self.operand.conditionals()

    def key(self, sig):
        return ("!", self.operand.key(sig))


@dataclass(frozen=True)
class DescAnd(MolecularDescriptor):
    left: MolecularDescriptor
    right: MolecularDescriptor

    def holds(self, kappa):
        return self.left.holds(kappa) and self.right.holds(kappa)

    def conditionals(self):
        yield from self.left.conditionals()
        yield from self.right.conditionals()

    def key(self, sig):
        return ("&", self.left.key(sig), self.right.key(sig))


@dataclass(frozen=True)
class DescOr(MolecularDescriptor):
    left: MolecularDescriptor
    right: MolecularDescriptor

    def holds(self, kappa):
        return self.left.holds(kappa) or self.right.holds(kappa)

    def conditionals(self):
        yield from self.left.conditionals()
        yield from self.right.conditionals()

    def key(self, sig):
        return ("|", self.left.key(sig), self.right.key(sig))


def _has_top_level_bar(text):
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|" and depth == 0:
            return True
    return False


def _format_atomic(atomic, symbols):
    cond = atomic.cond
    belief = "𝔅" if symbols else "B"
    # B(A) sugar, unless the printed A would be read as a conditional
    if isinstance(cond.antecedent, Top) and not _has_top_level_bar(
        format_formula(cond.consequent)
    ):
        return f"{belief}({format_formula(cond.consequent, symbols)})"
    return belief + cond.format(symbols)


def _format(m, symbols):
    """return (text, precedence) of molecular descriptor m"""
    if isinstance(m, AtomicDescriptor):
        return _format_atomic(m, symbols), _PREC_ATOM
    if isinstance(m, DescNot):
        text = _wrap(m.operand, symbols, _PREC_NOT)
        return ("¬" if symbols else "!") + text, _PREC_NOT
    if isinstance(m, (DescAnd, DescOr)):
        if isinstance(m, DescAnd):
            prec, op = _PREC_AND, (" ∧ " if symbols else " & ")
        else:
            prec, op = _PREC_OR, (" ∨ " if symbols else " | ")
        left = _wrap(m.left, symbols, prec)
        right = _wrap(m.right, symbols, prec + 1)
        return left + op + right, prec
    raise TypeError(f"not a molecular descriptor: {m!r}")


def _wrap(m, symbols, min_prec):
    text, prec = _format(m, symbols)
    return text if prec >= min_prec else f"({text})"


@dataclass(frozen=True)
class LiteralDescriptor:
    """view of a molecular descriptor of the form B(c) (positive) or !B(c)"""

    positive: bool
    atom: AtomicDescriptor

    @property
    def cond(self) -> Conditional:
        return self.atom.cond

    def __str__(self):
        return ("" if self.positive else "!") + str(self.atom)


def as_literal(m: MolecularDescriptor) -> Optional[LiteralDescriptor]:
    """return the literal view of m, or None if m isn't a literal"""
    if isinstance(m, AtomicDescriptor):
        return LiteralDescriptor(True, m)
    if isinstance(m, DescNot) and isinstance(m.operand, AtomicDescriptor):
        return LiteralDescriptor(False, m.operand)
    return None


class Descriptor:
    """a composite descriptor: an ordered set of molecular descriptors over sig

    Elements keep their first-occurrence order. An element whose key equals an earlier
    element's key is dropped with a DuplicateElementWarning.
    """

    __slots__ = ("_sig", "_elements")

    def __init__(self, sig: Signature, elements: Sequence[MolecularDescriptor] = ()):
        kept = []
        seen = set()
        for element in elements:
            key = element.key(sig)
            if key in seen:
                warnings.warn(
                    f"descriptor element {element} duplicates an earlier element and "
                    "was removed",
                    DuplicateElementWarning,
                )
                continue
            seen.add(key)
            kept.append(element)
        self._sig = sig
        self._elements = tuple(kept)

    @property
    def sig(self) -> Signature:
        return self._sig

    @property
    def elements(self) -> Tuple[MolecularDescriptor, ...]:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __eq__(self, other):
        if not isinstance(other, Descriptor):
            return NotImplemented
        return self._sig == other._sig and self._elements == other._elements

    def __hash__(self):
        return hash((self._sig, self._elements))

    def __repr__(self):
        return f"Descriptor({self._sig.atoms!r}, {self._elements!r})"

    def format(self, symbols: bool = False) -> str:
        return ", ".join(e.format(symbols) for e in self._elements)

    def __str__(self):
        return self.format()

    def union(self, other: "Descriptor") -> "Descriptor":
        """the descriptor holding the elements of both (as a set union)"""
        return Descriptor(self._sig, self._elements + other._elements)

    def holds(self, kappa: OCF) -> bool:
        return all(e.holds(kappa) for e in self._elements)

    def is_elementary(self) -> bool:
        return all(as_literal(e) is not None for e in self._elements)

    def literals(self) -> Tuple[LiteralDescriptor, ...]:
        """the literal views of all elements

        raises NotElementaryError if any element isn't a literal
        """
        lits = []
        for e in self._elements:
            lit = as_literal(e)
            if lit is None:
                raise NotElementaryError(
                    f"descriptor element {e} is not a literal B(...) or !B(...); only "
                    "elementary descriptors are supported here"
                )
            lits.append(lit)
        return tuple(lits)

    def conditionals(self) -> List[Conditional]:
        """cond(Psi): every conditional occurring in the descriptor

        Order is first occurrence. Conditionals with the same verifying and falsifying
        worlds count as one.
        """
        conds = []
        seen = set()
        for element in self._elements:
            for cond in element.conditionals():
                key = cond.key(self._sig)
                if key not in seen:
                    seen.add(key)
                    conds.append(cond)
        return conds

    def index_of(self, cond: Conditional) -> int:
        """0-based position of cond (by key) in conditionals()"""
        key = cond.key(self._sig)
        for i, c in enumerate(self.conditionals()):
            if c.key(self._sig) == key:
                return i
        raise ValueError(f"{cond} does not occur in the descriptor")


def holds(psi: Descriptor, kappa: OCF) -> bool:
    """kappa satisfies psi: every element holds, atomic B(c) reading as acceptance"""
    return psi.holds(kappa)


def is_elementary(psi: Descriptor) -> bool:
    return psi.is_elementary()


def cond_of(psi: Descriptor) -> List[Conditional]:
    return psi.conditionals()
