# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""signature.py - propositional signatures and the worlds over them

A Signature is an ordered list of atom names. Its order fixes the bit layout of every
World: the first-declared atom is the most significant bit. Worlds are enumerated in
truth-table order (all atoms true first, all atoms false last), which is descending
unsigned order of the bit vector. A world's position in that enumeration is its index,
so index = 2^n - 1 - bits: index 0 is the all-true world, and sorting worlds by
ascending bits (unsigned integer order) gives the reverse of the canonical order.
"""

import re
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, Tuple

from ocftools.miscutils.errors import OcfToolsError

# largest signature for which the 2^n world table is built explicitly
DEFAULT_MAX_ATOMS = 16

# reserved words of the formula grammar, can't be used as atom names
RESERVED_NAMES = frozenset({"top", "bot"})

_identifier_re = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class LogicError(OcfToolsError):
    """base class for errors of the propositional logic layer"""

    pass


class SignatureError(LogicError):
    """error raised for an invalid signature declaration"""

    pass


class SignatureTooLarge(SignatureError):
    """error raised when a signature has too many atoms for an explicit world table"""

    pass


@dataclass(frozen=True)
class Signature:
    """ordered, duplicate-free list of atom names

    atoms: atom names in declaration order
    limit: maximum number of atoms, models() refuses signatures larger than this
    """

    atoms: Tuple[str, ...]
    limit: int = field(default=DEFAULT_MAX_ATOMS, compare=False)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise SignatureError("a signature needs at least one atom")
        for name in atoms:
            if not isinstance(name, str) or not _identifier_re.match(name):
                raise SignatureError(f"atom name {name!r} is not an identifier")
            if name in RESERVED_NAMES:
                raise SignatureError(f"atom name {name!r} is reserved")
        if len(set(atoms)) != len(atoms):
            dupes = sorted({a for a in atoms if atoms.count(a) > 1})
            raise SignatureError(f"duplicate atom names: {', '.join(dupes)}")
        if len(atoms) > self.limit:
            raise SignatureTooLarge(
                f"signature has {len(atoms)} atoms, the limit is {self.limit}"
            )

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __contains__(self, name):
        return name in self.atoms

    def __str__(self):
        return ", ".join(self.atoms)

    @property
    def num_worlds(self) -> int:
        return 1 << len(self.atoms)

    @property
    def full_mask(self) -> int:
        """bitmask (over world indices) containing every world"""
        return (1 << self.num_worlds) - 1

    def position(self, name: str) -> int:
        """return declaration position of atom name, raise KeyError if not declared"""
        try:
            return self.atoms.index(name)
        except ValueError:
            raise KeyError(name) from None

    def world(self, index: int) -> "World":
        """return the world at position index of the canonical enumeration"""
        if not 0 <= index < self.num_worlds:
            raise IndexError(f"world index {index} out of range")
        return World(self, self.num_worlds - 1 - index)

    def worlds(self) -> Iterator["World"]:
        """yield all worlds in canonical order"""
        for index in range(self.num_worlds):
            yield World(self, self.num_worlds - 1 - index)

    def world_from_literals(self, literals: Iterable[str]) -> "World":
        """return the world described by literals like ("b", "!f", "p")

        every atom must occur exactly once; raises SignatureError otherwise
        """
        truth = {}
        for literal in literals:
            name = literal[1:] if literal.startswith("!") else literal
            if name not in self.atoms:
                raise SignatureError(f"unknown atom {name!r} in world {literal!r}")
            if name in truth:
                raise SignatureError(f"atom {name!r} occurs more than once")
            truth[name] = not literal.startswith("!")
        missing = [a for a in self.atoms if a not in truth]
        if missing:
            raise SignatureError(f"world is missing atoms: {', '.join(missing)}")
        bits = 0
        for name in self.atoms:
            bits = (bits << 1) | int(truth[name])
        return World(self, bits)


@total_ordering
@dataclass(frozen=True)
class World:
    """a propositional interpretation over sig

    bits: bit (n-1-i) holds the truth value of atom i of sig
    Worlds sort in canonical (truth-table) order.
    """

    sig: Signature
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.sig.num_worlds:
            raise ValueError(f"bits {self.bits} don't fit a {len(self.sig)}-atom world")

    @property
    def index(self) -> int:
        """position of this world in the canonical enumeration"""
        return self.sig.num_worlds - 1 - self.bits

    def truth(self, name: str) -> bool:
        shift = len(self.sig) - 1 - self.sig.position(name)
        return bool((self.bits >> shift) & 1)

    def literals(self) -> Tuple[str, ...]:
        """return e.g. ("b", "!f", "p")"""
        return tuple(a if self.truth(a) else f"!{a}" for a in self.sig.atoms)

    def __str__(self):
        return " ".join(self.literals())

    def __lt__(self, other):
        if not isinstance(other, World):
            return NotImplemented
        return self.bits > other.bits
