# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocf.py - ordinal conditional functions (ranking functions)

An OCF assigns a finite non-negative rank to every world of its signature, with at least
one world at rank 0. Lower rank means more plausible. The rank of a formula is the
minimum rank of its models (infinity if it has none), and a conditional (B|A) is
accepted iff rank(A & B) < rank(A & !B).

The belief set Bel(kappa) is never materialized as formulas: it's represented by its
model set, the rank-0 worlds. The conditional belief set Bel_C(kappa) is only available
as a membership query.
"""

from typing import Dict, Iterator, Mapping, Sequence, Tuple

from ocftools.logic.formula import (
    TOP,
    Conditional,
    Formula,
    disjoin,
    mask_worlds,
    model_mask,
    world_formula,
)
from ocftools.logic.signature import Signature, World
from ocftools.miscutils.errors import OcfToolsError
from ocftools.ranking.rank import INFINITY, Rank


class RankingError(OcfToolsError):
    """base class for ranking function related errors"""

    pass


class InvalidOcfError(RankingError):
    """error raised when a rank table isn't a valid OCF

    line: line number in the belief base file the problem was found at, if known
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SignatureMismatchError(RankingError):
    """error raised when two OCFs that should share a signature don't"""

    pass


class OCF:
    """an ordinal conditional function over sig

    ranks are stored in canonical world order. OCF instances are immutable.
    """

    __slots__ = ("_sig", "_ranks")

    def __init__(self, sig: Signature, ranks: Sequence[int]):
        """
        sig: the Signature
        ranks: one non-negative int per world, in canonical world order
        raises InvalidOcfError if the table is incomplete, has negative or non-integer
          ranks, or no rank 0
        """
        ranks = tuple(ranks)
        if len(ranks) != sig.num_worlds:
            raise InvalidOcfError(
                f"expected {sig.num_worlds} ranks for signature ({sig}), "
                f"got {len(ranks)}"
            )
        for index, r in enumerate(ranks):
            if isinstance(r, bool) or not isinstance(r, int):
                raise InvalidOcfError(
                    f"rank of world {sig.world(index)} is {r!r}, not an integer"
                )
            if r < 0:
                raise InvalidOcfError(f"rank of world {sig.world(index)} is negative")
        if 0 not in ranks:
            raise InvalidOcfError("no world has rank 0")
        self._sig = sig
        self._ranks = ranks

    @classmethod
    def from_mapping(cls, sig: Signature, ranks: Mapping[World, int]) -> "OCF":
        """build an OCF from a World -> rank mapping that covers every world once"""
        table = [None] * sig.num_worlds
        for world, r in ranks.items():
            if world.sig != sig:
                raise SignatureMismatchError(f"world {world} is not over ({sig})")
            table[world.index] = r
        missing = [str(sig.world(i)) for i, r in enumerate(table) if r is None]
        if missing:
            raise InvalidOcfError(f"no rank for worlds: {', '.join(missing)}")
        return cls(sig, table)

    @classmethod
    def uniform(cls, sig: Signature) -> "OCF":
        """the OCF that ranks every world 0"""
        return cls(sig, [0] * sig.num_worlds)

    @property
    def sig(self) -> Signature:
        return self._sig

    @property
    def ranks(self) -> Tuple[int, ...]:
        """ranks in canonical world order"""
        return self._ranks

    @property
    def max_rank(self) -> int:
        return max(self._ranks)

    def __getitem__(self, world: World) -> int:
        return self._ranks[world.index]

    def items(self) -> Iterator[Tuple[World, int]]:
        """yield (world, rank) in canonical world order"""
        return zip(self._sig.worlds(), self._ranks)

    def as_dict(self) -> Dict[str, int]:
        """{"b f !p": rank, ...} in canonical world order"""
        return {str(w): r for w, r in self.items()}

    def __eq__(self, other):
        if not isinstance(other, OCF):
            return NotImplemented
        return self._sig == other._sig and self._ranks == other._ranks

    def __hash__(self):
        return hash((self._sig, self._ranks))

    def __repr__(self):
        return f"OCF({self._sig.atoms!r}, {self._ranks!r})"

    # --- ranks of formulas ---

    def rank_of_mask(self, mask: int) -> Rank:
        """minimum rank of the worlds in mask, INFINITY if mask is empty"""
        best = None
        ranks = self._ranks
        index = 0
        while mask:
            if mask & 1:
                r = ranks[index]
                if best is None or r < best:
                    best = r
            mask >>= 1
            index += 1
        return INFINITY if best is None else Rank(best)

    def rank_of(self, f: Formula) -> Rank:
        """kappa(f) = min{kappa(w) | w |= f}, INFINITY if f is unsatisfiable"""
        return self.rank_of_mask(model_mask(f, self._sig))

    def accepts(self, c: Conditional) -> bool:
        """kappa |= (B|A) iff kappa(AB) < kappa(A!B)"""
        verifying = self.rank_of_mask(c.verifying_mask(self._sig))
        falsifying = self.rank_of_mask(c.falsifying_mask(self._sig))
        return verifying < falsifying

    def accepts_conditional_belief(self, c: Conditional) -> bool:
        """membership test for the conditional belief set Bel_C(kappa)"""
        return self.accepts(c)

    # --- propositional beliefs ---

    def belief_mask(self) -> int:
        """Mod(kappa) as a bitmask over world indices"""
        mask = 0
        for index, r in enumerate(self._ranks):
            if r == 0:
                mask |= 1 << index
        return mask

    def belief_models(self) -> Tuple[World, ...]:
        """Mod(kappa): the rank-0 worlds, in canonical order"""
        return mask_worlds(self.belief_mask(), self._sig)

    def believes(self, f: Formula) -> bool:
        """f is in Bel(kappa) iff every rank-0 world is a model of f"""
        belief_mask = self.belief_mask()
        return belief_mask & model_mask(f, self._sig) == belief_mask

    def belief_formula(self) -> Formula:
        """disjunction of the complete conjunctions of the rank-0 worlds"""
        if len(self.belief_models()) == self._sig.num_worlds:
            return TOP
        return disjoin(world_formula(w) for w in self.belief_models())


def rank_of(kappa: OCF, f: Formula) -> Rank:
    return kappa.rank_of(f)


def accepts(kappa: OCF, c: Conditional) -> bool:
    return kappa.accepts(c)


def belief_models(kappa: OCF) -> Tuple[World, ...]:
    return kappa.belief_models()


def believes(kappa: OCF, f: Formula) -> bool:
    return kappa.believes(f)


def accepts_conditional_belief(kappa: OCF, c: Conditional) -> bool:
    return kappa.accepts_conditional_belief(c)


def check_same_signature(*ocfs: OCF) -> Signature:
    """return the common signature of ocfs, raise SignatureMismatchError otherwise"""
    sigs = {o.sig for o in ocfs}
    if len(sigs) != 1:
        raise SignatureMismatchError(
            "ranking functions have different signatures: "
            + "; ".join(f"({s})" for s in sigs)
        )
    return sigs.pop()
