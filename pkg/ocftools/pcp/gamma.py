# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""gamma.py - impact vectors and the OCFs they induce

For conditionals c1..cn, an impact vector holds a pair (g_i+, g_i-) per conditional. A
world is shifted by g_i+ for every c_i it verifies and by g_i- for every c_i it
falsifies.
The induced OCF is
    kappa_g(w) = kappa0 + kappa(w) + shift(w)
with kappa0 the smallest integer that makes the result an OCF (minimum rank 0).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from ocftools.logic.formula import Conditional, Verdict
from ocftools.logic.signature import Signature, World
from ocftools.ranking.ocf import OCF

# a world's verdict on each conditional, in conditional order
ShiftProfile = Tuple[Verdict, ...]


def variable_names(num_conds: int) -> List[str]:
    """["g1+", "g1-", "g2+", ...], in flat (solver) order"""
    names = []
    for i in range(1, num_conds + 1):
        names.extend((f"g{i}+", f"g{i}-"))
    return names


@dataclass(frozen=True)
class GammaVector:
    """impacts (g_i+, g_i-) per conditional, conditional i at position i-1"""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((p, m) for p, m in self.pairs))

    @classmethod
    def zeros(cls, num_conds: int) -> "GammaVector":
        return cls(((0, 0),) * num_conds)

    @classmethod
    def from_flat(cls, values: Sequence[int]) -> "GammaVector":
        """from (g1+, g1-, g2+, g2-, ...)"""
        if len(values) % 2:
            raise ValueError(
                f"flat impact vector needs an even length, got {len(values)}"
            )
        return cls(tuple((values[i], values[i + 1]) for i in range(0, len(values), 2)))

    @property
    def flat(self) -> Tuple[int, ...]:
        """(g1+, g1-, g2+, g2-, ...)"""
        return tuple(v for pair in self.pairs for v in pair)

    def __len__(self):
        return len(self.pairs)

    def plus(self, i: int) -> int:
        """g_i+ for 0-based conditional position i"""
        return self.pairs[i][0]

    def minus(self, i: int) -> int:
        """g_i- for 0-based conditional position i"""
        return self.pairs[i][1]

    def as_dict(self) -> Dict[str, int]:
        """{"g1+": ..., "g1-": ..., ...} in flat order"""
        return dict(zip(variable_names(len(self.pairs)), self.flat))

    def abs_sum(self) -> int:
        return sum(abs(v) for v in self.flat)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.flat) + ")"


@lru_cache(maxsize=256)
def _profile_table(
    sig: Signature, conds: Tuple[Conditional, ...]
) -> Tuple[ShiftProfile, ...]:
    masks = [(c.verifying_mask(sig), c.falsifying_mask(sig)) for c in conds]
    table = []
    for index in range(sig.num_worlds):
        profile = []
        for verifying, falsifying in masks:
            if (verifying >> index) & 1:
                profile.append(Verdict.VERIFIES)
            elif (falsifying >> index) & 1:
                profile.append(Verdict.FALSIFIES)
            else:
                profile.append(Verdict.NOT_APPLICABLE)
        table.append(tuple(profile))
    return tuple(table)


def profile_table(
    sig: Signature, conds: Iterable[Conditional]
) -> Tuple[ShiftProfile, ...]:
    """shift profile of every world, in canonical world order"""
    return _profile_table(sig, tuple(conds))


def shift_profile(world: World, conds: Iterable[Conditional]) -> ShiftProfile:
    return profile_table(world.sig, conds)[world.index]


def _profile_shift(profile: ShiftProfile, gamma: GammaVector) -> int:
    shift = 0
    for verdict, (plus, minus) in zip(profile, gamma.pairs):
        if verdict is Verdict.VERIFIES:
            shift += plus
        elif verdict is Verdict.FALSIFIES:
            shift += minus
    return shift


def _check_length(conds, gamma):
    if len(conds) != len(gamma):
        raise ValueError(
            f"impact vector has {len(gamma)} pairs for {len(conds)} conditionals"
        )


def shift_of(world: World, conds: Sequence[Conditional], gamma: GammaVector) -> int:
    """sum of g_i+ over conditionals world verifies plus g_i- over those it falsifies"""
    conds = tuple(conds)
    _check_length(conds, gamma)
    return _profile_shift(shift_profile(world, conds), gamma)


def induce(
    kappa: OCF, conds: Sequence[Conditional], gamma: GammaVector
) -> Tuple[int, OCF]:
    """return (kappa0, kappa_g), the normalizing constant and the induced OCF"""
    conds = tuple(conds)
    _check_length(conds, gamma)
    profiles = profile_table(kappa.sig, conds)
    raw = [r + _profile_shift(p, gamma) for r, p in zip(kappa.ranks, profiles)]
    kappa0 = -min(raw)
    return kappa0, OCF(kappa.sig, [r + kappa0 for r in raw])


def induced_ocf(kappa: OCF, conds: Sequence[Conditional], gamma: GammaVector) -> OCF:
    """the OCF kappa_g induced by gamma on kappa"""
    return induce(kappa, conds, gamma)[1]
