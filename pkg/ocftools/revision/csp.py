# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""csp.py - the constraint system of revising an OCF by an elementary descriptor

For each literal on conditional c_i = (B_i|A_i), with V_i the worlds verifying c_i and
F_i the worlds falsifying it, let
    minV = min over w in V_i of kappa(w) + (impacts of every other conditional on w)
    minF = min over w in F_i of the same
where the impact of c_j on w is g_j+ if w verifies c_j, g_j- if w falsifies it, else 0.
Then
    B(c_i)   requires  g_i- - g_i+ >  minV - minF
    !B(c_i)  requires  g_i- - g_i+ <= minV - minF
An empty V_i makes B(c_i) unsatisfiable and !B(c_i) true. Otherwise an empty F_i makes
B(c_i) true and !B(c_i) unsatisfiable.

The impacts satisfying every constraint are exactly those whose induced OCF satisfies
the descriptor.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ocftools.descriptor.descriptor import Descriptor
from ocftools.logic.formula import Conditional, Verdict
from ocftools.miscutils.errors import OcfToolsError
from ocftools.pcp.gamma import GammaVector, ShiftProfile, profile_table
from ocftools.ranking.ocf import OCF, SignatureMismatchError


class RevisionError(OcfToolsError):
    """base class for revision related errors"""

    pass


@dataclass(frozen=True)
class LiteralConstraint:
    """the constraint of one descriptor literal

    index: 0-based position of the literal's conditional in Csp.conds
    positive: True for B(c), False for !B(c)
    verifying, falsifying: world indices of V_i and F_i
    """

    index: int
    positive: bool
    verifying: Tuple[int, ...]
    falsifying: Tuple[int, ...]

    def __post_init__(self):
        if set(self.verifying) & set(self.falsifying):
            raise ValueError("a world can't both verify and falsify a conditional")

    def format(self, conds: Sequence[Conditional]) -> str:
        i = self.index + 1
        op, sign = (">", "") if self.positive else ("<=", "!")
        return f"g{i}- - g{i}+ {op} minV - minF  ({sign}B{conds[self.index]})"


def difference_holds(
    positive: bool,
    min_verifying: Optional[int],
    min_falsifying: Optional[int],
    g_plus: int,
    g_minus: int,
) -> bool:
    """decide a literal's constraint from minV and minF (None meaning an empty set)"""
    if min_verifying is None:
        return not positive
    if min_falsifying is None:
        return positive
    if positive:
        return g_minus - g_plus > min_verifying - min_falsifying
    return g_minus - g_plus <= min_verifying - min_falsifying


@dataclass(frozen=True)
class Csp:
    """constraint system for revising kappa by an elementary descriptor

    conds: cond(Psi) in order; impact variables g1+, g1-, ... follow this order
    constraints: one per literal, in descriptor order
    """

    kappa: OCF
    conds: Tuple[Conditional, ...]
    constraints: Tuple[LiteralConstraint, ...]

    @property
    def num_vars(self) -> int:
        return 2 * len(self.conds)

    @property
    def profiles(self) -> Tuple[ShiftProfile, ...]:
        return profile_table(self.kappa.sig, self.conds)

    def evaluate(self, gamma: GammaVector) -> bool:
        """True if gamma satisfies every constraint"""
        return all(
            eval_constraint(c, self.kappa, self.conds, gamma) for c in self.constraints
        )

    def format(self) -> str:
        return "\n".join(c.format(self.conds) for c in self.constraints)


def build_csp(kappa: OCF, psi: Descriptor) -> Csp:
    """the constraint system of revising kappa by psi

    raises NotElementaryError if psi isn't elementary, SignatureMismatchError if psi
    and kappa are over different signatures
    """
    if psi.sig != kappa.sig:
        raise SignatureMismatchError(
            f"descriptor is over ({psi.sig}) but the OCF is over ({kappa.sig})"
        )
    literals = psi.literals()
    conds = tuple(psi.conditionals())
    profiles = profile_table(kappa.sig, conds)
    constraints = []
    for literal in literals:
        index = psi.index_of(literal.cond)
        verifying = tuple(
            w for w, p in enumerate(profiles) if p[index] is Verdict.VERIFIES
        )
        falsifying = tuple(
            w for w, p in enumerate(profiles) if p[index] is Verdict.FALSIFIES
        )
        constraints.append(
            LiteralConstraint(index, literal.positive, verifying, falsifying)
        )
    return Csp(kappa, conds, tuple(constraints))


def _other_impacts(profile, gamma, skip):
    total = 0
    for j, verdict in enumerate(profile):
        if j == skip:
            continue
        if verdict is Verdict.VERIFIES:
            total += gamma.plus(j)
        elif verdict is Verdict.FALSIFIES:
            total += gamma.minus(j)
    return total


def eval_constraint(
    c: LiteralConstraint,
    kappa: OCF,
    conds: Sequence[Conditional],
    gamma: GammaVector,
) -> bool:
    """evaluate constraint c at a fully assigned impact vector gamma"""
    profiles = profile_table(kappa.sig, tuple(conds))
    ranks = kappa.ranks

    def side_min(worlds):
        if not worlds:
            return None
        return min(
            ranks[w] + _other_impacts(profiles[w], gamma, c.index) for w in worlds
        )

    return difference_holds(
        c.positive,
        side_min(c.verifying),
        side_min(c.falsifying),
        gamma.plus(c.index),
        gamma.minus(c.index),
    )
