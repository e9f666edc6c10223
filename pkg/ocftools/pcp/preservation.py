# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""preservation.py - the principle of conditional preservation (PCP)

A change from kappa to kappa_post preserves the conditional structure of conds iff, for
any two equally sized multisets of worlds that verify and falsify each conditional the
same number of times, the rank sums change by the same amount. Equivalently, iff there
are kappa0, g_i+, g_i- with
    kappa_post(w) = kappa0 + kappa(w) + shift(w)
for every world w (shift as in gamma.py).

pcp_representable() decides the second form exactly over the rationals. It needs one
equation per realized shift profile: all worlds of a profile class share a shift, so the
rank change delta(w) = kappa_post(w) - kappa(w) must be constant on each class, and the
resulting system must be consistent.

pcp_check_definition() tests the multiset form directly, for multisets up to a size. It
is a bounded validator, not a decision procedure.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from ocftools.logic.formula import Conditional, Verdict
from ocftools.logic.signature import World
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.pcp.gamma import GammaVector, ShiftProfile, profile_table, variable_names
from ocftools.pcp.linsolve import RationalSolution, elimination_for, is_integral
from ocftools.ranking.ocf import OCF, check_same_signature

DEFAULT_MAX_MULTISET = 2
DEFAULT_MAX_PAIRS = 1_000_000
DEFAULT_WITNESS_RADIUS = 2


def unknown_names(num_conds: int) -> List[str]:
    """names of the unknowns of the PCP system, in column order"""
    return ["k0"] + variable_names(num_conds)


def profile_classes(
    kappa: OCF, conds: Sequence[Conditional]
) -> Dict[ShiftProfile, List[World]]:
    """group the worlds of kappa's signature by shift profile

    classes are ordered by their first world in canonical order
    """
    classes = {}
    sig = kappa.sig
    for index, profile in enumerate(profile_table(sig, conds)):
        classes.setdefault(profile, []).append(sig.world(index))
    return classes


def _profile_row(profile):
    """coefficients of k0, g1+, g1-, ... in the equation of a profile class"""
    row = [1]
    for verdict in profile:
        row.append(int(verdict is Verdict.VERIFIES))
        row.append(int(verdict is Verdict.FALSIFIES))
    return tuple(row)


def format_profile(profile: ShiftProfile) -> str:
    """e.g. "vfn": verifies c1, falsifies c2, c3 not applicable"""
    return "".join(v.value for v in profile)


@dataclass(frozen=True)
class ProfileClassViolation:
    """a profile class on which the rank change isn't constant"""

    profile: ShiftProfile
    worlds: Tuple[World, ...]
    deltas: Tuple[int, ...]

    def __str__(self):
        changes = ", ".join(f"{w}: {d:+d}" for w, d in zip(self.worlds, self.deltas))
        return (
            f"profile class {format_profile(self.profile)} is shifted unevenly "
            f"({changes})"
        )


@dataclass(frozen=True)
class PcpWitness:
    """a rational solution of the PCP system, with its whole solution space

    kappa0, gammas: the particular solution, every free variable set to 0
    free: names of the free variables ("k0", "g1+", ...)
    basis: null-space directions over (k0, g1+, g1-, ...), one per free variable
    """

    kappa0: Fraction
    gammas: Tuple[Tuple[Fraction, Fraction], ...]
    free: Tuple[str, ...]
    basis: Tuple[Tuple[Fraction, ...], ...]
    solution: RationalSolution = field(repr=False, compare=False)
    equations: Tuple[Tuple[Tuple[int, ...], int], ...] = field(
        repr=False, compare=False
    )

    @property
    def vector(self) -> Tuple[Fraction, ...]:
        """(k0, g1+, g1-, ...)"""
        return self.solution.particular

    @property
    def is_integral(self) -> bool:
        return is_integral(self.vector)

    def satisfies(self, kappa0: int, gamma: GammaVector) -> bool:
        """True if (kappa0, gamma) lies in this witness's solution space"""
        x = (kappa0,) + gamma.flat
        if len(x) != len(self.vector):
            return False
        return all(
            sum(a * b for a, b in zip(row, x)) == rhs for row, rhs in self.equations
        )

    def integer_point(self, radius: int = DEFAULT_WITNESS_RADIUS):
        """search the solution space for an integral (kappa0, GammaVector)

        Free variables range over [-radius, radius]. Every free variable is itself an
        unknown, so only integer values of it can give an integral point.
        returns (kappa0, GammaVector) or None if none was found
        """
        if self.is_integral:
            x = self.vector
            return int(x[0]), GammaVector.from_flat([int(v) for v in x[1:]])
        ranges = [range(-radius, radius + 1)] * len(self.free)
        for params in sorted(product(*ranges), key=lambda p: (sum(map(abs, p)), p)):
            x = self.solution.point(params)
            if is_integral(x):
                return int(x[0]), GammaVector.from_flat([int(v) for v in x[1:]])
        return None

    def format(self) -> str:
        names = unknown_names(len(self.gammas))
        parts = [f"{name}={value}" for name, value in zip(names, self.vector)]
        text = ", ".join(parts)
        if self.free:
            text += f" (free: {', '.join(self.free)})"
        return text


def nonconstant_profile_class(
    kappa: OCF, kappa_post: OCF, conds: Sequence[Conditional]
) -> Optional[ProfileClassViolation]:
    """the first profile class whose worlds change rank by different amounts, or None"""
    check_same_signature(kappa, kappa_post)
    for profile, worlds in profile_classes(kappa, conds).items():
        deltas = tuple(kappa_post[w] - kappa[w] for w in worlds)
        if len(set(deltas)) > 1:
            return ProfileClassViolation(profile, tuple(worlds), deltas)
    return None


def pcp_representable(
    kappa: OCF, kappa_post: OCF, conds: Sequence[Conditional]
) -> Optional[PcpWitness]:
    """return a PcpWitness if the change kappa -> kappa_post satisfies PCP w.r.t. conds

    returns None if some profile class changes unevenly or the system is inconsistent.
    raises SignatureMismatchError if the OCFs have different signatures
    """
    conds = tuple(conds)
    check_same_signature(kappa, kappa_post)

    # 1. one equation per realized profile class, with a constant rank change
    rows, rhs = [], []
    for profile, worlds in profile_classes(kappa, conds).items():
        deltas = {kappa_post[w] - kappa[w] for w in worlds}
        if len(deltas) > 1:
            return None
        rows.append(_profile_row(profile))
        rhs.append(deltas.pop())

    # 2. solve exactly
    solution = elimination_for(rows).solve(rhs)
    if solution is None:
        return None
    names = unknown_names(len(conds))
    x = solution.particular
    return PcpWitness(
        kappa0=x[0],
        gammas=tuple((x[1 + 2 * i], x[2 + 2 * i]) for i in range(len(conds))),
        free=tuple(names[c] for c in solution.free),
        basis=solution.basis,
        solution=solution,
        equations=tuple(zip(rows, rhs)),
    )


def _counts(worlds_profiles, num_conds):
    """per-conditional (verify count, falsify count) of a multiset of profiles"""
    counts = []
    for i in range(num_conds):
        verdicts = Counter(p[i] for p in worlds_profiles)
        counts.append((verdicts[Verdict.VERIFIES], verdicts[Verdict.FALSIFIES]))
    return tuple(counts)


@dataclass(frozen=True)
class Imbalance:
    """two count-matched multisets whose rank sums change by different amounts

    prior_difference: sum kappa(omega1) - sum kappa(omega2)
    post_difference: the same for kappa_post
    """

    omega1: Tuple[World, ...]
    omega2: Tuple[World, ...]
    prior_difference: int
    post_difference: int

    def __str__(self):
        o1 = ", ".join(str(w) for w in self.omega1)
        o2 = ", ".join(str(w) for w in self.omega2)
        return (
            f"{{{o1}}} vs {{{o2}}}: prior difference {self.prior_difference}, "
            f"posterior difference {self.post_difference}"
        )


def balance(
    kappa: OCF,
    kappa_post: OCF,
    conds: Sequence[Conditional],
    omega1: Sequence[World],
    omega2: Sequence[World],
) -> Tuple[int, int]:
    """return (sum kappa(omega1) - sum kappa(omega2), same for kappa_post)

    PCP requires the two to be equal. raises ValueError if the multisets differ in size
    or don't verify and falsify each conditional equally often
    """
    check_same_signature(kappa, kappa_post)
    if len(omega1) != len(omega2):
        raise ValueError(f"multisets have sizes {len(omega1)} and {len(omega2)}")
    table = profile_table(kappa.sig, conds)
    counts1 = _counts([table[w.index] for w in omega1], len(conds))
    counts2 = _counts([table[w.index] for w in omega2], len(conds))
    if counts1 != counts2:
        raise ValueError(
            "multisets don't verify and falsify each conditional equally often"
        )
    prior = sum(kappa[w] for w in omega1) - sum(kappa[w] for w in omega2)
    post = sum(kappa_post[w] for w in omega1) - sum(kappa_post[w] for w in omega2)
    return prior, post


def num_multisets(num_worlds: int, max_size: int) -> int:
    """number of non-empty multisets of worlds with at most max_size elements"""
    return sum(comb(num_worlds + m - 1, m) for m in range(1, max_size + 1))


def find_imbalance(
    kappa: OCF,
    kappa_post: OCF,
    conds: Sequence[Conditional],
    m_max: int = DEFAULT_MAX_MULTISET,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> Optional[Imbalance]:
    """first pair of count-matched multisets (size <= m_max) that breaks PCP, or None

    Every multiset is compared with the first multiset of its (size, counts) group, so
    the number of pairs compared is the number of multisets.
    raises BudgetExceededError if that exceeds max_pairs
    """
    conds = tuple(conds)
    sig = check_same_signature(kappa, kappa_post)
    needed = num_multisets(sig.num_worlds, m_max)
    if needed > max_pairs:
        raise BudgetExceededError("checking multiset pairs", max_pairs, needed)

    table = profile_table(sig, conds)
    deltas = [p - r for p, r in zip(kappa_post.ranks, kappa.ranks)]
    for m in range(1, m_max + 1):
        first_of_group = {}
        for multiset in combinations_with_replacement(range(sig.num_worlds), m):
            key = _counts([table[i] for i in multiset], len(conds))
            delta_sum = sum(deltas[i] for i in multiset)
            if key not in first_of_group:
                first_of_group[key] = (multiset, delta_sum)
                continue
            other, other_sum = first_of_group[key]
            if delta_sum != other_sum:
                omega1 = tuple(sig.world(i) for i in other)
                omega2 = tuple(sig.world(i) for i in multiset)
                prior, post = balance(kappa, kappa_post, conds, omega1, omega2)
                return Imbalance(omega1, omega2, prior, post)
    return None


def pcp_check_definition(
    kappa: OCF,
    kappa_post: OCF,
    conds: Sequence[Conditional],
    m_max: int = DEFAULT_MAX_MULTISET,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> bool:
    """True if no count-matched multiset pair of size <= m_max breaks PCP"""
    return find_imbalance(kappa, kappa_post, conds, m_max, max_pairs) is None


def explain_nonrepresentable(
    kappa: OCF, kappa_post: OCF, conds: Sequence[Conditional]
) -> str:
    """why the change kappa -> kappa_post has no PcpWitness, for messages"""
    violation = nonconstant_profile_class(kappa, kappa_post, conds)
    if violation is not None:
        return str(violation)
    names = ", ".join(unknown_names(len(conds)))
    return f"the rank changes of the profile classes have no solution in ({names})"
