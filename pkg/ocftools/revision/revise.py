# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""revise.py - conditional descriptor revision of OCFs

revise() builds the constraint system for an elementary descriptor, solves it in a box
of impact bounds, and applies a selection policy (the choice function) to the solutions:
    "lex"      first solution in lexicographic impact order (the default)
    "min-sum"  smallest sum of absolute impacts, ties broken lexicographically
    Prefer(t)  the first solution whose posterior is t, else as "lex"
With no solutions there is no admissible successor and nothing is chosen.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Union

from ocftools.descriptor.catalogue import package_revision_by
from ocftools.descriptor.descriptor import Descriptor
from ocftools.logic.formula import Conditional
from ocftools.logic.signature import Signature
from ocftools.pcp.preservation import pcp_representable
from ocftools.ranking.ocf import OCF
from ocftools.revision.bounds import Bounds, resolve_bounds
from ocftools.revision.csp import RevisionError, build_csp
from ocftools.revision.solver import DEFAULT_MAX_LEAVES, Solution, solve

SELECT_LEX = "lex"
SELECT_MIN_SUM = "min-sum"
SELECT_POLICIES = (SELECT_LEX, SELECT_MIN_SUM)

STATUS_OK = "ok"
STATUS_NO_SUCCESSOR = "no admissible successor"


@dataclass(frozen=True)
class Prefer:
    """choice function picking target whenever it is among the candidates"""

    target: OCF

    def __str__(self):
        return "prefer"


SelectionPolicy = Union[str, Prefer]


def check_policy(select: SelectionPolicy) -> None:
    """raise RevisionError if select isn't a known selection policy"""
    if isinstance(select, Prefer):
        return
    if select not in SELECT_POLICIES:
        raise RevisionError(
            f"unknown selection policy {select!r}, expected one of "
            f"{', '.join(SELECT_POLICIES)}"
        )


def select_solution(
    solutions: Sequence[Solution], select: SelectionPolicy = SELECT_LEX
) -> Optional[Solution]:
    """apply the selection policy to solutions (which are in lexicographic order)"""
    check_policy(select)
    if not solutions:
        return None
    if isinstance(select, Prefer):
        for s in solutions:
            if s.posterior == select.target:
                return s
        return solutions[0]
    if select == SELECT_MIN_SUM:
        return min(solutions, key=lambda s: (s.gamma.abs_sum(), s.gamma.flat))
    return solutions[0]


def dedup_solutions(solutions: Sequence[Solution]) -> List[Solution]:
    """keep the first solution of each distinct posterior"""
    seen = set()
    kept = []
    for s in solutions:
        if s.posterior not in seen:
            seen.add(s.posterior)
            kept.append(s)
    return kept


@dataclass(frozen=True)
class RevisionResult:
    """outcome of revise()

    solutions: every solution found (deduplicated if asked), lexicographic order
    chosen: the solution the selection policy picked, None if there are none
    """

    prior: OCF
    descriptor: Descriptor
    conds: List[Conditional]
    bounds: Bounds
    solutions: List[Solution] = field(default_factory=list)
    chosen: Optional[Solution] = None

    @property
    def status(self) -> str:
        return STATUS_OK if self.chosen is not None else STATUS_NO_SUCCESSOR

    @property
    def posterior(self) -> Optional[OCF]:
        return None if self.chosen is None else self.chosen.posterior


def revise(
    kappa: OCF,
    psi: Descriptor,
    bounds: Optional[Bounds] = None,
    select: SelectionPolicy = SELECT_LEX,
    dedup: bool = False,
    workers: int = 1,
    max_leaves: int = DEFAULT_MAX_LEAVES,
    progressfunc: Optional[Callable] = None,
) -> RevisionResult:
    """revise kappa by the elementary descriptor psi

    bounds: impact bounds, default_bounds() if None (with a HeuristicBoundsWarning)
    select: selection policy, see module docstring
    dedup: drop solutions whose posterior equals an earlier solution's
    workers, max_leaves, progressfunc: passed on to solve()
    raises NotElementaryError if psi isn't elementary, RevisionError on an unknown
      policy, BudgetExceededError if the search is too large
    """
    check_policy(select)
    csp = build_csp(kappa, psi)
    if bounds is None:
        bounds = resolve_bounds(kappa, psi)
    solutions = solve(
        csp, bounds, workers=workers, max_leaves=max_leaves, progressfunc=progressfunc
    )
    if dedup:
        solutions = dedup_solutions(solutions)
    return RevisionResult(
        prior=kappa,
        descriptor=psi,
        conds=list(csp.conds),
        bounds=bounds,
        solutions=solutions,
        chosen=select_solution(solutions, select),
    )


def cross_check(solution: Solution, kappa: OCF, psi: Descriptor) -> bool:
    """validate a solution without the constraint system

    True iff the posterior satisfies psi and the change from kappa to it preserves the
    conditional structure of cond(psi)
    """
    if solution.posterior.sig != kappa.sig or not psi.holds(solution.posterior):
        return False
    return pcp_representable(kappa, solution.posterior, psi.conditionals()) is not None


def c_representations(
    sig: Signature,
    conds: Sequence[Conditional],
    bounds: Bounds,
    max_leaves: int = DEFAULT_MAX_LEAVES,
) -> List[Solution]:
    """the OCFs reached from the uniform OCF by accepting every conditional in conds"""
    psi = package_revision_by(sig, conds)
    result = revise(OCF.uniform(sig), psi, bounds, max_leaves=max_leaves)
    return result.solutions
