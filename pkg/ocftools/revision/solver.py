# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""solver.py - enumerate every impact vector in a box that satisfies a Csp

Depth-first search over the variables in flat order g1+, g1-, g2+, ..., each trying its
values in increasing order, so solutions come out in lexicographic order. Every leaf is
decided by the exact constraint evaluation.

Interior nodes are pruned with interval bounds: every world's shifted rank lies between
its value with all unassigned variables at their lower bounds (lo) and at their upper
bounds (hi). A literal B(c_i) is hopeless once min over V_i of lo >= min over F_i of hi,
and !B(c_i) is hopeless once min over V_i of hi < min over F_i of lo. Pruning never
changes the solution set.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ocftools.logic.formula import Verdict
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.pcp.gamma import GammaVector, induce, variable_names
from ocftools.ranking.ocf import OCF
from ocftools.revision.bounds import Bounds, BoundsError
from ocftools.revision.csp import Csp, difference_holds

DEFAULT_MAX_LEAVES = 2_000_000

ProgressFunc = Callable[[str, int, int, int], None]


@dataclass(frozen=True)
class Solution:
    """a solution of a Csp: impacts, normalizing constant and the induced posterior"""

    gamma: GammaVector
    kappa0: int
    posterior: OCF

    def as_dict(self) -> Dict:
        """{"gamma": {...}, "kappa0": int, "posterior": {world: rank}}"""
        return {
            "gamma": self.gamma.as_dict(),
            "kappa0": self.kappa0,
            "posterior": self.posterior.as_dict(),
        }


class _Search:
    """one depth-first search over a (sub)box, counting evaluated leaves"""

    def __init__(self, csp: Csp, bounds: Bounds, max_leaves: int):
        self.csp = csp
        self.intervals = bounds.intervals
        self.max_leaves = max_leaves
        self.leaves = 0
        self.num_vars = csp.num_vars
        ranks = csp.kappa.ranks

        # worlds each variable shifts: var 2j is g_j+ (verifiers), 2j+1 is g_j-
        profiles = csp.profiles
        self.var_worlds = [[] for _ in range(self.num_vars)]
        for w, profile in enumerate(profiles):
            for j, verdict in enumerate(profile):
                if verdict is Verdict.VERIFIES:
                    self.var_worlds[2 * j].append(w)
                elif verdict is Verdict.FALSIFIES:
                    self.var_worlds[2 * j + 1].append(w)

        # shifted ranks with every variable at its lower/upper bound
        self.lo0 = list(ranks)
        self.hi0 = list(ranks)
        for var, (lo, hi) in enumerate(self.intervals):
            for w in self.var_worlds[var]:
                self.lo0[w] += lo
                self.hi0[w] += hi

    def hopeless(self, lo_ranks, hi_ranks) -> bool:
        for c in self.csp.constraints:
            if c.positive:
                if not c.verifying:
                    return True
                if not c.falsifying:
                    continue
                v_lo = min(lo_ranks[w] for w in c.verifying)
                f_hi = min(hi_ranks[w] for w in c.falsifying)
                if v_lo >= f_hi:
                    return True
            else:
                if not c.verifying:
                    continue
                if not c.falsifying:
                    return True
                v_hi = min(hi_ranks[w] for w in c.verifying)
                f_lo = min(lo_ranks[w] for w in c.falsifying)
                if v_hi < f_lo:
                    return True
        return False

    def leaf_holds(self, ranks, values) -> bool:
        for c in self.csp.constraints:
            g_plus, g_minus = values[2 * c.index], values[2 * c.index + 1]
            # each V_i world carries g_i+ and each F_i world g_i-, take them back out
            v_min = min(ranks[w] for w in c.verifying) - g_plus if c.verifying else None
            f_min = (
                min(ranks[w] for w in c.falsifying) - g_minus if c.falsifying else None
            )
            if not difference_holds(c.positive, v_min, f_min, g_plus, g_minus):
                return False
        return True

    def run(self, prefix=()) -> List[Tuple[int, ...]]:
        """all solutions whose first variables equal prefix, in lexicographic order"""
        lo_ranks, hi_ranks = list(self.lo0), list(self.hi0)
        for var, value in enumerate(prefix):
            self._assign(lo_ranks, hi_ranks, var, value)
        found = []
        self._dfs(len(prefix), list(prefix), lo_ranks, hi_ranks, found)
        return found

    def _assign(self, lo_ranks, hi_ranks, var, value):
        lo, hi = self.intervals[var]
        for w in self.var_worlds[var]:
            lo_ranks[w] += value - lo
            hi_ranks[w] += value - hi

    def _dfs(self, var, values, lo_ranks, hi_ranks, found):
        if var == self.num_vars:
            self.leaves += 1
            if self.leaves > self.max_leaves:
                raise BudgetExceededError("solving", self.max_leaves)
            if self.leaf_holds(lo_ranks, values):
                found.append(tuple(values))
            return
        if self.hopeless(lo_ranks, hi_ranks):
            return
        lo, hi = self.intervals[var]
        worlds = self.var_worlds[var]
        for value in range(lo, hi + 1):
            child_lo, child_hi = list(lo_ranks), list(hi_ranks)
            for w in worlds:
                child_lo[w] += value - lo
                child_hi[w] += value - hi
            values.append(value)
            self._dfs(var + 1, values, child_lo, child_hi, found)
            values.pop()


def _solve_partition(csp, bounds, max_leaves, first_value):
    search = _Search(csp, bounds, max_leaves)
    found = search.run((first_value,))
    return found, search.leaves


def _to_solution(csp, flat):
    gamma = GammaVector.from_flat(flat)
    kappa0, posterior = induce(csp.kappa, csp.conds, gamma)
    return Solution(gamma, kappa0, posterior)


def solve(
    csp: Csp,
    bounds: Bounds,
    workers: int = 1,
    max_leaves: int = DEFAULT_MAX_LEAVES,
    progressfunc: Optional[ProgressFunc] = None,
) -> List[Solution]:
    """every impact vector within bounds that satisfies csp, with its posterior

    Solutions are sorted lexicographically by (g1+, g1-, g2+, ...). The result doesn't
    depend on workers.
    workers: processes to split the values of g1+ across (1 = search in this process)
    max_leaves: most grid points to evaluate before giving up
    progressfunc: called as progressfunc(name, value, position, count) before each
      value of the first variable is searched
    raises BoundsError if bounds don't match csp, BudgetExceededError if the search
      evaluates more than max_leaves grid points
    """
    if len(bounds) != csp.num_vars:
        raise BoundsError(
            f"bounds cover {bounds.num_conds} conditionals, the constraint system has "
            f"{len(csp.conds)}"
        )
    if csp.num_vars == 0:
        return [_to_solution(csp, ())] if csp.evaluate(GammaVector(())) else []

    name = variable_names(len(csp.conds))[0]
    lo, hi = bounds.intervals[0]
    first_values = range(lo, hi + 1)
    flats = []
    leaves = 0

    if workers <= 1 or len(first_values) == 1:
        search = _Search(csp, bounds, max_leaves)
        for position, value in enumerate(first_values, start=1):
            if progressfunc is not None:
                progressfunc(name, value, position, len(first_values))
            flats.extend(search.run((value,)))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_solve_partition, csp, bounds, max_leaves, value)
                for value in first_values
            ]
            for position, (value, future) in enumerate(
                zip(first_values, futures), start=1
            ):
                if progressfunc is not None:
                    progressfunc(name, value, position, len(first_values))
                found, part_leaves = future.result()
                flats.extend(found)
                leaves += part_leaves
        if leaves > max_leaves:
            raise BudgetExceededError("solving", max_leaves)

    flats.sort()
    return [_to_solution(csp, flat) for flat in flats]
