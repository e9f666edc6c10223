# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""completeness.py - brute-force checks of the revision machinery on small instances

completeness_report: every OCF in a rank box that satisfies the descriptor and is
  reachable under conditional preservation must come out of the constraint system, i.e.
  an integer witness of the change solves the constraints and induces exactly that OCF.
constraint_equivalence: at every point of an impact box, the constraint system and
  direct acceptance on the induced OCF must agree.
soundness_report: every solution the solver finds must pass cross_check.

None of these use the solver's own search to decide what is correct.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from ocftools.descriptor.descriptor import Descriptor
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.oracle.enumeration import DEFAULT_MAX_OCFS, enumerate_rank_tables
from ocftools.pcp.gamma import GammaVector, induce
from ocftools.pcp.preservation import DEFAULT_WITNESS_RADIUS, pcp_representable
from ocftools.ranking.ocf import OCF
from ocftools.revision.bounds import Bounds
from ocftools.revision.csp import Csp, build_csp
from ocftools.revision.revise import cross_check
from ocftools.revision.solver import DEFAULT_MAX_LEAVES, Solution, solve

DEFAULT_MAX_POINTS = 1_000_000
PROGRESS_INTERVAL = 100_000


@dataclass(frozen=True)
class CompletenessViolation:
    posterior: OCF
    kappa0: int
    gamma: GammaVector
    reason: str

    def __str__(self):
        ranks = " ".join(str(r) for r in self.posterior.ranks)
        return (
            f"posterior [{ranks}] with k0={self.kappa0} g={self.gamma}: {self.reason}"
        )


@dataclass
class CompletenessReport:
    """outcome of completeness_report()

    examined: OCFs enumerated
    satisfying: of those, how many satisfy the descriptor
    representable: of those, how many are reachable under conditional preservation
    integer_witnesses: of those, how many have an integer witness within the radius
    rational_only: representable ones with no integer witness within the search radius,
      each of them is also reported as a violation
    needed_box: smallest box of impact bounds containing every integer witness used
    """

    examined: int = 0
    satisfying: int = 0
    representable: int = 0
    integer_witnesses: int = 0
    rational_only: int = 0
    violations: List[CompletenessViolation] = field(default_factory=list)
    needed_box: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _widen(self, gamma: GammaVector):
        for name, value in gamma.as_dict().items():
            lo, hi = self.needed_box.get(name, (value, value))
            self.needed_box[name] = (min(lo, value), max(hi, value))

    def as_dict(self) -> Dict:
        return {
            "examined": self.examined,
            "satisfying": self.satisfying,
            "representable": self.representable,
            "integer_witnesses": self.integer_witnesses,
            "rational_only": self.rational_only,
            "violations": [str(v) for v in self.violations],
            "needed_box": {n: list(iv) for n, iv in self.needed_box.items()},
        }

    def format(self) -> str:
        lines = [
            f"examined: {self.examined}",
            f"satisfying: {self.satisfying}",
            f"representable: {self.representable}",
            f"integer witnesses: {self.integer_witnesses}",
            f"rational-only: {self.rational_only}",
            f"violations: {len(self.violations)}",
        ]
        lines.extend(f"  {v}" for v in self.violations)
        if self.needed_box:
            box = ",".join(f"{n}={lo}..{hi}" for n, (lo, hi) in self.needed_box.items())
            lines.append(f"needed box: {box}")
        else:
            lines.append("needed box: (none)")
        return "\n".join(lines)


def _accepts(ranks, verifying, falsifying):
    """acceptance straight from a rank table: min over V < min over F"""
    if not verifying:
        return False
    if not falsifying:
        return True
    return min(ranks[w] for w in verifying) < min(ranks[w] for w in falsifying)


def completeness_report(
    kappa: OCF,
    psi: Descriptor,
    max_rank: int,
    max_ocfs: int = DEFAULT_MAX_OCFS,
    witness_radius: int = DEFAULT_WITNESS_RADIUS,
    progressfunc: Optional[Callable[[int], None]] = None,
) -> CompletenessReport:
    """check every OCF with ranks in [0, max_rank] against the constraint system of psi

    progressfunc: called with the number of OCFs examined so far, every 100000 OCFs
    raises NotElementaryError if psi isn't elementary, BudgetExceededError if the rank
      box holds more than max_ocfs OCFs
    """
    csp = build_csp(kappa, psi)
    conds = list(csp.conds)
    literals = [(c.positive, c.verifying, c.falsifying) for c in csp.constraints]
    report = CompletenessReport()

    for ranks in enumerate_rank_tables(kappa.sig, max_rank, max_ocfs):
        report.examined += 1
        if progressfunc is not None and report.examined % PROGRESS_INTERVAL == 0:
            progressfunc(report.examined)

        # 1. does the candidate satisfy psi?
        if any(_accepts(ranks, v, f) != positive for positive, v, f in literals):
            continue
        report.satisfying += 1

        # 2. is the change representable?
        posterior = OCF(kappa.sig, ranks)
        witness = pcp_representable(kappa, posterior, conds)
        if witness is None:
            continue
        report.representable += 1

        # 3. an integer witness must solve the constraints and induce the candidate
        point = witness.integer_point(witness_radius)
        if point is None:
            report.rational_only += 1
            report.violations.append(
                CompletenessViolation(
                    posterior,
                    witness.kappa0,
                    GammaVector(witness.gammas),
                    f"no integer witness within radius {witness_radius}",
                )
            )
            continue
        report.integer_witnesses += 1
        kappa0, gamma = point
        report._widen(gamma)
        if not csp.evaluate(gamma):
            report.violations.append(
                CompletenessViolation(
                    posterior, kappa0, gamma, "witness violates the constraint system"
                )
            )
        elif induce(kappa, conds, gamma)[1] != posterior:
            report.violations.append(
                CompletenessViolation(
                    posterior, kappa0, gamma, "witness induces a different OCF"
                )
            )
    return report


@dataclass(frozen=True)
class EquivalenceMismatch:
    gamma: GammaVector
    constraints_hold: bool
    descriptor_holds: bool

    def __str__(self):
        return (
            f"g={self.gamma}: constraints {self.constraints_hold}, "
            f"direct check {self.descriptor_holds}"
        )


def constraint_equivalence(
    csp: Csp, bounds: Bounds, max_points: int = DEFAULT_MAX_POINTS
) -> List[EquivalenceMismatch]:
    """every point of the box where the constraints and direct acceptance disagree

    Direct acceptance: each literal B(c)/!B(c) checked on the induced OCF itself.
    raises BudgetExceededError if the box has more than max_points points
    """
    if bounds.grid_size > max_points:
        raise BudgetExceededError("checking grid points", max_points, bounds.grid_size)
    mismatches = []
    ranges = [range(lo, hi + 1) for lo, hi in bounds.intervals]
    for flat in product(*ranges):
        gamma = GammaVector.from_flat(flat)
        by_constraints = csp.evaluate(gamma)
        posterior = induce(csp.kappa, csp.conds, gamma)[1]
        directly = all(
            posterior.accepts(csp.conds[c.index]) == c.positive for c in csp.constraints
        )
        if by_constraints != directly:
            mismatches.append(EquivalenceMismatch(gamma, by_constraints, directly))
    return mismatches


@dataclass
class SoundnessReport:
    solutions: List[Solution] = field(default_factory=list)
    failures: List[Solution] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def soundness_report(
    kappa: OCF, psi: Descriptor, bounds: Bounds, max_leaves: int = DEFAULT_MAX_LEAVES
) -> SoundnessReport:
    """solve, then cross_check every solution and check it is normalized"""
    csp = build_csp(kappa, psi)
    report = SoundnessReport(solve(csp, bounds, max_leaves=max_leaves))
    for s in report.solutions:
        if min(s.posterior.ranks) != 0 or not cross_check(s, kappa, psi):
            report.failures.append(s)
    return report
