# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""test_revision.py - test the constraint system, impact bounds and revise()"""

import random
import warnings

import pytest

from ocftools.descriptor.descriptor import DuplicateElementWarning, NotElementaryError
from ocftools.descriptor.parser import parse_descriptor
from ocftools.logic.parser import parse_conditional_list
from ocftools.logic.signature import Signature
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.pcp.gamma import GammaVector
from ocftools.pcp.preservation import pcp_representable
from ocftools.ranking.ocf import OCF
from ocftools.revision.bounds import (
    Bounds,
    BoundsError,
    BoundsSyntaxError,
    HeuristicBoundsWarning,
    default_bounds,
    parse_bounds,
    resolve_bounds,
)
from ocftools.revision.csp import RevisionError, build_csp, difference_holds
from ocftools.revision.revise import (
    SELECT_MIN_SUM,
    STATUS_NO_SUCCESSOR,
    STATUS_OK,
    Prefer,
    c_representations,
    cross_check,
    dedup_solutions,
    revise,
)
from ocftools.revision.solver import Solution, solve
from tests.common import (
    AB_SIG,
    PENGUIN_BOUNDS_TEXT,
    PENGUIN_GAMMA,
    PENGUIN_POSTERIOR_RANKS,
    PENGUIN_SIG,
    penguin_descriptor,
    penguin_posterior,
    penguin_prior,
)

# every solution of the penguin revision inside PENGUIN_BOUNDS_TEXT
PENGUIN_SOLUTIONS = [
    (-2, 0, -1, 0, 0, 0),
    (-2, 1, -1, 0, 0, 0),
    (-2, 1, 0, 1, 0, 0),
    (-2, 2, -1, 0, 0, 0),
    (-2, 2, 0, 1, 0, 0),
    (-1, 1, -1, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0),
    (-1, 2, 0, 1, 0, 0),
    (0, 2, -1, 0, 0, 0),
]


def penguin_bounds():
    return Bounds.from_mapping(3, parse_bounds(PENGUIN_BOUNDS_TEXT))


def revise_penguin(**kwargs):
    return revise(penguin_prior(), penguin_descriptor(), penguin_bounds(), **kwargs)


@pytest.mark.parametrize(
    "positive, min_v, min_f, g_plus, g_minus, expected",
    [
        (True, None, 3, 0, 0, False),
        (False, None, 3, 0, 0, True),
        (True, None, None, 0, 0, False),
        (False, None, None, 0, 0, True),
        (True, 1, None, 0, 0, True),
        (False, 1, None, 0, 0, False),
        (True, 2, 1, 0, 2, True),
        (True, 2, 1, 0, 1, False),
        (False, 2, 1, 0, 1, True),
        (False, 2, 1, 0, 2, False),
    ],
)
def test_difference_holds(positive, min_v, min_f, g_plus, g_minus, expected):
    assert difference_holds(positive, min_v, min_f, g_plus, g_minus) is expected


def test_build_csp_penguin():
    csp = build_csp(penguin_prior(), penguin_descriptor())
    assert csp.num_vars == 6
    first = csp.constraints[0]
    assert (first.index, first.positive) == (0, True)
    assert first.verifying == (0, 2)
    assert first.falsifying == (1, 3)
    assert csp.format().splitlines() == [
        "g1- - g1+ > minV - minF  (B(p|b))",
        "g2- - g2+ <= minV - minF  (!B(f|p))",
        "g3- - g3+ <= minV - minF  (!B(!f|p))",
    ]
    assert csp.evaluate(GammaVector.from_flat(PENGUIN_GAMMA))
    assert not csp.evaluate(GammaVector.zeros(3))


def test_build_csp_not_elementary():
    with pytest.raises(NotElementaryError):
        build_csp(penguin_prior(), parse_descriptor("B(p) | B(f)", PENGUIN_SIG))


def test_parse_bounds():
    intervals = parse_bounds(PENGUIN_BOUNDS_TEXT)
    assert intervals["g1+"] == (-2, 0)
    assert intervals["g3-"] == (0, 0)
    assert parse_bounds(" g1+ = -1 .. 1 ") == {"g1+": (-1, 1)}
    assert parse_bounds("") == {}
    bounds = penguin_bounds()
    assert bounds.grid_size == 81
    assert bounds.format() == PENGUIN_BOUNDS_TEXT
    assert bounds.interval("g2-") == (-1, 1)
    assert bounds.contains(PENGUIN_GAMMA)
    assert not bounds.contains((1, 2, -1, 0, 0, 0))


@pytest.mark.parametrize("text", ["g1+=-2..", "g1=0..1", "h1+=0..1", "g0+=0..1"])
def test_bounds_syntax_errors(text):
    with pytest.raises(BoundsSyntaxError):
        parse_bounds(text)


def test_bounds_errors():
    with pytest.raises(BoundsError):
        parse_bounds("g1+=0..1,g1+=0..1")
    with pytest.raises(BoundsError):
        parse_bounds("g1+=2..1")
    with pytest.raises(BoundsError):
        Bounds.from_mapping(1, {"g1+": (0, 1), "g2+": (0, 1)}, (0, 0))
    with pytest.raises(BoundsError):
        Bounds.from_mapping(1, {"g1+": (0, 1)})
    with pytest.raises(BoundsError):
        Bounds(((0, 1),))


def test_resolve_bounds_warns_on_defaults():
    kappa, psi = penguin_prior(), penguin_descriptor()
    with pytest.warns(HeuristicBoundsWarning):
        bounds = resolve_bounds(kappa, psi, {"g1+": (-2, 0)})
    # max rank 4 plus 3 conditionals
    assert bounds.interval("g1+") == (-2, 0)
    assert bounds.interval("g1-") == (-7, 7)
    assert default_bounds(kappa, psi) == Bounds.uniform(3, -7, 7)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert resolve_bounds(kappa, psi, parse_bounds(PENGUIN_BOUNDS_TEXT)) == (
            penguin_bounds()
        )


def test_revise_penguin():
    result = revise_penguin()
    assert result.status == STATUS_OK
    assert [s.gamma.flat for s in result.solutions] == PENGUIN_SOLUTIONS
    first = result.solutions[0]
    assert first.kappa0 == 1
    assert first.posterior.ranks == (0, 1, 0, 2, 4, 1, 3, 1)
    assert result.chosen == first
    assert result.posterior == first.posterior
    assert result.conds == penguin_descriptor().conditionals()
    for s in result.solutions:
        assert cross_check(s, penguin_prior(), penguin_descriptor())
        assert min(s.posterior.ranks) == 0
    last = result.solutions[-1]
    assert (last.kappa0, last.posterior) == (0, penguin_posterior())


def test_revise_with_workers():
    serial = revise_penguin()
    parallel = revise_penguin(workers=2)
    assert parallel.solutions == serial.solutions


def test_revise_progress():
    calls = []
    revise_penguin(progressfunc=lambda *args: calls.append(args))
    assert calls == [("g1+", -2, 1, 3), ("g1+", -1, 2, 3), ("g1+", 0, 3, 3)]


def test_revise_budget():
    with pytest.raises(BudgetExceededError):
        revise_penguin(max_leaves=1)


def test_select_policies():
    min_sum = revise_penguin(select=SELECT_MIN_SUM)
    assert min_sum.chosen.gamma.flat == PENGUIN_SOLUTIONS[0]
    preferred = revise_penguin(select=Prefer(penguin_posterior()))
    assert preferred.chosen.gamma.flat == PENGUIN_GAMMA
    # a target that isn't reachable falls back to the first solution
    absent = revise_penguin(select=Prefer(OCF.uniform(PENGUIN_SIG)))
    assert absent.chosen.gamma.flat == PENGUIN_SOLUTIONS[0]
    with pytest.raises(RevisionError):
        revise_penguin(select="max-sum")


def test_dedup():
    # all posteriors within the penguin bounds are distinct
    assert len(revise_penguin(dedup=True).solutions) == 9
    solutions = revise_penguin().solutions
    twice = dedup_solutions(solutions + solutions)
    assert twice == solutions


def test_cross_check_rejects_uneven_change():
    ranks = list(PENGUIN_POSTERIOR_RANKS)
    ranks[3] += 1
    forged = Solution(
        GammaVector.from_flat(PENGUIN_GAMMA), 0, OCF(PENGUIN_SIG, ranks)
    )
    psi = penguin_descriptor()
    assert psi.holds(forged.posterior)
    assert not cross_check(forged, penguin_prior(), psi)


def test_revise_empty_descriptor():
    psi = parse_descriptor("", PENGUIN_SIG)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        result = revise(penguin_prior(), psi)
    assert len(result.solutions) == 1
    assert result.chosen.gamma.flat == ()
    assert result.posterior == penguin_prior()


def test_revise_contradictory_descriptor():
    psi = parse_descriptor("B(a), !B(a)", AB_SIG)
    result = revise(OCF.uniform(AB_SIG), psi, Bounds.uniform(1, -2, 2))
    assert result.status == STATUS_NO_SUCCESSOR
    assert result.solutions == []
    assert result.chosen is None and result.posterior is None


def test_revise_unsatisfiable_antecedent():
    kappa = OCF.uniform(AB_SIG)
    bounds = Bounds.uniform(1, -1, 1)
    positive = revise(kappa, parse_descriptor("B(a|b & !b)", AB_SIG), bounds)
    assert positive.status == STATUS_NO_SUCCESSOR
    negative = revise(kappa, parse_descriptor("!B(a|b & !b)", AB_SIG), bounds)
    assert len(negative.solutions) == bounds.grid_size


def test_solve_bounds_mismatch():
    csp = build_csp(penguin_prior(), penguin_descriptor())
    with pytest.raises(BoundsError):
        solve(csp, Bounds.uniform(1, 0, 0))


def test_c_representations():
    conds = parse_conditional_list("(b|a)", AB_SIG)
    solutions = c_representations(AB_SIG, conds, Bounds(((0, 0), (0, 2))))
    assert [s.gamma.flat for s in solutions] == [(0, 1), (0, 2)]
    assert solutions[0].posterior.ranks == (0, 1, 0, 0)
    assert all(s.posterior.accepts(conds[0]) for s in solutions)


ATOMS = ("a", "b", "c")


def random_instance(rng):
    sig = Signature(ATOMS[: rng.randint(1, 3)])
    ranks = [rng.randint(0, 4) for _ in range(sig.num_worlds)]
    ranks[rng.randrange(sig.num_worlds)] = 0

    def literal():
        atom = rng.choice(sig.atoms)
        return atom if rng.random() < 0.5 else f"!{atom}"

    def formula():
        if rng.random() < 0.3:
            return f"{literal()} & {literal()}"
        return literal()

    elements = []
    for _ in range(rng.randint(1, 3)):
        antecedent = "top" if rng.random() < 0.3 else formula()
        sign = "" if rng.random() < 0.5 else "!"
        elements.append(f"{sign}B({formula()}|{antecedent})")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DuplicateElementWarning)
        psi = parse_descriptor(", ".join(elements), sig)
    intervals = []
    for _ in range(2 * len(psi.conditionals())):
        lo = rng.randint(-4, 4)
        intervals.append((lo, min(4, lo + rng.randint(0, 2))))
    return OCF(sig, ranks), psi, Bounds(tuple(intervals))


def test_revise_soundness_random():
    rng = random.Random(20260117)
    solved = 0
    for _ in range(1000):
        kappa, psi, bounds = random_instance(rng)
        result = revise(kappa, psi, bounds)
        conds = psi.conditionals()
        for s in result.solutions:
            assert bounds.contains(s.gamma.flat)
            assert min(s.posterior.ranks) == 0
            assert psi.holds(s.posterior), (kappa, psi, s.gamma)
            assert pcp_representable(kappa, s.posterior, conds) is not None
        solved += bool(result.solutions)
    # the instances shouldn't be trivially unsolvable
    assert solved > 50


def widened(bounds, by=1):
    return Bounds(tuple((lo - by, hi + by) for lo, hi in bounds.intervals))


def test_widening_bounds_keeps_solutions():
    wide_text = "g1+=-2..0,g1-=0..2,g2+=-2..2,g2-=-2..2,g3+=-1..1,g3-=-1..1"
    wide = revise(
        penguin_prior(),
        penguin_descriptor(),
        Bounds.from_mapping(3, parse_bounds(wide_text)),
    )
    assert len(wide.solutions) > len(PENGUIN_SOLUTIONS)
    box = penguin_bounds()
    inside = [s.gamma.flat for s in wide.solutions if box.contains(s.gamma.flat)]
    assert inside == PENGUIN_SOLUTIONS

    rng = random.Random(20261018)
    for _ in range(100):
        kappa, psi, bounds = random_instance(rng)
        narrow = revise(kappa, psi, bounds).solutions
        wider = revise(kappa, psi, widened(bounds)).solutions
        assert [s for s in wider if bounds.contains(s.gamma.flat)] == narrow


def test_revise_is_deterministic():
    first = revise_penguin(select=SELECT_MIN_SUM)
    for _ in range(3):
        again = revise_penguin(select=SELECT_MIN_SUM)
        assert again.solutions == first.solutions
        assert again.chosen == first.chosen
    for workers in (2, 3):
        parallel = revise_penguin(select=SELECT_MIN_SUM, workers=workers)
        assert parallel.solutions == first.solutions
        assert parallel.chosen == first.chosen

    rng = random.Random(20261019)
    for _ in range(5):
        kappa, psi, bounds = random_instance(rng)
        serial = revise(kappa, psi, bounds)
        assert revise(kappa, psi, bounds).solutions == serial.solutions
        assert revise(kappa, psi, bounds, workers=2).solutions == serial.solutions
