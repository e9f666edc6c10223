# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""test_oracle.py - test OCF enumeration and the brute-force revision checks"""

from itertools import combinations, product

import pytest

from ocftools.descriptor.descriptor import AtomicDescriptor, DescNot, Descriptor
from ocftools.descriptor.parser import parse_descriptor
from ocftools.logic.formula import TOP, Atom, Conditional, Not
from ocftools.logic.signature import Signature
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.oracle.completeness import (
    completeness_report,
    constraint_equivalence,
    soundness_report,
)
from ocftools.oracle.enumeration import count_ocfs, enumerate_ocfs
from ocftools.pcp.preservation import PcpWitness
from ocftools.ranking.ocf import OCF
from ocftools.revision.bounds import Bounds, parse_bounds
from ocftools.revision.csp import build_csp
from tests.common import (
    AB_SIG,
    PENGUIN_BOUNDS_TEXT,
    PENGUIN_SIG,
    penguin_descriptor,
    penguin_prior,
)


def penguin_bounds():
    return Bounds.from_mapping(3, parse_bounds(PENGUIN_BOUNDS_TEXT))


@pytest.mark.parametrize(
    "sig, max_rank, expected",
    [
        (Signature(("a",)), 1, 3),
        (AB_SIG, 0, 1),
        (AB_SIG, 1, 15),
        (AB_SIG, 2, 65),
        (PENGUIN_SIG, 4, 325089),
    ],
)
def test_count_ocfs(sig, max_rank, expected):
    assert count_ocfs(sig, max_rank) == expected


def test_enumerate_ocfs():
    ocfs = list(enumerate_ocfs(AB_SIG, 1))
    assert len(ocfs) == len(set(ocfs)) == 15
    assert ocfs[0] == OCF.uniform(AB_SIG)
    assert all(0 in kappa.ranks and kappa.max_rank <= 1 for kappa in ocfs)
    with pytest.raises(ValueError):
        count_ocfs(AB_SIG, -1)


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError) as excinfo:
        list(enumerate_ocfs(AB_SIG, 2, max_ocfs=10))
    assert excinfo.value.needed == 65


def test_completeness_single_conditional():
    psi = parse_descriptor("B(b|a)", AB_SIG)
    report = completeness_report(OCF.uniform(AB_SIG), psi, max_rank=2)
    assert report.ok
    assert report.examined == 65
    # rank(a b) < rank(a !b)
    assert report.satisfying == 23
    # and both !a worlds on the same rank
    assert report.representable == 7
    assert report.integer_witnesses == 7
    assert report.rational_only == 0
    assert report.needed_box == {"g1+": (-2, 1), "g1-": (-1, 2)}
    assert report.format().splitlines()[-1] == "needed box: g1+=-2..1,g1-=-1..2"
    assert report.as_dict()["violations"] == []


def test_missing_integer_witness_is_a_violation(monkeypatch):
    monkeypatch.setattr(PcpWitness, "integer_point", lambda self, radius=2: None)
    psi = parse_descriptor("B(b|a)", AB_SIG)
    report = completeness_report(OCF.uniform(AB_SIG), psi, max_rank=2)
    assert report.representable == report.rational_only == 7
    assert report.integer_witnesses == 0
    assert not report.ok
    assert len(report.violations) == 7
    assert report.violations[0].reason == "no integer witness within radius 2"
    assert report.needed_box == {}


def test_completeness_budget():
    psi = parse_descriptor("B(b|a)", AB_SIG)
    with pytest.raises(BudgetExceededError):
        completeness_report(OCF.uniform(AB_SIG), psi, max_rank=2, max_ocfs=64)


@pytest.mark.slow
def test_completeness_penguin():
    progress = []
    report = completeness_report(
        penguin_prior(), penguin_descriptor(), max_rank=4, progressfunc=progress.append
    )
    assert report.examined == 325089
    assert report.ok
    assert progress == [100_000, 200_000, 300_000]
    assert report.satisfying == 32452
    assert report.representable == report.integer_witnesses == 102
    assert report.rational_only == 0


def test_constraint_equivalence():
    csp = build_csp(penguin_prior(), penguin_descriptor())
    assert constraint_equivalence(csp, penguin_bounds()) == []
    csp = build_csp(OCF.uniform(AB_SIG), parse_descriptor("B(b|a), !B(a)", AB_SIG))
    assert constraint_equivalence(csp, Bounds.uniform(2, -2, 2)) == []
    with pytest.raises(BudgetExceededError):
        constraint_equivalence(
            build_csp(penguin_prior(), penguin_descriptor()),
            penguin_bounds(),
            max_points=80,
        )


def test_soundness_report():
    report = soundness_report(penguin_prior(), penguin_descriptor(), penguin_bounds())
    assert report.ok
    assert len(report.solutions) == 9


def literal_descriptors(sig, max_elements=2):
    """every descriptor of 1 to max_elements literals over conditionals of literals"""
    literals = [Atom(a) for a in sig.atoms] + [Not(Atom(a)) for a in sig.atoms]
    pool = {}
    for consequent, antecedent in product(literals, literals + [TOP]):
        cond = Conditional(consequent, antecedent)
        pool.setdefault(cond.key(sig), cond)
    for size in range(1, max_elements + 1):
        for conds in combinations(pool.values(), size):
            atomics = [AtomicDescriptor(c) for c in conds]
            for signs in product((True, False), repeat=size):
                elements = [a if s else DescNot(a) for a, s in zip(atomics, signs)]
                yield Descriptor(sig, elements)


@pytest.mark.parametrize(
    "kappa",
    [OCF(Signature(("a",)), (0, 2)), OCF(AB_SIG, (0, 1, 2, 0))],
    ids=["1 atom", "2 atoms"],
)
def test_constraint_equivalence_small_descriptors(kappa):
    checked = 0
    for psi in literal_descriptors(kappa.sig):
        csp = build_csp(kappa, psi)
        radius = 2 if len(psi) == 1 else 1
        bounds = Bounds.uniform(len(csp.conds), -radius, radius)
        assert constraint_equivalence(csp, bounds) == [], str(psi)
        checked += 1
    assert checked > 10
