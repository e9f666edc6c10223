# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""catalogue.py - descriptors for the familiar kinds of belief change

Each kind of change is expressed as a success condition. Revision, contraction,
ignoration, package revision and replacement give elementary descriptors; choice
revision and making up one's mind use disjunction, so they can be checked with holds()
but not used as revision inputs.
"""

from functools import reduce
from typing import Sequence

from ocftools.descriptor.descriptor import (
    AtomicDescriptor,
    DescNot,
    DescOr,
    Descriptor,
)
from ocftools.logic.formula import Conditional
from ocftools.logic.signature import Signature


def revision_by(sig: Signature, c: Conditional) -> Descriptor:
    """{B(c)}"""
    return Descriptor(sig, [AtomicDescriptor(c)])


def contraction_by(sig: Signature, c: Conditional) -> Descriptor:
    """{!B(c)}"""
    return Descriptor(sig, [DescNot(AtomicDescriptor(c))])


def ignoration_of(sig: Signature, c: Conditional) -> Descriptor:
    """{!B(B|A), !B(!B|A)}: neither c nor its negation is accepted"""
    return Descriptor(
        sig, [DescNot(AtomicDescriptor(c)), DescNot(AtomicDescriptor(c.negated()))]
    )


def package_revision_by(sig: Signature, conds: Sequence[Conditional]) -> Descriptor:
    """{B(c1), B(c2), ...}"""
    return Descriptor(sig, [AtomicDescriptor(c) for c in conds])


def replacement(sig: Signature, c_out: Conditional, c_in: Conditional) -> Descriptor:
    """{!B(c_out), B(c_in)}"""
    return Descriptor(sig, [DescNot(AtomicDescriptor(c_out)), AtomicDescriptor(c_in)])


def choice_revision_by(sig: Signature, conds: Sequence[Conditional]) -> Descriptor:
    """{B(c1) | B(c2) | ...}, at least one of conds is accepted"""
    if not conds:
        raise ValueError("choice revision needs at least one conditional")
    atoms = [AtomicDescriptor(c) for c in conds]
    return Descriptor(sig, [reduce(DescOr, atoms)])


def making_up_mind(sig: Signature, c: Conditional) -> Descriptor:
    """{B(B|A) | B(!B|A)}: either c or its negation is accepted"""
    return Descriptor(
        sig, [DescOr(AtomicDescriptor(c), AtomicDescriptor(c.negated()))]
    )
