# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""common.py - common utils and fixtures for the ocftools test suite"""

import os
import warnings
from importlib.resources import files
from typing import Optional

from ocftools.descriptor.descriptor import (
    AtomicDescriptor,
    DescAnd,
    DescNot,
    DescOr,
    Descriptor,
    DuplicateElementWarning,
    MolecularDescriptor,
)
from ocftools.descriptor.parser import parse_descriptor
from ocftools.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Conditional,
    Formula,
    Implies,
    Not,
    Or,
)
from ocftools.logic.parser import parse_conditional_list
from ocftools.logic.signature import Signature
from ocftools.ranking.ocf import OCF

# === the penguin example ===
# worlds in canonical order:
#   b f p, b f !p, b !f p, b !f !p, !b f p, !b f !p, !b !f p, !b !f !p
PENGUIN_SIG = Signature(("b", "f", "p"))
PENGUIN_RANKS = (2, 0, 1, 1, 4, 0, 2, 0)
PENGUIN_POSTERIOR_RANKS = (1, 2, 1, 3, 3, 0, 2, 0)
PENGUIN_CONDS_TEXT = "(p|b),(f|p),(!f|p)"
PENGUIN_DESCRIPTOR_TEXT = "B(p|b), !B(f|p), !B(!f|p)"
PENGUIN_BOUNDS_TEXT = "g1+=-2..0,g1-=0..2,g2+=-1..1,g2-=-1..1,g3+=0..0,g3-=0..0"
# the impact vector (g1+, g1-, g2+, g2-, g3+, g3-) leading to the posterior, k0 = 0
PENGUIN_GAMMA = (0, 2, -1, 0, 0, 0)

AB_SIG = Signature(("a", "b"))


def penguin_prior() -> OCF:
    return OCF(PENGUIN_SIG, PENGUIN_RANKS)


def penguin_posterior() -> OCF:
    return OCF(PENGUIN_SIG, PENGUIN_POSTERIOR_RANKS)


def penguin_conds():
    return parse_conditional_list(PENGUIN_CONDS_TEXT, PENGUIN_SIG)


def penguin_descriptor():
    return parse_descriptor(PENGUIN_DESCRIPTOR_TEXT, PENGUIN_SIG)


# === random instances for property tests ===

ATOM_NAMES = ("a", "b", "c", "d")


def random_signature(rng, max_atoms=4) -> Signature:
    return Signature(ATOM_NAMES[: rng.randint(1, max_atoms)])


def random_formula(rng, sig, depth=3) -> Formula:
    """random formula AST over sig, at most depth connectives deep"""
    if depth == 0 or rng.random() < 0.25:
        leaf = rng.random()
        if leaf < 0.05:
            return TOP
        if leaf < 0.1:
            return BOT
        return Atom(rng.choice(sig.atoms))
    kind = rng.choice((Not, And, Or, Implies))
    if kind is Not:
        return Not(random_formula(rng, sig, depth - 1))
    operands = [random_formula(rng, sig, depth - 1) for _ in range(2)]
    return kind(*operands)


def random_ocf(rng, sig, max_rank=4) -> OCF:
    ranks = [rng.randint(0, max_rank) for _ in range(sig.num_worlds)]
    ranks[rng.randrange(sig.num_worlds)] = 0
    return OCF(sig, ranks)


def random_element(rng, sig, depth=2) -> MolecularDescriptor:
    """random molecular descriptor over random conditionals"""
    if depth == 0 or rng.random() < 0.4:
        antecedent = TOP if rng.random() < 0.3 else random_formula(rng, sig, 2)
        atomic = AtomicDescriptor(Conditional(random_formula(rng, sig, 2), antecedent))
        return DescNot(atomic) if rng.random() < 0.5 else atomic
    kind = rng.choice((DescNot, DescAnd, DescOr))
    if kind is DescNot:
        return DescNot(random_element(rng, sig, depth - 1))
    operands = [random_element(rng, sig, depth - 1) for _ in range(2)]
    return kind(*operands)


def random_descriptor(rng, sig, max_elements=3) -> Descriptor:
    elements = [random_element(rng, sig) for _ in range(rng.randint(1, max_elements))]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DuplicateElementWarning)
        return Descriptor(sig, elements)


# === test data resources ===


class ResourceCopier:
    """object that copies importlib resources to a destination directory"""

    def __init__(self, srcpkg, destdir):
        """initialize a ResourceCopier

        srcpkg: (str) package from which to copy resources
        destdir: (path) directory to which to copy resources (created if doesn't exist)
        """
        os.makedirs(destdir, exist_ok=True)
        self.destdir = destdir
        self.srcpkg = srcpkg

    def make_subdir(self, subdirname: Optional[str] = None) -> str:
        """create <destdir>/<subdirname> and return its path, or destdir if None

        raises ValueError if subdirname would lead outside of destdir
        """
        if subdirname is None:
            return self.destdir
        abs_parentdir = os.path.abspath(self.destdir)
        real_destdir = os.path.join(self.destdir, subdirname)
        if abs_parentdir != os.path.commonpath(
            (abs_parentdir, os.path.abspath(real_destdir))
        ):
            raise ValueError(f"{subdirname!r} is not a subdir of {self.destdir!r}")
        os.makedirs(real_destdir, exist_ok=True)
        return real_destdir

    def copy_resource_to_destdir(self, resource, subdir=None):
        """copy resource from srcpkg to destdir/subdir and return the copy's path"""
        real_destdir = self.make_subdir(subdir)
        resource_destpath = os.path.join(real_destdir, resource)
        with open(resource_destpath, "wb") as resource_destfile:
            resource_destfile.write(files(self.srcpkg).joinpath(resource).read_bytes())
        return resource_destpath

    def copy_contents_to_destdir(self, subdir=None):
        """copy every resource file of srcpkg (but __init__.py) to destdir/subdir

        returns: path of destdir/subdir
        """
        real_destdir = self.make_subdir(subdir)
        for resource in files(self.srcpkg).iterdir():
            if not resource.is_file() or resource.name == "__init__.py":
                continue
            with open(os.path.join(real_destdir, resource.name), "wb") as destfile:
                destfile.write(resource.read_bytes())
        return real_destdir


def make_resource2destdir(srcpkg, destdir):
    """method copy_resource_to_destdir of a new ResourceCopier instance"""
    return ResourceCopier(srcpkg, destdir).copy_resource_to_destdir


def make_contents2destdir(srcpkg, destdir):
    """method copy_contents_to_destdir of a new ResourceCopier instance"""
    return ResourceCopier(srcpkg, destdir).copy_contents_to_destdir


def read_text(filepath, encoding="utf-8"):
    """return text read from filepath"""
    with open(filepath, "rt", encoding=encoding) as file:
        return file.read()
