# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""bounds.py - integer intervals for the impact variables

Bounds are always per named variable ("g1+", "g1-", ...), never a positional vector.
The flag form is a comma-separated list like "g1+=-2..0,g1-=0..2"; variables that aren't
named take the default interval.
"""

import re
import warnings
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ocftools.descriptor.descriptor import Descriptor
from ocftools.logic.parser import ParseError
from ocftools.miscutils.errors import OcfToolsWarning
from ocftools.pcp.gamma import variable_names
from ocftools.ranking.ocf import OCF
from ocftools.revision.csp import RevisionError

Interval = Tuple[int, int]

_bound_re = re.compile(
    r"\s*(?P<name>g(?P<index>\d+)(?P<sign>[+-]))\s*=\s*"
    r"(?P<lo>[+-]?\d+)\s*\.\.\s*(?P<hi>[+-]?\d+)\s*\Z"
)


class BoundsError(RevisionError):
    """error raised for invalid bounds"""

    pass


class BoundsSyntaxError(BoundsError, ParseError):
    """error raised for malformed bounds text"""

    pass


class HeuristicBoundsWarning(OcfToolsWarning):
    """warning when heuristic default bounds are used for some impact variables"""

    pass


@dataclass(frozen=True)
class Bounds:
    """closed integer interval per impact variable, in flat order g1+, g1-, g2+, ..."""

    intervals: Tuple[Interval, ...]

    def __post_init__(self):
        intervals = tuple((int(lo), int(hi)) for lo, hi in self.intervals)
        object.__setattr__(self, "intervals", intervals)
        if len(intervals) % 2:
            raise BoundsError("bounds need an interval for both g_i+ and g_i-")
        for name, (lo, hi) in zip(variable_names(len(intervals) // 2), intervals):
            if lo > hi:
                raise BoundsError(f"empty interval for {name}: {lo}..{hi}")

    @classmethod
    def uniform(cls, num_conds: int, lo: int, hi: int) -> "Bounds":
        return cls(((lo, hi),) * (2 * num_conds))

    @classmethod
    def from_mapping(
        cls,
        num_conds: int,
        intervals: Mapping[str, Interval],
        default: Optional[Interval] = None,
    ) -> "Bounds":
        """bounds from {"g1+": (lo, hi), ...}, unnamed variables take default

        raises BoundsError on unknown variable names, or on missing ones if default is
        None
        """
        names = variable_names(num_conds)
        unknown = sorted(set(intervals) - set(names))
        if unknown:
            raise BoundsError(
                f"unknown impact variables {', '.join(unknown)} (the descriptor has "
                f"{num_conds} conditional{'s' if num_conds != 1 else ''})"
            )
        missing = [n for n in names if n not in intervals]
        if missing and default is None:
            raise BoundsError(f"no bounds for {', '.join(missing)}")
        return cls(tuple(intervals.get(n, default) for n in names))

    @property
    def num_conds(self) -> int:
        return len(self.intervals) // 2

    @property
    def names(self):
        return variable_names(self.num_conds)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def interval(self, name: str) -> Interval:
        try:
            return self.intervals[self.names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def as_dict(self) -> Dict[str, Interval]:
        return dict(zip(self.names, self.intervals))

    def contains(self, flat) -> bool:
        """True if the flat impact vector lies inside these bounds"""
        return len(flat) == len(self.intervals) and all(
            lo <= v <= hi for v, (lo, hi) in zip(flat, self.intervals)
        )

    @property
    def grid_size(self) -> int:
        """number of integer points in the box"""
        return prod(hi - lo + 1 for lo, hi in self.intervals)

    def format(self) -> str:
        """the flag form, e.g. "g1+=-2..0,g1-=0..2" """
        return ",".join(f"{n}={lo}..{hi}" for n, (lo, hi) in self.as_dict().items())

    def __str__(self):
        return self.format()


def default_interval(kappa: OCF, num_conds: int) -> Interval:
    """[-(max rank + n), max rank + n]"""
    width = kappa.max_rank + num_conds
    return -width, width


def default_bounds(kappa: OCF, psi: Descriptor) -> Bounds:
    """symmetric box [-(max rank + n), max rank + n] for every impact variable

    n is the number of conditionals in psi. This is a heuristic: it doesn't guarantee
    that every acceptance class of posteriors is reached.
    """
    num_conds = len(psi.conditionals())
    lo, hi = default_interval(kappa, num_conds)
    return Bounds.uniform(num_conds, lo, hi)


def parse_bounds(text: str) -> Dict[str, Interval]:
    """parse "g1+=-2..0,g1-=0..2" into {"g1+": (-2, 0), "g1-": (0, 2)}

    raises BoundsSyntaxError on malformed text, BoundsError on repeated or empty
    intervals
    """
    intervals = {}
    if not text.strip():
        return intervals
    pos = 0
    for item in text.split(","):
        m = _bound_re.match(item)
        if m is None:
            offset = len(item) - len(item.lstrip())
            raise BoundsSyntaxError(
                f"expected a bound like 'g1+=-2..0', found {item.strip()!r}",
                pos + offset,
                text,
            )
        name = m.group("name")
        if int(m.group("index")) < 1:
            raise BoundsSyntaxError(
                "impact variables are numbered from 1", pos + m.start("index"), text
            )
        if name in intervals:
            raise BoundsError(f"bounds for {name} are given more than once")
        lo, hi = int(m.group("lo")), int(m.group("hi"))
        if lo > hi:
            raise BoundsError(f"empty interval for {name}: {lo}..{hi}")
        intervals[name] = (lo, hi)
        pos += len(item) + 1
    return intervals


def resolve_bounds(
    kappa: OCF, psi: Descriptor, overrides: Optional[Mapping[str, Interval]] = None
) -> Bounds:
    """bounds for revising kappa by psi: overrides where given, else default_bounds

    emits HeuristicBoundsWarning if any variable takes the default interval
    """
    overrides = dict(overrides or {})
    num_conds = len(psi.conditionals())
    default = default_interval(kappa, num_conds)
    bounds = Bounds.from_mapping(num_conds, overrides, default)
    defaulted = [n for n in bounds.names if n not in overrides]
    if defaulted:
        lo, hi = default
        warnings.warn(
            f"using heuristic default bounds {lo}..{hi} for {', '.join(defaulted)}; "
            "they may miss posteriors that need larger impacts",
            HeuristicBoundsWarning,
        )
    return bounds
