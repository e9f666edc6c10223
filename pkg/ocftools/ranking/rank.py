# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""rank.py - ranks: non-negative integers plus infinity

Infinity is only ever the rank of an unsatisfiable formula, never of a world. Adding an
integer shift to infinity leaves it at infinity; infinity is equal to itself and greater
than every integer.
"""

from functools import total_ordering
from typing import Optional, Union


@total_ordering
class Rank:
    """an integer rank or infinity (value None)"""

    __slots__ = ("_value",)

    def __init__(self, value: Optional[int]):
        if value is not None and not isinstance(value, int):
            raise TypeError(f"rank value must be an int or None, not {value!r}")
        self._value = value

    @property
    def value(self) -> Optional[int]:
        return self._value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    def __int__(self):
        if self._value is None:
            raise ValueError("infinite rank has no integer value")
        return self._value

    def _other_value(self, other):
        if isinstance(other, Rank):
            return other._value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __eq__(self, other):
        ov = self._other_value(other)
        if ov is NotImplemented:
            return NotImplemented
        return self._value == ov

    def __lt__(self, other):
        ov = self._other_value(other)
        if ov is NotImplemented:
            return NotImplemented
        if self._value is None:
            return False
        return ov is None or self._value < ov

    def __hash__(self):
        return hash(self._value)

    def __add__(self, shift: Union[int, "Rank"]):
        sv = self._other_value(shift)
        if sv is NotImplemented:
            return NotImplemented
        if self._value is None or sv is None:
            return INFINITY
        return Rank(self._value + sv)

    __radd__ = __add__

    def __repr__(self):
        return "Rank(inf)" if self._value is None else f"Rank({self._value})"

    def __str__(self):
        return "inf" if self._value is None else str(self._value)


INFINITY = Rank(None)


def min_rank(values) -> Rank:
    """minimum of an iterable of ints/Ranks, INFINITY if it's empty"""
    best = INFINITY
    for v in values:
        if v < best:
            best = v if isinstance(v, Rank) else Rank(v)
    return best
