# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""linsolve.py - exact rational solving of linear systems M x = b

Elimination is done once per coefficient matrix: Gauss-Jordan reduction of M alongside
an identity matrix gives the reduced row echelon form R and a transform T with T M = R.
Each right-hand side b is then solved by computing T b, so solving the same system for
many right-hand sides only costs a matrix-vector product each.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalSolution:
    """solution space of a consistent system

    particular: a solution, every free variable set to 0
    free: column indices of the free variables
    basis: one null-space direction per free variable, in the order of free
    Every solution is particular + sum(t_k * basis[k]) for rationals t_k.
    """

    particular: Vector
    free: Tuple[int, ...]
    basis: Tuple[Vector, ...]

    def point(self, params: Sequence) -> Vector:
        """the solution with free variable free[k] = params[k]"""
        if len(params) != len(self.free):
            raise ValueError(f"expected {len(self.free)} parameters, got {len(params)}")
        x = list(self.particular)
        for t, direction in zip(params, self.basis):
            if t:
                for j, d in enumerate(direction):
                    x[j] += t * d
        return tuple(x)


class Elimination:
    """reduced row echelon form of a matrix, plus the transform that produced it"""

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = len(matrix)
        cols = len(matrix[0]) if rows else 0
        m = [[Fraction(v) for v in row] for row in matrix]
        t = [[Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]

        pivots = []
        piv_r = 0
        for piv_c in range(cols):
            # 1. find a row with a non-zero entry in this column
            for i_row in range(piv_r, rows):
                if m[i_row][piv_c] != 0:
                    break
            else:
                continue
            if i_row != piv_r:
                m[piv_r], m[i_row] = m[i_row], m[piv_r]
                t[piv_r], t[i_row] = t[i_row], t[piv_r]

            # 2. scale the pivot row so the pivot is 1
            fp = m[piv_r][piv_c]
            if fp != 1:
                m[piv_r] = [v / fp for v in m[piv_r]]
                t[piv_r] = [v / fp for v in t[piv_r]]

            # 3. clear the pivot column in every other row
            for r in range(rows):
                fr = m[r][piv_c]
                if r == piv_r or fr == 0:
                    continue
                m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
                t[r] = [a - fr * b for a, b in zip(t[r], t[piv_r])]

            pivots.append(piv_c)
            piv_r += 1
            if piv_r == rows:
                break

        self.num_rows = rows
        self.num_cols = cols
        self.reduced = tuple(tuple(row) for row in m)
        self.transform = tuple(tuple(row) for row in t)
        self.pivots = tuple(pivots)
        self.free = tuple(c for c in range(cols) if c not in set(pivots))
        self.basis = tuple(self._null_direction(f) for f in self.free)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _null_direction(self, free_col):
        x = [Fraction(0)] * self.num_cols
        x[free_col] = Fraction(1)
        for r, piv_c in enumerate(self.pivots):
            x[piv_c] = -self.reduced[r][free_col]
        return tuple(x)

    def solve(self, rhs: Sequence) -> Optional[RationalSolution]:
        """solve M x = rhs, return None if the system is inconsistent"""
        if len(rhs) != self.num_rows:
            raise ValueError(
                f"expected {self.num_rows} right-hand values, got {len(rhs)}"
            )
        rhs = [Fraction(v) for v in rhs]
        tb = [sum(a * b for a, b in zip(row, rhs)) for row in self.transform]
        # zero rows of R need zero right-hand sides
        if any(v != 0 for v in tb[self.rank :]):
            return None
        x = [Fraction(0)] * self.num_cols
        for r, piv_c in enumerate(self.pivots):
            x[piv_c] = tb[r]
        return RationalSolution(tuple(x), self.free, self.basis)


@lru_cache(maxsize=512)
def _cached_elimination(matrix: Tuple[Tuple[int, ...], ...]) -> Elimination:
    return Elimination(matrix)


def elimination_for(matrix: Sequence[Sequence[int]]) -> Elimination:
    """Elimination of matrix, reused for identical integer matrices"""
    return _cached_elimination(tuple(tuple(row) for row in matrix))


def solve_rational(
    matrix: Sequence[Sequence[int]], rhs: Sequence
) -> Optional[RationalSolution]:
    """exact solution space of matrix x = rhs, None if inconsistent"""
    return elimination_for(matrix).solve(rhs)


def is_integral(vector: Sequence[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in vector)


def to_ints(vector: Sequence[Fraction]) -> List[int]:
    """vector as ints, raises ValueError if any entry isn't integral"""
    if not is_integral(vector):
        raise ValueError(f"vector {tuple(str(v) for v in vector)} is not integral")
    return [int(v) for v in vector]
