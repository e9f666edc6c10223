# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""enumeration.py - exhaustive enumeration of the OCFs in a rank box"""

from itertools import product
from typing import Iterator, Tuple

from ocftools.logic.signature import Signature
from ocftools.miscutils.errors import BudgetExceededError
from ocftools.ranking.ocf import OCF

DEFAULT_MAX_OCFS = 10_000_000


def count_ocfs(sig: Signature, max_rank: int) -> int:
    """number of OCFs over sig with every rank in [0, max_rank]"""
    if max_rank < 0:
        raise ValueError(f"max_rank must be non-negative, got {max_rank}")
    n = sig.num_worlds
    return (max_rank + 1) ** n - max_rank**n


def enumerate_rank_tables(
    sig: Signature, max_rank: int, max_ocfs: int = DEFAULT_MAX_OCFS
) -> Iterator[Tuple[int, ...]]:
    """yield every valid rank table (canonical world order) in lexicographic order

    raises BudgetExceededError before yielding anything if there are more than max_ocfs
    """
    count = count_ocfs(sig, max_rank)
    if count > max_ocfs:
        raise BudgetExceededError("enumerating OCFs", max_ocfs, count)
    for ranks in product(range(max_rank + 1), repeat=sig.num_worlds):
        if 0 in ranks:
            yield ranks


def enumerate_ocfs(
    sig: Signature, max_rank: int, max_ocfs: int = DEFAULT_MAX_OCFS
) -> Iterator[OCF]:
    """yield every OCF over sig with ranks in [0, max_rank], each exactly once"""
    for ranks in enumerate_rank_tables(sig, max_rank, max_ocfs):
        yield OCF(sig, ranks)
