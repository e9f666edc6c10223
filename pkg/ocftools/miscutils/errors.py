# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""errors.py - base classes shared by every ocftools subpackage"""


class OcfToolsError(Exception):
    """base class for all ocftools errors"""

    pass


class BudgetExceededError(OcfToolsError):
    """error raised when an enumeration would exceed its configured budget"""

    def __init__(self, what, limit, needed=None):
        self.what = what
        self.limit = limit
        self.needed = needed
        if needed is None:
            msg = f"{what} exceeded the budget of {limit}"
        else:
            msg = f"{what} needs {needed}, which exceeds the budget of {limit}"
        super().__init__(msg)


class OcfToolsWarning(UserWarning):
    """base class for ocftools warnings"""

    pass
