# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers

__version__ = "0.1.0"
