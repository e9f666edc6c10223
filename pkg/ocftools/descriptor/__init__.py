# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
