# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""extutils.py - file extensions used by ocftools"""

import os

_d = os.path.extsep

# === Belief bases: plain text and TOML forms ===
OCF_EXT = f"{_d}ocf"
OCFTOML_EXT = f"{_d}ocf{_d}toml"

# === Run configuration ===
CONFIG_EXT = f"{_d}toml"


class ExtensionError(ValueError):
    """error raised regarding path/filename extensions"""

    pass


def splitext(filepath, *considered_exts):
    """like os.path.splitext but also treat each ext as a single extension

    considered_exts: Each is a case insensitive extension that should be considered a
      single extension and split off accordingly. e.g. if you pass .ocf.toml,
      base.ocf.toml splits to (base, .ocf.toml) instead of (base.ocf, .toml).
    raises ExtensionError if an ext doesn't begin with os.path.extsep
    returns: tuple of (root, .ext); .ext can be empty string if there's none.
    """
    badexts = tuple(x for x in considered_exts if not x.startswith(_d))
    if badexts:
        raise ExtensionError(f"These extensions do not start with {_d!r}: {badexts!r}")

    for multiext in (x.lower() for x in considered_exts if x.count(_d) > 1):
        if filepath.lower().endswith(multiext):
            return filepath[: -len(multiext)], filepath[-len(multiext) :]
    return os.path.splitext(filepath)


def is_toml_base(filepath) -> bool:
    """True if filepath names a belief base in TOML form (case insensitive)"""
    return splitext(filepath, OCFTOML_EXT)[1].lower() == OCFTOML_EXT.lower()
