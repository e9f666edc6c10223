# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""runconfig.py - run configuration for the ocf-* tools

Settings come from three places, later ones winning: built-in defaults, a TOML file
given with -c/--config, and command-line flags. A config file looks like this (every
entry is optional):

    [Revise-Settings]
    select = "min-sum"
    dedup = true
    workers = 1
    max-leaves = 2000000
    [Revise-Settings.bounds]
    "g1+" = [-2, 0]
    [Check-Settings]
    max-pairs = 1000000
    max-multiset = 2
    [Oracle-Settings]
    max-ocfs = 10000000
    witness-radius = 2
"""

import dataclasses
import warnings
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import tomlkit
from tomlkit.exceptions import ParseError as TomlParseError

from ocftools.miscutils.errors import OcfToolsError, OcfToolsWarning
from ocftools.oracle.enumeration import DEFAULT_MAX_OCFS
from ocftools.pcp.preservation import (
    DEFAULT_MAX_MULTISET,
    DEFAULT_MAX_PAIRS,
    DEFAULT_WITNESS_RADIUS,
)
from ocftools.revision.revise import SELECT_POLICIES
from ocftools.revision.solver import DEFAULT_MAX_LEAVES


class RunConfigError(OcfToolsError):
    """error raised for an invalid run configuration"""

    pass


class RunConfigWarning(OcfToolsWarning):
    """warning for config file entries that are ignored"""

    pass


@dataclass(frozen=True)
class RunConfig:
    select: Optional[str] = None
    dedup: bool = False
    workers: int = 1
    max_leaves: int = DEFAULT_MAX_LEAVES
    bounds: Tuple[Tuple[str, Tuple[int, int]], ...] = ()
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_multiset: int = DEFAULT_MAX_MULTISET
    max_ocfs: int = DEFAULT_MAX_OCFS
    witness_radius: int = DEFAULT_WITNESS_RADIUS

    @property
    def bounds_dict(self) -> Dict[str, Tuple[int, int]]:
        return dict(self.bounds)

    def override(self, **changes) -> "RunConfig":
        """copy of this config with every change that isn't None applied, validated"""
        changes = {k: v for k, v in changes.items() if v is not None}
        if "bounds" in changes:
            merged = self.bounds_dict
            merged.update(changes["bounds"])
            changes["bounds"] = tuple(merged.items())
        config = dataclasses.replace(self, **changes)
        config.validate()
        return config

    def validate(self) -> None:
        """raise RunConfigError if any setting is out of range"""
        if self.select is not None and self.select not in SELECT_POLICIES:
            raise RunConfigError(
                f"select must be one of {', '.join(SELECT_POLICIES)}, "
                f"not {self.select!r}"
            )
        for name in ("workers", "max_leaves", "max_pairs", "max_multiset", "max_ocfs"):
            if getattr(self, name) < 1:
                raise RunConfigError(f"{name.replace('_', '-')} must be at least 1")
        if self.witness_radius < 0:
            raise RunConfigError("witness-radius must not be negative")
        for name, (lo, hi) in self.bounds:
            if lo > hi:
                raise RunConfigError(f"empty interval for {name}: {lo}..{hi}")


# table -> {toml key: (RunConfig field, type)}
_settings = {
    "Revise-Settings": {
        "select": ("select", str),
        "dedup": ("dedup", bool),
        "workers": ("workers", int),
        "max-leaves": ("max_leaves", int),
    },
    "Check-Settings": {
        "max-pairs": ("max_pairs", int),
        "max-multiset": ("max_multiset", int),
    },
    "Oracle-Settings": {
        "max-ocfs": ("max_ocfs", int),
        "witness-radius": ("witness_radius", int),
    },
}


def _typed(value, kind, where):
    # tomlkit returns its own item types, convert them to plain values
    if kind is bool:
        if not isinstance(value, bool):
            raise RunConfigError(f"{where} must be true or false")
        return bool(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise RunConfigError(f"{where} must be an integer")
        return int(value)
    if not isinstance(value, str):
        raise RunConfigError(f"{where} must be a string")
    return str(value)


def _read_bounds(table, where):
    bounds = []
    for name, value in table.items():
        if (
            not isinstance(value, list)
            or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)
        ):
            raise RunConfigError(
                f"{where}.{name} must be an array [lo, hi] of integers"
            )
        bounds.append((str(name), (int(value[0]), int(value[1]))))
    return tuple(bounds)


def parse_runconfig(text: str, base: Optional[RunConfig] = None) -> RunConfig:
    """parse config file text on top of base (the defaults if None)

    raises RunConfigError on invalid TOML, wrong types or invalid values
    unknown tables and keys produce a RunConfigWarning and are ignored
    """
    try:
        tomldoc = tomlkit.parse(text)
    except TomlParseError as e:
        raise RunConfigError(f"invalid TOML: {e}") from None

    changes = {}
    for table_name, table in tomldoc.items():
        if table_name not in _settings or not isinstance(table, dict):
            warnings.warn(f"unknown config entry [{table_name}]", RunConfigWarning)
            continue
        known = _settings[table_name]
        for key, value in table.items():
            where = f"[{table_name}].{key}"
            if table_name == "Revise-Settings" and key == "bounds":
                if not isinstance(value, dict):
                    raise RunConfigError(f"{where} must be a table")
                changes["bounds"] = _read_bounds(value, f"[{table_name}.bounds]")
            elif key in known:
                field_name, kind = known[key]
                changes[field_name] = _typed(value, kind, where)
            else:
                warnings.warn(f"unknown config entry {where}", RunConfigWarning)

    base = RunConfig() if base is None else base
    return base.override(**changes)


def read_runconfig(path, base: Optional[RunConfig] = None) -> RunConfig:
    """read a config file, see parse_runconfig"""
    with open(path, "rt", encoding="utf-8") as configfile:
        return parse_runconfig(configfile.read(), base)
