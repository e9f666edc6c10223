# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocffile.py - read/write belief base files

A belief base file holds one OCF as a complete world/rank table. Two forms exist:

Plain text (.ocf):
    # comments and blank lines are ignored
    signature: b, f, p
    ocf:
    b f p = 2
    b f !p = 0
    ...
  Every world is listed exactly once, each line naming every atom exactly once ("!" for
  false). Rows may come in any order; they are written in canonical order.

TOML (.ocf.toml), read and written with tomlkit:
    signature = ["b", "f", "p"]
    [ranks]
    "b f p" = 2
    ...
"""

import os
from typing import AnyStr

import tomlkit
from tomlkit.exceptions import ParseError as TomlParseError

from ocftools.logic.parser import ParseError
from ocftools.logic.signature import Signature, SignatureError
from ocftools.miscutils.extutils import is_toml_base
from ocftools.ranking.ocf import OCF, InvalidOcfError


class BeliefBaseSyntaxError(ParseError):
    """error raised for a belief base file that can't be parsed

    line: line number the problem was found at, if known
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


_toml_header = """\
# Ranking function (OCF) over the signature below. Every world of the signature needs
# exactly one entry in [ranks]; ranks are non-negative integers and at least one world
# must have rank 0. World names list every atom in signature order, "!" meaning false.
"""


def _parse_signature(text, lineno):
    names = [name.strip() for name in text.split(",")]
    try:
        return Signature(tuple(names))
    except SignatureError as e:
        raise BeliefBaseSyntaxError(str(e), lineno) from None


def _parse_world(sig, text, lineno):
    """return the World named by text like "b !f p" """
    literals = text.split()
    for literal in literals:
        name = literal[1:] if literal.startswith("!") else literal
        if name not in sig:
            raise BeliefBaseSyntaxError(f"unknown atom {name!r} in world row", lineno)
    try:
        return sig.world_from_literals(literals)
    except SignatureError as e:
        raise InvalidOcfError(f"world {text!r}: {e}", lineno) from None


def _parse_rank(text, lineno):
    text = text.strip()
    if not text.isdigit():
        if text.startswith("-") and text[1:].isdigit():
            raise InvalidOcfError(f"rank {text} is negative", lineno)
        raise BeliefBaseSyntaxError(
            f"rank {text!r} is not a non-negative integer", lineno
        )
    return int(text)


def _build_ocf(sig, rows):
    """rows: list of (lineno, world, rank). returns OCF, raises InvalidOcfError"""
    table = {}
    for lineno, world, rank in rows:
        if world in table:
            raise InvalidOcfError(f"world {world} is listed more than once", lineno)
        table[world] = rank
    missing = [str(w) for w in sig.worlds() if w not in table]
    if missing:
        raise InvalidOcfError(f"missing rows for worlds: {', '.join(missing)}")
    return OCF.from_mapping(sig, table)


def parse_ocf_text(text: str) -> OCF:
    """parse the plain text belief base form"""
    sig = None
    in_table = False
    rows = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if sig is None:
            key, sep, rest = line.partition(":")
            if not sep or key.strip() != "signature":
                raise BeliefBaseSyntaxError(
                    "expected 'signature: a, b, ...' as the first line", lineno
                )
            sig = _parse_signature(rest, lineno)
        elif not in_table:
            if line.rstrip(":").strip() != "ocf" or not line.endswith(":"):
                raise BeliefBaseSyntaxError(
                    "expected 'ocf:' after the signature", lineno
                )
            in_table = True
        else:
            world_text, sep, rank_text = line.partition("=")
            if not sep:
                raise BeliefBaseSyntaxError(
                    f"expected a row like 'a !b = 1', found {line!r}", lineno
                )
            rows.append(
                (
                    lineno,
                    _parse_world(sig, world_text, lineno),
                    _parse_rank(rank_text, lineno),
                )
            )
    if sig is None:
        raise BeliefBaseSyntaxError("no 'signature:' line found")
    if not in_table:
        raise BeliefBaseSyntaxError("no 'ocf:' section found")
    return _build_ocf(sig, rows)


def format_ocf_text(ocf: OCF) -> str:
    """return the plain text belief base form of ocf, rows in canonical order"""
    lines = [f"signature: {ocf.sig}", "ocf:"]
    lines.extend(f"{world} = {rank}" for world, rank in ocf.items())
    return "\n".join(lines) + "\n"


def parse_ocf_toml(text: str) -> OCF:
    """parse the TOML belief base form"""
    try:
        tomldoc = tomlkit.parse(text)
    except TomlParseError as e:
        raise BeliefBaseSyntaxError(f"invalid TOML: {e}") from None

    names = tomldoc.get("signature")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise BeliefBaseSyntaxError("'signature' must be an array of atom names")
    try:
        sig = Signature(tuple(str(x) for x in names))
    except SignatureError as e:
        raise BeliefBaseSyntaxError(str(e)) from None

    ranks = tomldoc.get("ranks")
    if not isinstance(ranks, dict):
        raise BeliefBaseSyntaxError("missing [ranks] table")
    rows = []
    for world_text, rank in ranks.items():
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise BeliefBaseSyntaxError(f"rank of {world_text!r} is not an integer")
        if rank < 0:
            raise InvalidOcfError(f"rank of {world_text!r} is negative")
        rows.append((None, _parse_world(sig, str(world_text), None), int(rank)))
    return _build_ocf(sig, rows)


def format_ocf_toml(ocf: OCF) -> str:
    """return the TOML belief base form of ocf"""
    tomldoc = tomlkit.parse(_toml_header)
    tomldoc["signature"] = list(ocf.sig.atoms)
    ranks = tomlkit.table()
    for world, rank in ocf.items():
        ranks[str(world)] = rank
    tomldoc["ranks"] = ranks
    return tomldoc.as_string()


def read_ocf(path: AnyStr) -> OCF:
    """read a belief base file, TOML if path ends with .ocf.toml, else plain text"""
    with open(path, "rt", encoding="utf-8") as file:
        text = file.read()
    if is_toml_base(os.fspath(path)):
        return parse_ocf_toml(text)
    return parse_ocf_text(text)


def write_ocf(ocf: OCF, path: AnyStr) -> None:
    """write ocf to path, TOML if path ends with .ocf.toml, else plain text"""
    if is_toml_base(os.fspath(path)):
        text = format_ocf_toml(ocf)
    else:
        text = format_ocf_text(ocf)
    with open(path, "wt", encoding="utf-8") as file:
        file.write(text)
