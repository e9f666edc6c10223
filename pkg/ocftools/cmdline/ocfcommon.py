# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfcommon.py - common stuff used by the ocf-* scripts"""

import argparse
import json
import sys

from ocftools.descriptor.descriptor import NotElementaryError
from ocftools.logic.parser import ParseError
from ocftools.logic.signature import LogicError
from ocftools.miscutils.cmdutils import (
    ExitCode,
    argparse_exit,
    make_check_input_path,
    warnings_to_stderr,
)
from ocftools.miscutils.errors import BudgetExceededError, OcfToolsError
from ocftools.miscutils.extutils import CONFIG_EXT, OCF_EXT, OCFTOML_EXT
from ocftools.miscutils.runconfig import RunConfig, RunConfigError, read_runconfig
from ocftools.ranking.ocf import OCF, RankingError
from ocftools.ranking.ocffile import read_ocf
from ocftools.revision.csp import RevisionError

BASE_EXTS = (OCF_EXT, OCFTOML_EXT)


def new_argparser():
    # noinspection PyTypeChecker
    return argparse.ArgumentParser(formatter_class=argparse.RawDescriptionHelpFormatter)


def add_base_argument(parser, dest="base", metavar="BASE", help=None):
    if help is None:
        help = (
            f"belief base file holding the OCF ({OCF_EXT} text or {OCFTOML_EXT} TOML)"
        )
    parser.add_argument(
        dest=dest, metavar=metavar, help=help, type=make_check_input_path(*BASE_EXTS)
    )


def add_json_argument(parser):
    parser.add_argument(
        "--json",
        dest="json",
        action="store_true",
        help="print the result as JSON instead of text (same data)",
    )


def add_config_argument(parser):
    parser.add_argument(
        "-c",
        "--config",
        metavar="CONFIG",
        dest="config",
        type=make_check_input_path(CONFIG_EXT),
        help=f"{CONFIG_EXT} file with settings; command-line flags override it",
    )


def add_verbose_argument(parser, help):
    parser.add_argument(
        "-v", "--verbose", dest="verbose", action="store_true", help=help
    )


def exit_code_for(error: OcfToolsError) -> ExitCode:
    """exit status a tool ends with when error is raised"""
    if isinstance(error, BudgetExceededError):
        return ExitCode.BUDGET_EXCEEDED
    if isinstance(error, NotElementaryError):
        return ExitCode.NOT_ELEMENTARY
    if isinstance(error, (ParseError, RunConfigError, RevisionError, LogicError)):
        return ExitCode.USAGE
    if isinstance(error, RankingError):
        return ExitCode.INVALID_BASE
    return ExitCode.USAGE


def run_tool(parser, func, parsed_args):
    """run func(parsed_args) and turn its errors and status into an exit

    func returns an ExitCode (or None for OK). Errors are printed like argparse errors,
    warnings are shown on stderr.
    """
    try:
        with warnings_to_stderr(parser.prog):
            code = func(parsed_args)
    except OcfToolsError as e:
        argparse_exit(exit_code_for(e), str(e), progname=parser.prog)
    except OSError as e:
        argparse_exit(ExitCode.USAGE, str(e), progname=parser.prog)
    if code not in (None, ExitCode.OK):
        sys.exit(int(code))


def load_base(path) -> OCF:
    return read_ocf(path)


def load_runconfig(parsed_args) -> RunConfig:
    """the defaults, updated from -c/--config if it was given"""
    path = getattr(parsed_args, "config", None)
    if path is None:
        return RunConfig()
    return read_runconfig(path)


def print_json(data) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def format_ranks(ocf: OCF, indent="  "):
    """one "world = rank" line per world, canonical order"""
    return "\n".join(f"{indent}{world} = {rank}" for world, rank in ocf.items())


def verbose_printer(enabled):
    """a progressfunc-style printer for -v, or None"""
    if not enabled:
        return None

    def verbosefunc(message):
        print(message, file=sys.stderr)

    return verbosefunc
