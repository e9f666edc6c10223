#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocforacle.py - command-line tool to cross-check revision against brute force

Enumerates every OCF with ranks up to --max-rank and checks that each one satisfying the
descriptor with conditional preservation is found by the constraint system. With
--bounds, also checks every solution in that box and every point of the box.
"""

import sys

from ocftools.cmdline.ocfcommon import (
    add_base_argument,
    add_config_argument,
    add_json_argument,
    add_verbose_argument,
    load_base,
    load_runconfig,
    new_argparser,
    print_json,
    run_tool,
    verbose_printer,
)
from ocftools.descriptor.parser import parse_descriptor
from ocftools.miscutils.cmdutils import ExitCode, wrap_argparse_desc
from ocftools.miscutils.extutils import OCF_EXT
from ocftools.oracle.completeness import (
    completeness_report,
    constraint_equivalence,
    soundness_report,
)
from ocftools.oracle.enumeration import count_ocfs
from ocftools.revision.bounds import parse_bounds, resolve_bounds
from ocftools.revision.csp import build_csp

DEFAULT_MAX_RANK = 2


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Enumerate every ranking function up to a maximal rank and check that the "
        "revision constraint system finds all posteriors that satisfy the descriptor "
        "and preserve the conditional structure of the prior"
    )
    add_base_argument(parser, help="belief base holding the prior OCF")
    parser.add_argument(
        metavar="DESCRIPTOR",
        dest="descriptor",
        help="elementary descriptor, e.g. 'B(b|a)'",
    )
    parser.add_argument(
        "-r",
        "--max-rank",
        metavar="N",
        dest="max_rank",
        type=int,
        default=DEFAULT_MAX_RANK,
        help=f"enumerate OCFs with ranks 0..N (default: {DEFAULT_MAX_RANK})",
    )
    parser.add_argument(
        "--budget",
        metavar="N",
        dest="max_ocfs",
        type=int,
        help="give up (exit 5) if there are more than N OCFs to enumerate",
    )
    parser.add_argument(
        "--witness-radius",
        metavar="N",
        dest="witness_radius",
        type=int,
        help="search free witness parameters in -N..N for an integer witness",
    )
    parser.add_argument(
        "-b",
        "--bounds",
        metavar="BOUNDS",
        dest="bounds",
        help="also solve within these impact bounds (like 'g1+=-2..0,g1-=0..2') and "
        "check every solution and every point of the box",
    )
    add_json_argument(parser)
    add_config_argument(parser)
    add_verbose_argument(parser, help="report enumeration progress on stderr")
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Check a single revision over a two-atom base, ranks up to 2
      {parser.prog} uniform_ab{OCF_EXT} "B(b|a)"

  Example 2: Check the penguin revision exhaustively up to rank 4 (takes minutes)
      {parser.prog} -r 4 penguin{OCF_EXT} "B(p|b), !B(f|p), !B(!f|p)\""""
    )
    return parser


def oracle(parsed_args):
    kappa = load_base(parsed_args.base)
    psi = parse_descriptor(parsed_args.descriptor, kappa.sig)
    config = load_runconfig(parsed_args).override(
        max_ocfs=parsed_args.max_ocfs, witness_radius=parsed_args.witness_radius
    )

    verbosefunc = verbose_printer(parsed_args.verbose)
    progressfunc = None
    if verbosefunc is not None:
        total = count_ocfs(kappa.sig, parsed_args.max_rank)
        verbosefunc(f"enumerating {total} OCFs")

        def progressfunc(examined):
            verbosefunc(f"enumerated {examined} OCFs")

    # 1. completeness over the whole rank box
    report = completeness_report(
        kappa,
        psi,
        parsed_args.max_rank,
        max_ocfs=config.max_ocfs,
        witness_radius=config.witness_radius,
        progressfunc=progressfunc,
    )
    data = report.as_dict()
    ok = report.ok

    # 2. soundness and constraint equivalence within the given bounds
    if parsed_args.bounds:
        bounds = resolve_bounds(kappa, psi, parse_bounds(parsed_args.bounds))
        soundness = soundness_report(kappa, psi, bounds, config.max_leaves)
        mismatches = constraint_equivalence(build_csp(kappa, psi), bounds)
        data["solutions"] = len(soundness.solutions)
        data["unsound"] = [str(s.gamma) for s in soundness.failures]
        data["mismatches"] = [str(m) for m in mismatches]
        ok = ok and soundness.ok and not mismatches

    if parsed_args.json:
        data["ok"] = ok
        print_json(data)
    else:
        print(report.format())
        if parsed_args.bounds:
            print(f"solutions: {data['solutions']}")
            print(f"unsound: {len(data['unsound'])}")
            for gamma in data["unsound"]:
                print(f"  g={gamma}")
            print(f"mismatches: {len(data['mismatches'])}")
            for mismatch in data["mismatches"]:
                print(f"  {mismatch}")
        print(f"ok: {'true' if ok else 'false'}")

    return ExitCode.OK if ok else ExitCode.NO_SOLUTION


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    if parsed_args.max_rank < 0:
        parser.error("--max-rank must not be negative")
    run_tool(parser, oracle, parsed_args)


if __name__ == "__main__":
    main()
