#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfrevise.py - command-line tool to revise an OCF by an elementary descriptor

Prints every posterior the revision can reach within the impact bounds, or only the one
picked by --select/--prefer.
"""

import sys

from ocftools.cmdline.ocfcommon import (
    BASE_EXTS,
    add_base_argument,
    add_config_argument,
    add_json_argument,
    add_verbose_argument,
    format_ranks,
    load_base,
    load_runconfig,
    new_argparser,
    print_json,
    run_tool,
    verbose_printer,
)
from ocftools.descriptor.parser import parse_descriptor
from ocftools.miscutils.cmdutils import (
    ExitCode,
    make_check_input_path,
    wrap_argparse_desc,
)
from ocftools.miscutils.extutils import CONFIG_EXT, OCF_EXT
from ocftools.ranking.ocf import check_same_signature
from ocftools.revision.bounds import parse_bounds, resolve_bounds
from ocftools.revision.revise import (
    SELECT_LEX,
    SELECT_POLICIES,
    STATUS_NO_SUCCESSOR,
    Prefer,
    revise,
)


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Revise a ranking function by an elementary descriptor (belief statements B(c) "
        "and !B(c) separated by commas) and print the posteriors that satisfy it while "
        "preserving the conditional structure of the prior"
    )
    add_base_argument(parser, help="belief base holding the prior OCF")
    parser.add_argument(
        metavar="DESCRIPTOR",
        dest="descriptor",
        help="elementary descriptor, e.g. 'B(p|b), !B(f|p), !B(!f|p)'",
    )
    parser.add_argument(
        "-b",
        "--bounds",
        metavar="BOUNDS",
        dest="bounds",
        help="impact bounds like 'g1+=-2..0,g1-=0..2'; gi+ and gi- belong to the i-th "
        "conditional of the descriptor. Variables left out use a heuristic default",
    )
    select_group = parser.add_mutually_exclusive_group()
    select_group.add_argument(
        "-s",
        "--select",
        dest="select",
        choices=SELECT_POLICIES,
        help="print only the solution picked by this policy: lex = first in impact "
        "order, min-sum = smallest sum of absolute impacts (default: print all)",
    )
    select_group.add_argument(
        "--prefer",
        metavar="POSTERIOR_BASE",
        dest="prefer",
        type=make_check_input_path(*BASE_EXTS),
        help="print only the solution whose posterior is the OCF in this belief base, "
        "or the first solution if none is",
    )
    parser.add_argument(
        "--dedup",
        dest="dedup",
        action="store_true",
        default=None,
        help="drop solutions whose posterior equals that of an earlier solution",
    )
    parser.add_argument(
        "-j",
        "--workers",
        metavar="N",
        dest="workers",
        type=int,
        help="split the search across N processes (default: 1)",
    )
    parser.add_argument(
        "--max-leaves",
        metavar="N",
        dest="max_leaves",
        type=int,
        help="give up (exit 5) after evaluating N impact vectors",
    )
    add_json_argument(parser)
    add_config_argument(parser)
    add_verbose_argument(parser, help="report search progress on stderr")
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Penguins are birds, and whether they fly is left open
      {parser.prog} penguin{OCF_EXT} "B(p|b), !B(f|p), !B(!f|p)" \\
          --bounds "g1+=-2..0,g1-=0..2,g2+=-1..1,g2-=-1..1,g3+=0..0,g3-=0..0"

  Example 2: Same as above but keep only the smallest change
      {parser.prog} --select min-sum penguin{OCF_EXT} "B(p|b), !B(f|p), !B(!f|p)"

  Example 3: Take bounds and the selection policy from a config file
      {parser.prog} -c run{CONFIG_EXT} penguin{OCF_EXT} "B(p|b), !B(f|p), !B(!f|p)\""""
    )
    return parser


def format_solution(position, solution):
    """"[1] g1+=0 g1-=2 ... k0=0" followed by the posterior ranks"""
    parts = [f"[{position}]"]
    parts.extend(f"{n}={v}" for n, v in solution.gamma.as_dict().items())
    parts.append(f"k0={solution.kappa0}")
    return f"{' '.join(parts)}\n{format_ranks(solution.posterior)}"


def revise_base(parsed_args):
    kappa = load_base(parsed_args.base)
    psi = parse_descriptor(parsed_args.descriptor, kappa.sig)
    flag_bounds = parse_bounds(parsed_args.bounds) if parsed_args.bounds else None
    config = load_runconfig(parsed_args).override(
        select=parsed_args.select,
        dedup=parsed_args.dedup,
        workers=parsed_args.workers,
        max_leaves=parsed_args.max_leaves,
        bounds=flag_bounds,
    )

    # 1. selection: --prefer wins over --select, which wins over the config file
    select = config.select
    if parsed_args.prefer is not None:
        target = load_base(parsed_args.prefer)
        check_same_signature(kappa, target)
        select = Prefer(target)

    # 2. solve
    verbosefunc = verbose_printer(parsed_args.verbose)
    progressfunc = None
    if verbosefunc is not None:

        def progressfunc(name, value, position, count):
            verbosefunc(f"solving {name}={value} ({position}/{count})")

    bounds = resolve_bounds(kappa, psi, config.bounds_dict)
    result = revise(
        kappa,
        psi,
        bounds,
        select=SELECT_LEX if select is None else select,
        dedup=config.dedup,
        workers=config.workers,
        max_leaves=config.max_leaves,
        progressfunc=progressfunc,
    )
    if verbosefunc is not None:
        verbosefunc(f"bounds: {result.bounds}")

    # 3. print
    shown = result.solutions if select is None else [result.chosen]
    shown = [s for s in shown if s is not None]
    select_name = None if select is None else str(select)
    if parsed_args.json:
        print_json(
            {
                "status": result.status,
                "count": len(result.solutions),
                "select": select_name,
                "solutions": [s.as_dict() for s in shown],
            }
        )
    else:
        print(f"status: {result.status}")
        print(f"solutions: {len(result.solutions)}")
        if select_name is not None:
            print(f"select: {select_name}")
        for position, solution in enumerate(shown, start=1):
            print(format_solution(position, solution))

    if result.status == STATUS_NO_SUCCESSOR:
        return ExitCode.NO_SOLUTION
    return ExitCode.OK


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    run_tool(parser, revise_base, parsed_args)


if __name__ == "__main__":
    main()
