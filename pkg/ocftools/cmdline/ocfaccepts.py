#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfaccepts.py - command-line tool to test whether an OCF accepts a conditional"""

import sys

from ocftools.cmdline.ocfcommon import (
    add_base_argument,
    add_json_argument,
    load_base,
    new_argparser,
    print_json,
    run_tool,
)
from ocftools.logic.parser import parse_conditional
from ocftools.miscutils.cmdutils import wrap_argparse_desc
from ocftools.miscutils.extutils import OCF_EXT


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Print true if the ranking function accepts the conditional (B|A), that is if "
        "A & B is strictly more plausible than A & !B, else false"
    )
    add_base_argument(parser)
    parser.add_argument(
        metavar="CONDITIONAL",
        dest="conditional",
        help="conditional like '(f|b)'; a disjunction inside either side needs its own "
        "parentheses, e.g. '((a | b)|c)'",
    )
    add_json_argument(parser)
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Do birds usually fly?
      {parser.prog} penguin{OCF_EXT} "(f|b)"

  Example 2: Is a plain formula believed? Use top as the antecedent
      {parser.prog} penguin{OCF_EXT} "(!p|top)\""""
    )
    return parser


def accepts(parsed_args):
    kappa = load_base(parsed_args.base)
    cond = parse_conditional(parsed_args.conditional, kappa.sig)
    accepted = kappa.accepts(cond)
    if parsed_args.json:
        print_json({"accepted": accepted})
    else:
        print("true" if accepted else "false")


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    run_tool(parser, accepts, parsed_args)


if __name__ == "__main__":
    main()
