#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfcheck.py - command-line tool to test whether an OCF satisfies a descriptor

Any descriptor can be checked, including disjunctions of belief statements.
"""

import sys

from ocftools.cmdline.ocfcommon import (
    add_base_argument,
    add_json_argument,
    load_base,
    new_argparser,
    print_json,
    run_tool,
)
from ocftools.descriptor.parser import parse_descriptor
from ocftools.miscutils.cmdutils import wrap_argparse_desc
from ocftools.miscutils.extutils import OCF_EXT


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Print true if the ranking function satisfies the descriptor, else false"
    )
    add_base_argument(parser)
    parser.add_argument(
        metavar="DESCRIPTOR",
        dest="descriptor",
        help="comma-separated descriptor elements. B(c) means the conditional c is "
        "accepted, B(A) means the formula A is believed; combine them with !, & and |. "
        "An empty descriptor always holds",
    )
    add_json_argument(parser)
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Not a bird or a penguin, and not a flying bird
      {parser.prog} posterior{OCF_EXT} "B(!b) | B(p), !B(b & f)"

  Example 2: Penguins are birds, and nothing is believed about penguins flying
      {parser.prog} penguin{OCF_EXT} "B(p|b), !B(f|p), !B(!f|p)\""""
    )
    return parser


def check(parsed_args):
    kappa = load_base(parsed_args.base)
    psi = parse_descriptor(parsed_args.descriptor, kappa.sig)
    result = psi.holds(kappa)
    if parsed_args.json:
        print_json({"holds": result})
    else:
        print("true" if result else "false")


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    run_tool(parser, check, parsed_args)


if __name__ == "__main__":
    main()
