#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfbeliefs.py - command-line tool to show the propositional beliefs of an OCF

Prints the most plausible (rank 0) worlds of a belief base and the belief formula, the
disjunction of their complete conjunctions. Can also write the base back out in
canonical order, converting between the text and TOML forms.
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
from ocftools.logic.formula import format_dnf
from ocftools.miscutils.cmdutils import make_check_input_path, wrap_argparse_desc
from ocftools.miscutils.extutils import OCF_EXT, OCFTOML_EXT
from ocftools.ranking.ocffile import write_ocf


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Show the beliefs of a ranking function: its rank-0 worlds and the belief "
        "formula they make up"
    )
    add_base_argument(parser)
    parser.add_argument(
        "-s",
        "--symbols",
        dest="symbols",
        action="store_true",
        help="print the formula with logic symbols (¬ ∧ ∨) instead of ! & |",
    )
    parser.add_argument(
        "-w",
        "--write",
        metavar="OUT",
        dest="write",
        type=make_check_input_path(OCF_EXT, OCFTOML_EXT),
        help=f"also write the belief base to OUT in canonical order, as text "
        f"({OCF_EXT}) or TOML ({OCFTOML_EXT}) depending on its extension",
    )
    add_json_argument(parser)
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Show the beliefs of a belief base
      {parser.prog} penguin{OCF_EXT}

  Example 2: Show the belief formula with logic symbols
      {parser.prog} --symbols penguin{OCF_EXT}

  Example 3: Convert a text belief base to TOML
      {parser.prog} penguin{OCF_EXT} --write penguin{OCFTOML_EXT}"""
    )
    return parser


def beliefs(parsed_args):
    kappa = load_base(parsed_args.base)
    worlds = [str(w) for w in kappa.belief_models()]
    formula = format_dnf(kappa.belief_formula(), parsed_args.symbols)
    if parsed_args.json:
        print_json({"worlds": worlds, "formula": formula})
    else:
        print(f"worlds: {', '.join(worlds)}")
        print(f"formula: {formula}")
    if parsed_args.write:
        write_ocf(kappa, parsed_args.write)


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    run_tool(parser, beliefs, parsed_args)


if __name__ == "__main__":
    main()
