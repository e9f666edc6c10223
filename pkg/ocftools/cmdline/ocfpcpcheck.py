#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 ocftools developers
"""ocfpcpcheck.py - command-line tool to test conditional preservation of an OCF change

Tells whether the change from a prior to a posterior OCF can be written as the prior
plus a normalizing constant and one impact per verified or falsified conditional, and
prints the solution space if so. With --definition it also compares rank sums of
count-matched multisets of worlds directly.
"""

import sys

from ocftools.cmdline.ocfcommon import (
    add_base_argument,
    add_config_argument,
    add_json_argument,
    load_base,
    load_runconfig,
    new_argparser,
    print_json,
    run_tool,
)
from ocftools.logic.parser import parse_conditional_list
from ocftools.miscutils.cmdutils import wrap_argparse_desc
from ocftools.miscutils.extutils import OCF_EXT
from ocftools.pcp.preservation import (
    explain_nonrepresentable,
    find_imbalance,
    pcp_representable,
    unknown_names,
)
from ocftools.ranking.ocf import check_same_signature


def build_argparser():
    parser = new_argparser()
    parser.description = wrap_argparse_desc(
        "Check whether the change from PRIOR to POSTERIOR preserves the conditional "
        "structure of a set of conditionals, and print a witness if it does"
    )
    add_base_argument(parser, dest="prior", metavar="PRIOR", help="prior belief base")
    add_base_argument(
        parser, dest="posterior", metavar="POSTERIOR", help="posterior belief base"
    )
    parser.add_argument(
        "--conds",
        metavar="CONDITIONALS",
        dest="conds",
        required=True,
        help="comma-separated conditionals, e.g. '(p|b),(f|p),(!f|p)'",
    )
    parser.add_argument(
        "-d",
        "--definition",
        metavar="M",
        dest="max_multiset",
        type=int,
        help="also compare the rank sums of every pair of count-matched multisets of "
        "up to M worlds",
    )
    parser.add_argument(
        "--max-pairs",
        metavar="N",
        dest="max_pairs",
        type=int,
        help="give up (exit 5) if --definition would compare more than N pairs",
    )
    add_json_argument(parser)
    add_config_argument(parser)
    parser.epilog = wrap_argparse_desc(
        f"""\
Examples:
  Example 1: Does the posterior preserve the structure of the penguin conditionals?
      {parser.prog} penguin{OCF_EXT} posterior{OCF_EXT} --conds "(p|b),(f|p),(!f|p)"

  Example 2: Same as above, also checking all multisets of up to 2 worlds
      {parser.prog} -d 2 penguin{OCF_EXT} posterior{OCF_EXT} \\
          --conds "(p|b),(f|p),(!f|p)\""""
    )
    return parser


def pcpcheck(parsed_args):
    kappa = load_base(parsed_args.prior)
    kappa_post = load_base(parsed_args.posterior)
    sig = check_same_signature(kappa, kappa_post)
    conds = parse_conditional_list(parsed_args.conds, sig)
    config = load_runconfig(parsed_args).override(
        max_multiset=parsed_args.max_multiset, max_pairs=parsed_args.max_pairs
    )

    witness = pcp_representable(kappa, kappa_post, conds)
    data = {"representable": witness is not None}
    if witness is None:
        data["reason"] = explain_nonrepresentable(kappa, kappa_post, conds)
    else:
        names = unknown_names(len(conds))
        data["witness"] = {n: str(v) for n, v in zip(names, witness.vector)}
        data["free"] = list(witness.free)
        point = witness.integer_point(config.witness_radius)
        if point is not None:
            kappa0, gamma = point
            data["integer_witness"] = {"kappa0": kappa0, "gamma": gamma.as_dict()}
        else:
            data["integer_witness"] = None

    imbalance = None
    if parsed_args.max_multiset is not None:
        imbalance = find_imbalance(
            kappa, kappa_post, conds, config.max_multiset, config.max_pairs
        )
        data["balanced"] = imbalance is None
        data["imbalance"] = None if imbalance is None else str(imbalance)

    if parsed_args.json:
        print_json(data)
        return

    print(f"representable: {'true' if witness is not None else 'false'}")
    if witness is None:
        print(f"reason: {data['reason']}")
    else:
        print(f"witness: {witness.format()}")
        if point is not None:
            print(f"integer witness: k0={kappa0} g={gamma}")
        else:
            print("integer witness: (none found)")
    if "balanced" in data:
        print(f"balanced: {'true' if imbalance is None else 'false'}")
        if imbalance is not None:
            print(f"imbalance: {imbalance}")


def main(args=tuple(sys.argv[1:])):
    """args: sequence of command line argument strings"""
    parser = build_argparser()
    parsed_args = parser.parse_args(args)
    run_tool(parser, pcpcheck, parsed_args)


if __name__ == "__main__":
    main()
