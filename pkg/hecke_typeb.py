#!/usr/bin/env python3
"""
Hecke Type B - Command-line access to every computation in the package

One entry point with a subcommand per task:

1. reptype          finite or infinite representation type of H(B_n)
2. kleshchev        whether a bipartition is Kleshchev, with a witness
3. blocks           the blocks of n with their residues and members
4. decomp           decomposition matrices in the finite-type regime
5. fock             products of divided powers F_i^(m) on the empty bipartition
6. jantzen          the right-hand side of the Jantzen sum formula
7. maya             the two-row path sequence and its region counts
8. verify-fixtures  regenerate every printed table and theorem instance

Bipartitions are written "4,2,1|2,2,1" ("|2,2" for ((0),(2,2)), "|" for the
empty one). e accepts an integer or "inf". Words are written like operators:
in F0,F1,F4,F0 the rightmost F0 acts first, and F0^2 is a divided power.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

Example usage:
    python hecke_typeb.py reptype --n 4 --e 5 --f 1
    python hecke_typeb.py fock --e 5 --f 0 --word F0,F1,F4,F0
    python hecke_typeb.py decomp --e 5 --f 1 --all --n 2 --json
    python hecke_typeb.py verify-fixtures --tag S5_CASE1 --output-file ledger.csv
"""
import argparse
import json
import sys

import rendering
from bipartitions import MAX_ENUMERATION_SIZE, parse_bipartition
from decomposition import census_frame, classify_block, decomposition_matrix, process_blocks
from fixture_verification import ALL_TAGS, ledger_frame, run_fixtures
from fock_space import f_product, parse_word
from jantzen import block_of, blocks, jantzen_sum
from kleshchev import is_kleshchev
from maya_diagrams import bipartition_to_bipath, check_identities, region_counts
from parameters import ConsistencyError, HeckeTypeBError, Params, parse_order
from representation_type import GENERIC, rep_type_b


def _order(text):
    try:
        return parse_order(text)
    except HeckeTypeBError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _params(args):
    return Params(args.e, args.f)


def run_reptype(args):
    if args.generic:
        charge, f0 = GENERIC, GENERIC
    elif args.f0 is not None:
        charge, f0 = f"f0={args.f0}", args.f0
    else:
        charge, f0 = f"f={args.f}", _params(args).f
    verdict = rep_type_b(args.n, args.e, f0)
    print(rendering.rep_type_json(args.n, args.e, charge, verdict) if args.json else verdict)
    return 0


def run_kleshchev(args):
    params = _params(args)
    b = parse_bipartition(args.bipartition)
    verdict, witness = is_kleshchev(b, params)
    if args.json:
        print(rendering.kleshchev_json(b, verdict, witness))
    else:
        print(rendering.kleshchev_text(b, verdict, witness))
    return 0


def run_blocks(args):
    params = _params(args)
    block_list = blocks(args.n, params, args.max_n)
    classifications = [classify_block(block) for block in block_list]
    if args.json:
        print(rendering.blocks_json(block_list, classifications))
    else:
        print(rendering.blocks_text(block_list, classifications))
    if args.output_file:
        frame = census_frame(args.n, params, args.max_n)
        print(f"Saving results to {args.output_file}...", file=sys.stderr)
        frame.to_csv(args.output_file, index=False)
    return 0


def run_decomp(args):
    params = _params(args)
    if args.block_of:
        b = parse_bipartition(args.block_of)
        block = block_of(b, params, args.max_n)
        matrix = decomposition_matrix(block)
        print(rendering.matrix_json(matrix) if args.json else rendering.matrix_text(matrix))
        return 0
    if args.n is None:
        raise HeckeTypeBError("decomp --all needs --n")
    results = process_blocks(args.n, params, verbose=args.verbose, max_size=args.max_n)
    if args.json:
        payload = []
        for result in results:
            entry = rendering.block_payload(result.block, result.classification)
            entry["matrix"] = rendering.matrix_payload(result.matrix) if result.matrix else None
            payload.append(entry)
        print(json.dumps(payload, indent=2, ensure_ascii=False))
        return 0
    sections = []
    for result in results:
        header = f"block {result.block.label} size={result.block.size} {result.classification.kind.value}"
        if result.classification.case:
            header += f" {result.classification.case.value}"
        body = rendering.matrix_text(result.matrix) if result.matrix else "(outside the finite-type regime)"
        sections.append(f"{header}\n{body}")
    print("\n\n".join(sections))
    return 0


def run_fock(args):
    params = _params(args)
    u = f_product(parse_word(args.word, params), params)
    print(rendering.fock_vector_json(u) if args.json else rendering.fock_vector_text(u))
    return 0


def run_jantzen(args):
    params = _params(args)
    combination = jantzen_sum(parse_bipartition(args.bipartition), params)
    if args.json:
        print(rendering.specht_combination_json(combination))
    else:
        print(rendering.specht_combination_text(combination))
    return 0


def run_maya(args):
    params = _params(args)
    b = parse_bipartition(args.bipartition)
    path = bipartition_to_bipath(b, params)
    counts = region_counts(path)
    identities = check_identities(counts, params, b.size)
    if args.json:
        print(rendering.maya_json(b, path, counts, identities))
    else:
        print(rendering.maya_text(b, path, counts, identities))
    return 0


def run_verify_fixtures(args):
    records = run_fixtures(args.tag, verbose=args.verbose)
    frame = ledger_frame(records)
    if args.json:
        print(frame.to_json(orient="records", indent=2))
    else:
        print(frame.to_string(index=False))
    if args.output_file:
        print(f"Saving results to {args.output_file}...", file=sys.stderr)
        frame.to_csv(args.output_file, index=False)
    failed = int((frame["status"] == "FAIL").sum())
    return 1 if failed else 0


def build_parser():
    """The argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='Print JSON instead of text')

    charged = argparse.ArgumentParser(add_help=False, parents=[common])
    charged.add_argument('--e', type=_order, required=True,
                         help='Order of q: an integer >= 3 or "inf"')
    charged.add_argument('--f', type=int, default=0,
                         help='Normalised charge 0 <= f <= e/2 (default: 0)')

    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument('--max-n', type=int, default=MAX_ENUMERATION_SIZE,
                       help=f'Largest n that may be enumerated (default: {MAX_ENUMERATION_SIZE})')

    parser = argparse.ArgumentParser(
        prog='hecke_typeb.py',
        description='Representation type, blocks and decomposition matrices of Hecke algebras of type B',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    reptype = commands.add_parser('reptype', parents=[common],
                                  help='Finite or infinite representation type of H(B_n)')
    reptype.add_argument('--n', type=int, required=True, help='Rank n >= 1')
    reptype.add_argument('--e', type=_order, required=True, help='Order of q: an integer >= 3 or "inf"')
    charge = reptype.add_mutually_exclusive_group(required=True)
    charge.add_argument('--f', type=int, help='Normalised charge 0 <= f <= e/2')
    charge.add_argument('--f0', type=int, help='Eigenvalue exponent f0 of T_0, normalised to min(f0, e - f0)')
    charge.add_argument('--generic', action='store_true', help='Q is not -q^f for any f')
    reptype.set_defaults(handler=run_reptype)

    kleshchev = commands.add_parser('kleshchev', parents=[charged],
                                    help='Decide whether a bipartition is Kleshchev')
    kleshchev.add_argument('bipartition', help='Bipartition literal, e.g. "1|2,1"')
    kleshchev.set_defaults(handler=run_kleshchev)

    blocks_cmd = commands.add_parser('blocks', parents=[charged, sized],
                                     help='List the blocks of the bipartitions of n')
    blocks_cmd.add_argument('--n', type=int, required=True, help='Size of the bipartitions')
    blocks_cmd.add_argument('--output-file', type=str, default=None,
                            help='Also write the block census to this CSV file')
    blocks_cmd.set_defaults(handler=run_blocks)

    decomp = commands.add_parser('decomp', parents=[charged, sized],
                                 help='Decomposition matrices for n < min(e, 2f+4)')
    target = decomp.add_mutually_exclusive_group(required=True)
    target.add_argument('--block-of', type=str, help='Bipartition literal whose block is wanted')
    target.add_argument('--all', action='store_true', help='Every block of --n')
    decomp.add_argument('--n', type=int, default=None, help='Size of the bipartitions (with --all)')
    decomp.add_argument('--verbose', action='store_true', help='Print a progress line per block')
    decomp.set_defaults(handler=run_decomp)

    fock = commands.add_parser('fock', parents=[charged],
                               help='Apply a word of divided powers to the empty bipartition')
    fock.add_argument('--word', type=str, required=True,
                      help='Comma-separated letters F<i> or F<i>^<m>, rightmost acting first')
    fock.set_defaults(handler=run_fock)

    jantzen = commands.add_parser('jantzen', parents=[charged],
                                  help='Right-hand side of the Jantzen sum formula (n < e)')
    jantzen.add_argument('bipartition', help='Bipartition literal')
    jantzen.set_defaults(handler=run_jantzen)

    maya = commands.add_parser('maya', parents=[charged],
                               help='Two-row path sequence, region counts and identities')
    maya.add_argument('bipartition', help='Bipartition literal')
    maya.set_defaults(handler=run_maya)

    verify = commands.add_parser('verify-fixtures', parents=[common],
                                 help='Regenerate every printed table and theorem instance')
    verify.add_argument('--tag', choices=ALL_TAGS, default=None,
                        help='Run one fixture group only (default: all)')
    verify.add_argument('--verbose', action='store_true', help='Print a progress line per check')
    verify.add_argument('--output-file', type=str, default=None,
                        help='Also write the ledger to this CSV file')
    verify.set_defaults(handler=run_verify_fixtures)
    return parser


def main(argv=None):
    """
    Parse the command line, run one subcommand and return its exit code.

    Domain errors (bad literals, parameters out of range, inexact division,
    failed cross-checks) print "Error: ..." and give 1; argparse usage
    errors give 2.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.handler(args)
    except KeyboardInterrupt:
        print("\nOperation canceled by user.")
        return 1
    except (HeckeTypeBError, ArithmeticError, ConsistencyError) as exc:
        print(f"Error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
