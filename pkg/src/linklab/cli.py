"""Command-line interface.  Exit status is 0 exactly when every check passes."""

from __future__ import annotations

import argparse
import sys

from .errors import LinklabError, ParseError
from .linkage import LinkageRecord, even_link_chain, find_ci_link, link
from .report import invariant_report
from .suites import betti_oracle_suite, random_property_suite, verify_paper_suite
from .textformat import format_ideal, parse_ideal_file

EXIT_OK, EXIT_CHECK_FAILED, EXIT_ERROR = 0, 1, 2


def _unmixed_flag(args):
    return True if args.assume_unmixed else None


def _print_record(rec: LinkageRecord):
    print(format_ideal(rec.b, comment="linked ideal c : a"), end="")
    print(f"# linking CI: {', '.join(str(g) for g in rec.c.generators)}")
    print(f"# verified: {rec.verified}")
    print(f"# unmixedness of a: {rec.unmixed}")
    for side, s in (("a", rec.invariants_of_a), ("b", rec.invariants_of_b)):
        print(f"# {side}: depth {s.depth}, dim {s.dim}, height {s.height}, pd {s.pd}, "
              f"CM {s.cohen_macaulay}")
    for note in rec.notes:
        print(f"# note: {note}")


def cmd_invariants(args) -> int:
    rep = invariant_report(parse_ideal_file(args.file), e_max=args.e_max, max_q=args.max_q)
    print(rep.to_json() if args.json else rep.summary())
    return EXIT_OK if not rep.check() else EXIT_CHECK_FAILED


def cmd_link(args) -> int:
    a, c = parse_ideal_file(args.a), parse_ideal_file(args.ci)
    rec = link(a, c, _unmixed_flag(args))
    _print_record(rec)
    return EXIT_OK if rec.verified else EXIT_CHECK_FAILED


def cmd_find_link(args) -> int:
    rec = find_ci_link(parse_ideal_file(args.a), args.seed, _unmixed_flag(args))
    _print_record(rec)
    return EXIT_OK if rec.verified else EXIT_CHECK_FAILED


def cmd_chain(args) -> int:
    a = parse_ideal_file(args.a)
    chain = even_link_chain(a, args.steps, args.seed, _unmixed_flag(args))
    for k, (I, d) in enumerate(zip(chain.ideals, chain.depths)):
        print(f"stage {k}: depth {d}; {len(I.generators)} generators")
    ok = chain.complete
    if chain.error:
        print(f"chain aborted: {chain.error}")
    depths = chain.depths
    even = depths[::2]
    if len(set(even)) > 1:
        print(f"depth differs at even distance: {even}")
        ok = False
    print("chain " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_verify_paper(args) -> int:
    ledger = verify_paper_suite(heavy=args.heavy, heavy_budget_s=args.heavy_budget)
    print(ledger.to_text())
    return EXIT_OK if ledger.ok else EXIT_CHECK_FAILED


def cmd_property_test(args) -> int:
    rep = random_property_suite(args.trials, args.seed, args.vars, args.char)
    print(rep.to_text())
    ok = rep.ok
    if args.betti_trials:
        oracle = betti_oracle_suite(args.betti_trials, args.seed, args.vars, args.char)
        print(oracle.to_text())
        ok = ok and oracle.ok
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linklab",
        description="depth, projective and cohomological dimension, and linkage of "
                    "homogeneous ideals.  LINKLAB_PAIR_BUDGET caps S-pairs per Groebner run.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report of one ideal file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--e-max", type=int, default=3, help="Frobenius probe stages")
    p.add_argument("--max-q", type=int, default=64, help="skip probe stages with p^e above this")
    p.set_defaults(func=cmd_invariants)

    for name, func, helptext in (("link", cmd_link, "link a by a given complete intersection"),
                                 ("find-link", cmd_find_link, "link a by a CI found inside it")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("a")
        if name == "link":
            p.add_argument("--ci", required=True, help="file with the linking CI")
        else:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--assume-unmixed", action="store_true",
                       help="assert unmixedness of a non-squarefree input")
        p.set_defaults(func=func)

    p = sub.add_parser("chain", help="even linkage chain with fresh CIs per step")
    p.add_argument("a")
    p.add_argument("--steps", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--assume-unmixed", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("verify-paper", help="fixed-example verification ledger")
    p.add_argument("--heavy", action="store_true", help="include the 12-variable determinantal link")
    p.add_argument("--heavy-budget", type=float, default=1800.0, help="seconds before SKIPPED")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("property-test", help="random linkage property suite")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--char", type=int, default=32003)
    p.add_argument("--betti-trials", type=int, default=0,
                   help="also run the Hochster oracle on this many random ideals")
    p.set_defaults(func=cmd_property_test)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (LinklabError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
