"""Run the random linkage suite and the Hochster oracle over a grid of seeds and sizes.

Writes one line per (suite, seed, n) to stdout, plus the full reports of any
run with violations.  Example:

    python3 scripts/property_sweep.py --seeds 1 2 3 --vars 3 4 5 --trials 20
"""

import argparse
import sys
import time

from linklab.suites import betti_oracle_suite, random_property_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--vars", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--char", type=int, default=32003)
    args = ap.parse_args()

    failed = []
    for seed in args.seeds:
        for n in args.vars:
            t0 = time.perf_counter()
            links = random_property_suite(args.trials, seed, n, args.char)
            oracle = betti_oracle_suite(args.trials, seed, n, args.char)
            dt = time.perf_counter() - t0
            c = links.counts
            print(f"seed={seed} n={n}: links {c.get('links verified', 0)}/{args.trials} verified, "
                  f"CM {c.get('CM links', 0)}, non-CM {c.get('non-CM links', 0)}, "
                  f"violations {len(links.violations)}, stage failures {len(links.stage_failures)}; "
                  f"oracle violations {len(oracle.violations)}; {dt:.1f} s")
            failed.extend(r for r in (links, oracle) if not r.ok)
    for rep in failed:
        print(rep.to_text())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
