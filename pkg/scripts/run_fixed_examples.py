"""Print the fixed-example ledger; pass --heavy for the 12-variable determinantal link."""

import argparse
import sys
import time

from linklab.suites import verify_paper_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--heavy", action="store_true")
    ap.add_argument("--budget", type=float, default=1800.0, help="heavy time budget in seconds")
    args = ap.parse_args()
    t0 = time.perf_counter()
    ledger = verify_paper_suite(heavy=args.heavy, heavy_budget_s=args.budget)
    print(ledger.to_text())
    print(f"elapsed: {time.perf_counter() - t0:.2f} s")
    return 0 if ledger.ok else 1


if __name__ == "__main__":
    sys.exit(main())
