"""Frobenius probe on the corpus ideals over small primes: at which stage, if any,
does Ext^i(R/I, R) -> Ext^i(R/I^[q], R) become zero?"""

import argparse

from linklab.library import NAMES, load
from linklab.resolution import cd_bounds_char_p


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--e-max", type=int, default=3)
    ap.add_argument("--max-q", type=int, default=128)
    args = ap.parse_args()
    for name in NAMES:
        if name == "twisted_quartic_printed":
            continue
        for p in args.primes:
            b = cd_bounds_char_p(load(name, p), e_max=args.e_max, max_q=args.max_q)
            shown = b.exact if b.exact is not None else f"[{b.lower}, {b.upper}]"
            print(f"{name:<16} p={p:<3} cd {shown}   " + "; ".join(b.notes[2:]))


if __name__ == "__main__":
    main()
