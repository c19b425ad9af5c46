"""Spectral upper bounds for ex(n, Delta_{r+1}^r) next to the conjectured values."""

import argparse
from math import comb

from simplicial_spectra.extremal import (
    turan_conjecture_value,
    turan_upper_corollary,
    turan_upper_direct,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=15)
    args = ap.parse_args()
    r = args.r

    print(f"{'n':>4} {'direct':>14} {'corollary':>14} {'C(n,r)':>8}" + ("  conjecture" if r == 3 else ""))
    for n in range(r + 1, args.n_max + 1):
        d, c = turan_upper_direct(n, r), turan_upper_corollary(n, r)
        row = f"{n:>4} {str(d):>14} {str(c):>14} {comb(n, r):>8}"
        if r == 3:
            row += f"  {turan_conjecture_value(n):>10}"
        print(row)
    for n in (10**2, 10**3, 10**4):
        print(f"n={n}: corollary / C(n,r) = {float(turan_upper_corollary(n, r) / comb(n, r)):.5f}"
              f"  (limit {(r - 1) / r:.5f})")


if __name__ == "__main__":
    main()
