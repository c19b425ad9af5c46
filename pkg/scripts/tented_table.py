"""Measured vs closed-form spectral radius of tented complexes."""

import argparse
import time

from simplicial_spectra.extremal import gen_tented
from simplicial_spectra.spectral import q_spectral_radius, tented_spectral_radius_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()

    print(f"{'r':>2} {'n':>3} {'exact':>6} {'measured':>20} {'|err|':>9} {'iters':>6}")
    start = time.monotonic()
    worst = 0.0
    for r in range(1, args.r_max + 1):
        for n in range(r + 1, args.n_max + 1):
            res = q_spectral_radius(gen_tented(n, r), r - 1)
            exact = tented_spectral_radius_exact(n, r)
            err = abs(res.value - exact)
            worst = max(worst, err)
            print(f"{r:>2} {n:>3} {exact:>6} {res.value:>20.14f} {err:>9.1e} {res.iterations:>6}")
    print(f"max error {worst:.2e}, {time.monotonic() - start:.2f}s")


if __name__ == "__main__":
    main()
