"""Count isomorphism classes of pure r-complexes meeting the equality condition."""

import argparse

from simplicial_spectra.complex import is_isomorphic
from simplicial_spectra.extremal import contains_rhombic, gen_tented
from simplicial_spectra.homology import betti
from simplicial_spectra.search import search_cond


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--budget", type=float, default=120.0, help="seconds per (n, r)")
    args = ap.parse_args()

    for r in args.r:
        for n in range(r + 1, args.n_max + 1):
            out = search_cond(n, r, "backtracking", budget=args.budget)
            flag = "" if out.exhaustive else "  (budget hit, incomplete)"
            print(f"r={r} n={n}: {len(out.classes)} classes, {out.wall_time:.2f}s{flag}")
            for K in out.classes:
                tented = is_isomorphic(K, gen_tented(n, r))
                print(f"    facets={len(K.facets):>3} beta_r={betti(K)[r]} "
                      f"tented={tented} rhombic={contains_rhombic(K) is not None}")


if __name__ == "__main__":
    main()
