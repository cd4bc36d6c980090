#!/usr/bin/env python3
"""Survey image-algebra dimensions against the n(n+2)/4 | (n+1)^2/4 bound.

Samples every stratum of every dimension up to --max-n and tabulates the
observed image-algebra dimensions, whether the bound is attained, and the
quiver loop counts in the local cases.
"""

import argparse
from collections import Counter

from jordanplane.imgalg import dimension_bound, image_report
from jordanplane.repmod import Representation
from jordanplane.strata import partitions, sample_point


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        bound = dimension_bound(n)
        print(f"\nn = {n}, bound {bound}")
        print(f"{'partition':<18}{'dims seen':<22}{'attains':>8}   {'loops':<12}")
        for p in partitions(n):
            dims = Counter()
            loops = Counter()
            for i in range(args.samples):
                s = sample_point(p, args.seed + i)
                r = image_report(Representation(n, s.X, s.Y))
                dims[r.image_dim] += 1
                if r.loops is not None:
                    loops[r.loops] += 1
            dims_txt = ", ".join(f"{d}x{c}" for d, c in sorted(dims.items()))
            attains = "yes" if max(dims) == bound else "no"
            loops_txt = (", ".join(f"{l}x{c}" for l, c in sorted(loops.items()))
                         if loops else "-")
            print(f"{str(p):<18}{dims_txt:<22}{attains:>8}   {loops_txt:<12}")


if __name__ == "__main__":
    main()
