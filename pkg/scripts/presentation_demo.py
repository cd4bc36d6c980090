#!/usr/bin/env python3
"""Extract image-algebra presentations for full-block samples.

Emits, for each n, the minimal relations in u = X - alpha I and v = Y found
degree by degree, together with the image dimension; these are the data one
compares against the known classification of local algebras by hand.
"""

import argparse

from jordanplane.imgalg import extract_presentation, generated_subalgebra
from jordanplane.repmod import Representation
from jordanplane.strata import Partition, sample_point


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--degree", type=int, default=None,
                        help="relation degree bound (default: n)")
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        s = sample_point(Partition((n,)), args.seed)
        rep = Representation(n, s.X, s.Y)
        degree = args.degree if args.degree is not None else max(2, n)
        pres = extract_presentation(rep, degree)
        dim = generated_subalgebra(s.X, s.Y).dim
        print(f"\nfull block n = {n}: image dim {dim}, "
              f"u = X - ({pres.alpha}) I, v = Y, relations up to degree {degree}:")
        for deg, rels in sorted(pres.relation_strings().items()):
            for rel in rels:
                print(f"  [deg {deg}]  {rel} = 0")


if __name__ == "__main__":
    main()
