#!/usr/bin/env python3
"""Print the stratum dimension tables for a range of ambient dimensions."""

import argparse

from jordanplane.strata import strata_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        table = strata_table(n)
        print(f"\nn = {n}: {len(table)} strata, every total dimension should be {n * n}")
        print(f"{'partition':<18}{'orbit':>8}{'fiber':>8}{'total':>8}")
        for s in table:
            print(f"{str(s.partition):<18}{s.orbit_dim:>8}{s.fiber_dim:>8}"
                  f"{s.total_dim:>8}")


if __name__ == "__main__":
    main()
