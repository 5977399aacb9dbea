#!/usr/bin/env python3
"""Golomb ruler counts by length for a fixed number of gaps, plus the
shortest length admitting one, from the exhaustive search."""

import argparse
import time

from golomb.rulers import count_golomb_rulers, optimal_length


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=3, help="number of gaps")
    parser.add_argument("--t-max", type=int, default=35)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    shortest = optimal_length(args.m)
    print(f"m={args.m}: shortest Golomb ruler length {shortest}")
    start = time.perf_counter()
    for t in range(shortest, args.t_max + 1):
        print(f"{t}\t{count_golomb_rulers(args.m, t, jobs=args.jobs)}")
    print(f"# {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
