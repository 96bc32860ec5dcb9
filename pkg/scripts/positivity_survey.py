#!/usr/bin/env python3
"""Check whether the closed multiplicity formula is strictly positive on every
dominant, parity-consistent weight of the N-th spinor power.

Usage:
  python scripts/positivity_survey.py --max-rank 4 --max-power 40
"""
import argparse
import itertools

from spinorlaw.multiplicities import multiplicity_exact, tensor_decompose_oracle


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--max-power", type=int, default=40)
    parser.add_argument("--oracle-power", type=int, default=12,
                        help="also compare against iterated tensoring up to this power")
    args = parser.parse_args()

    checked = zeros = mismatches = 0
    for n in range(1, args.max_rank + 1):
        for N in range(args.max_power + 1):
            box = list(itertools.combinations_with_replacement(range(N // 2 + 1), n))
            values = {s: multiplicity_exact(n, N, s) for s in box}
            checked += len(box)
            zeros += sum(v == 0 for v in values.values())
            if N <= args.oracle_power:
                oracle = tensor_decompose_oracle(n, N).multiplicities
                mismatches += sum(oracle.get(s, 0) != v for s, v in values.items())
    print(f"weights checked: {checked}")
    print(f"zero multiplicities: {zeros}")
    print(f"oracle mismatches (N <= {args.oracle_power}): {mismatches}")


if __name__ == "__main__":
    main()
