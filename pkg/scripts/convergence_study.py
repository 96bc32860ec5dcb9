#!/usr/bin/env python3
"""Finite-N character measure at the critical drift versus its boundary limit.

Writes one CSV of convergence records and prints the fitted error exponent
``err ~ N^{-p}`` for each s.

Usage:
  python scripts/convergence_study.py --n 2 --theta 1,2 --s-max 2 --N-list 32,64,128,256,512,1024
"""
from __future__ import annotations

import argparse
import math
import sys

from spinorlaw.limitlaw import convergence_table, valid_s, write_convergence_csv


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--theta", default="1,2")
    parser.add_argument("--s-max", type=int, default=2)
    parser.add_argument("--N-list", default="32,64,128,256,512,1024")
    parser.add_argument("--dps", type=int, default=50)
    parser.add_argument("--out", default="convergence.csv")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    theta = [float(x) for x in args.theta.split(",")]
    N_list = [int(x) for x in args.N_list.split(",")]
    s_list = list(valid_s(args.n, args.s_max))
    records = convergence_table(args.n, theta, s_list, N_list, args.dps)
    with open(args.out, "w", newline="") as fh:
        write_convergence_csv(records, args.n, fh, comment=f"config: {vars(args)}")
    print(f"{'s':>14} {'err(N_max)':>12} {'order':>7}")
    for s in s_list:
        rows = [r for r in records if r.s == s]
        if len(rows) < 2:
            continue
        a, b = rows[-2], rows[-1]
        order = math.log(a.rel_err / b.rel_err) / math.log(b.N / a.N)
        print(f"{str(s):>14} {b.rel_err:12.3e} {order:7.3f}")
    print(f"wrote {len(records)} records to {args.out}")


if __name__ == "__main__":
    sys.exit(main())
