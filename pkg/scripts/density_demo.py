#!/usr/bin/env python3
"""Exercise the constructive density witness on a batch of random targets.

Draws rational targets from the open unit square of the first quadrant,
builds the witness graph for each, and reports the worst approximation
distance and prefactor residual seen.

Usage: python scripts/density_demo.py [--count 25] [--eps 1/100] [--seed 7]
"""

import argparse
import math
import random
from fractions import Fraction

from grpoly.transforms import density_witness


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=25)
    parser.add_argument("--eps", default="1/100")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    eps = Fraction(args.eps)
    rng = random.Random(args.seed)
    worst_dist = 0.0
    worst_residual = 0.0
    biggest = 0
    for i in range(args.count):
        re = Fraction(rng.randint(1, 999), 1000)
        im = Fraction(rng.randint(1, 999), 1000)
        w = density_witness(re, im, eps)
        dist = math.sqrt(w.distance_sq)
        worst_dist = max(worst_dist, dist)
        worst_residual = max(worst_residual, w.residual)
        biggest = max(biggest, w.graph.n)
        print(f"target {re}+{im}i -> (a,b,c)=({w.a},{w.b},{w.c}) "
              f"scale={w.scale} triple=({w.triple.n},{w.triple.m},"
              f"{w.triple.k}) dist={dist:.3e}")
    print(f"\nworst distance {worst_dist:.3e} (eps {float(eps):.3e}), "
          f"worst residual {worst_residual:.3e}, "
          f"largest witness graph n={biggest}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
