#!/usr/bin/env python3
"""Dump the root cloud of one or more families over all n-vertex graphs.

Writes the scatter CSV (re, im, modulus, graph6, family) to stdout or a
file; feed it to any plotting tool to see how the root locations of the
different families compare.

Usage: python scripts/root_scatter.py --families independence,chromatic --n 6
"""

import argparse
import sys

from grpoly.catalog import family_polynomial
from grpoly.graphs import enumerate_graphs, graph_to_graph6
from grpoly.polynomials import MultiPoly
from grpoly.roots import scatter_rows


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--families", default="independence",
                        help="comma-separated univariate family names")
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()

    out = sys.stdout if args.out == "-" else open(args.out, "w")
    print("re,im,modulus,graph6,family", file=out)
    for family in args.families.split(","):
        for g in enumerate_graphs(args.n):
            p = family_polynomial(family, g)
            if isinstance(p, MultiPoly) or p.is_zero() or p.degree < 1:
                continue
            for row in scatter_rows(p, graph_to_graph6(g), family):
                print(",".join(row), file=out)
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
