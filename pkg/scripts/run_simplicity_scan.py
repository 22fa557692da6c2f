#!/usr/bin/env python3
"""Scan deformation profiles and weights for simplicity of the pattern
polytopes: the undeformed ones fail already at small regular weights, the
strictly deformed ones stay simple once the weight is scaled into the generic
chamber."""

import argparse
import itertools
import sys

from schubcalc import polytopes as pt
from schubcalc.cartan import RootDatum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=3)
    parser.add_argument("--lambda-max", type=int, default=2)
    args = parser.parse_args()
    for family in ("A", "C"):
        for rank in range(2, args.max_rank + 1):
            datum = RootDatum(family, rank)
            profile = pt.default_strict_profile(datum)
            lam = pt.default_regular_lambda(datum, profile)
            deformed = pt.deformed_polytope(datum, lam, profile)
            print(
                "%s%d deformed  lam=%s: simple=%s vertices=%d"
                % (family, rank, lam, pt.is_simple(deformed), len(pt.vertices(deformed)))
            )
            for coeffs in itertools.product(range(1, args.lambda_max + 1), repeat=rank):
                plain = pt.deformed_polytope(datum, coeffs, pt.zero_profile(datum))
                print(
                    "%s%d plain     lam=%s: simple=%s vertices=%d"
                    % (family, rank, coeffs, pt.is_simple(plain), len(pt.vertices(plain)))
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
