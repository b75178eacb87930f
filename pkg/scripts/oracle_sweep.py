#!/usr/bin/env python3
"""Dual-route sweep: transform structure constants vs. lattice counts.

For every pair of dominant coweights in the requested box, convolve the
corresponding basis elements, specialize each structure constant at v^2 = p,
and recount the same number by brute-force lattice enumeration.  The two
routes share no arithmetic, so a single agreement line is already a strong
check and the full table is overkill on purpose.
"""

import argparse
import itertools
import sys
from fractions import Fraction

from satkit.hecke import basis, convolve, specialize_v
from satkit.plattice import convolution_oracle
from satkit.rootdata import is_dominant


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2, help="rank (2 or 3)")
    ap.add_argument("--p", type=int, default=2, help="residue prime (2 or 3)")
    ap.add_argument("--max-entry", type=int, default=2, help="coweight entry bound")
    args = ap.parse_args(argv)

    doms = [
        w
        for w in itertools.product(range(args.max_entry, -1, -1), repeat=args.n)
        if is_dominant(w)
    ]
    failures = 0
    rows = 0
    for lam, mu in itertools.product(doms, doms):
        product = convolve(basis(lam), basis(mu))
        for nu, coeff in sorted(product.terms.items(), reverse=True):
            transform = specialize_v(coeff, args.p)
            counted = Fraction(convolution_oracle(lam, mu, nu, args.p))
            ok = transform == counted
            failures += not ok
            rows += 1
            mark = "ok " if ok else "FAIL"
            print(
                f"[{mark}] {lam} * {mu} -> {nu}: "
                f"transform {transform}, counted {counted}"
            )
    print(f"{rows} structure constants checked, {failures} disagreements")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
