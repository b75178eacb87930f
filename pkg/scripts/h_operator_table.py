#!/usr/bin/env python3
"""Tabulate the distinguished unitary-group Hecke combination h(r).

Prints the coefficient of each T[p,j] as an exact polynomial in p, next to
an independent re-expansion of the defining double sum done with throwaway
dict arithmetic (Pascal-recurrence Gaussian binomials, v -> -p).  The two
columns must agree; the table makes the telescoping between ranks visible.
"""

import argparse

from satkit.tate import h_operator


def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def _gauss(n, m):
    if m < 0 or m > n:
        return {}
    if m in (0, n):
        return {0: 1}
    return _padd(_gauss(n - 1, m - 1), {e + m: c for e, c in _gauss(n - 1, m).items()})


def _expand(r):
    out = {j: {} for j in range(r + 1)}
    for i in range(r + 1):
        sign = (-1) ** i * (2 * i + 1)
        shift = r * (r + 1) + (i - r) * (r + i + 1)
        for j in range(r - i + 1):
            g = _gauss(2 * r + 1 - 2 * j, r - i - j)
            term = {e + shift: c * (-1) ** e * sign for e, c in g.items()}
            out[j] = _padd(out[j], term)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=3)
    args = ap.parse_args()
    for r in range(1, args.max_rank + 1):
        h = h_operator(r)
        oracle = _expand(r)
        print(f"r = {r}")
        for j in sorted(h.coeffs):
            lib = h.coefficient(j)
            agree = lib.coeffs == oracle.get(j, {})
            mark = "ok " if agree else "FAIL"
            print(f"  [{mark}] T[p,{j}]: {lib.to_string(var='p')}")
        print()


if __name__ == "__main__":
    main()
