#!/usr/bin/env python3
"""Print the GL_2 anchor identities with both sides fully evaluated.

Everything below is exact; the script exists so the identities can be
eyeballed in one screenful rather than trusted through test names.
"""

from satkit.hecke import basis, convolve, normalized_satake, satake
from satkit.laurent import LaurentScalar, parse_scalar
from satkit.symfunc import expand_in_schur, monomial


def show(label, got, want):
    status = "ok " if got == want else "FAIL"
    print(f"[{status}] {label}")
    print(f"       got  {got!r}")
    print(f"       want {want!r}")


def main():
    v = LaurentScalar.v_power(1)
    show("transform of T[1,0]", satake(basis((1, 0))), v * monomial((1, 0)))
    show("transform of T[1,1]", satake(basis((1, 1))), monomial((1, 1)))
    show(
        "transform of T[2,0] + T[1,1]",
        satake(basis((2, 0)) + basis((1, 1))),
        (v * v) * (monomial((2, 0)) + monomial((1, 1))),
    )
    show(
        "T[1,0] * T[1,0]",
        convolve(basis((1, 0)), basis((1, 0))),
        basis((2, 0)) + parse_scalar("1+v^2") * basis((1, 1)),
    )
    print("normalized transform of T[2,0], in the Schur basis:")
    for lam, c in sorted(expand_in_schur(normalized_satake(basis((2, 0)))).items(), reverse=True):
        print(f"       s{list(lam)}: {c.to_string()}")


if __name__ == "__main__":
    main()
