"""The spherical Hecke algebra of GL_n over a p-adic field, transformed.

Basis elements T_mu are indexed by dominant coweights mu (characteristic
functions of the double cosets K mu(p) K), with coefficients in Z[v, v^-1]
where v^2 = q is the residue cardinality kept symbolic.

The algebra structure is never computed by coset combinatorics here; the
Satake isomorphism does all the work:

    satake(T_mu) = v^<2rho, mu> P_mu(x; v^-2)

with P_mu the Hall-Littlewood polynomial.  This lands T_mu in symmetric
Laurent polynomials; convolution is ordinary multiplication there, pulled
back through the inverse transform.  The inverse is dominance-triangular
elimination against the basis {v^<2rho,mu> P_mu}, which is unitriangular
against monomials, so the transform is a bijection and convolve() is exact.

An independent check of all of this against brute-force lattice counting
lives in plattice.convolution_oracle; the two routes share no code.

>>> convolve(basis((1, 0)), basis((1, 0)))
HeckeElement(n=2, T[2,0] + (1+v^2)*T[1,1])
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentScalar, _coerce
from .rootdata import check_weight, is_dominant, two_rho_pairing
from .symfunc import SymPoly, hall_littlewood


class HeckeElement:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"rank must be a positive int: {n!r}")
        self.n = n
        self.terms = {}
        for w, c in (terms or {}).items():
            w = check_weight(w)
            if len(w) != n:
                raise ValueError(f"coweight {w} has rank {len(w)}, expected {n}")
            if not is_dominant(w):
                raise ValueError(f"basis coweights must be dominant: {w}")
            c = _coerce(c)
            if not c.is_zero():
                self.terms[w] = c

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def unit(cls, n):
        return cls(n, {(0,) * n: 1})

    def is_zero(self):
        return not self.terms

    def coefficient(self, mu):
        return self.terms.get(check_weight(mu), LaurentScalar.zero())

    def support(self):
        return sorted(self.terms, reverse=True)

    def _check_rank(self, other):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_rank(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            s = d.get(w, LaurentScalar.zero()) + c
            if s.is_zero():
                d.pop(w, None)
            else:
                d[w] = s
        return HeckeElement(self.n, d)

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Scalar multiplication; convolution is convolve()."""
        c = _coerce(other)
        return HeckeElement(self.n, {w: cc * c for w, cc in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"coweight": list(w), "coeff": {str(e): c for e, c in sorted(self.terms[w].coeffs.items())}}
                for w in self.support()
            ],
        }

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        terms = {}
        for entry in data["terms"]:
            w = tuple(entry["coweight"])
            coeff = LaurentScalar({int(e): c for e, c in entry["coeff"].items()})
            if w in terms:
                coeff = terms[w] + coeff
            terms[w] = coeff
        return cls(n, terms)

    def __repr__(self):
        if not self.terms:
            return f"HeckeElement(n={self.n}, 0)"
        bits = []
        for w in self.support():
            c = self.terms[w]
            name = f"T[{','.join(map(str, w))}]"
            bits.append(name if c.is_one() else f"({c.to_string()})*{name}")
        return f"HeckeElement(n={self.n}, {' + '.join(bits)})"


def basis(mu):
    mu = check_weight(mu)
    if not is_dominant(mu):
        raise ValueError(f"basis coweight must be dominant: {mu}")
    return HeckeElement(len(mu), {mu: 1})


def satake(h):
    """The Satake transform into symmetric Laurent polynomials."""
    if not isinstance(h, HeckeElement):
        raise ValueError("satake wants a HeckeElement")
    out = SymPoly.zero(h.n)
    for mu, c in h.terms.items():
        out = out + (c.shift(two_rho_pairing(mu))) * hall_littlewood(mu)
    return out


def normalized_satake(h):
    """The transform without the v^<2rho,mu> twist: T_mu -> P_mu(x; v^-2)."""
    if not isinstance(h, HeckeElement):
        raise ValueError("normalized_satake wants a HeckeElement")
    out = SymPoly.zero(h.n)
    for mu, c in h.terms.items():
        out = out + c * hall_littlewood(mu)
    return out


def inverse_satake(f):
    """The inverse transform; total on symmetric Laurent polynomials.

    Dominance-triangular elimination: strip the lex-maximal key mu (which is
    dominance-maximal within its total-sum class), divide its coefficient by
    the monomial v^<2rho,mu>, subtract that multiple of satake(T_mu).  Since
    P_mu is unitriangular this terminates with the exact preimage.
    """
    if not isinstance(f, SymPoly):
        raise ValueError("inverse_satake wants a SymPoly")
    rest = f
    out = {}
    while not rest.is_zero():
        mu = max(rest.terms)
        c = rest.terms[mu].shift(-two_rho_pairing(mu))
        out[mu] = c
        rest = rest - c.shift(two_rho_pairing(mu)) * hall_littlewood(mu)
    return HeckeElement(f.n, out)


def convolve(a, b):
    """Convolution product, computed through the Satake transform."""
    if not isinstance(a, HeckeElement) or not isinstance(b, HeckeElement):
        raise ValueError("convolve wants two HeckeElements")
    a._check_rank(b)
    return inverse_satake(satake(a) * satake(b))


def specialize_v(x, q_value):
    """Substitute v = sqrt(q_value), exactly.

    LaurentScalar -> Fraction or QuadExt; HeckeElement / SymPoly -> dict
    mapping each support weight to the specialized coefficient.
    """
    q = Fraction(q_value)
    if isinstance(x, LaurentScalar):
        return x.specialize(q)
    if isinstance(x, (HeckeElement, SymPoly)):
        return {w: c.specialize(q) for w, c in sorted(x.terms.items())}
    raise ValueError(f"cannot specialize {x!r}")


if __name__ == "__main__":
    import doctest

    doctest.testmod()
