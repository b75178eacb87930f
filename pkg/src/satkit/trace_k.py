"""S-operators on the unit of the K-theoretic trace, at the identity twist.

For an untwisted group the endomorphism ring of the trace unit is the ring of
symmetric Laurent polynomials, and the operator S_V attached to a
representation V acts by its character.  The calculus that matters here:

    S_1 = 1,   S_{V (+) W} = S_V + S_W,   S_{V'} . S_V = S_{V (x) V'}

all of which are exact statements about characters once sigma = id, plus the
numerical pairing s_pairing(mu): the composite 1 -> V (x) V* -> 1 built from
coevaluation and evaluation, which is multiplication by dim V_mu.

Twisted versions (sigma != 1) are genuinely different objects (twining
characters) and are refused rather than approximated.

SigmaAction is the lattice automorphism datum used both here (to insist on
the identity) and by the Tate weight-space machinery: an integer matrix of
finite order m with sigma^m = 1 enforced at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentScalar, _coerce
from .repring import RepElement, character, dimension, irreducible, tensor
from .rootdata import check_weight, is_dominant
from .symfunc import SymPoly, schur


@dataclass(frozen=True)
class SigmaAction:
    """An automorphism of the weight lattice Z^n of finite order.

    matrix is row-major: (sigma w)_i = sum_j matrix[i][j] w_j.  Requires
    sigma^order = identity (order need not be minimal) and det = +-1 so the
    lattice maps onto itself.
    """

    matrix: tuple
    order: int

    def __post_init__(self):
        rows = tuple(tuple(x for x in row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("sigma matrix must be square and nonempty")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"sigma matrix entries must be ints: {x!r}")
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"order must be a positive int: {self.order!r}")
        object.__setattr__(self, "matrix", rows)
        if _det(rows) not in (1, -1):
            raise ValueError("sigma must be invertible over Z (det +-1)")
        power = _mat_identity(n)
        for _ in range(self.order):
            power = _mat_mul(rows, power)
        if power != _mat_identity(n):
            raise ValueError(f"sigma^{self.order} is not the identity")

    @property
    def n(self):
        return len(self.matrix)

    def apply(self, w):
        w = check_weight(w)
        if len(w) != self.n:
            raise ValueError(f"weight {w} has rank {len(w)}, sigma acts on rank {self.n}")
        return tuple(sum(row[j] * w[j] for j in range(self.n)) for row in self.matrix)

    def is_identity(self):
        return self.matrix == _mat_identity(self.n)

    @classmethod
    def identity(cls, n):
        return cls(_mat_identity(n), 1)

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix], "order": self.order}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(r) for r in data["matrix"]), data["order"])


def _mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _det(rows):
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                f = mat[r][col] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    if det.denominator != 1:  # pragma: no cover - integer input keeps det integral
        raise AssertionError("integer matrix produced non-integer determinant")
    return int(det)


def s_operator(r, sigma=None):
    """The operator S_V for V the class r, as an element of End(unit).

    Only the identity twist is supported; a nontrivial sigma changes the
    answer to a twining character and raises here.
    """
    if not isinstance(r, RepElement):
        raise ValueError("s_operator wants a RepElement")
    if sigma is not None:
        if not isinstance(sigma, SigmaAction):
            raise ValueError("sigma must be a SigmaAction")
        if sigma.n != r.n:
            raise ValueError(f"sigma acts on rank {sigma.n}, class has rank {r.n}")
        if not sigma.is_identity():
            raise ValueError("twisted S-operators (sigma != identity) are out of scope")
    return character(r)


def s_pairing(mu):
    """The scalar by which 1 -> V_mu (x) V_mu* -> 1 acts: dim V_mu.

    >>> s_pairing((1, 0))
    LaurentScalar('2')
    """
    mu = check_weight(mu)
    if not is_dominant(mu):
        raise ValueError(f"highest weight must be dominant: {mu}")
    return LaurentScalar.from_int(dimension(mu))


def trace_of_endomorphism(r, scalars):
    """Trace of the endomorphism acting by scalars[mu] on each constituent.

    scalars maps dominant weights to exact rationals (or LaurentScalars);
    every constituent of r must be covered.  Returns the character-weighted
    sum, a SymPoly.
    """
    if not isinstance(r, RepElement):
        raise ValueError("trace_of_endomorphism wants a RepElement")
    table = {check_weight(w): _coerce(c) for w, c in scalars.items()}
    out = SymPoly.zero(r.n)
    for w, mult in r.terms.items():
        if w not in table:
            raise ValueError(f"no scalar given for constituent {w}")
        out = out + (mult * table[w]) * schur(w)
    return out


def k_ring_injectivity_check(max_total, n):
    """Verify {s_mu} stays linearly independent inside symmetric functions.

    Checks unitriangularity along (refined) dominance for every dominant mu
    of rank n with all |entries| <= max_total: the coefficient of m_mu in
    s_mu is 1 and every other monomial key is lexicographically smaller.
    That forces linear independence of the whole family over Z[v, v^-1].
    Returns True, or raises AssertionError naming the violation.
    """
    import itertools as _it

    if not isinstance(max_total, int) or max_total < 0:
        raise ValueError("max_total must be a nonnegative int")
    values = range(max_total, -max_total - 1, -1)
    weights = [w for w in _it.combinations_with_replacement(values, n)]
    for mu in weights:
        sp = schur(mu)
        lead = sp.coefficient(mu)
        if not lead.is_one():
            raise AssertionError(f"s_{mu} has leading coefficient {lead}, expected 1")
        for key in sp.terms:
            if key > mu:
                raise AssertionError(f"s_{mu} contains the larger key {key}")
    return True


def pairing_matches_dimension(mu):
    """Cross-check: the categorical pairing equals the Weyl-formula dimension
    and also the total GT-pattern count (three independent computations)."""
    mu = check_weight(mu)
    from .symfunc import weight_multiset

    total = sum(m for _, m in weight_multiset(mu))
    pair = s_pairing(mu).as_int()
    weyl = dimension(mu)
    return pair == weyl == total


if __name__ == "__main__":
    import doctest

    doctest.testmod()
