"""p-adic lattices by exact linear algebra, and the brute-force oracle.

A PLattice is a full-rank Z_(p)-lattice in Q^n, given by a basis matrix with
p-power denominators; basis vectors are the COLUMNS of the matrix.  Two bases
give the same lattice iff they differ by right multiplication by a matrix
invertible over Z_(p) (integral entries at p, unit determinant at p).

The pair invariant is computed the only way it can be: for lattices L1, L2
with basis matrices B1, B2, the relative position inv_pair(L1, L2) is the
tuple of elementary-divisor valuations of B1^-1 B2, sorted weakly
decreasing.  Orientation is pinned by

    inv_pair(standard, apply_coweight(mu, p)) == mu        (mu dominant),

and with basis-as-columns and B1^-1 B2 (not B2^-1 B1) the convolution
identity below holds with no sign or reversal fix-up; during development the
identity was checked numerically before the convention was frozen.

Smith invariants use valuation-pivot Gaussian elimination over Fractions: a
minimal-valuation entry p-divides every other entry, so clearing its row and
column keeps everything in Z_(p) and recursion on the complement reads off
the valuations.

Enumeration between p^N L0 and p^-N L0 walks column-style Hermite normal
forms relative to p^-N: diagonals p^{a_i} with 0 <= a_i <= 2N, integer
off-diagonal entries h_ij (j < i) with 0 <= h_ij < h_ii, filtered by the
containment condition that p^{2N} H^-1 is integral at p.  Each lattice in
the window appears exactly once (this is the classical normal form for
subgroups of (Z/p^{2N})^n; the count 15 for p=2, n=2, N=1 is frozen in the
tests).

The point of the module is convolution_oracle(lam, mu, nu, p):

    #{ L : inv(L0, L) = lam  and  inv(L, nu(p) L0) = mu }

which must equal the T_nu-coefficient of T_lam * T_mu specialized at q = p.
The Hecke side computes that coefficient through the Satake transform; the
two routes share no code, which is what makes the agreement a real check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rootdata import check_weight, is_dominant

_ALLOWED_PRIMES = (2, 3)
_MAX_RANK = 3
_MAX_WINDOW = 2


def val_p(x, p):
    """The p-adic valuation of a rational, None for 0."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _check_p(p):
    if p not in _ALLOWED_PRIMES:
        raise ValueError(f"p must be one of {_ALLOWED_PRIMES}, got {p!r}")
    return p


def _mat_fractions(mat):
    rows = tuple(tuple(Fraction(x) for x in row) for row in mat)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and nonempty")
    return rows


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _mat_inv(mat):
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class PLattice:
    p: int
    basis: tuple  # columns are basis vectors; entries Fraction

    def __post_init__(self):
        p = _check_p(self.p)
        rows = _mat_fractions(self.basis)
        for row in rows:
            for x in row:
                den = x.denominator
                while den % p == 0:
                    den //= p
                if den != 1:
                    raise ValueError(f"basis entry {x} has a denominator not a power of {p}")
        object.__setattr__(self, "basis", rows)
        # full rank required
        _mat_inv(rows)

    @property
    def n(self):
        return len(self.basis)

    @classmethod
    def standard(cls, n, p):
        return cls(p, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_coweight(cls, mu, p):
        """The lattice mu(p) L0: diagonal basis p^{mu_i}."""
        mu = check_weight(mu)
        return cls(
            p,
            tuple(
                tuple(Fraction(p) ** mu[i] if i == j else Fraction(0) for j in range(len(mu)))
                for i in range(len(mu))
            ),
        )

    def scaled(self, k):
        """p^k times this lattice."""
        f = Fraction(self.p) ** k
        return PLattice(self.p, tuple(tuple(f * x for x in row) for row in self.basis))

    def same_lattice(self, other):
        """Equality as Z_(p)-lattices: B1^-1 B2 invertible over Z_(p)."""
        if not isinstance(other, PLattice):
            raise ValueError("same_lattice wants a PLattice")
        if self.p != other.p or self.n != other.n:
            return False
        m = _mat_mul(_mat_inv(self.basis), other.basis)
        for row in m:
            for x in row:
                v = val_p(x, self.p)
                if v is not None and v < 0:
                    return False
        return val_p(_det(m), self.p) == 0

    def to_json(self):
        return {
            "p": self.p,
            "basis": [[str(x) for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], tuple(tuple(Fraction(x) for x in row) for row in data["basis"]))

    def __repr__(self):
        rows = "; ".join(",".join(str(x) for x in row) for row in self.basis)
        return f"PLattice(p={self.p}, [{rows}])"


def _det(mat):
    n = len(mat)
    m = [list(row) for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def smith_invariants(mat, p):
    """Valuations of the elementary divisors of a nonsingular matrix at p.

    Sorted weakly decreasing.  Valuation-pivot elimination: pick any entry of
    minimal valuation, record it, clear its row and column (the multipliers
    entry/pivot all have valuation >= 0), recurse on the rest.

    >>> smith_invariants([[2, 1], [0, 2]], 2)
    (2, 0)
    """
    p = _check_p(p)
    m = [list(row) for row in _mat_fractions(mat)]
    n = len(m)
    if _det(m) == 0:
        raise ValueError("smith_invariants wants a nonsingular matrix")
    rows = list(range(n))
    cols = list(range(n))
    out = []
    while rows:
        best = None
        for i in rows:
            for j in cols:
                v = val_p(m[i][j], p)
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        v, pi, pj = best  # nonsingular, so some entry is nonzero
        pivot = m[pi][pj]
        # clear the pivot column by row operations (multipliers in Z_(p))
        for i in rows:
            if i != pi and m[i][pj] != 0:
                f = m[i][pj] / pivot
                for j in cols:
                    m[i][j] -= f * m[pi][j]
        # clear the pivot row by column operations; the pivot column is
        # already zero off the pivot, so only row pi changes
        for j in cols:
            if j != pj and m[pi][j] != 0:
                f = m[pi][j] / pivot
                for i in rows:
                    m[i][j] -= f * m[i][pj]
        out.append(v)
        rows.remove(pi)
        cols.remove(pj)
    return tuple(sorted(out, reverse=True))


def inv_pair(l1, l2):
    """Relative position of two lattices: elementary divisors of B1^-1 B2."""
    if not isinstance(l1, PLattice) or not isinstance(l2, PLattice):
        raise ValueError("inv_pair wants two PLattices")
    if l1.p != l2.p:
        raise ValueError(f"prime mismatch: {l1.p} vs {l2.p}")
    if l1.n != l2.n:
        raise ValueError(f"rank mismatch: {l1.n} vs {l2.n}")
    return smith_invariants(_mat_mul(_mat_inv(l1.basis), l2.basis), l1.p)


from functools import lru_cache


@lru_cache(maxsize=None)
def _hnf_between(p, n, lo, hi):
    """Lattices L with p^hi L0 <= L <= p^lo L0, each exactly once.

    Cached; PLattice is frozen so sharing the tuple between callers is safe.
    """
    depth = hi - lo
    shapes = []
    scale = Fraction(p) ** lo
    for diag in itertools.product(range(depth + 1), repeat=n):
        ranges = []
        for i in range(n):
            for j in range(n):
                if j < i:
                    ranges.append(range(p ** diag[i]))
        for offdiag in itertools.product(*ranges):
            h = [[0] * n for _ in range(n)]
            k = 0
            for i in range(n):
                h[i][i] = p ** diag[i]
                for j in range(i):
                    h[i][j] = offdiag[k]
                    k += 1
            hf = tuple(tuple(Fraction(x) for x in row) for row in h)
            hinv = _mat_inv(hf)
            ok = True
            for row in hinv:
                for x in row:
                    v = val_p(x * p ** depth, p)
                    if v is not None and v < 0:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                shapes.append(
                    PLattice(p, tuple(tuple(scale * x for x in row) for row in hf))
                )
    return tuple(shapes)


def enumerate_between(p, n, nn):
    """All lattices L with p^N L0 <= L <= p^-N L0 (the depth-N window).

    >>> len(enumerate_between(2, 2, 0))
    1
    """
    p = _check_p(p)
    if not isinstance(n, int) or not 1 <= n <= _MAX_RANK:
        raise ValueError(f"rank must be 1..{_MAX_RANK}, got {n!r}")
    if not isinstance(nn, int) or not 0 <= nn <= _MAX_WINDOW:
        raise ValueError(f"window must be 0..{_MAX_WINDOW}, got {nn!r}")
    return list(_hnf_between(p, n, -nn, nn))


def _window_for(mu):
    lo = min(0, min(mu))
    hi = max(0, max(mu))
    if hi - lo > 2 * _MAX_WINDOW:
        raise ValueError(f"coweight {mu} exceeds the enumeration window")
    return lo, hi


def schubert_count(mu, p):
    """#{L : inv_pair(L0, L) = mu}, by direct enumeration.

    >>> schubert_count((1, 0), 2)
    3
    >>> schubert_count((1, 0, 0), 2)
    7
    """
    mu = check_weight(mu)
    p = _check_p(p)
    n = len(mu)
    if n > _MAX_RANK:
        raise ValueError(f"rank must be <= {_MAX_RANK}, got {n}")
    if not is_dominant(mu):
        raise ValueError(f"coweight must be dominant: {mu}")
    lo, hi = _window_for(mu)
    std = PLattice.standard(n, p)
    return sum(1 for lat in _hnf_between(p, n, lo, hi) if inv_pair(std, lat) == mu)


def convolution_oracle(lam, mu, nu, p):
    """Count lattices L with inv(L0, L) = lam and inv(L, nu(p) L0) = mu.

    This is the structure constant of T_lam * T_mu on T_nu with v^2
    specialized to p, counted one lattice at a time.
    """
    lam, mu, nu = check_weight(lam), check_weight(mu), check_weight(nu)
    p = _check_p(p)
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError(f"rank mismatch among {lam}, {mu}, {nu}")
    if n > _MAX_RANK:
        raise ValueError(f"rank must be <= {_MAX_RANK}, got {n}")
    for w in (lam, mu, nu):
        if not is_dominant(w):
            raise ValueError(f"coweights must be dominant: {w}")
    lo, hi = _window_for(lam)
    std = PLattice.standard(n, p)
    target = PLattice.from_coweight(nu, p)
    count = 0
    for lat in _hnf_between(p, n, lo, hi):
        if inv_pair(std, lat) == lam and inv_pair(lat, target) == mu:
            count += 1
    return count


if __name__ == "__main__":
    import doctest

    doctest.testmod()
