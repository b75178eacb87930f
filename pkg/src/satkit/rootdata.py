"""Weights and coweights for GL_n, and the combinatorics between them.

A weight is a plain tuple of ints; its length is the rank and every function
here checks ranks before doing anything.  For GL_n weights and coweights live
in the same lattice Z^n, so a single type serves both.

Conventions, fixed once:

- dominant means weakly decreasing;
- dominant_representative sorts descending (the dominant point of the
  S_n-orbit);
- dominance_leq(a, b) is the usual partial order on dominant vectors: all
  prefix sums of a are <= those of b and the totals agree (distinct totals
  simply compare as False);
- two_rho_pairing(mu) = sum_i (n + 1 - 2i) mu_i, the pairing with the sum of
  the positive roots;
- dual_weight reverses and negates (the highest weight of the dual
  representation; on dominants this is -w0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Weight = tuple  # tuple[int, ...]; rank is the length


def check_weight(w):
    """Validate a weight and return it as a tuple of ints."""
    t = tuple(w)
    if not t:
        raise ValueError("rank-0 weights are not supported")
    for x in t:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"weight entries must be ints: {w!r}")
    return t


def same_rank(a, b):
    a, b = check_weight(a), check_weight(b)
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {a} has rank {len(a)}, {b} has rank {len(b)}")
    return a, b


def is_dominant(w):
    w = check_weight(w)
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def dominant_representative(w):
    return tuple(sorted(check_weight(w), reverse=True))


def dominance_leq(a, b):
    """a <= b in dominance order; both arguments must be dominant.

    >>> dominance_leq((1, 1, 0), (2, 0, 0))
    True
    >>> dominance_leq((2, 0, 0), (1, 1, 0))
    False
    """
    a, b = same_rank(a, b)
    for w in (a, b):
        if not is_dominant(w):
            raise ValueError(f"dominance order needs dominant arguments: {w}")
    if sum(a) != sum(b):
        return False
    pa = pb = 0
    for i in range(len(a) - 1):
        pa += a[i]
        pb += b[i]
        if pa > pb:
            return False
    return True


def two_rho_pairing(mu):
    """<2rho, mu> = sum_i (n + 1 - 2i) mu_i  (1-indexed i).

    >>> two_rho_pairing((1, 0))
    1
    >>> two_rho_pairing((1, 0, 0))
    2
    """
    mu = check_weight(mu)
    n = len(mu)
    return sum((n + 1 - 2 * (i + 1)) * m for i, m in enumerate(mu))


def dual_weight(mu):
    """Highest weight of the dual: reverse and negate. Involutive."""
    mu = check_weight(mu)
    return tuple(-x for x in reversed(mu))


@dataclass(frozen=True)
class GroupSpec:
    """Rank plus the cocharacter lattice of the center, by generators.

    center_generators must be linearly independent rank-n weights; the
    integer span is what in_tate_lattice tests membership of.
    """

    n: int
    center_generators: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive int: {self.n!r}")
        gens = tuple(check_weight(g) for g in self.center_generators)
        for g in gens:
            if len(g) != self.n:
                raise ValueError(f"center generator {g} has rank {len(g)}, expected {self.n}")
        if gens and _rational_rank(gens) != len(gens):
            raise ValueError("center generators must be linearly independent")
        object.__setattr__(self, "center_generators", gens)


def _rational_rank(rows):
    """Rank over Q of a list of integer tuples (exact elimination)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def in_integer_span(target, generators):
    """Is target an integer combination of the (independent) generators?

    Solves the rational linear system and checks integrality; with
    independent generators the solution, when it exists, is unique.
    """
    target = check_weight(target)
    gens = [check_weight(g) for g in generators]
    if not gens:
        return all(x == 0 for x in target)
    n = len(target)
    for g in gens:
        if len(g) != n:
            raise ValueError(f"rank mismatch between target {target} and generator {g}")
    # augmented system: columns are generators
    mat = [[Fraction(g[i]) for g in gens] + [Fraction(target[i])] for i in range(n)]
    k = len(gens)
    row = 0
    pivots = []
    for col in range(k):
        pivot = next((r for r in range(row, n) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(n):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    if len(pivots) != k:
        raise ValueError("generators must be linearly independent")
    # consistency: rows below the pivots must have zero rhs
    for r in range(row, n):
        if mat[r][k] != 0:
            return False
    sol = [mat[pivots.index(c)][k] for c in range(k)]
    return all(x.denominator == 1 for x in sol)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
