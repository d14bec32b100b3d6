"""Finite root systems from Cartan data, plus integer lattice helpers.

Conventions used throughout the package:

* the Cartan matrix entry is a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
  rows indexed by the coroot;
* the symmetric form is B = diag(d) * A where the symmetrizers d_i are
  positive integers scaled so every irreducible component has min d = 1,
  which makes (alpha, alpha) = 2 for short roots;
* roots are integer coordinate vectors over the simple roots, stored as
  plain tuples;
* positive roots are sorted by height and then lexicographically, and this
  order is the canonical root index used everywhere else.

For the doubly laced and triply laced rank-2 types the first simple root is
the short one, so for "B2" we get (alpha_2, alpha_2) = 4 and for "G2" the
highest root is 3*alpha_1 + 2*alpha_2.

>>> rs = build_root_system("A2")
>>> rs.pos_roots
((0, 1), (1, 0), (1, 1))
>>> bilinear(rs, (1, 0), (0, 1))
-1
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidCartan, NotInPositiveCone

__all__ = [
    "RootSystem",
    "build_root_system",
    "bilinear",
    "reflect",
    "height",
    "LatticeSubgroup",
    "orthogonal_complement_lattice",
    "pair_with_rho",
    "vec_add",
    "vec_sub",
    "vec_neg",
]

Vec = tuple[int, ...]


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


# ---------------------------------------------------------------------------
# Cartan matrices for the named types


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _named_cartan(name: str) -> list[list[int]]:
    kind, rank = name[0].upper(), name[1:]
    if not rank.isdigit():
        raise InvalidCartan(f"cannot parse type string {name!r}")
    n = int(rank)
    if kind == "A" and n >= 1:
        return _chain(n)
    if kind == "B" and n >= 2:
        a = _chain(n)
        a[0][1] = -2  # first simple root short
        return a
    if kind == "C" and n >= 2:
        a = _chain(n)
        a[1][0] = -2  # first simple root long
        return a
    if kind == "D" and n >= 3:
        a = _chain(n - 1)
        for row in a:
            row.append(0)
        a.append([0] * n)
        a[n - 1][n - 1] = 2
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if kind == "E" and n in (6, 7, 8):
        # chain 1-3-4-5-... with node 2 attached to node 4 (Bourbaki)
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if kind == "F" and n == 4:
        a = _chain(4)
        a[1][2] = -2
        a[2][1] = -1
        return a
    if kind == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise InvalidCartan(f"unsupported type string {name!r}")


def _symmetrizers(a: list[list[int]]) -> tuple[int, ...]:
    """Positive integer d with d_i a_ij = d_j a_ji, min 1 per component."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    comps: list[list[int]] = []
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if a[i][j] != 0 and i != j:
                    want = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = want
                        comp.append(j)
                        queue.append(j)
                    elif d[j] != want:
                        raise InvalidCartan("matrix is not symmetrizable")
        comps.append(comp)
    out = [Fraction(0)] * n
    for comp in comps:
        scale = min(d[i] for i in comp)
        for i in comp:
            out[i] = d[i] / scale
    ints = []
    for x in out:
        if x.denominator != 1:
            raise InvalidCartan("matrix is not symmetrizable over the integers")
        ints.append(int(x))
    return tuple(ints)


def _leading_minors_positive(b: list[list[int]]) -> bool:
    n = len(b)
    m = [[Fraction(x) for x in row] for row in b]
    for k in range(n):
        # symmetric elimination; all pivots positive iff positive definite
        piv = m[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return True


@dataclass(frozen=True)
class RootSystem:
    """Immutable container for Cartan data and the positive roots."""

    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...]
    pos_roots: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def root_index(self) -> dict[Vec, int]:
        return _root_index(self)

    @property
    def pos_root_set(self) -> frozenset[Vec]:
        return _pos_root_set(self)

    @property
    def rho(self) -> tuple[Fraction, ...]:
        """Half the sum of the positive roots, in simple root coordinates."""
        return _rho(self)

    @property
    def highest_height(self) -> int:
        return max(sum(b) for b in self.pos_roots)

    def simple(self, i: int) -> Vec:
        """Simple root number i (1-based)."""
        if not 1 <= i <= self.rank:
            raise NotInPositiveCone(f"no simple root with index {i}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def is_root(self, v: Vec) -> bool:
        return v in self.pos_root_set or vec_neg(v) in self.pos_root_set

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, positive_roots={len(self.pos_roots)})"


@lru_cache(maxsize=None)
def _root_index(rs: RootSystem) -> dict[Vec, int]:
    return {b: i for i, b in enumerate(rs.pos_roots)}


@lru_cache(maxsize=None)
def _pos_root_set(rs: RootSystem) -> frozenset[Vec]:
    return frozenset(rs.pos_roots)


@lru_cache(maxsize=None)
def _rho(rs: RootSystem) -> tuple[Fraction, ...]:
    total = [Fraction(0)] * rs.rank
    for b in rs.pos_roots:
        for j, x in enumerate(b):
            total[j] += x
    return tuple(x / 2 for x in total)


def _close_positive_roots(a: list[list[int]], n: int) -> tuple[Vec, ...]:
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[Vec] = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            # s_i(beta) = beta - <pairing> alpha_i with the Cartan pairing
            coef = sum(a[i][j] * beta[j] for j in range(n))
            img = list(beta)
            img[i] -= coef
            v = tuple(img)
            if all(x >= 0 for x in v) and any(x > 0 for x in v) and v not in found:
                found.add(v)
                frontier.append(v)
    return tuple(sorted(found, key=lambda b: (sum(b), b)))


@lru_cache(maxsize=None)
def _build_named(name: str) -> RootSystem:
    return _build_from_matrix(tuple(tuple(r) for r in _named_cartan(name)))


def _build_from_matrix(rows: tuple[tuple[int, ...], ...]) -> RootSystem:
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InvalidCartan("Cartan matrix must be square and non-empty")
    a = [list(r) for r in rows]
    for i in range(n):
        if a[i][i] != 2:
            raise InvalidCartan("diagonal entries must equal 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise InvalidCartan("off-diagonal entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InvalidCartan("zero pattern must be symmetric")
    d = _symmetrizers(a)
    gram = tuple(tuple(d[i] * a[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise InvalidCartan("symmetrized matrix is not symmetric")
    if not _leading_minors_positive([list(r) for r in gram]):
        raise InvalidCartan("form is not positive definite (not finite type)")
    pos = _close_positive_roots(a, n)
    return RootSystem(cartan=rows, d=d, gram=gram, pos_roots=pos)


def build_root_system(spec) -> RootSystem:
    """Construct a root system from a type string or an explicit matrix.

    ``spec`` is either a name like "A2", "B3", "G2" or a square integer
    matrix (sequence of sequences).  Raises InvalidCartan when the input is
    not a valid finite-type Cartan matrix.
    """
    if isinstance(spec, str):
        return _build_named(spec)
    rows = tuple(tuple(int(x) for x in r) for r in spec)
    return _build_from_matrix(rows)


def load_cartan_file(path: str) -> RootSystem:
    """Read a JSON integer matrix from ``path`` and build the root system."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return build_root_system(data)


# ---------------------------------------------------------------------------
# bilinear form and elementary root operations


def bilinear(rs: RootSystem, x, y):
    """(x, y) under the symmetrized form; exact, works on Fraction vectors."""
    g = rs.gram
    n = rs.rank
    total = 0
    for i in range(n):
        xi = x[i]
        if xi:
            row = g[i]
            total += xi * sum(row[j] * y[j] for j in range(n) if y[j])
    return total


def reflect(rs: RootSystem, beta: Vec, x):
    """Reflection of x in the hyperplane of the root beta."""
    bb = bilinear(rs, beta, beta)
    bx2 = 2 * bilinear(rs, beta, x)
    coef, rem = divmod(bx2, bb)
    if rem == 0:
        return tuple(xi - coef * bi for xi, bi in zip(x, beta))
    frac = Fraction(bx2, bb)
    return tuple(xi - frac * bi for xi, bi in zip(x, beta))


def height(rs: RootSystem, x: Vec) -> int:
    """Coordinate sum of a vector in the positive cone."""
    if any(c < 0 for c in x):
        raise NotInPositiveCone(f"{x} has a negative coordinate")
    return sum(x)


def pair_with_rho(rs: RootSystem, beta: Vec, u) -> Fraction:
    """(beta, u(rho)) as an exact rational; u is a Weyl group element."""
    return Fraction(bilinear(rs, beta, u.act(rs.rho)))


# ---------------------------------------------------------------------------
# integer lattices in the root lattice


def _hnf(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Row Hermite normal form with positive pivots, zero rows dropped."""
    if not rows:
        return ()
    m = [list(r) for r in rows]
    n = len(m[0])
    r = 0
    for col in range(n):
        # gather a single nonzero entry at row r in this column
        piv = None
        for i in range(r, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        while True:
            nz = [i for i in range(r + 1, len(m)) if m[i][col]]
            if not nz:
                break
            for i in nz:
                qt = m[i][col] // m[r][col]
                if qt:
                    for j in range(n):
                        m[i][j] -= qt * m[r][j]
                if m[i][col]:
                    m[r], m[i] = m[i], m[r]
        if m[r][col] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            qt = m[i][col] // m[r][col]
            if qt:
                for j in range(n):
                    m[i][j] -= qt * m[r][j]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r] if any(row))


@dataclass(frozen=True)
class LatticeSubgroup:
    """Subgroup of the root lattice, stored by its Hermite basis rows."""

    n: int
    basis: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_generators(n: int, gens) -> "LatticeSubgroup":
        rows = [list(g) for g in gens]
        for row in rows:
            if len(row) != n:
                raise ValueError("generator has wrong length")
        return LatticeSubgroup(n, _hnf(rows))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Vec) -> bool:
        rem = list(v)
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            if rem[col]:
                qt, r = divmod(rem[col], row[col])
                if r:
                    return False
                for j in range(self.n):
                    rem[j] -= qt * row[j]
        return not any(rem)

    def leq(self, other: "LatticeSubgroup") -> bool:
        """Whether this lattice is a subgroup of the other."""
        if self.n != other.n:
            raise ValueError("lattices live in different ambient ranks")
        return all(other.contains(row) for row in self.basis)

    def __repr__(self) -> str:
        return f"LatticeSubgroup(rank={self.rank}, basis={self.basis})"


def lattice_leq(a: LatticeSubgroup, b: LatticeSubgroup) -> bool:
    return a.leq(b)


def integer_kernel(rows: list[list[int]], n: int) -> LatticeSubgroup:
    """Kernel lattice {x in Z^n : M x = 0} for the m x n integer matrix M."""
    m = len(rows)
    # work rows: (image of e_i under M, e_i); integer row reduction on the
    # image part leaves the kernel generators visible in the identity part
    work = [[rows[k][i] for k in range(m)] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for col in range(m):
        piv = None
        for i in range(r, n):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        while True:
            nz = [i for i in range(r + 1, n) if work[i][col]]
            if not nz:
                break
            for i in nz:
                qt = work[i][col] // work[r][col]
                if qt:
                    for j in range(m + n):
                        work[i][j] -= qt * work[r][j]
                if work[i][col]:
                    work[r], work[i] = work[i], work[r]
        r += 1
        if r == n:
            break
    gens = [row[m:] for row in work[r:]]
    return LatticeSubgroup.from_generators(n, gens)


def orthogonal_complement_lattice(rs: RootSystem, vectors) -> LatticeSubgroup:
    """Sublattice of the root lattice orthogonal to all given vectors."""
    vecs = list(vectors)
    if not vecs:
        return LatticeSubgroup.from_generators(
            rs.rank, [[1 if j == i else 0 for j in range(rs.rank)] for i in range(rs.rank)]
        )
    rows = []
    for v in vecs:
        rows.append([bilinear(rs, v, rs.simple(j + 1)) for j in range(rs.rank)])
    return integer_kernel(rows, rs.rank)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
