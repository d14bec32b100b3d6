"""The positive part as a free algebra modulo the quantum Serre ideal.

Words are tuples of simple-root indices (1-based).  The ideal is
echelonized one weight component at a time, lazily, up to a height
bound; the non-pivot words of each component form the canonical basis
of the corresponding graded piece of U+.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..coeffs import QRat, ZERO, ONE, from_int, q_binomial
from ..errors import BadIndex, HeightOverflow, InvalidPair
from ..rootsys import RootSystem, Vec
from .linalg import SpanSolver, add_scaled

Word = tuple[int, ...]


def word_weight(word: Word, n: int) -> Vec:
    out = [0] * n
    for i in word:
        out[i - 1] += 1
    return tuple(out)


class FreeElt:
    """A finite QRat-linear combination of words in the E generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, QRat]):
        self.terms = {w: c for w, c in terms.items() if c != ZERO}

    @staticmethod
    def zero() -> "FreeElt":
        return FreeElt({})

    @staticmethod
    def one() -> "FreeElt":
        return FreeElt({(): ONE})

    @staticmethod
    def gen(i: int) -> "FreeElt":
        return FreeElt({(i,): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FreeElt") -> "FreeElt":
        out = dict(self.terms)
        add_scaled(out, other.terms, ONE)
        return FreeElt(out)

    def __sub__(self, other: "FreeElt") -> "FreeElt":
        out = dict(self.terms)
        add_scaled(out, other.terms, -ONE)
        return FreeElt(out)

    def __neg__(self) -> "FreeElt":
        return FreeElt({w: -c for w, c in self.terms.items()})

    def scale(self, c: QRat) -> "FreeElt":
        return FreeElt({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "FreeElt") -> "FreeElt":
        out: dict[Word, QRat] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                cur = out.get(w)
                nxt = c if cur is None else cur + c
                if nxt == ZERO:
                    out.pop(w, None)
                else:
                    out[w] = nxt
        return FreeElt(out)

    def __pow__(self, k: int) -> "FreeElt":
        out = FreeElt.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def weight_components(self, n: int) -> dict[Vec, "FreeElt"]:
        comps: dict[Vec, dict[Word, QRat]] = {}
        for w, c in self.terms.items():
            comps.setdefault(word_weight(w, n), {})[w] = c
        return {mu: FreeElt(d) for mu, d in comps.items()}

    def homogeneous_weight(self, n: int) -> Vec | None:
        """The common weight of all terms, or None if mixed or zero."""
        weights = {word_weight(w, n) for w in self.terms}
        if len(weights) == 1:
            return next(iter(weights))
        return None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w].render()
            mono = "*".join(f"E{i}" for i in w) if w else "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def serre_relation(rs: RootSystem, i: int, j: int) -> FreeElt:
    """The quantum Serre element for the ordered pair (i, j)."""
    n = rs.rank
    if not (1 <= i <= n and 1 <= j <= n):
        raise BadIndex(f"simple indices must lie in 1..{n}")
    if i == j:
        raise InvalidPair("the Serre relation needs two distinct simple roots")
    a_ij = rs.cartan[i - 1][j - 1]
    d_i = rs.d[i - 1]
    m = 1 - a_ij
    out: dict[Word, QRat] = {}
    for s in range(m + 1):
        coef = q_binomial(m, s, d_i)
        if s % 2:
            coef = -coef
        word = (i,) * (m - s) + (j,) + (i,) * s
        out[word] = out.get(word, ZERO) + coef
    return FreeElt(out)


@lru_cache(maxsize=None)
def _words_of_weight(mu: Vec) -> tuple[Word, ...]:
    """All words with the given letter multiplicities, ascending lex."""
    if all(m == 0 for m in mu):
        return ((),)
    out = []
    for i, m in enumerate(mu, start=1):
        if m > 0:
            rest = tuple(mu[k] - (1 if k == i - 1 else 0) for k in range(len(mu)))
            out.extend((i,) + tail for tail in _words_of_weight(rest))
    return tuple(out)


def kostant_dim(rs: RootSystem, mu: Vec) -> int:
    """Number of ways to write mu as an N-combination of positive roots.

    Independent of the Serre-ideal machinery; used to cross-check the
    graded dimensions of U+.
    """

    def count(idx: int, rem: Vec) -> int:
        if all(c == 0 for c in rem):
            return 1
        if idx >= len(rs.pos_roots):
            return 0
        beta = rs.pos_roots[idx]
        total = 0
        r = rem
        while True:
            total += count(idx + 1, r)
            nxt = tuple(a - b for a, b in zip(r, beta))
            if any(c < 0 for c in nxt):
                break
            r = nxt
        return total

    return count(0, mu)


class _WeightComponent:
    __slots__ = ("words", "rewrites", "complement")

    def __init__(self, words, rewrites, complement):
        self.words = words            # all words of this weight, ascending lex
        self.rewrites = rewrites      # pivot word -> dict(complement word -> QRat)
        self.complement = complement  # non-pivot words, ascending lex


class NFContext:
    """Per-weight reduction data for the Serre ideal, built lazily."""

    def __init__(self, rs: RootSystem, height_bound: int | None = None):
        self.rs = rs
        self.height_bound = 2 * rs.highest_height if height_bound is None else height_bound
        self._components: dict[Vec, _WeightComponent] = {}
        self._serre: list[tuple[Vec, FreeElt]] = []
        n = rs.rank
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    rel = serre_relation(rs, i, j)
                    self._serre.append((word_weight(next(iter(rel.terms)), n), rel))

    def check_height(self, mu: Vec) -> None:
        if sum(mu) > self.height_bound:
            raise HeightOverflow(
                f"weight {mu} exceeds the height bound {self.height_bound}"
            )

    def component(self, mu: Vec) -> _WeightComponent:
        self.check_height(mu)
        comp = self._components.get(mu)
        if comp is None:
            comp = self._build_component(mu)
            self._components[mu] = comp
        return comp

    def _build_component(self, mu: Vec) -> _WeightComponent:
        words = _words_of_weight(mu)
        solver = SpanSolver()
        for nu, rel in self._serre:
            gap = tuple(a - b for a, b in zip(mu, nu))
            if any(c < 0 for c in gap):
                continue
            for left in _sub_weights(gap):
                right = tuple(a - b for a, b in zip(gap, left))
                for u in _words_of_weight(left):
                    for v in _words_of_weight(right):
                        vec = {u + w + v: c for w, c in rel.terms.items()}
                        solver.insert(vec)
        rewrites = {}
        for pivot, row in solver.rows.items():
            rewrites[pivot] = {w: -c for w, c in row.items() if w != pivot}
        complement = tuple(w for w in words if w not in rewrites)
        return _WeightComponent(words, rewrites, complement)

    def reduce_word(self, w: Word) -> dict[Word, QRat]:
        mu = word_weight(w, self.rs.rank)
        comp = self.component(mu)
        rw = comp.rewrites.get(w)
        if rw is None:
            return {w: ONE}
        return dict(rw)

    def reduce(self, x: FreeElt) -> FreeElt:
        out: dict[Word, QRat] = {}
        for w, c in x.terms.items():
            add_scaled(out, self.reduce_word(w), c)
        return FreeElt(out)

    def complement_basis(self, mu: Vec) -> tuple[Word, ...]:
        return self.component(mu).complement

    def dim_plus(self, mu: Vec) -> int:
        return len(self.component(mu).complement)

    def dim_ideal(self, mu: Vec) -> int:
        return len(self.component(mu).rewrites)


@lru_cache(maxsize=None)
def _sub_weights(mu: Vec) -> tuple[Vec, ...]:
    """All lattice points 0 <= nu <= mu, componentwise."""
    if not mu:
        return ((),)
    tails = _sub_weights(mu[1:])
    return tuple((h,) + t for h in range(mu[0] + 1) for t in tails)


def nf_plus(ctx: NFContext, x: FreeElt) -> FreeElt:
    """Canonical form of x modulo the Serre ideal.

    The result is supported on complement-basis words only; it is zero
    exactly when x lies in the ideal.
    """
    return ctx.reduce(x)
