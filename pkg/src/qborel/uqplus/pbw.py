"""PBW bases of the subalgebras attached to Weyl group elements.

A PBWVec stores coordinates over the ordered monomials
E_{beta_t}^{a_t} ... E_{beta_1}^{a_1}; exponent tuples are written
(a_1, ..., a_t).  Expansion is a per-weight linear solve against the
normal-form coordinates of the monomials, never a formula lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..coeffs import QRat, ZERO, ONE, qpow
from ..errors import BadIndex, NotInSubalgebra
from ..rootsys import Vec, bilinear
from ..weyl import ReducedWord
from .free import FreeElt, Word
from .full import UAlgebra, UElt, root_vectors
from .linalg import SpanSolver, add_scaled, solve_in_span

Expt = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class PBWVec:
    word: ReducedWord
    terms: dict

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PBWVec)
            and self.word.letters == other.word.letters
            and self.terms == other.terms
        )

    def support(self) -> set[int]:
        """1-based positions k with a_k > 0 in some nonzero term."""
        out: set[int] = set()
        for a in self.terms:
            out.update(k + 1 for k, e in enumerate(a) if e > 0)
        return out

    def to_json_obj(self) -> dict:
        return {
            "word": list(self.word.letters),
            "terms": [
                {"exponents": list(a), "coeff": self.terms[a].render()}
                for a in sorted(self.terms)
            ],
        }

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms):
            factors = [
                f"E[{k+1}]" + (f"^{e}" if e > 1 else "")
                for k, e in reversed(list(enumerate(a)))
                if e > 0
            ]
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({self.terms[a].render()})*{mono}")
        return " + ".join(parts)


class _PBWData:
    """Per-(algebra, word) caches for root vectors and monomials."""

    def __init__(self, alg: UAlgebra, word: ReducedWord):
        self.alg = alg
        self.word = word
        self.roots = word.roots
        self.free_vectors = tuple(x.as_free() for x in root_vectors(alg, word))
        self._monomials: dict[Expt, FreeElt] = {}
        self._exponents: dict[Vec, tuple[Expt, ...]] = {}
        self._ls: dict[tuple[int, int], PBWVec] = {}
        self._left_mult: dict[tuple[int, Expt], dict] = {}

    def exponents_of_weight(self, mu: Vec) -> tuple[Expt, ...]:
        cached = self._exponents.get(mu)
        if cached is None:
            t = len(self.roots)

            def rec(k: int, rem: Vec):
                if k == t:
                    if all(c == 0 for c in rem):
                        yield ()
                    return
                beta = self.roots[k]
                a = 0
                r = rem
                while True:
                    for tail in rec(k + 1, r):
                        yield (a,) + tail
                    nxt = tuple(x - y for x, y in zip(r, beta))
                    if any(c < 0 for c in nxt):
                        break
                    r = nxt
                    a += 1

            cached = tuple(sorted(rec(0, mu)))
            self._exponents[mu] = cached
        return cached

    def monomial(self, a: Expt) -> FreeElt:
        cached = self._monomials.get(a)
        if cached is None:
            out = FreeElt.one()
            for k in range(len(a) - 1, -1, -1):
                for _ in range(a[k]):
                    out = self.alg.nf.reduce(out * self.free_vectors[k])
            cached = out
            self._monomials[a] = cached
        return cached

    def left_mult_column(self, k: int, a: Expt) -> dict:
        """PBW coordinates of E_{beta_k} * E^a, cached per word."""
        cached = self._left_mult.get((k, a))
        if cached is None:
            prod = self.alg.nf.reduce(self.free_vectors[k - 1] * self.monomial(a))
            cached = pbw_expand(self.alg, self.word, prod).terms
            self._left_mult[(k, a)] = cached
        return cached


def pbw_data(alg: UAlgebra, word: ReducedWord) -> _PBWData:
    cache = getattr(alg, "_pbw", None)
    if cache is None:
        cache = {}
        alg._pbw = cache
    data = cache.get(word.letters)
    if data is None:
        data = _PBWData(alg, word)
        cache[word.letters] = data
    return data


def pbw_monomial(alg: UAlgebra, word: ReducedWord, a: Expt) -> FreeElt:
    """Normal form of E_{beta_t}^{a_t} ... E_{beta_1}^{a_1}."""
    data = pbw_data(alg, word)
    if len(a) != len(word.letters) or any(e < 0 for e in a):
        raise BadIndex(f"exponent tuple {a} does not fit the word")
    return data.monomial(tuple(a))


def pbw_expand(alg: UAlgebra, word: ReducedWord, x) -> PBWVec:
    """Coordinates of x over the PBW monomials of the word.

    Accepts a FreeElt or a UElt lying in the positive part.  Raises
    NotInSubalgebra when x is not in the span.
    """
    if isinstance(x, UElt):
        x = x.as_free()
    data = pbw_data(alg, word)
    n = alg.rs.rank
    red = alg.nf.reduce(x)
    terms: dict[Expt, QRat] = {}
    for mu, comp in red.weight_components(n).items():
        expts = data.exponents_of_weight(mu)
        if not expts:
            raise NotInSubalgebra(f"no monomials of weight {mu} for this word")
        vectors = [data.monomial(a).terms for a in expts]
        sol = solve_in_span(vectors, comp.terms)
        if sol is None:
            raise NotInSubalgebra(f"weight {mu} component is outside the span")
        for a, c in zip(expts, sol):
            if c != ZERO:
                terms[a] = c
    return PBWVec(word, terms)


def pbw_contract(alg: UAlgebra, word: ReducedWord, v: PBWVec) -> FreeElt:
    """Multiply a PBWVec back out; inverse of pbw_expand."""
    data = pbw_data(alg, word)
    out: dict[Word, QRat] = {}
    for a, c in v.terms.items():
        add_scaled(out, data.monomial(a).terms, c)
    return FreeElt(out)


def ls_relation(alg: UAlgebra, word: ReducedWord, i: int, j: int) -> PBWVec:
    """PBW expansion of E_{beta_i}E_{beta_j} - q^(beta_i,beta_j) E_{beta_j}E_{beta_i}.

    The straightening theorem puts the result inside the span of the
    monomials supported strictly between i and j, of weight
    beta_i + beta_j; this shape is asserted by the test suite rather
    than assumed here.
    """
    t = len(word.letters)
    if not (1 <= i < j <= t):
        raise BadIndex(f"need 1 <= i < j <= {t}, got ({i}, {j})")
    data = pbw_data(alg, word)
    cached = data._ls.get((i, j))
    if cached is not None:
        return cached
    ei = data.free_vectors[i - 1]
    ej = data.free_vectors[j - 1]
    scal = qpow(bilinear(alg.rs, data.roots[i - 1], data.roots[j - 1]))
    lhs = ei * ej - (ej * ei).scale(scal)
    out = pbw_expand(alg, word, lhs)
    data._ls[(i, j)] = out
    return out


# ---------------------------------------------------------------------------
# characters


def char_eval(char, x: PBWVec) -> QRat:
    """Evaluate a concrete character on a PBW vector.

    The character sends E_{beta_k} to f(beta_k) for Theta positions and
    to zero elsewhere, extended multiplicatively over monomials.
    """
    theta = char.stratum.theta
    if theta.word.letters != x.word.letters:
        raise ValueError("character and vector use different words")
    if char.f is None:
        raise ValueError("need concrete character values")
    idx = set(theta.indices)
    roots = x.word.roots
    total = ZERO
    for a, c in x.terms.items():
        val = c
        dead = False
        for k, e in enumerate(a, start=1):
            if e == 0:
                continue
            if k not in idx:
                dead = True
                break
            val = val * char.f[roots[k - 1]] ** e
        if not dead:
            total = total + val
    return total


def char_well_defined(alg: UAlgebra, word: ReducedWord, theta, f=None) -> bool:
    """Whether E_{beta_k} -> f_k (k in theta), 0 otherwise, is a character.

    theta is a set of 1-based positions, not required to be admissible.
    f maps positions to nonzero values; None keeps the values as free
    parameters and decides the identity symbolically, which is the
    right notion for the all-nonzero-values dichotomy.
    """
    t = len(word.letters)
    S = set(theta)
    if any(not 1 <= k <= t for k in S):
        raise BadIndex("theta positions out of range")
    if f is not None:
        f = {k: f[k] for k in S}
        if any(v == ZERO for v in f.values()):
            raise ValueError("character values must be nonzero")
    roots = word.roots
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            rel = ls_relation(alg, word, i, j)
            pair = bilinear(alg.rs, roots[i - 1], roots[j - 1])
            if f is None:
                lhs: dict = {}
                if i in S and j in S:
                    coef = ONE - qpow(pair)
                    if coef != ZERO:
                        key = tuple(
                            (1 if k in (i, j) else 0) for k in range(1, t + 1)
                        )
                        lhs[key] = coef
                rhs: dict = {}
                for a, c in rel.terms.items():
                    if all(e == 0 or k + 1 in S for k, e in enumerate(a)):
                        rhs[a] = c
                if lhs != rhs:
                    return False
            else:
                lv = ZERO
                if i in S and j in S:
                    lv = (ONE - qpow(pair)) * f[i] * f[j]
                rv = ZERO
                for a, c in rel.terms.items():
                    val = c
                    dead = False
                    for k, e in enumerate(a, start=1):
                        if e == 0:
                            continue
                        if k not in S:
                            dead = True
                            break
                        val = val * f[k] ** e
                    if not dead:
                        rv = rv + val
                if lv != rv:
                    return False
    return True


# ---------------------------------------------------------------------------
# polynomial quotients


def is_in_P_Theta(word: ReducedWord, theta, x: PBWVec) -> bool:
    """Support test: every nonzero term uses some factor outside theta.

    For admissible theta this characterizes membership in the ideal
    generated by the outside root vectors.
    """
    S = set(theta)
    for a in x.terms:
        if all(e == 0 or k + 1 in S for k, e in enumerate(a)):
            return False
    return True


class _IdealSpan:
    """Weight components of the two-sided ideal generated by the root
    vectors at the given outside positions, in PBW coordinates.

    Peeling the leftmost factor of a PBW monomial gives the recursion
    I_mu = sum_m E_m * U_(mu-beta_m)  +  sum_k E_k * I_(mu-beta_k),
    which only ever needs the cached left multiplication columns.
    """

    def __init__(self, data: _PBWData, outside):
        self.data = data
        self.outside = tuple(sorted(outside))
        self._memo: dict[Vec, list[dict]] = {}

    def basis(self, mu: Vec) -> list[dict]:
        cached = self._memo.get(mu)
        if cached is not None:
            return cached
        data = self.data
        basis: list[dict] = []
        if data.exponents_of_weight(mu):
            solver = SpanSolver()

            def feed(vec: dict) -> None:
                if vec and solver.insert(vec):
                    basis.append(vec)

            for m in self.outside:
                gap = tuple(a - b for a, b in zip(mu, data.roots[m - 1]))
                if any(c < 0 for c in gap):
                    continue
                for av in data.exponents_of_weight(gap):
                    feed(data.left_mult_column(m, av))
            for k in range(1, len(data.roots) + 1):
                sub = tuple(a - b for a, b in zip(mu, data.roots[k - 1]))
                if any(c < 0 for c in sub):
                    continue
                for f in self.basis(sub):
                    acc: dict = {}
                    for a, c in f.items():
                        add_scaled(acc, data.left_mult_column(k, a), c)
                    feed(acc)
        self._memo[mu] = basis
        return basis


def generator_in_ideal(alg: UAlgebra, word: ReducedWord, theta, k: int) -> bool:
    """Membership of E_{beta_k} in the two-sided ideal generated by the
    root vectors outside theta, decided by an exact linear solve."""
    data = pbw_data(alg, word)
    t = len(word.letters)
    S = set(theta)
    span = _IdealSpan(data, [m for m in range(1, t + 1) if m not in S])
    unit = tuple(1 if p == k else 0 for p in range(1, t + 1))
    solver = SpanSolver()
    for vec in span.basis(data.roots[k - 1]):
        solver.insert(vec)
    return solver.contains({unit: ONE})


def _theta_cone(data: _PBWData, S, bound: int) -> list[Vec]:
    """Nonzero weights sum a_k beta_k (k in S) of height at most bound."""
    roots = [data.roots[k - 1] for k in sorted(S)]
    zero = tuple(0 for _ in range(len(data.roots[0]) if data.roots else 0))
    seen: set[Vec] = set()

    def rec(idx: int, cur: Vec) -> None:
        if idx == len(roots):
            if any(cur):
                seen.add(cur)
            return
        nxt = cur
        while sum(nxt) <= bound:
            rec(idx + 1, nxt)
            nxt = tuple(a + b for a, b in zip(nxt, roots[idx]))

    if roots:
        rec(0, zero)
    return sorted(seen, key=lambda mu: (sum(mu), mu))


def quotient_is_commutative_polynomial(alg: UAlgebra, word: ReducedWord, theta) -> bool:
    """Whether the quotient by the ideal of the outside root vectors is
    a commutative polynomial ring on the classes of the theta ones.

    Two honest conditions.  The classes must commute: the theta-
    supported part of E_i E_j - E_j E_i must vanish, since everything
    else already sits inside the ideal.  The classes must stay free:
    no combination of theta-supported monomials may fall into the
    ideal, checked weight by weight across the reachable cone.
    """
    t = len(word.letters)
    S = sorted(set(theta))
    if any(not 1 <= k <= t for k in S):
        raise BadIndex("theta positions out of range")
    data = pbw_data(alg, word)
    for i, j in combinations(S, 2):
        rel = ls_relation(alg, word, i, j)
        resid = {
            a: c
            for a, c in rel.terms.items()
            if all(e == 0 or k + 1 in S for k, e in enumerate(a))
        }
        pair = bilinear(alg.rs, data.roots[i - 1], data.roots[j - 1])
        key = tuple((1 if p in (i, j) else 0) for p in range(1, t + 1))
        shift = resid.get(key, ZERO) + qpow(pair) - ONE
        if shift == ZERO:
            resid.pop(key, None)
        else:
            resid[key] = shift
        if resid:
            return False
    span = _IdealSpan(data, [m for m in range(1, t + 1) if m not in S])
    for mu in _theta_cone(data, S, alg.nf.height_bound):
        solver = SpanSolver()
        for vec in span.basis(mu):
            solver.insert(vec)
        if solver.rank == 0:
            continue
        for a in data.exponents_of_weight(mu):
            if all(e == 0 or k + 1 in S for k, e in enumerate(a)):
                if not solver.insert({a: ONE}):
                    return False
    return True


def enumerate_polynomial_ideals(alg: UAlgebra, word: ReducedWord) -> list[tuple[int, ...]]:
    """All index subsets whose quotient is a commutative polynomial
    ring, each decided algebraically; no shortcut through the Weyl
    group combinatorics, so the result can cross-check it."""
    t = len(word.letters)
    out = []
    for size in range(t + 1):
        for S in combinations(range(1, t + 1), size):
            if not quotient_is_commutative_polynomial(alg, word, S):
                continue
            units = [
                PBWVec(word, {tuple(1 if p == k else 0 for p in range(1, t + 1)): ONE})
                for k in S
            ]
            if any(is_in_P_Theta(word, S, u) for u in units):
                continue
            out.append(S)
    return out
