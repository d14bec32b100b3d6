"""The whole quantized enveloping algebra, in triangular normal form.

Every element is a combination of terms F_word * K_mu * E_word with the
E and F words drawn from the per-weight complement bases of the Serre
ideal.  Multiplication straightens by the defining relations

    E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
    K_mu E_j = q^(mu,alpha_j) E_j K_mu
    K_mu F_j = q^-(mu,alpha_j) F_j K_mu

and re-expands words over the complement bases, so equal elements have
equal term maps.
"""

from __future__ import annotations

from ..coeffs import QRat, ZERO, ONE, qpow, q_factorial
from ..errors import BadIndex, NotReduced
from ..rootsys import RootSystem, Vec, bilinear, reflect, vec_add, vec_neg
from ..weyl import ReducedWord
from .free import FreeElt, NFContext, Word, word_weight
from .linalg import add_scaled

# term key: (F-word, K-exponent, E-word)
Key = tuple[Word, Vec, Word]


class UElt:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: "UAlgebra", terms: dict[Key, QRat]):
        self.alg = alg
        self.terms = {k: c for k, c in terms.items() if c != ZERO}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UElt") -> "UElt":
        out = dict(self.terms)
        add_scaled(out, other.terms, ONE)
        return UElt(self.alg, out)

    def __sub__(self, other: "UElt") -> "UElt":
        out = dict(self.terms)
        add_scaled(out, other.terms, -ONE)
        return UElt(self.alg, out)

    def __neg__(self) -> "UElt":
        return UElt(self.alg, {k: -c for k, c in self.terms.items()})

    def scale(self, c: QRat) -> "UElt":
        return UElt(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "UElt") -> "UElt":
        alg = self.alg
        out: dict[Key, QRat] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                add_scaled(out, alg._term_times_term(k1, k2), c1 * c2)
        return UElt(alg, out)

    def __pow__(self, k: int) -> "UElt":
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UElt)
            and self.alg is other.alg
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def in_plus(self) -> bool:
        return all(not f and all(c == 0 for c in k) for f, k, _ in self.terms)

    def in_nonneg(self) -> bool:
        return all(not f for f, _, _ in self.terms)

    def as_free(self) -> FreeElt:
        if not self.in_plus():
            raise ValueError("element has F or K parts")
        return FreeElt({e: c for (_, _, e), c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for f, k, e in sorted(self.terms):
            c = self.terms[(f, k, e)].render()
            bits = [f"F{i}" for i in f]
            if any(k):
                bits.append("K[" + ",".join(str(v) for v in k) + "]")
            bits.extend(f"E{i}" for i in e)
            parts.append(f"({c})*" + ("*".join(bits) if bits else "1"))
        return " + ".join(parts)


class UAlgebra:
    """Shared context: root system, height bound, straightening caches."""

    def __init__(self, rs: RootSystem, height_bound: int | None = None):
        self.rs = rs
        self.nf = NFContext(rs, height_bound)
        self._zero_vec = (0,) * rs.rank
        self._ef: dict[tuple[Word, int], dict[Key, QRat]] = {}
        self._tgen: dict[tuple[int, str, int, bool], UElt] = {}

    # -- constructors ------------------------------------------------------

    def zero(self) -> UElt:
        return UElt(self, {})

    def one(self) -> UElt:
        return UElt(self, {((), self._zero_vec, ()): ONE})

    def E(self, i: int) -> UElt:
        self._check_index(i)
        return UElt(self, {((), self._zero_vec, (i,)): ONE})

    def F(self, i: int) -> UElt:
        self._check_index(i)
        return UElt(self, {((i,), self._zero_vec, ()): ONE})

    def K(self, mu: Vec) -> UElt:
        mu = tuple(mu)
        if len(mu) != self.rs.rank:
            raise BadIndex("K exponent has wrong rank")
        return UElt(self, {((), mu, ()): ONE})

    def qi(self, i: int) -> QRat:
        return qpow(self.rs.d[i - 1])

    def from_free(self, x: FreeElt) -> UElt:
        out: dict[Key, QRat] = {}
        for w, c in x.terms.items():
            for w2, c2 in self.nf.reduce_word(w).items():
                key = ((), self._zero_vec, w2)
                add_scaled(out, {key: c2}, c)
        return UElt(self, out)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rs.rank:
            raise BadIndex(f"generator index {i} out of range")

    # -- straightening -----------------------------------------------------

    def _wt(self, w: Word) -> Vec:
        return word_weight(w, self.rs.rank)

    def _e_times_f(self, e: Word, j: int) -> dict[Key, QRat]:
        """Normal form of E_e * F_j."""
        cached = self._ef.get((e, j))
        if cached is not None:
            return cached
        out: dict[Key, QRat] = {}
        if not e:
            out[((j,), self._zero_vec, ())] = ONE
        else:
            head, i = e[:-1], e[-1]
            for (f1, k1, e1), c in self._e_times_f(head, j).items():
                for e2, c2 in self.nf.reduce_word(e1 + (i,)).items():
                    add_scaled(out, {(f1, k1, e2): ONE}, c * c2)
            if i == j:
                hw = self._wt(head)
                ai = self.rs.simple(i)
                denom = (self.qi(i) - self.qi(i).inverse()).inverse()
                pos = qpow(-bilinear(self.rs, ai, hw)) * denom
                neg = -qpow(bilinear(self.rs, ai, hw)) * denom
                for e2, c2 in self.nf.reduce_word(head).items():
                    add_scaled(out, {((), ai, e2): ONE}, pos * c2)
                    add_scaled(out, {((), vec_neg(ai), e2): ONE}, neg * c2)
        self._ef[(e, j)] = out
        return out

    def _key_times_f(self, key: Key, j: int) -> dict[Key, QRat]:
        f, k, e = key
        out: dict[Key, QRat] = {}
        for (f1, k1, e1), c in self._e_times_f(e, j).items():
            scal = qpow(-bilinear(self.rs, k, self._wt(f1))) * c
            for f2, c2 in self.nf.reduce_word(f + f1).items():
                add_scaled(out, {(f2, vec_add(k, k1), e1): ONE}, scal * c2)
        return out

    def _key_times_k(self, key: Key, mu: Vec) -> dict[Key, QRat]:
        f, k, e = key
        scal = qpow(-bilinear(self.rs, mu, self._wt(e)))
        return {(f, vec_add(k, mu), e): scal}

    def _key_times_e(self, key: Key, i: int) -> dict[Key, QRat]:
        f, k, e = key
        return {
            (f, k, e2): c for e2, c in self.nf.reduce_word(e + (i,)).items()
        }

    def _term_times_term(self, k1: Key, k2: Key) -> dict[Key, QRat]:
        f2, mu2, e2 = k2
        cur: dict[Key, QRat] = {k1: ONE}
        for j in f2:
            nxt: dict[Key, QRat] = {}
            for key, c in cur.items():
                add_scaled(nxt, self._key_times_f(key, j), c)
            cur = nxt
        if any(mu2):
            nxt = {}
            for key, c in cur.items():
                add_scaled(nxt, self._key_times_k(key, mu2), c)
            cur = nxt
        for i in e2:
            nxt = {}
            for key, c in cur.items():
                add_scaled(nxt, self._key_times_e(key, i), c)
            cur = nxt
        return cur


def u_normal_form(x: UElt) -> UElt:
    """Re-normalize an element; the identity on well-formed inputs."""
    alg = x.alg
    out = alg.zero()
    for (f, k, e), c in x.terms.items():
        term = alg.one().scale(c)
        for j in f:
            term = term * alg.F(j)
        term = term * alg.K(k)
        for i in e:
            term = term * alg.E(i)
        out = out + term
    return out


# ---------------------------------------------------------------------------
# Lusztig symmetries


def _divided_power(alg: UAlgebra, gen: UElt, n: int, d: int) -> UElt:
    return (gen ** n).scale(q_factorial(n, d).inverse())


def _t_generator(alg: UAlgebra, a: int, kind: str, i: int, inverse: bool) -> UElt:
    key = (a, kind, i, inverse)
    cached = alg._tgen.get(key)
    if cached is not None:
        return cached
    rs = alg.rs
    da = rs.d[a - 1]
    alpha = rs.simple(a)
    if kind == "E":
        if i == a:
            out = (alg.F(a) * alg.K(alpha)).scale(-ONE) if not inverse else (
                alg.K(vec_neg(alpha)) * alg.F(a)
            ).scale(-ONE)
        else:
            r = -rs.cartan[a - 1][i - 1]
            out = alg.zero()
            for s in range(r + 1):
                coef = qpow(-s * da)
                if s % 2:
                    coef = -coef
                lo = _divided_power(alg, alg.E(a), r - s if not inverse else s, da)
                hi = _divided_power(alg, alg.E(a), s if not inverse else r - s, da)
                out = out + (lo * alg.E(i) * hi).scale(coef)
    elif kind == "F":
        if i == a:
            out = (alg.K(vec_neg(alpha)) * alg.E(a)).scale(-ONE) if not inverse else (
                alg.E(a) * alg.K(alpha)
            ).scale(-ONE)
        else:
            r = -rs.cartan[a - 1][i - 1]
            out = alg.zero()
            for s in range(r + 1):
                coef = qpow(s * da)
                if s % 2:
                    coef = -coef
                lo = _divided_power(alg, alg.F(a), s if not inverse else r - s, da)
                hi = _divided_power(alg, alg.F(a), r - s if not inverse else s, da)
                out = out + (lo * alg.F(i) * hi).scale(coef)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    alg._tgen[key] = out
    return out


def lusztig_T(alg: UAlgebra, a: int, x: UElt, inverse: bool = False) -> UElt:
    """The Lusztig symmetry T_a (or its inverse) applied to x."""
    alg._check_index(a)
    rs = alg.rs
    out = alg.zero()
    for (f, k, e), c in x.terms.items():
        img = alg.one().scale(c)
        for j in f:
            img = img * _t_generator(alg, a, "F", j, inverse)
        if any(k):
            img = img * alg.K(reflect(rs, rs.simple(a), k))
        for i in e:
            img = img * _t_generator(alg, a, "E", i, inverse)
        out = out + img
    return out


def root_vectors(alg: UAlgebra, word: ReducedWord) -> list[UElt]:
    """The root vectors E_{beta_1}, ..., E_{beta_t} of a reduced word.

    E_{beta_i} applies the symmetries of the first i-1 letters to the
    i-th simple generator; each result lies in the positive part and is
    homogeneous of weight beta_i.
    """
    if word.rs is not alg.rs and word.rs != alg.rs:
        raise NotReduced("word belongs to a different root system")
    letters = word.letters
    out = []
    for idx in range(len(letters)):
        x = alg.E(letters[idx])
        for j in range(idx - 1, -1, -1):
            x = lusztig_T(alg, letters[j], x)
        out.append(x)
    return out
