"""Stratification data attached to a Weyl group element.

Given w and a reduced word for it, the inversion roots beta_1..beta_t
carry a poset T^w of pairwise orthogonal subsets Theta satisfying the
length condition l(w_Theta) = l(w) - |Theta|.  These subsets index the
character strata of the algebra attached to w; kappa sends Theta to
w_Theta and is an order reversing bijection onto W^w.  The classify
entry point assembles the whole table, together with the maximal
admissible lattice of each stratum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from .coeffs import QRat, ZERO
from .errors import NotInWw, NotOrthogonal, NotReduced
from .rootsys import (
    LatticeSubgroup,
    Vec,
    bilinear,
    lattice_leq,
    orthogonal_complement_lattice,
)
from .weyl import ReducedWord, WeylElt, bruhat_le, canonical_word, identity, reflection_of_root


def w_theta(w: WeylElt, roots) -> WeylElt:
    """(prod of s_beta over the given roots) * w.

    The roots must be pairwise orthogonal, so the reflections commute and
    the product needs no ordering convention.
    """
    rs = w.rs
    rts = tuple(roots)
    for a in range(len(rts)):
        for b in range(a + 1, len(rts)):
            if bilinear(rs, rts[a], rts[b]) != 0:
                raise NotOrthogonal(f"roots {rts[a]} and {rts[b]} are not orthogonal")
    prod = identity(rs)
    for beta in rts:
        prod = prod * reflection_of_root(rs, beta)
    return prod * w


@dataclass(frozen=True)
class ThetaSet:
    """An admissible orthogonal subset of the inversion roots of a word.

    indices are 1-based positions into word.roots, sorted ascending.
    Construction validates orthogonality and the length condition, so a
    ThetaSet is a certificate of membership in T^w.
    """

    w: WeylElt
    word: ReducedWord
    indices: tuple[int, ...]
    roots: tuple[Vec, ...]

    def __post_init__(self):
        if self.word.element.mat != self.w.mat:
            raise NotReduced(f"word {self.word.letters} does not spell the given element")
        betas = self.word.roots
        if self.indices != tuple(sorted(set(self.indices))):
            raise ValueError("indices must be strictly increasing")
        if any(not 1 <= i <= len(betas) for i in self.indices):
            raise ValueError("index out of range for the word")
        if self.roots != tuple(betas[i - 1] for i in self.indices):
            raise ValueError("roots do not match the selected indices")
        for a in range(len(self.roots)):
            for b in range(a + 1, len(self.roots)):
                if bilinear(self.w.rs, self.roots[a], self.roots[b]) != 0:
                    raise NotOrthogonal(
                        f"roots {self.roots[a]} and {self.roots[b]} are not orthogonal"
                    )
        y = w_theta(self.w, self.roots)
        if y.length != self.w.length - len(self.roots):
            raise ValueError(f"subset {self.indices} fails the length condition")

    def __len__(self) -> int:
        return len(self.indices)


def theta_set(word: ReducedWord, indices) -> ThetaSet:
    idx = tuple(sorted(set(indices)))
    betas = word.roots
    if any(not 1 <= i <= len(betas) for i in idx):
        raise ValueError("index out of range for the word")
    roots = tuple(betas[i - 1] for i in idx)
    return ThetaSet(word.element, word, idx, roots)


def enumerate_Tw(w: WeylElt, word: ReducedWord) -> list[ThetaSet]:
    """All admissible subsets, smallest first.

    Grown incrementally: every member arises by appending its largest
    index to another member (subset closure), so the search never looks
    at a subset whose proper prefix already failed.
    """
    if word.element.mat != w.mat:
        raise NotReduced(f"word {word.letters} does not spell the given element")
    rs = w.rs
    betas = word.roots
    t = len(betas)
    members: list[tuple[int, ...]] = [()]
    pos = 0
    while pos < len(members):
        idx = members[pos]
        pos += 1
        start = idx[-1] + 1 if idx else 1
        for k in range(start, t + 1):
            beta_k = betas[k - 1]
            if any(bilinear(rs, betas[i - 1], beta_k) != 0 for i in idx):
                continue
            cand = idx + (k,)
            y = w_theta(w, tuple(betas[i - 1] for i in cand))
            if y.length == t - len(cand):
                members.append(cand)
    members.sort(key=lambda s: (len(s), s))
    return [
        ThetaSet(w, word, idx, tuple(betas[i - 1] for i in idx)) for idx in members
    ]


def kappa(theta: ThetaSet) -> WeylElt:
    return w_theta(theta.w, theta.roots)


def kappa_inverse(w: WeylElt, word: ReducedWord, y: WeylElt) -> ThetaSet:
    """The unique Theta with w_Theta = y, if y lies in W^w."""
    for theta in enumerate_Tw(w, word):
        if kappa(theta).mat == y.mat:
            return theta
    raise NotInWw(f"element with word {canonical_word(y)} is not a w_Theta for this w")


@dataclass(frozen=True)
class Stratum:
    """One stratum of the character space: y = w_Theta and dim = |Theta|."""

    y: WeylElt
    theta: ThetaSet
    dim: int

    def __post_init__(self):
        if self.dim != len(self.theta):
            raise ValueError("stratum dimension must equal |Theta|")
        if self.y.mat != kappa(self.theta).mat:
            raise ValueError("y is not w_Theta")
        if not bruhat_le(self.y, self.theta.w):
            raise ValueError("w_Theta must lie below w in Bruhat order")


def stratum_of(theta: ThetaSet) -> Stratum:
    return Stratum(kappa(theta), theta, len(theta))


def enumerate_strata(w: WeylElt, word: ReducedWord) -> list[Stratum]:
    return [stratum_of(th) for th in enumerate_Tw(w, word)]


@dataclass(frozen=True, eq=False)
class CharacterData:
    """A character on a stratum.

    f maps every Theta root to a nonzero coefficient.  f = None keeps the
    values as free parameters; the concrete form is only needed by the
    algebraic checks downstream.
    """

    stratum: Stratum
    f: Optional[Mapping[Vec, QRat]] = None

    def __post_init__(self):
        if self.f is not None:
            dom = set(self.f)
            if dom != set(self.stratum.theta.roots):
                raise ValueError("character domain must be exactly the Theta roots")
            for beta, val in self.f.items():
                if not isinstance(val, QRat) or val == ZERO:
                    raise ValueError(f"character value at {beta} must be a nonzero QRat")
            object.__setattr__(self, "f", dict(self.f))

    @property
    def is_symbolic(self) -> bool:
        return self.f is None


def character(stratum: Stratum, f: Optional[Mapping[Vec, QRat]] = None) -> CharacterData:
    return CharacterData(stratum, f)


def support_of(char: CharacterData) -> tuple[Vec, ...]:
    """Monoid generators of the support of the character, i.e. the Theta roots."""
    return char.stratum.theta.roots


def max_admissible_lattice(char: CharacterData) -> LatticeSubgroup:
    th = char.stratum.theta
    return orthogonal_complement_lattice(th.w.rs, th.roots)


@dataclass(frozen=True, eq=False)
class CoidealTriple:
    w: WeylElt
    word: ReducedWord
    char: CharacterData
    L: LatticeSubgroup


def validate_triple(t: CoidealTriple) -> bool:
    """Whether the triple indexes a coideal subalgebra.

    Checks internal consistency (word spells w, the character lives on a
    stratum of that word) and the lattice condition L <= (supp)^perp.
    Returns a bool instead of raising: invalid data is an expected query.
    """
    try:
        if t.word.element.mat != t.w.mat:
            return False
    except NotReduced:
        return False
    th = t.char.stratum.theta
    if th.word.letters != t.word.letters or th.w.mat != t.w.mat:
        return False
    if t.L.n != t.w.rs.rank:
        return False
    return lattice_leq(t.L, max_admissible_lattice(t.char))


# ---------------------------------------------------------------------------
# the classification report


@dataclass(frozen=True)
class ReportRow:
    y_word: tuple[int, ...]
    theta_roots: tuple[Vec, ...]
    dim: int
    Lmax_basis: tuple[Vec, ...]


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    """The classification table for one w.

    rows are ordered by (dim, theta_roots) so the table is identical for
    every reduced word of w.  bruhat lists index pairs [i, j] meaning
    rows[i].y < rows[j].y strictly in Bruhat order.
    """

    type_label: str
    word: tuple[int, ...]
    rows: tuple[ReportRow, ...]
    bruhat: tuple[tuple[int, int], ...]
    totals: Mapping[str, int]

    def to_json(self) -> str:
        doc = {
            "type": self.type_label,
            "word": list(self.word),
            "rows": [
                {
                    "y_word": list(r.y_word),
                    "theta_roots": [list(v) for v in r.theta_roots],
                    "dim": r.dim,
                    "Lmax_basis": [list(v) for v in r.Lmax_basis],
                }
                for r in self.rows
            ],
            "totals": dict(self.totals),
            "bruhat": [list(p) for p in self.bruhat],
        }
        return json.dumps(doc, indent=2)

    def to_tsv(self) -> str:
        def vecs(vs):
            return ";".join("(" + ",".join(str(c) for c in v) + ")" for v in vs) or "-"

        lines = [f"# type {self.type_label}\tword {','.join(str(i) for i in self.word)}"]
        lines.append("y_word\ttheta_roots\tdim\tLmax_basis")
        for r in self.rows:
            yw = ",".join(str(i) for i in r.y_word) or "-"
            lines.append(f"{yw}\t{vecs(r.theta_roots)}\t{r.dim}\t{vecs(r.Lmax_basis)}")
        pairs = " ".join(f"{i}<{j}" for i, j in self.bruhat) or "-"
        lines.append(f"# bruhat: {pairs}")
        lines.append(
            "# totals: |T^w|={T_w} |W^w|={W_w}".format(**dict(self.totals))
        )
        return "\n".join(lines) + "\n"


def classify(w: WeylElt, word: ReducedWord, label: str = "custom") -> ClassificationReport:
    strata = enumerate_strata(w, word)
    decorated = []
    for st in strata:
        lmax = max_admissible_lattice(character(st))
        decorated.append(
            ReportRow(
                y_word=canonical_word(st.y),
                theta_roots=st.theta.roots,
                dim=st.dim,
                Lmax_basis=lmax.basis,
            )
        )
    order = sorted(range(len(decorated)), key=lambda i: (decorated[i].dim, decorated[i].theta_roots))
    rows = tuple(decorated[i] for i in order)
    ys = [strata[i].y for i in order]
    pairs = []
    for i in range(len(ys)):
        for j in range(len(ys)):
            if i != j and ys[i].mat != ys[j].mat and bruhat_le(ys[i], ys[j]):
                pairs.append((i, j))
    totals = {"T_w": len(rows), "W_w": len({y.mat for y in ys})}
    return ClassificationReport(
        type_label=label,
        word=word.letters,
        rows=rows,
        bruhat=tuple(pairs),
        totals=totals,
    )
