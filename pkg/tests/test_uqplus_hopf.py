"""Coproduct, the antipode-flip map psi, twisted generators and coideal spans."""

import random

import pytest

from qborel.coeffs import ONE, from_int, qpow
from qborel.errors import InvalidTriple
from qborel.rootsys import LatticeSubgroup, build_root_system, vec_add
from qborel.strata import (
    character,
    enumerate_strata,
    max_admissible_lattice,
    stratum_of,
    theta_set,
)
from qborel.uqplus.free import FreeElt, word_weight
from qborel.uqplus.full import UAlgebra
from qborel.uqplus.hopf import (
    check_coassociativity,
    check_counit_law,
    check_graded_compatibility,
    coideal_check,
    coproduct,
    psi_apply,
    span_is_Q_graded,
    twist_generators,
)
from qborel.uqplus.pbw import pbw_data
from qborel.weyl import ReducedWord, from_word

A2 = build_root_system("A2")
ALG = UAlgebra(A2)
ZERO2 = (0, 0)
A1VEC = A2.simple(1)


def _rand_coeff(rng):
    return from_int(rng.randint(1, 5)) * qpow(rng.randint(-2, 2))


def _rand_elt(alg, rng, hmax):
    rs = alg.rs
    x = alg.zero()
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, hmax)))
        mu = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
        term = alg.K(mu)
        for i in w:
            term = term * alg.E(i)
        x = x + term.scale(_rand_coeff(rng))
    return x


def test_coproduct_frozen():
    dE = coproduct(ALG, ALG.E(1))
    assert dE.terms == {
        (ZERO2, (1,), ZERO2, ()): ONE,
        (A1VEC, (), ZERO2, (1,)): ONE,
    }
    beta = (1, 2)
    assert coproduct(ALG, ALG.K(beta)).terms == {(beta, (), beta, ()): ONE}
    dE2 = coproduct(ALG, ALG.E(1) * ALG.E(1))
    assert dE2.terms == {
        (ZERO2, (1, 1), ZERO2, ()): ONE,
        (A1VEC, (1,), ZERO2, (1,)): ONE + qpow(-2),
        (vec_add(A1VEC, A1VEC), (), ZERO2, (1, 1)): ONE,
    }


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_coalgebra_laws_sampled(label):
    rs = build_root_system(label)
    alg = UAlgebra(rs)
    rng = random.Random(20260814)
    for _ in range(15):
        x = _rand_elt(alg, rng, 4)
        assert check_coassociativity(alg, x)
        assert check_counit_law(alg, x)
        x2 = _rand_elt(alg, rng, 2)
        y2 = _rand_elt(alg, rng, 2)
        assert coproduct(alg, x2 * y2) == coproduct(alg, x2) * coproduct(alg, y2)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_graded_compatibility_sampled(label):
    rs = build_root_system(label)
    alg = UAlgebra(rs)
    rng = random.Random(7)
    hits = 0
    for _ in range(25):
        w = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 4)))
        comp = alg.nf.complement_basis(word_weight(w, rs.rank))
        if not comp:
            continue
        f = FreeElt({wd: _rand_coeff(rng) for wd in comp})
        beta = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
        assert check_graded_compatibility(alg, alg.from_free(f) * alg.K(beta))
        hits += 1
    assert hits > 5


def test_psi_frozen():
    assert psi_apply(ALG, ALG.one()) == ALG.one()
    neg = tuple(-c for c in A1VEC)
    assert psi_apply(ALG, ALG.E(1)).terms == {((), neg, (1,)): qpow(1)}


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_psi_multiplicative(label):
    rs = build_root_system(label)
    alg = UAlgebra(rs)
    rng = random.Random(20260814)
    cnt = 0
    for _ in range(30):
        wx = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 2)))
        wy = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 2)))
        cx = alg.nf.complement_basis(word_weight(wx, rs.rank))
        cy = alg.nf.complement_basis(word_weight(wy, rs.rank))
        if not cx or not cy:
            continue
        x = alg.from_free(FreeElt({wd: _rand_coeff(rng) for wd in cx}))
        y = alg.from_free(FreeElt({wd: _rand_coeff(rng) for wd in cy}))
        assert psi_apply(alg, x * y) == psi_apply(alg, x) * psi_apply(alg, y)
        cnt += 1
    assert cnt > 10


def test_epsilon_twist_is_psi_of_root_vectors():
    word = ReducedWord(A2, (1, 2, 1))
    ch = character(stratum_of(theta_set(word, ())), {})
    gens = twist_generators(ALG, word, ch, LatticeSubgroup.from_generators(2, []))
    data = pbw_data(ALG, word)
    assert len(gens) == 3
    for i in range(3):
        assert gens[i] == psi_apply(ALG, data.free_vectors[i]), i


def test_rank_one_twist_generator():
    rs = build_root_system("A1")
    alg = UAlgebra(rs)
    word = ReducedWord(rs, (1,))
    c = from_int(3)
    ch = character(stratum_of(theta_set(word, (1,))), {rs.simple(1): c})
    g = twist_generators(alg, word, ch, LatticeSubgroup.from_generators(1, []))
    assert len(g) == 1
    assert g[0].terms == {((), (-1,), ()): c, ((), (-1,), (1,)): qpow(1)}
    with pytest.raises(InvalidTriple):
        twist_generators(alg, word, ch, LatticeSubgroup.from_generators(1, [(1,)]))


def test_coideal_check_basics():
    assert coideal_check(ALG, [ALG.K((1, 1)), ALG.K((-1, -1))], 4)
    assert not coideal_check(ALG, [ALG.E(1)], 4)
    # a generator mixing two K-components whose coproduct leaks
    bad = psi_apply(ALG, ALG.E(1)) + ALG.K((0, -1))
    assert not coideal_check(ALG, [bad], 4)


def test_a2_strata_give_right_coideals():
    w0 = from_word(A2, (1, 2, 1))
    word = ReducedWord(A2, (1, 2, 1))
    for st in enumerate_strata(w0, word):
        ch = character(st, {b: ONE for b in st.theta.roots})
        L = max_admissible_lattice(ch)
        gens = twist_generators(ALG, word, ch, L)
        assert coideal_check(ALG, gens, 4), st.theta.indices
        assert span_is_Q_graded(ALG, gens, 4), st.theta.indices
