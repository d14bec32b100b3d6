"""Root systems from Cartan data, the symmetrized form, integer lattices."""

import json

import pytest

from qborel.errors import InvalidCartan, NotInPositiveCone
from qborel.rootsys import (
    LatticeSubgroup,
    bilinear,
    build_root_system,
    height,
    integer_kernel,
    lattice_leq,
    load_cartan_file,
    orthogonal_complement_lattice,
    pair_with_rho,
    reflect,
)
from qborel.weyl import from_word, identity

A2 = build_root_system("A2")
B2 = build_root_system("B2")
G2 = build_root_system("G2")


def test_named_systems():
    assert A2.rank == 2 and A2.d == (1, 1)
    assert A2.pos_roots == ((0, 1), (1, 0), (1, 1))
    # first simple root short in B2 and G2
    assert B2.d == (1, 2)
    assert B2.pos_roots == ((0, 1), (1, 0), (1, 1), (2, 1))
    assert G2.d == (1, 3)
    assert G2.pos_roots == ((0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2))
    a3 = build_root_system("A3")
    assert len(a3.pos_roots) == 6
    b3 = build_root_system("B3")
    assert len(b3.pos_roots) == 9


def test_gram_is_symmetrized_cartan():
    for rs in (A2, B2, G2):
        n = rs.rank
        for i in range(n):
            for j in range(n):
                assert rs.gram[i][j] == rs.d[i] * rs.cartan[i][j]
                assert rs.gram[i][j] == rs.gram[j][i]
    assert B2.gram == ((2, -2), (-2, 4))
    assert G2.gram == ((2, -3), (-3, 6))


def test_bilinear_and_heights():
    assert bilinear(A2, (1, 0), (1, 0)) == 2
    assert bilinear(A2, (1, 0), (0, 1)) == -1
    assert bilinear(G2, (0, 1), (0, 1)) == 6
    assert height(A2, (1, 1)) == 2
    with pytest.raises(NotInPositiveCone):
        height(A2, (1, -1))


def test_reflect():
    assert reflect(A2, (1, 0), (0, 1)) == (1, 1)
    assert reflect(B2, (1, 0), (0, 1)) == (2, 1)
    assert reflect(G2, (1, 0), (0, 1)) == (3, 1)
    for rs in (A2, B2, G2):
        for beta in rs.pos_roots:
            assert reflect(rs, beta, beta) == tuple(-c for c in beta)


def test_rho_pairing():
    assert A2.rho == (1, 1)
    e = identity(A2)
    for beta in A2.pos_roots:
        assert pair_with_rho(A2, beta, e) > 0
    w0 = from_word(A2, (1, 2, 1))
    for beta in A2.pos_roots:
        assert pair_with_rho(A2, beta, w0) < 0


def test_is_root():
    assert A2.is_root((1, 1))
    assert A2.is_root((-1, -1))
    assert not A2.is_root((2, 1))
    assert not A2.is_root((0, 0))


def test_matrix_spec_matches_named():
    rs = build_root_system([[2, -1], [-1, 2]])
    assert rs.pos_roots == A2.pos_roots
    assert rs.gram == A2.gram


def test_invalid_cartan():
    with pytest.raises(InvalidCartan):
        build_root_system("Z9")
    with pytest.raises(InvalidCartan):
        build_root_system("Aq")
    with pytest.raises(InvalidCartan):
        build_root_system([[2, -1]])
    with pytest.raises(InvalidCartan):
        build_root_system([[2, 1], [1, 2]])
    with pytest.raises(InvalidCartan):
        build_root_system([[2, 0], [-1, 2]])
    with pytest.raises(InvalidCartan):
        # affine matrix: form is not positive definite
        build_root_system([[2, -2], [-2, 2]])
    with pytest.raises(InvalidCartan):
        build_root_system([[1]])


def test_load_cartan_file(tmp_path):
    path = tmp_path / "cartan.json"
    path.write_text(json.dumps([[2, -2], [-1, 2]]))
    rs = load_cartan_file(str(path))
    assert rs.pos_roots == B2.pos_roots


def test_lattice_hnf_canonical():
    L = LatticeSubgroup.from_generators(2, [(2, 0), (0, 2), (1, 1)])
    assert L.basis == ((1, 1), (0, 2))
    assert L.rank == 2
    assert L.contains((1, 1)) and L.contains((2, 0)) and L.contains((3, 5))
    assert not L.contains((1, 0))
    # generator order must not matter
    M = LatticeSubgroup.from_generators(2, [(1, 1), (0, 2), (2, 0)])
    assert M.basis == L.basis


def test_lattice_leq():
    full = LatticeSubgroup.from_generators(2, [(1, 0), (0, 1)])
    even = LatticeSubgroup.from_generators(2, [(2, 0), (0, 2)])
    zero = LatticeSubgroup.from_generators(2, [])
    assert lattice_leq(even, full)
    assert not lattice_leq(full, even)
    assert lattice_leq(zero, even)
    assert zero.rank == 0 and not zero.contains((1, 0)) and zero.contains((0, 0))


def test_integer_kernel():
    K = integer_kernel([[1, 1]], 2)
    assert K.basis == ((1, -1),)
    K2 = integer_kernel([[2, 4]], 2)
    assert K2.contains((2, -1)) and not K2.contains((1, 0))


def test_orthogonal_complement():
    assert orthogonal_complement_lattice(A2, [(1, 0)]).basis == ((1, 2),)
    assert orthogonal_complement_lattice(B2, [(1, 0)]).basis == ((1, 1),)
    assert orthogonal_complement_lattice(G2, [(1, 0)]).basis == ((3, 2),)
    # complement of nothing is everything
    assert orthogonal_complement_lattice(A2, []).basis == ((1, 0), (0, 1))
    # complement of a spanning set is trivial
    assert orthogonal_complement_lattice(A2, [(1, 0), (0, 1)]).rank == 0
    for rs in (A2, B2, G2):
        L = orthogonal_complement_lattice(rs, [rs.simple(1)])
        for row in L.basis:
            assert bilinear(rs, row, rs.simple(1)) == 0
