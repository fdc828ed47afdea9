import pytest

from ademops.algebra import (Cochain, RingMismatch, Z, Z2, boundary, boundary_matrix, chain,
                             coboundary, cochain_from, cocycle_basis, constant, evaluate,
                             indicator, integer_kernel, random_cochain, random_cocycle, ring_of,
                             zero_cochain)
from ademops.complex import simplex_boundary, standard_simplex


def test_ring_lookup():
    assert ring_of("z") is Z and ring_of("Z/2") is Z2
    with pytest.raises(ValueError):
        ring_of("q")


def test_dd_is_zero():
    K = standard_simplex(5)
    for n in range(2, 6):
        for x in K.simplices(n):
            assert boundary(boundary({x: 1})) == {}


def test_chain_drops_degenerate():
    assert chain([((0, 0, 1), 3), ((0, 1, 2), 1), ((0, 1, 2), -1)]) == {}


def test_coboundary_sign_and_square():
    K = standard_simplex(4)
    for n in range(0, 3):
        c = random_cochain(K, n, Z, seed=n)
        assert coboundary(coboundary(c)).is_zero()
    c = indicator(K, (0, 1))
    # (delta c)(y) = (-1)^{n+1} c(dy) with n = 1
    assert coboundary(c)((0, 1, 2)) == c((0, 1))


def test_coboundary_is_adjoint_of_boundary():
    K = standard_simplex(4)
    c = random_cochain(K, 2, Z, seed=11)
    for y in K.simplices(3):
        assert coboundary(c)(y) == -evaluate(c, boundary({y: 1}))


def test_cochain_arithmetic_and_rings():
    K = standard_simplex(2)
    a = constant(K, 1, 3)
    assert (a - a).is_zero()
    assert a.mod2().values == (1, 1, 1)
    assert a((0, 0)) == 0  # degenerate
    with pytest.raises(RingMismatch):
        a + a.mod2()
    with pytest.raises(ValueError):
        Cochain(K, 1, (1, 2))


def test_boundary_matrix_shape():
    A = boundary_matrix(simplex_boundary(2), 1)
    assert A == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]


def test_integer_kernel_spans_lattice():
    # kernel of [2, 4] over Z is spanned by (2, -1), not (4, -2)
    ker = integer_kernel([[2, 4]], 2)
    assert len(ker) == 1 and abs(ker[0][0]) == 2 and abs(ker[0][1]) == 1


def test_cocycle_basis_dimension():
    # Z^1(dDelta^2) has rank 3 - 1 = 2 ... plus nothing: all 1-cochains of a circle are cocycles
    K = simplex_boundary(2)
    assert len(cocycle_basis(K, 1)) == 3
    assert len(cocycle_basis(standard_simplex(3), 1)) == 3


def test_random_cocycle_is_cocycle():
    K = standard_simplex(5)
    for ring in (Z, Z2):
        c = random_cocycle(K, 2, ring, seed=4)
        assert coboundary(c).is_zero()


def test_tabulation_helpers():
    K = standard_simplex(3)
    c = cochain_from(K, 1, lambda s: s[1] - s[0])
    assert c((0, 3)) == 3
    assert zero_cochain(K, 2).is_zero()
