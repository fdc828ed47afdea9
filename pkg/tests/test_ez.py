import random

from ademops.complex import product_is_degenerate
from ademops.ez import (T2, T4, TT4, Z4, add_chain, aw, aw4, aw_chain, d_product, d_tensor, em,
                        em4, perm_t, perm_t2, perm_z, permute, sh, sh4, sh_tilde, shuffles,
                        tensor_T)
from ademops.suites import (awz_em_lhs, awz_em_rhs, one_sh_aw_z_sh, product_basis, sh_t_sh,
                            tensor_basis)


def test_shuffles():
    assert shuffles(1, 1) == (((0,), (1,), 0), ((1,), (0,), 1))
    assert shuffles(3, 0) == (((0, 1, 2), (), 0),)
    assert len(shuffles(2, 2)) == 6


def test_aw_example():
    assert aw(((0, 1), (0, 1))) == {(((0,),), ((0, 1),)): 1, (((0, 1),), ((1,),)): 1}
    assert aw(((3,), (5,))) == {(((3,),), ((5,),)): 1}


def test_em_example():
    t = {(((0, 1),), ((0, 1),)): 1}
    assert em(t) == {((0, 1, 1), (0, 0, 1)): 1, ((0, 0, 1), (0, 1, 1)): -1}
    assert em({(((4,),), ((7,),)): 1}) == {((4,), (7,)): 1}


def test_sh_vanishes_in_degree_zero():
    assert sh({((0,), (1,)): 1}) == {}
    assert sh4({((0,), (1,), (2,), (3,)): 1}) == {}


def test_pair_contraction_up_to_degree_3():
    for m in range(4):
        for ps in product_basis(m, 2):
            x = {ps: 1}
            assert add_chain(sh(d_product(x)), d_product(sh(x))) == add_chain(em(aw(ps)), x, -1)
            assert not sh(sh(x)) and not aw_chain(sh(x))
        for t in tensor_basis(m, 2):
            assert aw_chain(em({t: 1})) == {t: 1}
            assert not sh(em({t: 1}))


def test_aw_is_a_chain_map():
    for m in range(1, 4):
        for ps in product_basis(m, 2):
            x = {ps: 1}
            assert aw_chain(d_product(x)) == d_tensor(aw_chain(x))


def test_em_is_a_chain_map():
    for m in range(4):
        for t in tensor_basis(m, 2):
            assert d_product(em({t: 1})) == em(d_tensor({t: 1}))


def test_permutations_follow_the_table():
    x = {((0,), (1,), (2,), (3,)): 1}
    assert perm_z(x) == {((0,), (2,), (1,), (3,)): 1}
    assert perm_t2(x) == {((1,), (0,), (3,), (2,)): 1}
    assert perm_t(x) == {((2,), (3,), (0,), (1,)): 1}
    assert perm_t(perm_t(x)) == x
    assert permute({((0,), (1,)): 1}, T2) == {((1,), (0,)): 1}


def test_tensor_T_koszul_sign():
    t = {(((0, 1),), ((2, 3),)): 1}
    assert tensor_T(t) == {(((2, 3),), ((0, 1),)): -1}


def test_fourfold_contraction_sampled():
    rng = random.Random(5)
    for m in range(4):
        basis = product_basis(m, 4)
        for ps in rng.sample(basis, min(60, len(basis))):
            x = {ps: 1}
            s = sh4(x)
            assert add_chain(sh4(d_product(x)), d_product(s)) == add_chain(em4(aw4(x)), x, -1)
            assert not sh4(s) and not aw4(s)
        for t in tensor_basis(m, 4):
            assert aw4(em4({t: 1})) == {t: 1}


def test_sh_tilde_keeps_the_q0_summands():
    # in degree 1 only q = 0 summands exist, and the beta < alpha condition is vacuous
    u = {((0, 1), (0, 1)): 1}
    assert sh_tilde(u) == sh(u)
    v = {((0, 1, 2, 3), (0, 1, 2, 3)): 1}
    assert len(sh_tilde(v)) < len(sh(v))


def test_null_summands_on_universal_simplices():
    for m in range(5):
        u = tuple(range(m + 1))
        assert one_sh_aw_z_sh({(u,) * 4: 1}) == {}


def test_awzem_factors_through_em_tensor_em():
    for p in range(3):
        for q in range(3):
            u, v = (tuple(range(p + 1)),) * 2, (tuple(range(5, 6 + q)),) * 2
            assert awz_em_lhs(u, v) == awz_em_rhs(u, v)


def test_sh_t_sh_equals_sh_t_sh_tilde():
    for m in range(6):
        u = tuple(range(m + 1))
        assert sh_t_sh({(u, u): 1}) == sh_t_sh({(u, u): 1}, True)


def test_null_summands_on_non_diagonal_inputs():
    rng = random.Random(2)
    for _ in range(30):
        m = rng.randint(1, 3)
        ps = tuple(tuple(sorted(rng.choices(range(4), k=m + 1))) for _ in range(4))
        if product_is_degenerate(ps):
            continue
        assert not one_sh_aw_z_sh({ps: 1})
        if not product_is_degenerate(ps[:2]):
            assert sh_t_sh({ps[:2]: 1}) == sh_t_sh({ps[:2]: 1}, True)


def test_letter_permutations_are_the_z_t_t2_table():
    assert (Z4, TT4, T4) == ((0, 2, 1, 3), (1, 0, 3, 2), (2, 3, 0, 1))
