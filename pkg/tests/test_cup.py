import random

import pytest

from ademops.algebra import Z, Z2, coboundary, indicator, random_cochain, random_cocycle
from ademops.complex import simplex_boundary, standard_simplex
from ademops.cup import (NotACocycle, cup0_faces, cup_i, cup_i_direct, eq1_residual,
                         sq_cochain)
from ademops.ez import T4, aw4, permute, sh4
from ademops.formulas import aw_top, cup_formula, pull_perm, pull_sh4


def test_cup0_hand_value():
    K = standard_simplex(2)
    c = random_cochain(K, 1, Z, seed=1)
    c2 = random_cochain(K, 1, Z, seed=2)
    assert cup_i(c, c2, 0)((0, 1, 2)) == c((0, 1)) * c2((1, 2))


def test_cup0_matches_face_formula_on_delta4():
    K = standard_simplex(4)
    for m in range(5):
        for n in range(5 - m):
            a = random_cochain(K, m, Z, seed=m)
            b = random_cochain(K, n, Z, seed=10 + n)
            assert cup_i(a, b, 0) == cup0_faces(a, b)


def test_cup_i_matches_operator_composition():
    K = standard_simplex(4)
    rng = random.Random(8)
    for i in range(4):
        for m in range(i, 5):
            for n in range(i, 5):
                deg = m + n - i
                if deg > 4:
                    continue
                a = random_cochain(K, m, Z, seed=rng.randrange(999))
                b = random_cochain(K, n, Z, seed=rng.randrange(999))
                got = cup_i(a, b, i)
                assert got.degree == deg
                for x in K.simplices(deg):
                    assert got(x) == cup_i_direct(a, b, i, x)


def test_cup_vanishes_past_the_degrees():
    K = standard_simplex(4)
    a = random_cochain(K, 1, Z, seed=3)
    b = random_cochain(K, 3, Z, seed=4)
    assert cup_i(a, b, 2).is_zero() and cup_i(a, b, 2).degree == 2
    assert cup_formula(1, 3, 2) == {}
    with pytest.raises(ValueError):
        cup_i(a, b, -1)


def test_top_cup_is_the_square_mod_2():
    for q in (1, 2):
        K = standard_simplex(q + 1)
        for seed in range(5):
            c = random_cocycle(K, q, Z2, seed=seed)
            s = cup_i(c, c, q)
            for x in K.simplices(q):
                assert s(x) == c(x) * c(x) % 2 == cup_i_direct(c, c, q, x)


def test_eq1_on_random_one_cochains():
    K = simplex_boundary(3)
    for seed in range(10):
        a = random_cochain(K, 1, Z, seed=seed)
        b = random_cochain(K, 1, Z, seed=seed + 50)
        assert eq1_residual(a, b, 1).is_zero()


def test_eq1_for_cocycles():
    K = standard_simplex(5)
    a = random_cocycle(K, 2, Z2, seed=1)
    b = random_cocycle(K, 2, Z2, seed=2)
    for i in (1, 2):
        assert coboundary(cup_i(a, b, i)) == cup_i(a, b, i - 1) + cup_i(b, a, i - 1)


def test_sq_cochain():
    K = standard_simplex(4)
    c = random_cocycle(K, 2, Z, seed=6)
    assert sq_cochain(2, c) == cup_i(c.mod2(), c.mod2(), 0)
    assert sq_cochain(3, c).is_zero() and sq_cochain(3, c).degree == 5
    assert sq_cochain(1, c).degree == 3
    with pytest.raises(NotACocycle):
        sq_cochain(1, indicator(K, (0, 1, 2)))


def _eval_general(F, cochains, X):
    """A pulled-back functional on a product simplex whose factors may differ."""
    tot = 0
    for key, coef in F.items():
        v = coef
        for k, (lab, w) in enumerate(key):
            v *= cochains[lab](tuple(X[k][p] for p in w))
        tot += v
    return tot


def _forward(cochains, X, n):
    ch = {X: 1}
    for _ in range(n):
        ch = permute(sh4(ch), T4)
    tot = 0
    for key, v in aw4(ch).items():
        for lab, b in enumerate(key):
            v *= cochains[lab](b[0])
        tot += v
    return tot


@pytest.mark.parametrize("prune", [True, False])
def test_pullback_matches_forward_on_non_diagonal_inputs(prune):
    K = standard_simplex(3)
    rng = random.Random(0)
    degs = (1, 1, 0, 1)
    cochains = [random_cochain(K, d, Z, seed=k) for k, d in enumerate(degs)]
    F = aw_top(degs)
    F = pull_sh4(pull_perm(F, T4), sum(degs) - 1, prune=prune)
    for _ in range(25):
        X = tuple(tuple(sorted(rng.choices(range(4), k=3))) for _ in range(4))
        assert _eval_general(F, cochains, X) == _forward(cochains, X, 1)
