import random

from hypothesis import given, settings
from hypothesis import strategies as st

from ademops.algebra import Z, Z2, coboundary, random_cochain
from ademops.cli import ComplexFile, parse_complex, serialize_complex
from ademops.complex import apply_word, is_normal_form, normalize_word, standard_simplex
from ademops.cup import cup_i, cup_i_direct
from ademops.reduce import diagonal, smith_normal_form
from ademops.suites import random_word

DELTA5 = standard_simplex(5)
DELTA4 = standard_simplex(4)


@given(st.integers(0, 10**6), st.integers(0, 4), st.integers(1, 8))
def test_normal_form_is_idempotent_and_acts_the_same(seed, n0, length):
    word = random_word(random.Random(seed), n0, length)
    nf = normalize_word(word)
    assert is_normal_form(nf)
    assert normalize_word(nf) == nf
    for x in DELTA5.simplices(n0)[:6]:
        assert apply_word(word, x) == apply_word(nf, x)


@given(st.integers(0, 3), st.integers(0, 10**6), st.sampled_from([Z, Z2]))
def test_coboundary_squares_to_zero(n, seed, ring):
    c = random_cochain(DELTA5, n, ring, seed=seed)
    assert coboundary(coboundary(c)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 10**6))
def test_cup_matches_the_direct_formula(m, n, i, seed):
    if i > min(m, n) or m + n - i > 4:
        return
    a = random_cochain(DELTA4, m, Z, seed=seed)
    b = random_cochain(DELTA4, n, Z, seed=seed + 1)
    got = cup_i(a, b, i)
    for x in DELTA4.simplices(m + n - i):
        assert got(x) == cup_i_direct(a, b, i, x)


simplex = st.lists(st.integers(0, 30), min_size=1, max_size=5, unique=True).map(sorted).map(tuple)


@given(st.text(max_size=20), st.lists(simplex, min_size=1, max_size=8))
def test_complex_file_round_trip(name, simplices):
    cf = ComplexFile(name, tuple(simplices))
    text = serialize_complex(cf)
    assert parse_complex(text) == cf
    assert serialize_complex(parse_complex(text)) == text


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_diagonal_divisibility_and_rank(A):
    S, U, V = smith_normal_form(A)
    d = diagonal(S)
    assert all(a > 0 for a in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    prod = [[sum(U[i][k] * A[k][j] for k in range(len(A))) for j in range(3)] for i in range(len(A))]
    assert [[sum(prod[i][k] * V[k][j] for k in range(3)) for j in range(3)]
            for i in range(len(A))] == S
