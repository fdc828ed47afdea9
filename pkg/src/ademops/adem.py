"""Cochain-level Adem operations E_{3i+3} and the Adem relation checker.

E_{3i+3}(c) is a mod-2 (q+3)-cochain for an integral q-cocycle c, q = i + 2,
whose coboundary is (c u_i c) u_{i+2} (c u_i c) + (c u_{i+1} c) u_i (c u_{i+1} c).
It is a sum of compositions

    mu c^{x4} Aw_4 nu(letter_n) Sh_4 ... nu(letter_1) Sh_4 Delta

over bar words, plus a few iterated cup products.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra import Cochain, Z2, coboundary, zero_cochain
from .complex import dim
from .cup import NotACocycle, cup_i
from .ez import T4, TT4, Z4, shuffles
from .formulas import add_functionals, aw_top, on_diagonal, pull_perm, pull_sh4

# Letter order conventions: which end of a bar word acts on Delta(x) first.
INNER_FIRST = "inner-first"   # first letter is applied first (default)
OUTER_FIRST = "outer-first"
ORDERS = (INNER_FIRST, OUTER_FIRST)

# Iterated cup readings for "c u_a c u_k c u_b c".
PAIR = "pair"                 # (c u_a c) u_k (c u_b c)   (default)
LEFT = "left"                 # ((c u_a c) u_k c) u_b c
READINGS = (PAIR, LEFT)

# Which cup-term table to use.  The printed E_6 term (1, 2, 3) does not make
# the Adem relation hold in any reading; among all iterated cups of the right
# degree, (0, 5, 1) is the single term that does (checked on Delta^8).
PRINTED = "printed"
CORRECTED = "corrected"
CUP_VARIANTS = (CORRECTED, PRINTED)
CUP_TERM_CORRECTIONS = {1: [(0, 5, 1)]}


# -- the group Z2^2 x| Z2 ---------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupElement:
    """((a, b), eps) in Z2^2 x|_chi Z2, with chi((a, b), 1) = (b, a)."""

    a: int
    b: int
    eps: int

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        oa, ob = (other.b, other.a) if self.eps else (other.a, other.b)
        return GroupElement((self.a + oa) % 2, (self.b + ob) % 2, (self.eps + other.eps) % 2)

    def inverse(self) -> "GroupElement":
        for g in ELEMENTS:
            if (self * g) == IDENTITY:
                return g
        raise AssertionError("unreachable")

    def bar(self) -> "GroupElement":
        """Swap the Z2^2 coordinates."""
        return GroupElement(self.b, self.a, self.eps)

    @property
    def is_identity(self) -> bool:
        return not (self.a or self.b or self.eps)

    def __repr__(self):
        names = {A1: "a1", A2: "a2", A3: "a3", IDENTITY: "1"}
        return names.get(self, f"(({self.a},{self.b}),{self.eps})")


IDENTITY = GroupElement(0, 0, 0)
A1 = GroupElement(0, 0, 1)
A2 = GroupElement(1, 0, 0)
A3 = GroupElement(0, 1, 0)
ELEMENTS = tuple(GroupElement(a, b, e) for a in (0, 1) for b in (0, 1) for e in (0, 1))

_GEN_PERM = {A1: Z4, A2: TT4, A3: T4}


def _then(first: tuple, second: tuple) -> tuple:
    """Permutation order for applying ``first`` and then ``second``."""
    return tuple(first[k] for k in second)


def action(g: GroupElement) -> tuple:
    """The permutation of K^{x4} by which g acts on the right.

    g = a2^a a3^b a1^eps, so the generators are applied in that order.
    """
    order = (0, 1, 2, 3)
    for gen, k in ((A2, g.a), (A3, g.b), (A1, g.eps)):
        if k:
            order = _then(order, _GEN_PERM[gen])
    return order


# -- bar words ------------------------------------------------------------

def bar_words(i: int, ell: int) -> list[tuple]:
    """Summands of e_{(3i+3, ell)}: one a1 letter at every split of every shuffle."""
    n = 3 * i + 2
    if i < 0 or not 0 <= ell <= n:
        raise ValueError(f"need 0 <= ell <= {n}")
    words = []
    for alpha, _beta, _sig in shuffles(n - ell, ell):
        aset = set(alpha)
        letters = [A2 if k in aset else A3 for k in range(n)]
        for j in range(n + 1):
            words.append(tuple(letters[:j]) + (A1,) + tuple(c.bar() for c in letters[j:]))
    return words


def bar_word_count(i: int, ell: int) -> int:
    return comb(3 * i + 2, ell) * (3 * i + 3)


def e_cases(i: int) -> list[int]:
    """The ell values whose e_{(3i+3, ell)} make up e_{3i+3}."""
    if i < 0:
        raise ValueError("i must be non-negative")
    if i == 0:
        return [0]
    if i in (1, 3, 5):
        return [i]
    if i in (2, 4):
        return [i, i - 1]
    if i % 2 == 0:
        return [i, i - 1, i - 2]
    if ((i - 7) // 2) % 2 == 0:
        return [i]
    return [i, i - 2]


def cup_terms(i: int, variant: str = CORRECTED) -> list[tuple]:
    """Iterated cups (a, k, b) of E_{3i+3}, each read as c u_a c u_k c u_b c."""
    if i < 0:
        raise ValueError("i must be non-negative")
    if variant not in CUP_VARIANTS:
        raise ValueError(f"unknown cup-term variant {variant!r}")
    if variant == CORRECTED and i in CUP_TERM_CORRECTIONS:
        return list(CUP_TERM_CORRECTIONS[i])
    table = {
        0: [(0, 1, 2)],
        1: [(1, 2, 3)],
        2: [(2, 3, 4), (0, 7, 2)],
        3: [(3, 4, 5), (2, 7, 3), (3, 8, 1)],
        4: [(4, 5, 6)],
        5: [(5, 6, 7), (4, 9, 5), (4, 11, 3)],
    }
    if i in table:
        return table[i]
    if i % 2 == 0:
        terms = [(i, i + 1, i + 2)]
        if ((i - 6) // 2) % 2 == 0:
            terms.append((i, i + 5, i - 2))
        return terms
    return [(i, i + 1, i + 2), (i, i + 4, i - 1), (i, i + 5, i - 2), (i - 1, i + 6, i - 2)]


# -- E~ as a face-only formula ----------------------------------------------

def operator_term(word: tuple) -> tuple:
    """Permutations for each letter of a bar word, in word order."""
    return tuple(action(g) for g in word)


@lru_cache(maxsize=None)
def _tilde_formula(i: int, ell: int, order: str, prune: bool) -> tuple:
    q = i + 2
    memo = {(): aw_top((q,) * 4, (0,) * 4)}
    total = {}
    for word in bar_words(i, ell):
        perms = operator_term(word)
        # outermost letter first, since pullbacks start from Aw_4
        seq = perms[::-1] if order == INNER_FIRST else perms
        for k in range(1, len(seq) + 1):
            if seq[:k] not in memo:
                F = pull_perm(memo[seq[:k - 1]], seq[k - 1])
                memo[seq[:k]] = pull_sh4(F, 4 * q - k, 2, prune)
        total = add_functionals(total, memo[seq], 2)
    return tuple(sorted(on_diagonal(total, 2).items()))


def tilde_formula(i: int, ell: int, order: str = INNER_FIRST, prune: bool = True) -> dict:
    """E~_{(3i+3, ell)} on a (q+3)-simplex as windows of its vertex positions (mod 2)."""
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}")
    return dict(_tilde_formula(i, ell, order, prune))


def _check_input(i: int, c: Cochain, check: bool = True) -> None:
    q = i + 2
    if c.degree != q:
        raise ValueError(f"E_{3 * i + 3} needs a {q}-cocycle, got degree {c.degree}")
    if check and not coboundary(c).is_zero():
        raise NotACocycle("E operations are defined on cocycles")


def _check_simplex(i: int, x: tuple) -> None:
    if dim(x) != i + 5:
        raise ValueError(f"E_{3 * i + 3} evaluates on {i + 5}-simplices, got dimension {dim(x)}")


def _eval_mod2(formula: dict, c: Cochain, x: tuple) -> int:
    tot = 0
    for key, coef in formula.items():
        v = coef
        for _lab, w in key:
            v *= c(tuple(x[p] for p in w)) % 2
            if not v:
                break
        tot += v
    return tot % 2


def tilde_E(i: int, ell: int, c: Cochain, x: tuple, order: str = INNER_FIRST,
            check: bool = True) -> int:
    _check_input(i, c, check)
    _check_simplex(i, x)
    return _eval_mod2(tilde_formula(i, ell, order), c, x)


def _formula_cochain(formula: dict, c: Cochain, deg: int) -> Cochain:
    K = c.complex
    return Cochain(K, deg, tuple(_eval_mod2(formula, c, x) for x in K.simplices(deg)), Z2)


def tilde_E_cochain(i: int, ell: int, c: Cochain, order: str = INNER_FIRST,
                    check: bool = True) -> Cochain:
    _check_input(i, c, check)
    return _formula_cochain(tilde_formula(i, ell, order), c, i + 5)


# -- iterated cups ----------------------------------------------------------

def _cup_in_range(x: Cochain, y: Cochain, k: int):
    if k > x.degree or k > y.degree:
        return None
    return cup_i(x, y, k)


def iterated_cup(c: Cochain, ks, reading: str = PAIR) -> Cochain:
    """c u_a c u_k c u_b c in the chosen reading, computed mod 2.

    An index past the degrees at any stage makes the whole product zero.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    a, k, b = ks
    c2 = c.mod2()
    deg = 4 * c.degree - a - k - b
    first = _cup_in_range(c2, c2, a)
    if reading == PAIR:
        second = _cup_in_range(c2, c2, b)
        out = first and second and _cup_in_range(first, second, k)
    else:
        mid = first and _cup_in_range(first, c2, k)
        out = mid and _cup_in_range(mid, c2, b)
    return out if out is not None else zero_cochain(c.complex, max(deg, 0), Z2)


# -- E_{3i+3} ---------------------------------------------------------------

@dataclass(frozen=True)
class AdemTerms:
    i: int
    ells: tuple
    cups: tuple

    def __str__(self):
        parts = [f"E~({3 * self.i + 3},{ell})" for ell in self.ells]
        parts += [f"(c u{a} c) u{k} (c u{b} c)" for a, k, b in self.cups]
        return f"E_{3 * self.i + 3} = " + " + ".join(parts)


def adem_terms(i: int, cups: str = CORRECTED) -> AdemTerms:
    return AdemTerms(i, tuple(e_cases(i)), tuple(cup_terms(i, cups)))


def adem_E_cochain(i: int, c: Cochain, order: str = INNER_FIRST, reading: str = PAIR,
                   check: bool = True, cups: str = CORRECTED) -> Cochain:
    """E_{3i+3}(c^4) as a mod-2 (q+3)-cochain."""
    _check_input(i, c, check)
    terms = adem_terms(i, cups)
    formula = {}
    for ell in terms.ells:
        formula = add_functionals(formula, tilde_formula(i, ell, order), 2)
    out = _formula_cochain(formula, c, i + 5)
    for ks in terms.cups:
        out = out + iterated_cup(c, ks, reading)
    return out


def adem_E(i: int, c: Cochain, x: tuple, order: str = INNER_FIRST, reading: str = PAIR,
           check: bool = True, cups: str = CORRECTED) -> int:
    _check_simplex(i, x)
    return adem_E_cochain(i, c, order, reading, check, cups)(x)


# -- the normalized E_3 -------------------------------------------------------
# Each summand is four face words d_a d_b d_c applied to x (rightmost first).

E3_FACES = (
    ((1, 4, 5), (3, 4, 5), (0, 1, 2), (0, 1, 4)),
    ((1, 4, 5), (0, 1, 2), (3, 4, 5), (3, 4, 5)),
    ((2, 4, 5), (0, 1, 2), (0, 4, 5), (0, 4, 5)),
    ((3, 4, 5), (0, 1, 3), (0, 1, 5), (0, 1, 5)),
    ((3, 4, 5), (0, 1, 4), (0, 1, 2), (0, 1, 2)),
)

# As typeset, the first factor of the second and third summands reads
# d_1 d_2 d_3 and d_2 d_3 d_4; that version does not satisfy the Adem relation.
E3_FACES_AS_PRINTED = (
    E3_FACES[0],
    ((1, 2, 3),) + E3_FACES[1][1:],
    ((2, 3, 4),) + E3_FACES[2][1:],
    E3_FACES[3],
    E3_FACES[4],
)


def face_window(faces: tuple, n: int) -> tuple:
    """Positions of an n-simplex that survive d_{f_1} ... d_{f_k} (rightmost first)."""
    keep = list(range(n + 1))
    for f in reversed(faces):
        del keep[f]
    return tuple(keep)


def e3_normalized(c: Cochain, x: tuple, summands: tuple = E3_FACES) -> int:
    """Normalized E_3 on a 5-simplex: a sum of five products of four face values."""
    if dim(x) != 5:
        raise ValueError(f"normalized E_3 evaluates on 5-simplices, got dimension {dim(x)}")
    if c.degree != 2:
        raise ValueError("normalized E_3 takes a 2-cochain")
    tot = 0
    for summand in summands:
        v = 1
        for faces in summand:
            v *= c(tuple(x[p] for p in face_window(faces, 5))) % 2
            if not v:
                break
        tot += v
    return tot % 2


def e3_normalized_cochain(c: Cochain, summands: tuple = E3_FACES) -> Cochain:
    K = c.complex
    return Cochain(K, 5, tuple(e3_normalized(c, x, summands) for x in K.simplices(5)), Z2)


# -- the Adem relation --------------------------------------------------------

class VacuousCheck(ValueError):
    pass


def adem_lhs(c: Cochain, i: int) -> Cochain:
    """(c u_i c) u_{i+2} (c u_i c) + (c u_{i+1} c) u_i (c u_{i+1} c), mod 2."""
    c2 = c.mod2()
    a = cup_i(c2, c2, i)
    b = cup_i(c2, c2, i + 1)
    return cup_i(a, a, i + 2) + cup_i(b, b, i)


def adem_relation_residual(c: Cochain, i: int, order: str = INNER_FIRST,
                           reading: str = PAIR, E: Cochain | None = None,
                           cups: str = CORRECTED) -> int:
    """Number of (q+4)-simplices where the two sides of the Adem relation differ."""
    q = i + 2
    if c.complex.count(q + 4) == 0:
        raise VacuousCheck(f"no {q + 4}-simplices to check")
    if E is None:
        E = adem_E_cochain(i, c, order, reading, cups=cups)
    lhs = adem_lhs(c, i)
    rhs = coboundary(E)
    return sum(1 for a, b in zip(lhs.values, rhs.values) if (a - b) % 2)
