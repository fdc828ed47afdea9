"""Cup-i products, Steenrod squares on cochains, and the coboundary formula for cup-i."""
from __future__ import annotations

from .algebra import Cochain, RingMismatch, Z2, coboundary, zero_cochain
from .ez import T2, aw_chain, permute, sh
from .formulas import cup_formula


class NotACocycle(ValueError):
    pass


def _check_pair(c: Cochain, c2: Cochain) -> None:
    if c.ring != c2.ring:
        raise RingMismatch(f"{c.ring.name} vs {c2.ring.name}")
    if c.complex is not c2.complex:
        raise ValueError("cochains live on different complexes")


def cup_i(c: Cochain, c2: Cochain, i: int) -> Cochain:
    """c (cup_i) c' = mu (c (x) c') D_i Delta, of degree m + n - i.

    Evaluated through the face-only formula for D_i; see ``cup_i_direct``
    for the literal operator composition.
    """
    _check_pair(c, c2)
    if i < 0:
        raise ValueError("cup index must be non-negative")
    m, n = c.degree, c2.degree
    deg = m + n - i
    if deg < 0:
        raise ValueError(f"cup_{i} of degrees {m}, {n} has negative degree")
    K, ring = c.complex, c.ring
    if i > m or i > n:
        return zero_cochain(K, deg, ring)
    terms = [(coef, [(lab, w) for lab, w in key]) for key, coef in cup_formula(m, n, i).items()]
    vals = []
    for x in K.simplices(deg):
        tot = 0
        for coef, key in terms:
            v = coef
            for lab, w in key:
                v *= (c if lab == 0 else c2)(tuple(x[p] for p in w))
                if not v:
                    break
            tot += v
        vals.append(ring.reduce(tot))
    return Cochain(K, deg, tuple(vals), ring)


def cup_i_direct(c: Cochain, c2: Cochain, i: int, x: tuple) -> int:
    """Evaluate mu (c (x) c') Aw (t Sh)^i on Delta(x) by running the operators."""
    _check_pair(c, c2)
    ch = {(x, x): 1}
    for _ in range(i):
        ch = permute(sh(ch, 1), T2)
    tot = 0
    for (a, b), v in aw_chain(ch, 1).items():
        if len(a[0]) - 1 == c.degree and len(b[0]) - 1 == c2.degree:
            tot += v * c(a[0]) * c2(b[0])
    return c.ring.reduce(tot)


def cup0_faces(c: Cochain, c2: Cochain) -> Cochain:
    """The classical front-face/back-face cup product, written out directly."""
    _check_pair(c, c2)
    m, n = c.degree, c2.degree
    K = c.complex
    vals = tuple(c.ring.reduce(c(x[:m + 1]) * c2(x[m:])) for x in K.simplices(m + n))
    return Cochain(K, m + n, vals, c.ring)


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).is_zero()


def sq_cochain(i: int, c: Cochain, check: bool = True) -> Cochain:
    """Sq^i on the class of a j-cocycle: c (cup_{j-i}) c mod 2, of degree j + i."""
    j = c.degree
    if i < 0:
        raise ValueError("Sq^i needs i >= 0")
    c2 = c.mod2()
    if check and not is_cocycle(c2):
        raise NotACocycle("Steenrod squares are defined on cocycles")
    if i > j:
        return zero_cochain(c.complex, j + i, Z2)
    return cup_i(c2, c2, j - i)


def eq1_residual(c: Cochain, c2: Cochain, i: int) -> Cochain:
    """delta(c cup_i c') + c cup_{i-1} c' + c' cup_{i-1} c + dc cup_i c' + c cup_i dc', mod 2."""
    if i < 1:
        raise ValueError("the coboundary formula needs i >= 1")
    a, b = c.mod2(), c2.mod2()
    out = coboundary(cup_i(a, b, i))
    out = out + cup_i(a, b, i - 1) + cup_i(b, a, i - 1)
    out = out + cup_i(coboundary(a), b, i) + cup_i(a, coboundary(b), i)
    return out

