"""Face-only formulas by pulling evaluation functionals back through EZ operators.

Every operator in the pipeline (Aw, Em, Sh, the permutations) is natural in
the complex, so its effect on a product simplex is determined by what it
does to the universal simplex ``(0, 1, ..., m)`` in each factor: each output
summand just picks vertex positions.  A functional on the output side is
stored as a dict

    key -> coefficient,   key = ((label, window), ...)  one entry per factor

meaning ``sum coef * prod_k c_label(y_k at window_k)``, where ``window_k`` is
a tuple of positions into the k-th factor.  Pulling such a functional back
through an operator composes windows with the operator's position maps;
a window that stops being strictly increasing reads a degenerate simplex and
is dropped, since normalized cochains vanish there.

Working backwards from the top evaluation ``mu (c (x) ... ) Aw`` keeps the
functionals tiny, while running the operators forward on Delta(x) would
produce hundreds of thousands of intermediate summands.
"""
from __future__ import annotations

from functools import lru_cache

from .ez import _degens, _sh_basis, aw, em, shuffles


# -- position-map templates -----------------------------------------------

def _universal(m: int, n: int) -> tuple:
    return (tuple(range(m + 1)),) * n


@lru_cache(maxsize=None)
def sh_template(m: int) -> tuple:
    """Sh on K x L in degree m as ((map_x, map_y), coef) items."""
    return _sh_basis(_universal(m, 2), 1)


@lru_cache(maxsize=None)
def emaw_template(m: int) -> tuple:
    return tuple(em(aw(_universal(m, 2), 1)).items())


@lru_cache(maxsize=None)
def em_maps(a: int, b: int) -> tuple:
    """Em on blocks of degrees a, b as ((map_first, map_second), coef)."""
    out = []
    for alpha, beta, sig in shuffles(a, b):
        pa = _degens((tuple(range(a + 1)),), beta[::-1])[0]
        pb = _degens((tuple(range(b + 1)),), alpha[::-1])[0]
        out.append(((pa, pb), -1 if sig % 2 else 1))
    return tuple(out)


# -- functional arithmetic ------------------------------------------------

def _acc(out: dict, key, v: int, modulus: int) -> None:
    v = out.get(key, 0) + v
    if modulus:
        v %= modulus
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _compose(window: tuple, pmap: tuple, prune: bool = True):
    nw = tuple(pmap[p] for p in window)
    if not prune:
        return nw
    for k in range(len(nw) - 1):
        if nw[k] == nw[k + 1]:
            return None
    return nw


def _compose_key(key: tuple, maps: tuple, groups: tuple, prune: bool = True):
    out = []
    for (lab, w), g in zip(key, groups):
        nw = _compose(w, maps[g], prune)
        if nw is None:
            return None
        out.append((lab, nw))
    return tuple(out)


def add_functionals(a: dict, b: dict, modulus: int = 0) -> dict:
    out = dict(a)
    for k, v in b.items():
        _acc(out, k, v, modulus)
    return out


def pull_perm(F: dict, order: tuple) -> dict:
    """Pull back through ``new[k] = old[order[k]]``."""
    out = {}
    n = len(order)
    for key, v in F.items():
        nk = [None] * n
        for k in range(n):
            nk[order[k]] = key[k]
        out[tuple(nk)] = v
    return out


def pull_sh(F: dict, m: int, split: int, modulus: int = 0, prune: bool = True) -> dict:
    """Pull back through Sh (first ``split`` factors vs the rest), input degree m."""
    n = len(next(iter(F))) if F else 2
    groups = tuple(0 if k < split else 1 for k in range(n))
    out = {}
    for maps, c in sh_template(m):
        for key, v in F.items():
            nk = _compose_key(key, maps, groups, prune)
            if nk is not None:
                _acc(out, nk, c * v, modulus)
    return out


# -- the 4-fold homotopy, one constituent at a time ------------------------
# Tensor functionals on C(K^2) (x) C(K^2) are keyed by (a, keyA, keyB) with a
# the degree of the first block.

def _pull_em_blocks(F: dict, m: int, modulus: int, prune: bool) -> dict:
    out = {}
    for a in range(m + 1):
        b = m - a
        for (pa, pb), c in em_maps(a, b):
            maps = (pa, pb)
            for key, v in F.items():
                nk = _compose_key(key, maps, (0, 0, 1, 1), prune)
                if nk is not None:
                    _acc(out, (a, nk[:2], nk[2:]), c * v, modulus)
    return out


def _pull_aw_blocks(T: dict, modulus: int) -> dict:
    out = {}
    for (a, kA, kB), v in T.items():
        nk = kA + tuple((lab, tuple(p + a for p in w)) for lab, w in kB)
        _acc(out, nk, v, modulus)
    return out


def pull_sh4(F: dict, m: int, modulus: int = 0, prune: bool = True) -> dict:
    """Pull back through Sh_4 = Sh + Em (Sh (x) EmAw + 1 (x) Sh) Aw, input degree m.

    ``prune=False`` keeps windows that read degenerate simplices; they must
    contribute nothing once evaluated on a normalized cochain.
    """
    out = pull_sh(F, m, 2, modulus, prune)
    T = _pull_em_blocks(F, m + 1, modulus, prune)
    U = {}
    for (a, kA, kB), v in T.items():
        b = m + 1 - a
        if a >= 1:
            for mA, c1 in sh_template(a - 1):
                nA = _compose_key(kA, mA, (0, 1), prune)
                if nA is None:
                    continue
                for mB, c2 in emaw_template(b):
                    nB = _compose_key(kB, mB, (0, 1), prune)
                    if nB is not None:
                        _acc(U, (a - 1, nA, nB), c1 * c2 * v, modulus)
        if b >= 1:
            s = -1 if a % 2 else 1
            for mB, c in sh_template(b - 1):
                nB = _compose_key(kB, mB, (0, 1), prune)
                if nB is not None:
                    _acc(U, (a, kA, nB), s * c * v, modulus)
    for k, v in _pull_aw_blocks(U, modulus).items():
        _acc(out, k, v, modulus)
    return out


# -- tops and diagonals ---------------------------------------------------

def aw_top(degrees: tuple, labels: tuple | None = None) -> dict:
    """mu (c_1 (x) ... (x) c_n) Aw_n: consecutive windows of the given degrees."""
    labels = labels if labels is not None else tuple(range(len(degrees)))
    key, start = [], 0
    for lab, d in zip(labels, degrees):
        key.append((lab, tuple(range(start, start + d + 1))))
        start += d
    return {tuple(key): 1}


def on_diagonal(F: dict, modulus: int = 0) -> dict:
    """Restrict to Delta(x): every factor is x, so keys become sorted multisets."""
    out = {}
    for key, v in F.items():
        _acc(out, tuple(sorted(key)), v, modulus)
    return out


def evaluate(formula: dict, cochains: dict, x: tuple, modulus: int = 0) -> int:
    """Sum over formula terms of coef * prod c_label(x at window)."""
    tot = 0
    for key, coef in formula.items():
        v = coef
        for lab, w in key:
            v *= cochains[lab](tuple(x[p] for p in w))
            if not v:
                break
        tot += v
    return tot % modulus if modulus else tot


# -- cup_i ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _cup_formula(m: int, n: int, i: int) -> tuple:
    F = aw_top((m, n))
    deg = m + n
    for _ in range(i):
        F = pull_perm(F, (1, 0))
        deg -= 1
        F = pull_sh(F, deg, 1)
    return tuple(sorted(on_diagonal(F).items()))


def cup_formula(m: int, n: int, i: int) -> dict:
    """c (cup_i) c' on an (m+n-i)-simplex, as windows labelled 0 (for c) and 1 (for c')."""
    if i < 0:
        raise ValueError("cup index must be non-negative")
    if i > m or i > n:
        return {}
    return dict(_cup_formula(m, n, i))


def clear_caches() -> None:
    for f in (sh_template, emaw_template, em_maps, _cup_formula):
        f.cache_clear()
