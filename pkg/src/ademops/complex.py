"""Simplicial sets generated by ordered simplicial complexes.

A q-simplex is a non-decreasing tuple of ``q + 1`` vertex ids whose support
is a face of the complex.  Faces delete a position, degeneracies repeat one,
so the simplicial identities hold by construction.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Simplex = tuple  # non-decreasing tuple of ints


class ComplexError(ValueError):
    pass


def dim(s: Simplex) -> int:
    return len(s) - 1


def face(s: Simplex, i: int) -> Simplex:
    if not 0 <= i < len(s) or len(s) < 2:
        raise IndexError(f"face index {i} out of range for {s}")
    return s[:i] + s[i + 1:]


def degeneracy(s: Simplex, i: int) -> Simplex:
    if not 0 <= i < len(s):
        raise IndexError(f"degeneracy index {i} out of range for {s}")
    return s[:i + 1] + s[i:]


def is_degenerate(s: Simplex) -> bool:
    return any(s[p] == s[p + 1] for p in range(len(s) - 1))


def front_face(s: Simplex, k: int) -> Simplex:
    """``d_{k+1} ... d_n s``: the first k+1 vertices."""
    return s[:k + 1]


def back_face(s: Simplex, k: int) -> Simplex:
    """``d_0 ... d_{k-1} s``: vertices from position k on."""
    return s[k:]


class SimplicialSet:
    """Face-closed complex with a canonical (lexicographic) basis per dimension."""

    def __init__(self, maximal: Iterable[Sequence[int]], name: str = ""):
        maximal = [tuple(int(v) for v in m) for m in maximal]
        if not maximal:
            raise ComplexError("empty complex")
        for m in maximal:
            if not m:
                raise ComplexError("empty simplex")
            if any(v < 0 for v in m):
                raise ComplexError(f"negative vertex in {m}")
            if any(m[k] >= m[k + 1] for k in range(len(m) - 1)):
                raise ComplexError(f"simplex {m} is not strictly increasing")
        self.name = name
        # drop non-maximal entries so round-trips stay canonical
        faces = set()
        for m in maximal:
            for k in range(1, len(m) + 1):
                faces.update(combinations(m, k))
        self._faces = frozenset(faces)
        mset = set(maximal)
        self.maximal = tuple(sorted(
            m for m in mset
            if not any(len(o) > len(m) and set(m) <= set(o) for o in mset)
        ))

    @cached_property
    def dimension(self) -> int:
        return max(len(f) for f in self._faces) - 1

    @cached_property
    def _by_dim(self) -> list[list[Simplex]]:
        out = [[] for _ in range(self.dimension + 1)]
        for f in self._faces:
            out[len(f) - 1].append(f)
        for lst in out:
            lst.sort()
        return out

    @cached_property
    def _index(self) -> list[dict[Simplex, int]]:
        return [{s: k for k, s in enumerate(lst)} for lst in self._by_dim]

    def simplices(self, n: int) -> list[Simplex]:
        """Non-degenerate n-simplices in canonical order."""
        if n < 0 or n > self.dimension:
            return []
        return self._by_dim[n]

    def index(self, s: Simplex) -> int:
        return self._index[dim(s)][s]

    def count(self, n: int) -> int:
        return len(self.simplices(n))

    def counts(self) -> list[int]:
        return [self.count(n) for n in range(self.dimension + 1)]

    def contains(self, s: Simplex) -> bool:
        """True for any (possibly degenerate) simplex supported on the complex."""
        if any(s[k] > s[k + 1] for k in range(len(s) - 1)):
            return False
        return tuple(sorted(set(s))) in self._faces

    def __repr__(self):
        return f"SimplicialSet({self.name!r}, counts={self.counts()})"


def build_complex(maximal: Iterable[Sequence[int]], name: str = "") -> SimplicialSet:
    return SimplicialSet(maximal, name)


def standard_simplex(n: int) -> SimplicialSet:
    return SimplicialSet([tuple(range(n + 1))], f"Delta^{n}")


def simplex_boundary(n: int) -> SimplicialSet:
    """The boundary of the n-simplex, a triangulated (n-1)-sphere."""
    return SimplicialSet(combinations(range(n + 1), n), f"dDelta^{n}")


def product_complex(A: SimplicialSet, B: SimplicialSet, name: str = "") -> SimplicialSet:
    """Staircase triangulation of |A| x |B|; vertex (v, w) gets id v * nb + w.

    Each pair of maximal simplices contributes one top simplex per lattice
    path, so the vertex order stays compatible with both factors.
    """
    nb = max(v for s in B.maximal for v in s) + 1
    out = set()
    for s in A.maximal:
        for t in B.maximal:
            a, b = len(s) - 1, len(t) - 1
            for ups in combinations(range(a + b), a):
                up = set(ups)
                i = j = 0
                path = [s[0] * nb + t[0]]
                for k in range(a + b):
                    if k in up:
                        i += 1
                    else:
                        j += 1
                    path.append(s[i] * nb + t[j])
                out.add(tuple(path))
    return SimplicialSet(sorted(out), name or f"{A.name} x {B.name}")


# -- product simplices ----------------------------------------------------
# An element of K^{x n} is a tuple of n simplices of equal dimension.

def product_dim(ps: tuple) -> int:
    return len(ps[0]) - 1


def check_product(ps: tuple) -> None:
    if len({len(x) for x in ps}) != 1:
        raise ComplexError(f"factor dimensions differ in {ps}")


def product_face(ps: tuple, i: int) -> tuple:
    check_product(ps)
    return tuple(face(x, i) for x in ps)


def product_degeneracy(ps: tuple, i: int) -> tuple:
    check_product(ps)
    return tuple(degeneracy(x, i) for x in ps)


def product_is_degenerate(ps: tuple) -> bool:
    """Degenerate iff all factors repeat a vertex at a common position."""
    check_product(ps)
    first = ps[0]
    for p in range(len(first) - 1):
        if all(x[p] == x[p + 1] for x in ps):
            return True
    return False


def diag(x: Simplex, n: int = 2) -> tuple:
    return (x,) * n


# -- operator words -------------------------------------------------------
# A word is a tuple of ('d', i) / ('s', i) symbols read as a composite map:
# the rightmost symbol acts first.

def apply_word(word: Sequence[tuple[str, int]], s: Simplex) -> Simplex:
    for kind, i in reversed(word):
        s = face(s, i) if kind == "d" else degeneracy(s, i)
    return s


def word_shift(word: Sequence[tuple[str, int]]) -> int:
    """Net change in dimension produced by the word."""
    return sum(1 if kind == "s" else -1 for kind, _ in word)


def _rewrite(a: tuple[str, int], b: tuple[str, int]):
    """Rewrite the adjacent pair ``a b`` (a after b) or return None if already ordered."""
    (ka, i), (kb, j) = a, b
    if ka == "d" and kb == "d":
        if i >= j:
            return [("d", j), ("d", i + 1)]
        return None
    if ka == "s" and kb == "s":
        if i <= j:
            return [("s", j + 1), ("s", i)]
        return None
    if ka == "d" and kb == "s":
        if i < j:
            return [("s", j - 1), ("d", i)]
        if i in (j, j + 1):
            return []
        return [("s", j), ("d", i - 1)]
    return None  # s after d is already in order


def normalize_word(word: Sequence[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    """Put a face/degeneracy word in the form s_{j_t}..s_{j_1} d_{i_1}..d_{i_s}."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(w) - 1:
            repl = _rewrite(w[k], w[k + 1])
            if repl is None:
                k += 1
                continue
            w[k:k + 2] = repl
            changed = True
            k = max(k - 1, 0)
    return tuple(w)


def is_normal_form(word: Sequence[tuple[str, int]]) -> bool:
    kinds = [k for k, _ in word]
    n_s = kinds.count("s")
    if kinds != ["s"] * n_s + ["d"] * (len(kinds) - n_s):
        return False
    degs = [i for k, i in word if k == "s"]
    faces_ = [i for k, i in word if k == "d"]
    return (all(a > b for a, b in zip(degs, degs[1:]))
            and all(a < b for a, b in zip(faces_, faces_[1:])))
