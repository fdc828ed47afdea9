"""Exact graded linear algebra: normalized chains and dense cochains over Z or Z/2."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .complex import SimplicialSet, dim, is_degenerate


@dataclass(frozen=True)
class Ring:
    """Z (modulus 0) or Z/2 (modulus 2)."""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus not in (0, 2):
            raise ValueError("only Z and Z/2 are supported")

    @property
    def name(self) -> str:
        return "Z/2" if self.modulus else "Z"

    def reduce(self, a: int) -> int:
        return a % self.modulus if self.modulus else a

    def add(self, a: int, b: int) -> int:
        return self.reduce(a + b)

    def neg(self, a: int) -> int:
        return self.reduce(-a)

    def mul(self, a: int, b: int) -> int:
        return self.reduce(a * b)

    zero = 0
    one = 1

    def is_unit(self, a: int) -> bool:
        a = self.reduce(a)
        return a in (1, -1) if not self.modulus else a == 1


Z = Ring(0)
Z2 = Ring(2)


def ring_of(tag) -> Ring:
    if isinstance(tag, Ring):
        return tag
    tag = str(tag).lower()
    if tag in ("z", "0", "int", "integers"):
        return Z
    if tag in ("z2", "z/2", "2", "mod2"):
        return Z2
    raise ValueError(f"unknown ring {tag!r}")


class RingMismatch(ValueError):
    pass


# -- chains ---------------------------------------------------------------
# A chain is a dict {simplex: nonzero coefficient}; degenerate simplices
# never appear (normalized complex).

def chain(terms, ring: Ring = Z) -> dict:
    out = {}
    for s, c in terms:
        if is_degenerate(s):
            continue
        v = ring.reduce(out.get(s, 0) + c)
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def boundary(ch: dict, ring: Ring = Z) -> dict:
    """d = sum (-1)^i d_i, dropping degenerate faces."""
    out = {}
    for s, c in ch.items():
        if len(s) < 2:
            continue
        for i in range(len(s)):
            f = s[:i] + s[i + 1:]
            if is_degenerate(f):
                continue
            v = ring.reduce(out.get(f, 0) + (c if i % 2 == 0 else -c))
            if v:
                out[f] = v
            else:
                out.pop(f, None)
    return out


# -- cochains -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Cochain:
    """Dense n-cochain over the canonical basis of non-degenerate n-simplices."""

    complex: SimplicialSet
    degree: int
    values: tuple
    ring: Ring = Z

    def __post_init__(self):
        if len(self.values) != self.complex.count(self.degree):
            raise ValueError("cochain length does not match the simplex count")

    def __call__(self, s) -> int:
        if len(s) != self.degree + 1 or is_degenerate(s):
            return 0
        idx = self.complex._index[self.degree].get(s)
        return 0 if idx is None else self.values[idx]

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.complex is self.complex
                and other.degree == self.degree and other.ring == self.ring
                and other.values == self.values)

    def __hash__(self):
        return hash((self.degree, self.values, self.ring))

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        r = self.ring
        return Cochain(self.complex, self.degree,
                       tuple(r.reduce(a + b) for a, b in zip(self.values, other.values)), r)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, k: int) -> "Cochain":
        r = self.ring
        return Cochain(self.complex, self.degree, tuple(r.reduce(k * a) for a in self.values), r)

    def mod2(self) -> "Cochain":
        return Cochain(self.complex, self.degree, tuple(a % 2 for a in self.values), Z2)

    def is_zero(self) -> bool:
        return not any(self.values)

    def support(self) -> list:
        basis = self.complex.simplices(self.degree)
        return [(basis[k], v) for k, v in enumerate(self.values) if v]

    def __repr__(self):
        return f"Cochain(deg={self.degree}, ring={self.ring.name}, nnz={sum(1 for v in self.values if v)})"


def _check_compatible(a: Cochain, b: Cochain) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring.name} vs {b.ring.name}")
    if a.complex is not b.complex or a.degree != b.degree:
        raise ValueError("cochains live on different complexes or degrees")


def zero_cochain(K: SimplicialSet, n: int, ring: Ring = Z) -> Cochain:
    return Cochain(K, n, (0,) * K.count(n), ring)


def cochain_from(K: SimplicialSet, n: int, f, ring: Ring = Z) -> Cochain:
    """Tabulate ``f(simplex)`` over the canonical n-simplex basis."""
    return Cochain(K, n, tuple(ring.reduce(f(s)) for s in K.simplices(n)), ring)


def indicator(K: SimplicialSet, s, ring: Ring = Z) -> Cochain:
    n = dim(s)
    vals = [0] * K.count(n)
    vals[K.index(s)] = 1
    return Cochain(K, n, tuple(vals), ring)


def constant(K: SimplicialSet, n: int, value: int = 1, ring: Ring = Z) -> Cochain:
    return Cochain(K, n, tuple(ring.reduce(value) for _ in range(K.count(n))), ring)


def coboundary(c: Cochain) -> Cochain:
    """(delta c)(y) = (-1)^{n+1} c(d y)."""
    n = c.degree
    sign = -1 if (n + 1) % 2 else 1
    r = c.ring
    vals = []
    for y in c.complex.simplices(n + 1):
        tot = 0
        for i in range(len(y)):
            v = c(y[:i] + y[i + 1:])
            tot += v if i % 2 == 0 else -v
        vals.append(r.reduce(sign * tot))
    return Cochain(c.complex, n + 1, tuple(vals), r)


def evaluate(c: Cochain, ch: dict) -> int:
    return c.ring.reduce(sum(coef * c(s) for s, coef in ch.items()))


def tensor_eval(cochains: Sequence[Cochain], tensor: dict) -> int:
    """mu (c_1 (x) ... (x) c_k) on a tensor chain of plain simplices.

    Tensor keys are tuples of simplices, or tuples of 1-blocks as produced by
    the Eilenberg-Zilber operators.  Summands whose factor degrees do not
    match contribute zero.
    """
    ring = cochains[0].ring
    for c in cochains[1:]:
        if c.ring != ring:
            raise RingMismatch("tensor_eval needs cochains over one ring")
    tot = 0
    for key, coef in tensor.items():
        v = coef
        for c, s in zip(cochains, key):
            if isinstance(s[0], tuple):
                s = s[0]
            v *= c(s)
            if not v:
                break
        tot += v
    return ring.reduce(tot)


# -- matrices -------------------------------------------------------------

def boundary_matrix(K: SimplicialSet, n: int, ring: Ring = Z) -> list[list[int]]:
    """Rows: (n-1)-simplices, columns: n-simplices."""
    rows, cols = K.simplices(n - 1), K.simplices(n)
    A = [[0] * len(cols) for _ in rows]
    if n < 1:
        return A
    for j, s in enumerate(cols):
        for i in range(len(s)):
            A[K.index(s[:i] + s[i + 1:])][j] += ring.reduce(1 if i % 2 == 0 else -1)
    return A


def coboundary_matrix(K: SimplicialSet, n: int, ring: Ring = Z) -> list[list[int]]:
    """Matrix of delta^n: rows (n+1)-simplices, columns n-simplices."""
    sign = -1 if (n + 1) % 2 else 1
    B = boundary_matrix(K, n + 1, ring)
    return [[ring.reduce(sign * B[i][j]) for i in range(len(B))] for j in range(len(B[0]) if B else 0)] \
        if B else []


def integer_kernel(A: list[list[int]], ncols: int, modulus: int = 0) -> list[list[int]]:
    """Basis of {x : A x = 0} over Z (modulus 0) or Z/2, by exact column elimination.

    Column operations are unimodular, so over Z the returned vectors span the
    full integer kernel, not just a finite-index sublattice.
    """
    def red(a):
        return a % modulus if modulus else a

    m = len(A)
    cols = [[red(A[i][j]) for i in range(m)] for j in range(ncols)]
    V = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    pivot_row = 0
    active = list(range(ncols))
    for r in range(m):
        while True:
            nz = [j for j in active if cols[j][r]]
            if len(nz) <= 1:
                break
            # smallest |entry| column reduces the others (Euclid)
            p = min(nz, key=lambda j: (abs(cols[j][r]), j))
            for j in nz:
                if j == p:
                    continue
                q = cols[j][r] // cols[p][r] if not modulus else 1
                cols[j] = [red(a - q * b) for a, b in zip(cols[j], cols[p])]
                V[j] = [red(a - q * b) for a, b in zip(V[j], V[p])]
        nz = [j for j in active if cols[j][r]]
        if nz:
            active.remove(nz[0])
            pivot_row += 1
    return [V[j] for j in active]


def cocycle_basis(K: SimplicialSet, n: int, ring: Ring = Z) -> list[list[int]]:
    if K.count(n) == 0:
        return []
    M = coboundary_matrix(K, n, ring)
    return integer_kernel(M, K.count(n), ring.modulus)


def random_cocycle(K: SimplicialSet, n: int, ring: Ring = Z, seed=None,
                   spread: int = 2, basis: list | None = None) -> Cochain:
    """Random element of Ker delta^n from a seeded combination of a kernel basis.

    Over Z/2 the combination is uniform on the kernel; over Z the coefficients
    are uniform in [-spread, spread].
    """
    rng = random.Random(seed)
    if basis is None:
        basis = cocycle_basis(K, n, ring)
    vals = [0] * K.count(n)
    for vec in basis:
        k = rng.randint(0, 1) if ring.modulus else rng.randint(-spread, spread)
        if k:
            vals = [a + k * b for a, b in zip(vals, vec)]
    return Cochain(K, n, tuple(ring.reduce(v) for v in vals), ring)


def random_cochain(K: SimplicialSet, n: int, ring: Ring = Z, seed=None, spread: int = 3) -> Cochain:
    rng = random.Random(seed)
    if ring.modulus:
        vals = tuple(rng.randint(0, 1) for _ in range(K.count(n)))
    else:
        vals = tuple(rng.randint(-spread, spread) for _ in range(K.count(n)))
    return Cochain(K, n, vals, ring)
