"""Homology, the contraction (f, g, phi) of C(K) onto H(K), and Adem's Psi_q.

The contraction is built by eliminating unit pivots of the boundary one at a
time.  Each elimination of a pair (sigma, tau) with <d sigma, tau> = lam a
unit is itself a contraction:

    f(tau)   = -lam^-1 (d sigma - lam tau),   f(sigma) = 0
    g(x)     = x - <dx, tau> lam^-1 sigma     (x of the degree of sigma)
    phi(y)   = -<y, tau> lam^-1 sigma

and the steps compose.  Only the pivot data is stored; f, g and phi and their
duals are applied on demand by replaying the steps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .adem import adem_E_cochain
from .algebra import Cochain, Ring, Z, boundary_matrix, coboundary, ring_of, zero_cochain
from .complex import SimplicialSet
from .cup import cup0_faces, cup_i


class TorsionError(ArithmeticError):
    def __init__(self, degree: int, coefficient: int):
        self.degree, self.coefficient = degree, coefficient
        super().__init__(f"torsion Z/{coefficient} in degree {degree}")


class ContractionError(ArithmeticError):
    pass


class ConsistencyError(AssertionError):
    """An internal identity that must hold did not."""


# -- Smith normal form ----------------------------------------------------

def _identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A: list, modulus: int = 0):
    """Return (S, U, V) with U A V = S diagonal, each entry dividing the next."""
    m = len(A)
    n = len(A[0]) if m else 0
    red = (lambda a: a % modulus) if modulus else (lambda a: a)
    S = [[red(a) for a in row] for row in A]
    U, V = _identity(m), _identity(n)

    def row_op(i, j, q):  # row_i -= q row_j
        S[i] = [red(a - q * b) for a, b in zip(S[i], S[j])]
        U[i] = [red(a - q * b) for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q col_j
        for row in S:
            row[i] = red(row[i] - q * row[j])
        for row in V:
            row[i] = red(row[i] - q * row[j])

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
                    if abs(S[i][j]) == 1:
                        break
            if best and abs(S[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = 1 if modulus else S[i][t] // S[t][t]
                    row_op(i, t, q)
                    if S[i][t]:
                        swap_rows(i, t)
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = 1 if modulus else S[t][j] // S[t][t]
                    col_op(j, t, q)
                    if S[t][j]:
                        swap_cols(j, t)
                        clean = False
            if not clean:
                continue
            p = S[t][t]
            bad = next((i for i in range(t + 1, m)
                        if any(S[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            row_op(t, bad, -1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return S, U, V


def diagonal(S: list) -> list:
    return [S[k][k] for k in range(min(len(S), len(S[0]) if S else 0)) if S[k][k]]


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple = ()

    def __str__(self):
        parts = [f"Z^{self.betti}"] if self.betti else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def homology_snf(K: SimplicialSet, ring=Z) -> list[HomologyGroup]:
    """Homology from the Smith normal forms of the full boundary matrices."""
    ring = ring_of(ring)
    top = K.dimension
    ranks, tors = {}, {}
    for n in range(1, top + 1):
        d = diagonal(smith_normal_form(boundary_matrix(K, n, ring), ring.modulus)[0])
        ranks[n] = len(d)
        tors[n - 1] = tuple(a for a in d if a > 1)
    out = []
    for n in range(top + 1):
        b = K.count(n) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        out.append(HomologyGroup(b, tors.get(n, ())))
    return out


# -- the contraction ------------------------------------------------------

@dataclass
class Step:
    n: int            # degree of sigma
    sigma: tuple
    tau: tuple
    linv: int         # inverse of <d sigma, tau>
    col: dict         # d sigma without its tau entry
    row: dict         # <d x, tau> for the other live x of degree n


@dataclass
class Contraction:
    complex: SimplicialSet
    ring: Ring
    critical: dict                  # degree -> homology basis cells, canonical order
    steps: list
    residual: dict = field(default_factory=dict)   # leftover boundary (non-unit entries)
    _gcache: dict = field(default_factory=dict, repr=False)

    # -- bookkeeping
    def rank(self, n: int) -> int:
        return len(self.critical.get(n, ()))

    def betti(self) -> list[int]:
        return [self.rank(n) for n in range(self.complex.dimension + 1)]

    def _steps(self, *degrees) -> list:
        return [s for s in self.steps if s.n in degrees]

    def _red(self, a: int) -> int:
        return self.ring.reduce(a)

    # -- chain level
    def f(self, chain: dict, n: int) -> list[int]:
        """Coordinates of f(chain) in the homology basis of degree n."""
        ch = dict(chain)
        for s in self._steps(n, n + 1):
            if s.n == n:
                ch.pop(s.sigma, None)
            elif s.tau in ch:
                a = ch.pop(s.tau)
                for y, v in s.col.items():
                    ch[y] = self._red(ch.get(y, 0) - a * s.linv * v)
        return [self._red(ch.get(h, 0)) for h in self.critical.get(n, ())]

    def g(self, n: int, k: int) -> dict:
        """The cycle representing the k-th homology generator in degree n."""
        key = (n, k)
        if key not in self._gcache:
            ch = {self.critical[n][k]: 1}
            self._gcache[key] = self._lift(ch, n)
        return dict(self._gcache[key])

    def _lift(self, ch: dict, n: int, upto: int | None = None) -> dict:
        """Apply g_1 ... g_j (the first ``upto`` steps) to a chain of degree n."""
        steps = self.steps if upto is None else self.steps[:upto]
        for s in reversed(steps):
            if s.n != n:
                continue
            a = self._red(sum(v * s.row.get(x, 0) for x, v in ch.items()))
            if a:
                v = self._red(ch.get(s.sigma, 0) - a * s.linv)
                if v:
                    ch[s.sigma] = v
                else:
                    ch.pop(s.sigma, None)
        return {x: v for x, v in ch.items() if v}

    def phi(self, chain: dict, n: int) -> dict:
        """phi on a chain of degree n; the result has degree n + 1."""
        ch = dict(chain)
        out = {}
        for idx, s in enumerate(self.steps):
            if s.n == n:
                ch.pop(s.sigma, None)
            elif s.n == n + 1 and s.tau in ch:
                a = ch.pop(s.tau)
                for y, v in s.col.items():
                    ch[y] = self._red(ch.get(y, 0) - a * s.linv * v)
                lifted = self._lift({s.sigma: 1}, n + 1, idx)
                for x, v in lifted.items():
                    out[x] = self._red(out.get(x, 0) - a * s.linv * v)
        return {x: v for x, v in out.items() if v}

    # -- cochain level (the dual contraction)
    def project(self, u: Cochain) -> list[int]:
        """f*: the class of a cocycle, as values on the homology generators."""
        n = u.degree
        return [u.ring.reduce(sum(v * u(x) for x, v in self.g(n, k).items()))
                for k in range(self.rank(n))]

    def include(self, coords, n: int, ring: Ring | None = None) -> Cochain:
        """g*: the cocycle x -> sum_k coords[k] <f(x), h_k>."""
        ring = ring or self.ring
        acc = {h: a for h, a in zip(self.critical.get(n, ()), coords) if a}
        for s in reversed(self._steps(n + 1)):
            t = sum(v * acc.get(y, 0) for y, v in s.col.items())
            if t:
                acc[s.tau] = self._red(-s.linv * t)
        K = self.complex
        return Cochain(K, n, tuple(ring.reduce(acc.get(x, 0)) for x in K.simplices(n)), ring)

    def phi_dual(self, u: Cochain) -> Cochain:
        """phi*: degree k -> k - 1, signed so that d phi* + phi* d = 1 - g* f*."""
        k = u.degree
        K = self.complex
        ring = u.ring
        steps = self._steps(k)
        v = {x: a for x, a in zip(K.simplices(k), u.values) if a}
        svals = []
        for s in steps:
            a = v.get(s.sigma, 0)
            svals.append(a)
            if a:
                for x, r in s.row.items():
                    v[x] = ring.reduce(v.get(x, 0) - r * s.linv * a)
        acc = {}
        for s, a in zip(reversed(steps), reversed(svals)):
            t = sum(c * acc.get(y, 0) for y, c in s.col.items())
            val = -s.linv * (t + a)
            if val:
                acc[s.tau] = val
        sign = -1 if (k + 1) % 2 else 1
        return Cochain(K, k - 1, tuple(ring.reduce(sign * acc.get(x, 0)) for x in K.simplices(k - 1)),
                       ring)

    # aliases in the f*, g*, phi* naming of the dual contraction
    f_star = project
    g_star = include
    phi_star = phi_dual

    # -- dense matrices, for checking the identities on small complexes
    def matrices(self, n: int) -> dict:
        K = self.complex
        cells = K.simplices(n)
        f = [[0] * len(cells) for _ in range(self.rank(n))]
        for j, x in enumerate(cells):
            for i, a in enumerate(self.f({x: 1}, n)):
                f[i][j] = a
        g = [[0] * self.rank(n) for _ in cells]
        for k in range(self.rank(n)):
            for x, a in self.g(n, k).items():
                g[K.index(x)][k] = a
        up = K.simplices(n + 1)
        phi = [[0] * len(cells) for _ in up]
        for j, x in enumerate(cells):
            for y, a in self.phi({x: 1}, n).items():
                phi[K.index(y)][j] = a
        return {"f": f, "g": g, "phi": phi}


def _matmul(A: list, B: list, inner: int, red) -> list:
    rows, cols = len(A), len(B[0]) if B else 0
    return [[red(sum(A[i][k] * B[k][j] for k in range(inner) if A[i][k])) for j in range(cols)]
            for i in range(rows)]


def identity_defects(r: Contraction) -> dict:
    """Number of wrong matrix entries in each contraction identity, over all degrees.

    fg = 1, phi d + d phi = g f - 1, phi g = 0, f phi = 0, phi phi = 0.
    """
    K, red = r.complex, r.ring.reduce
    top = K.dimension
    mats = {n: r.matrices(n) for n in range(top + 1)}
    dm = {n: boundary_matrix(K, n, r.ring) for n in range(1, top + 1)}
    bad = {"fg": 0, "homotopy": 0, "phi g": 0, "f phi": 0, "phi phi": 0}
    for n in range(top + 1):
        c, h = K.count(n), r.rank(n)
        f, g, phi = mats[n]["f"], mats[n]["g"], mats[n]["phi"]
        fg = _matmul(f, g, c, red)
        bad["fg"] += sum(1 for i in range(h) for j in range(h) if fg[i][j] != (i == j))
        gf = _matmul(g, f, h, red) if h else [[0] * c for _ in range(c)]
        lhs = [[0] * c for _ in range(c)]
        if n >= 1:  # phi_{n-1} d_n
            pd = _matmul(mats[n - 1]["phi"], dm[n], K.count(n - 1), red)
            lhs = [[red(a + b) for a, b in zip(x, y)] for x, y in zip(lhs, pd)]
        if n < top:  # d_{n+1} phi_n
            dp = _matmul(dm[n + 1], phi, K.count(n + 1), red)
            lhs = [[red(a + b) for a, b in zip(x, y)] for x, y in zip(lhs, dp)]
        bad["homotopy"] += sum(1 for i in range(c) for j in range(c)
                               if lhs[i][j] != red(gf[i][j] - (i == j)))
        if n < top:
            bad["phi g"] += sum(1 for row in _matmul(phi, g, c, red) for a in row if a)
            bad["f phi"] += sum(1 for row in _matmul(mats[n + 1]["f"], phi, K.count(n + 1), red)
                                for a in row if a)
        if n + 1 < top:
            bad["phi phi"] += sum(1 for row in _matmul(mats[n + 1]["phi"], phi, K.count(n + 1), red)
                                  for a in row if a)
    return bad


def contraction(K: SimplicialSet, ring=Z, strict: bool = True) -> Contraction:
    """Reduce C(K) onto its homology by eliminating unit pivots.

    Over Z this needs torsion-free homology; torsion raises TorsionError.
    With ``strict=False`` the partial reduction is returned instead, with the
    leftover differential in ``residual``.
    """
    ring = ring_of(ring)
    red = ring.reduce
    top = K.dimension
    bd, cob = {}, {}
    for n in range(top + 1):
        for s in K.simplices(n):
            cob[s] = {}
    for n in range(1, top + 1):
        for s in K.simplices(n):
            col = {}
            for i in range(len(s)):
                f = s[:i] + s[i + 1:]
                col[f] = red(col.get(f, 0) + (1 if i % 2 == 0 else -1))
            col = {f: v for f, v in col.items() if v}
            bd[s] = col
            for f, v in col.items():
                cob[f][s] = v
    for s in K.simplices(0):
        bd[s] = {}
    alive = {s for n in range(top + 1) for s in K.simplices(n)}
    order = {s: (len(s), K.index(s)) for s in alive}
    steps = []

    def eliminate(n, sigma, tau):
        lam = bd[sigma][tau]
        linv = lam  # units of Z and Z/2 are their own inverses
        col = {y: v for y, v in bd[sigma].items() if y != tau}
        row = {x: v for x, v in cob[tau].items() if x != sigma}
        for x, r in row.items():
            q = r * linv
            bx = bd[x]
            for y, v in bd[sigma].items():
                nv = red(bx.get(y, 0) - q * v)
                if nv:
                    bx[y] = nv
                    cob[y][x] = nv
                else:
                    bx.pop(y, None)
                    cob[y].pop(x, None)
        for u in list(cob[sigma]):
            bd[u].pop(sigma, None)
        for y in bd[sigma]:
            cob[y].pop(sigma, None)
        for y in bd[tau]:
            cob[y].pop(tau, None)
        for u in cob[tau]:
            bd[u].pop(tau, None)
        for c in (sigma, tau):
            alive.discard(c)
            bd.pop(c)
            cob.pop(c)
        steps.append(Step(n, sigma, tau, linv, col, row))

    changed = True
    while changed:
        changed = False
        for n in range(top, 0, -1):
            for sigma in K.simplices(n):
                if sigma not in alive:
                    continue
                units = [y for y, v in bd[sigma].items() if ring.is_unit(v)]
                if units:
                    eliminate(n, sigma, min(units, key=order.__getitem__))
                    changed = True
    critical = {n: [s for s in K.simplices(n) if s in alive] for n in range(top + 1)}
    residual = {s: dict(bd[s]) for s in alive if bd[s]}
    r = Contraction(K, ring, critical, steps, residual)
    if residual and strict:
        _diagnose_residual(r)
    return r


def _residual_matrix(r: Contraction, n: int) -> list:
    rows, cols = r.critical.get(n - 1, []), r.critical.get(n, [])
    ri = {s: k for k, s in enumerate(rows)}
    A = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for y, v in r.residual.get(s, {}).items():
            A[ri[y]][j] = v
    return A


def _diagnose_residual(r: Contraction) -> None:
    for n in range(1, r.complex.dimension + 1):
        A = _residual_matrix(r, n)
        if not A or not A[0]:
            continue
        for a in diagonal(smith_normal_form(A, r.ring.modulus)[0]):
            if a > 1:
                raise TorsionError(n - 1, a)
    raise ContractionError("elimination stalled without a unit pivot")


def homology(K: SimplicialSet, ring=Z) -> list[HomologyGroup]:
    """Betti numbers and torsion: unit-pivot reduction, then SNF of what is left."""
    ring = ring_of(ring)
    r = contraction(K, ring, strict=False)
    top = K.dimension
    ranks, tors = {}, {}
    for n in range(1, top + 1):
        A = _residual_matrix(r, n)
        d = diagonal(smith_normal_form(A, ring.modulus)[0]) if A and A[0] else []
        ranks[n] = len(d)
        tors[n - 1] = tuple(a for a in d if a > 1)
    return [HomologyGroup(r.rank(n) - ranks.get(n, 0) - ranks.get(n + 1, 0), tors.get(n, ()))
            for n in range(top + 1)]


# -- Steenrod squares on cohomology -----------------------------------------

def sq_matrix(r: Contraction, q: int, i: int) -> list[list[int]]:
    """Matrix of Sq^i: H^q -> H^{q+i} with Z/2 entries (columns = generators of H^q)."""
    cols = []
    for k in range(r.rank(q)):
        e = [1 if j == k else 0 for j in range(r.rank(q))]
        c = r.include(e, q)
        if i > q:
            cols.append([0] * r.rank(q + i))
            continue
        s = cup_i(c.mod2(), c.mod2(), q - i)
        cols.append([a % 2 for a in r.project(s)])
    rows = r.rank(q + i)
    return [[cols[k][j] for k in range(len(cols))] for j in range(rows)]


def sq2_matrix(K: SimplicialSet, q: int, r: Contraction | None = None) -> list[list[int]]:
    """Sq^2: H^q(K; Z) -> H^{q+2}(K; Z/2) through integral generators."""
    if q < 2:
        raise ValueError("Sq^2 through cup_{q-2} needs q >= 2")
    r = r or contraction(K, Z)
    return sq_matrix(r, q, 2)


def cup_matrix(r: Contraction, p: int, q: int) -> list[list[list[int]]]:
    """[j][k] -> class of alpha_j u alpha_k in H^{p+q}, from front/back faces."""
    gp = [r.include([1 if a == j else 0 for a in range(r.rank(p))], p) for j in range(r.rank(p))]
    gq = [r.include([1 if a == k else 0 for a in range(r.rank(q))], q) for k in range(r.rank(q))]
    return [[[a % 2 for a in r.project(cup0_faces(a_.mod2(), b_.mod2()))] for b_ in gq] for a_ in gp]


# -- linear algebra over Z/2 ------------------------------------------------

def kernel_generators(M: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of the kernel of M over Z/2, by Gauss-Jordan elimination."""
    ncols = ncols if ncols is not None else (len(M[0]) if M else 0)
    A = [[a % 2 for a in row] for row in M]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                A[i] = [(a + b) % 2 for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = A[i][fcol]
        basis.append(v)
    return basis


def column_space(cols: list[list[int]]) -> list[list[int]]:
    """Reduced basis of the span of the given mod-2 vectors."""
    basis = []
    for v in cols:
        v = [a % 2 for a in v]
        for b in basis:
            lead = b.index(1)
            if v[lead]:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        if any(v):
            lead = v.index(1)
            basis = [[(x + y) % 2 for x, y in zip(b, v)] if b[lead] else b for b in basis]
            basis.append(v)
    return sorted(basis, key=lambda b: b.index(1))


# -- Algorithm for Psi_q -----------------------------------------------------

@dataclass
class AdemResult:
    q: int
    i: int
    h_q: int                  # rank of H^q(K; Z)
    h_target: int             # rank of H^{q+3}(K; Z), the Z/2 dimension of the target
    sq2: list                 # Sq^2 matrix
    kernel: list              # beta_j
    values: list              # f*(w_j) mod 2
    indeterminacy: list       # basis of Sq^2 H^{q+1}(K; Z)
    w_cocycle: list           # delta w_j == 0 mod 2, per j

    @property
    def w_ok(self) -> bool:
        return all(self.w_cocycle)


def _half(c: Cochain) -> Cochain:
    if any(a % 2 for a in c.values):
        raise ConsistencyError("eta: c u_{i+2} c + c has an odd entry")
    return Cochain(c.complex, c.degree, tuple(a // 2 for a in c.values), c.ring)


def _cup_or_zero(a: Cochain, b: Cochain, k: int) -> Cochain:
    if k < 0:
        return zero_cochain(a.complex, a.degree + b.degree - k, a.ring)
    return cup_i(a, b, k)


def psi_cochain(r: Contraction, c: Cochain, q: int):
    """w for one integral q-cocycle c with Sq^2 [c] = 0; returns (w, delta w == 0 mod 2)."""
    i = q - 2
    if not coboundary(c).is_zero():
        raise ConsistencyError("c is not an integral cocycle")
    cc = cup_i(c, c, i)
    cc2 = cc.mod2()
    if not coboundary(cc2).is_zero():
        raise ConsistencyError("c u_i c is not a mod-2 cocycle")
    if any(a % 2 for a in r.project(cc)):
        raise ConsistencyError("c u_i c is not a mod-2 coboundary")
    b = r.phi_dual(cc).mod2()
    if coboundary(b) != cc2:
        raise ConsistencyError("delta b != c u_i c mod 2")
    eta = _half(cup_i(c, c, i + 2) + c)
    w = cup_i(b, b, i + 1) + cup_i(b, coboundary(b), i + 2)
    w = w + adem_E_cochain(i, c)
    e2 = eta.mod2()
    w = w + _cup_or_zero(e2, e2, i - 1).mod2() + cup_i(e2, coboundary(eta).mod2(), i)
    return w, coboundary(w).is_zero()


def psi(K: SimplicialSet, q: int, r: Contraction | None = None) -> AdemResult:
    """Adem's secondary operation Psi_q on Ker Sq^2 in H^q(K; Z)."""
    if q < 2:
        raise ValueError("Psi_q needs q >= 2")
    r = r or contraction(K, Z)
    i = q - 2
    p = r.rank(q)
    M = sq2_matrix(K, q, r)
    kernel = kernel_generators(M, p) if p else []
    values, oks = [], []
    for beta in kernel:
        c = r.include(beta, q, Z)
        w, ok = psi_cochain(r, c, q)
        oks.append(ok)
        values.append([a % 2 for a in r.project(w)])
    ind = column_space([list(col) for col in zip(*sq_matrix(r, q + 1, 2))]) if r.rank(q + 1) else []
    return AdemResult(q, i, p, r.rank(q + 3), M, kernel, values, ind, oks)
