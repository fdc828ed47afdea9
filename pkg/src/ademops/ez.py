"""Eilenberg-Zilber contraction (Aw, Em, Sh) and its 4-fold composite.

Elements of ``C(K^{x n})`` are dicts mapping product simplices (tuples of
vertex tuples) to integer coefficients.  Tensor chains map tuples of
*blocks* to coefficients, where each block is itself a product simplex; a
block of arity one is a plain simplex wrapped in a 1-tuple.

Pairs ``K^{x a} x K^{x b}`` are represented flat, with ``split = a`` marking
where the first factor ends.  All operators drop degenerate summands as they
go.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations



# -- small chain helpers --------------------------------------------------

def add_term(out: dict, key, coef: int) -> None:
    v = out.get(key, 0) + coef
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def add_chain(out: dict, chain: dict, scale: int = 1) -> dict:
    for k, v in chain.items():
        add_term(out, k, scale * v)
    return out


def reduce_mod(chain: dict, modulus: int) -> dict:
    if not modulus:
        return chain
    return {k: v % modulus for k, v in chain.items() if v % modulus}


def block_dim(block: tuple) -> int:
    return len(block[0]) - 1


def _degenerate(ms: tuple) -> bool:
    # unchecked variant of product_is_degenerate; operator outputs are well formed
    n = len(ms[0]) - 1
    if len(ms) == 1:
        x = ms[0]
        return any(x[p] == x[p + 1] for p in range(n))
    for p in range(n):
        for x in ms:
            if x[p] != x[p + 1]:
                break
        else:
            return True
    return False


def _faces(ms: tuple, idx) -> tuple:
    """Apply faces d_{idx[0]} ... d_{idx[-1]} (rightmost acts first)."""
    keep = list(range(len(ms[0])))
    for i in reversed(idx):
        del keep[i]
    return tuple(tuple(x[p] for p in keep) for x in ms)


def _degens(ms: tuple, idx) -> tuple:
    """Apply degeneracies s_{idx[0]} ... s_{idx[-1]} (rightmost acts first)."""
    pos = list(range(len(ms[0])))
    for i in reversed(idx):
        pos.insert(i, pos[i])
    return tuple(tuple(x[p] for p in pos) for x in ms)


# -- shuffles -------------------------------------------------------------

@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple:
    """All (p, q)-shuffles as ``(alpha, beta, signature)``, alpha in lex order."""
    out = []
    n = p + q
    for alpha in combinations(range(n), p):
        aset = set(alpha)
        beta = tuple(k for k in range(n) if k not in aset)
        sig = sum(a - k for k, a in enumerate(alpha))
        out.append((alpha, beta, sig))
    return tuple(out)


# -- the three operators --------------------------------------------------

def aw(ms: tuple, split: int = 1) -> dict:
    """Alexander-Whitney: sum over i of front_i(x) (x) back_i(y)."""
    m = len(ms[0]) - 1
    x, y = ms[:split], ms[split:]
    out = {}
    for i in range(m + 1):
        a = tuple(v[:i + 1] for v in x)
        b = tuple(v[i:] for v in y)
        if _degenerate(a) or _degenerate(b):
            continue
        out[(a, b)] = out.get((a, b), 0) + 1
    return out


@lru_cache(maxsize=None)
def _em_basis(a: tuple, b: tuple) -> tuple:
    p, q = block_dim(a), block_dim(b)
    out = {}
    for alpha, beta, sig in shuffles(p, q):
        # s_beta = s_{beta_q} ... s_{beta_1}: beta_1 acts first
        xa = _degens(a, beta[::-1])
        yb = _degens(b, alpha[::-1])
        ms = xa + yb
        if _degenerate(ms):
            continue
        add_term(out, ms, -1 if sig % 2 else 1)
    return tuple(out.items())


def em_basis(a: tuple, b: tuple) -> dict:
    return dict(_em_basis(a, b))


def em(tensor: dict) -> dict:
    """Eilenberg-Mac Lane shuffle map on a two-block tensor chain."""
    out = {}
    for (a, b), c in tensor.items():
        for ms, v in _em_basis(a, b):
            add_term(out, ms, c * v)
    return out


@lru_cache(maxsize=None)
def _sh_basis(ms: tuple, split: int, tilde: bool = False) -> tuple:
    m = len(ms[0]) - 1
    x, y = ms[:split], ms[split:]
    out = {}
    for q in range(0, m):
        for p in range(0, m - q):
            mbar = m - p - q
            # x: d_{m-q+1} ... d_m ; y: d_mbar ... d_{m-q-1}
            xf = _faces(x, tuple(range(m - q + 1, m + 1)))
            yf = _faces(y, tuple(range(mbar, m - q)))
            for alpha, beta, sig in shuffles(p + 1, q):
                if tilde and q and beta[-1] > alpha[0]:
                    continue
                # s_{beta_q+mbar} ... s_{beta_1+mbar} s_{mbar-1}
                bidx = tuple(b + mbar for b in beta[::-1]) + (mbar - 1,)
                aidx = tuple(a + mbar for a in alpha[::-1])
                res = _degens(xf, bidx) + _degens(yf, aidx)
                if _degenerate(res):
                    continue
                sg = mbar + sig + 1
                add_term(out, res, -1 if sg % 2 else 1)
    return tuple(out.items())


def sh_basis(ms: tuple, split: int = 1) -> dict:
    return dict(_sh_basis(ms, split))


def sh(chain: dict, split: int = 1) -> dict:
    """Shih homotopy on a chain of K^{x a} x K^{x b}."""
    out = {}
    for ms, c in chain.items():
        for r, v in _sh_basis(ms, split):
            add_term(out, r, c * v)
    return out


def sh_tilde(chain: dict, split: int = 1) -> dict:
    """Sh restricted to the summands whose shuffle puts all of beta before alpha."""
    out = {}
    for ms, c in chain.items():
        for r, v in _sh_basis(ms, split, True):
            add_term(out, r, c * v)
    return out


def aw_chain(chain: dict, split: int = 1) -> dict:
    out = {}
    for ms, c in chain.items():
        for k, v in aw(ms, split).items():
            add_term(out, k, c * v)
    return out


# -- differentials --------------------------------------------------------

def d_product(chain: dict) -> dict:
    out = {}
    for ms, c in chain.items():
        n = len(ms[0])
        if n < 2:
            continue
        for i in range(n):
            f = tuple(x[:i] + x[i + 1:] for x in ms)
            if not _degenerate(f):
                add_term(out, f, c if i % 2 == 0 else -c)
    return out


def d_tensor(tensor: dict) -> dict:
    """Differential on tensor chains with the Koszul sign."""
    out = {}
    for key, c in tensor.items():
        sign = 1
        for pos, block in enumerate(key):
            for f, v in d_product({block: 1}).items():
                add_term(out, key[:pos] + (f,) + key[pos + 1:], sign * c * v)
            if block_dim(block) % 2:
                sign = -sign
    return out


# -- permutations ---------------------------------------------------------

def permute(chain: dict, order: tuple) -> dict:
    """Reorder the factors of every product simplex: new[k] = old[order[k]]."""
    out = {}
    for ms, c in chain.items():
        add_term(out, tuple(ms[k] for k in order), c)
    return out


T2 = (1, 0)
T4 = (2, 3, 0, 1)        # t:      (x3, x4, x1, x2)
TT4 = (1, 0, 3, 2)       # t^{x2}: (x2, x1, x4, x3)
Z4 = (0, 2, 1, 3)        # z:      (x1, x3, x2, x4)


def perm_t(chain: dict) -> dict:
    n = len(next(iter(chain))) if chain else 4
    return permute(chain, T2 if n == 2 else T4)


def perm_t2(chain: dict) -> dict:
    return permute(chain, TT4)


def perm_z(chain: dict) -> dict:
    return permute(chain, Z4)


def permute_tensor(tensor: dict, order: tuple) -> dict:
    """Permute tensor blocks, with the Koszul sign of the permutation."""
    out = {}
    for key, c in tensor.items():
        degs = [block_dim(b) for b in key]
        sign = 0
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                if order[a] > order[b]:
                    sign += degs[order[a]] * degs[order[b]]
        add_term(out, tuple(key[k] for k in order), -c if sign % 2 else c)
    return out


def tensor_T(tensor: dict) -> dict:
    n = len(next(iter(tensor))) if tensor else 4
    return permute_tensor(tensor, T2 if n == 2 else T4)


def tensor_T2(tensor: dict) -> dict:
    return permute_tensor(tensor, TT4)


def tensor_z(tensor: dict) -> dict:
    return permute_tensor(tensor, Z4)


# -- tensor products of maps ----------------------------------------------

def tensor_map(tensor: dict, f, g, f_degree: int = 0, g_degree: int = 0) -> dict:
    """(f (x) g) on two-block tensors; f, g map a block to a dict of blocks.

    Koszul: (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b).
    """
    out = {}
    for (a, b), c in tensor.items():
        s = -c if (g_degree * block_dim(a)) % 2 else c
        fa = f(a)
        gb = g(b)
        for a2, u in fa.items():
            for b2, v in gb.items():
                add_term(out, (a2, b2), s * u * v)
    return out


def _ident(block):
    return {block: 1}


# -- 4-fold composites: K^{x4} = (K^{x2})^{x2} ----------------------------

def flatten_tensor(tensor: dict) -> dict:
    """Split every block into arity-one blocks."""
    out = {}
    for key, c in tensor.items():
        flat = tuple((x,) for block in key for x in block)
        add_term(out, flat, c)
    return out


def aw4(chain: dict) -> dict:
    """Aw_4 = (Aw (x) Aw) Aw, returned as a 4-block tensor of simplices."""
    out = {}
    for ms, c in chain.items():
        for (a, b), u in aw(ms, 2).items():
            for (a1, a2), v in aw(a, 1).items():
                for (b1, b2), w in aw(b, 1).items():
                    add_term(out, (a1, a2, b1, b2), c * u * v * w)
    return out


def em4(tensor: dict) -> dict:
    """Em_4 = Em (Em (x) Em) on a 4-block tensor of simplices."""
    out = {}
    for (y1, y2, y3, y4), c in tensor.items():
        left = _em_basis(y1, y2)
        right = _em_basis(y3, y4)
        for a, u in left:
            for b, v in right:
                for ms, w in _em_basis(a, b):
                    add_term(out, ms, c * u * v * w)
    return out


def _emaw_block(block: tuple) -> dict:
    return em(aw(block, 1))


def _sh_block(block: tuple) -> dict:
    return sh_basis(block, 1)


@lru_cache(maxsize=None)
def _sh4_basis(ms: tuple) -> tuple:
    out = dict(_sh_basis(ms, 2))
    pieces = aw(ms, 2)
    inner = tensor_map(pieces, _sh_block, _emaw_block, 1, 0)
    add_chain(inner, tensor_map(pieces, _ident, _sh_block, 0, 1))
    add_chain(out, em(inner))
    return tuple(out.items())


def sh4_basis(ms: tuple) -> dict:
    return dict(_sh4_basis(ms))


def sh4(chain: dict) -> dict:
    """Sh_4 = Sh + Em (Sh (x) Em Aw + 1 (x) Sh) Aw."""
    out = {}
    for ms, c in chain.items():
        for r, v in _sh4_basis(ms):
            add_term(out, r, c * v)
    return out


def clear_caches() -> None:
    for f in (_em_basis, _sh_basis, _sh4_basis, shuffles):
        f.cache_clear()
