"""Independent reference computations used only by the tests.

Nothing here calls into the package's linear algebra: ranks come from
rational or bitwise elimination written out separately.
"""
from fractions import Fraction
from itertools import combinations


def faces_of(maximal):
    out = set()
    for m in maximal:
        for k in range(1, len(m) + 1):
            out.update(combinations(m, k))
    by_dim = {}
    for f in out:
        by_dim.setdefault(len(f) - 1, []).append(f)
    return {d: sorted(v) for d, v in by_dim.items()}


def boundary_rows(cells, faces):
    index = {f: k for k, f in enumerate(faces)}
    rows = []
    for s in cells:
        row = [0] * len(faces)
        for i in range(len(s)):
            row[index[s[:i] + s[i + 1:]]] += (-1) ** i
        rows.append(row)
    return rows


def rank_q(rows):
    """Rank over Q by fraction-exact elimination."""
    M = [[Fraction(a) for a in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        p = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if p is None:
            col += 1
            continue
        M[rank], M[p] = M[p], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][col]:
                t = M[i][col] / M[rank][col]
                M[i] = [a - t * b for a, b in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def rank_2(rows):
    """Rank over Z/2 with rows packed into ints."""
    basis = {}
    for r in rows:
        v = sum(1 << k for k, a in enumerate(r) if a % 2)
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def betti(maximal, mod2=False):
    cells = faces_of(maximal)
    top = max(cells)
    rk = rank_2 if mod2 else rank_q
    ranks = {n: rk(boundary_rows(cells[n], cells[n - 1])) for n in range(1, top + 1)}
    return [len(cells[n]) - ranks.get(n, 0) - ranks.get(n + 1, 0) for n in range(top + 1)]
