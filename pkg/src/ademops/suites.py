"""Property suites behind ``ademops check``.

Each suite runs a fixed, desk-scale family of exact checks and returns a
``SuiteReport`` with per-check counts.  ``seed`` and ``samples`` only affect
the randomly sampled parts; exhaustive parts ignore them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .adem import adem_E_cochain, adem_relation_residual, e3_normalized_cochain
from .algebra import Z, Z2, cocycle_basis, constant, random_cochain, random_cocycle
from .complex import (apply_word, is_degenerate, is_normal_form, normalize_word,
                      product_is_degenerate, simplex_boundary, standard_simplex)
from .cup import cup_i, eq1_residual
from .ez import (T2, T4, TT4, Z4, add_chain, add_term, aw, aw4, aw_chain, d_product,
                 d_tensor, em, em4, permute, permute_tensor, sh, sh4, sh_basis,
                 sh_tilde, tensor_map)

SUITES = ("ez", "eq1", "adem", "e3", "appendix", "words")
DEFAULT_SAMPLES = {"ez": 0, "eq1": 50, "adem": 20, "e3": 20, "appendix": 10, "words": 1000}


@dataclass
class Check:
    name: str
    total: int = 0
    failures: int = 0

    def record(self, ok: bool) -> None:
        self.total += 1
        if not ok:
            self.failures += 1


@dataclass
class SuiteReport:
    suite: str
    seed: int
    samples: int
    checks: list = field(default_factory=list)

    def check(self, name: str) -> Check:
        """The named check, created on first use."""
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        # a check that never ran proves nothing
        return all(c.total and not c.failures for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "checks": [{"name": c.name, "total": c.total, "failures": c.failures}
                       for c in self.checks],
        }


# -- basis enumeration ------------------------------------------------------

def _simplices(verts: tuple, m: int) -> list:
    return list(combinations_with_replacement(verts, m + 1))


def product_basis(m: int, arity: int, verts: tuple = (0, 1, 2)) -> list:
    """Non-degenerate m-simplices of (Delta^k)^{x arity}, with verts = (0..k)."""
    S = _simplices(verts, m)
    return [ps for ps in product(S, repeat=arity) if not product_is_degenerate(ps)]


def tensor_basis(total: int, arity: int, verts: tuple = (0, 1, 2)) -> list:
    """Tensors of non-degenerate simplices of Delta^k with degrees summing to total."""
    out = []
    for degs in product(range(total + 1), repeat=arity):
        if sum(degs) != total:
            continue
        pools = [[s for s in _simplices(verts, d) if not is_degenerate(s)] for d in degs]
        out.extend(tuple((s,) for s in key) for key in product(*pools))
    return out


# -- ez ---------------------------------------------------------------------

def suite_ez(seed: int = 0, samples: int = 0) -> SuiteReport:
    """The five contraction identities, exhaustively, for pairs and 4-fold products."""
    rep = SuiteReport("ez", seed, samples)
    fg, hom, phig, fphi, phiphi = (rep.check(n) for n in
                                   ("Aw Em = 1", "Sh d + d Sh = Em Aw - 1", "Sh Em = 0",
                                    "Aw Sh = 0", "Sh Sh = 0"))
    chain_map = rep.check("d Em = Em d")
    for m in range(5):
        for ps in product_basis(m, 2):
            x = {ps: 1}
            s = sh(x)
            lhs = add_chain(sh(d_product(x)), d_product(s))
            hom.record(lhs == add_chain(em(aw(ps, 1)), x, -1))
            phiphi.record(not sh(s))
            fphi.record(not aw_chain(s))
        for t in tensor_basis(m, 2):
            x = {t: 1}
            e = em(x)
            fg.record(aw_chain(e) == x)
            phig.record(not sh(e))
            chain_map.record(d_product(e) == em(d_tensor(x)))

    fg4, hom4, phig4, fphi4, phiphi4 = (rep.check(n) for n in
                                        ("Aw4 Em4 = 1", "Sh4 d + d Sh4 = Em4 Aw4 - 1",
                                         "Sh4 Em4 = 0", "Aw4 Sh4 = 0", "Sh4 Sh4 = 0"))
    for m in range(4):
        for ps in product_basis(m, 4):
            x = {ps: 1}
            s = sh4(x)
            lhs = add_chain(sh4(d_product(x)), d_product(s))
            hom4.record(lhs == add_chain(em4(aw4(x)), x, -1))
            phiphi4.record(not sh4(s))
            fphi4.record(not aw4(s))
        for t in tensor_basis(m, 4):
            x = {t: 1}
            e = em4(x)
            fg4.record(aw4(e) == x)
            phig4.record(not sh4(e))
    return rep


# -- eq1 --------------------------------------------------------------------

def suite_eq1(seed: int = 0, samples: int = 50) -> SuiteReport:
    """delta(c u_i c') = c u_{i-1} c' + c' u_{i-1} c + ... mod 2, for random cochain pairs."""
    rep = SuiteReport("eq1", seed, samples)
    rng = random.Random(seed)
    for K in (simplex_boundary(4), standard_simplex(5)):
        top = K.dimension
        for i in (1, 2, 3):
            chk = rep.check(f"{K.name} i={i}")
            pairs = [(m, n) for m in range(top + 1) for n in range(top + 1)
                     if 0 <= m + n - i and m + n - i + 1 <= top]
            for _ in range(samples):
                m, n = rng.choice(pairs)
                a = random_cochain(K, m, Z, seed=rng.randrange(1 << 30))
                b = random_cochain(K, n, Z, seed=rng.randrange(1 << 30))
                chk.record(eq1_residual(a, b, i).is_zero())
    return rep


# -- adem / e3 ----------------------------------------------------------------

def suite_adem(seed: int = 0, samples: int = 20) -> SuiteReport:
    """Both sides of the Adem relation at i = 0 on every 6-simplex of Delta^7."""
    rep = SuiteReport("adem", seed, samples)
    K = standard_simplex(7)
    basis = cocycle_basis(K, 2, Z)
    rng = random.Random(seed)
    chk = rep.check("random 2-cocycles")
    for _ in range(samples):
        c = random_cocycle(K, 2, Z, seed=rng.randrange(1 << 30), basis=basis)
        chk.record(adem_relation_residual(c, 0) == 0)
    rep.check("constant cocycle").record(adem_relation_residual(constant(K, 2, 1), 0) == 0)
    return rep


def suite_e3(seed: int = 0, samples: int = 20) -> SuiteReport:
    """The normalized E_3 agrees with the composition formula on Delta^6."""
    rep = SuiteReport("e3", seed, samples)
    K = standard_simplex(6)
    basis = cocycle_basis(K, 2, Z)
    rng = random.Random(seed)
    chk = rep.check("normalized = composition")
    for _ in range(samples):
        c = random_cocycle(K, 2, Z, seed=rng.randrange(1 << 30), basis=basis)
        chk.record(e3_normalized_cochain(c) == adem_E_cochain(0, c))
    return rep


# -- appendix -------------------------------------------------------------------

def _t_sh4_power(chain: dict, n: int) -> dict:
    for _ in range(n):
        chain = permute(sh4(chain), T4)
    return chain


def mu4(c, tensor: dict) -> int:
    """mu c^{x4} on a 4-block tensor of plain simplices, mod 2."""
    tot = 0
    for key, v in tensor.items():
        for b in key:
            v *= c(b[0])
            if not v:
                break
        tot += v
    return tot % 2


def suite_appendix(seed: int = 0, samples: int = 10) -> SuiteReport:
    """Aw4 (t Sh4)^n = D_n and Aw4 (t Sh4)^n t^{x2} Sh4 = 0 under mu c^{x4}, on Delta^3."""
    rep = SuiteReport("appendix", seed, samples)
    K = standard_simplex(3)
    rng = random.Random(seed)
    dn = rep.check("Aw4 (t Sh4)^n = D_n, n <= 3")
    null = rep.check("Aw4 (t Sh4)^n t2 Sh4 = 0, n in {1, 2}")
    for _ in range(samples):
        for q in (0, 1):
            c = random_cochain(K, q, Z2, seed=rng.randrange(1 << 30))
            cc = cup_i(c, c, 0)
            for n in range(4):
                d = 4 * q - n
                if not 0 <= d <= 3:
                    continue
                rhs = cup_i(cc, cc, n)
                for x in K.simplices(d):
                    dn.record(mu4(c, aw4(_t_sh4_power({(x,) * 4: 1}, n))) == rhs(x))
            for n in (1, 2):
                d = 4 * q - n - 1
                if d < 0:
                    continue
                for x in K.simplices(d):
                    ch = _t_sh4_power(permute(sh4({(x,) * 4: 1}), TT4), n)
                    null.record(mu4(c, aw4(ch)) == 0)
    return rep


# -- words and the null-summand properties ------------------------------------

def random_word(rng: random.Random, n0: int, length: int) -> tuple:
    """A random face/degeneracy word valid on n0-simplices (rightmost acts first)."""
    word, d = [], n0
    for _ in range(length):
        if d >= 1 and rng.random() < 0.5:
            word.append(("d", rng.randint(0, d)))
            d -= 1
        else:
            word.append(("s", rng.randint(0, d)))
            d += 1
    return tuple(reversed(word))


def awz_em_lhs(u: tuple, v: tuple) -> dict:
    return aw_chain(permute(em({(u, v): 1}), Z4), 2)


def awz_em_rhs(u: tuple, v: tuple) -> dict:
    t = {}
    for (u1, u2), a in aw(u, 1).items():
        for (v1, v2), b in aw(v, 1).items():
            add_term(t, (u1, u2, v1, v2), a * b)
    out = {}
    for (b1, b2, b3, b4), c in permute_tensor(t, Z4).items():
        for x, a in em({(b1, b2): 1}).items():
            for y, b in em({(b3, b4): 1}).items():
                add_term(out, (x, y), a * b * c)
    return out


def one_sh_aw_z_sh(x: dict) -> dict:
    """(1 (x) Sh) Aw z Sh on C(K^{x4})."""
    y = aw_chain(permute(sh(x, 2), Z4), 2)
    return tensor_map(y, lambda b: {b: 1}, lambda b: sh_basis(b, 1), 0, 1)


def sh_t_sh(x: dict, tilde: bool = False) -> dict:
    return sh(permute((sh_tilde if tilde else sh)(x), T2))


def suite_words(seed: int = 0, samples: int = 1000) -> SuiteReport:
    rep = SuiteReport("words", seed, samples)
    rng = random.Random(seed)
    K = standard_simplex(6)
    idem, normal, action, unique = (rep.check(n) for n in
                                    ("normal form idempotent", "output is in normal form",
                                     "same action on Delta^6", "equal maps have equal normal forms"))
    seen = {}
    for _ in range(samples):
        n0 = rng.randint(0, 6)
        w = random_word(rng, n0, rng.randint(0, 8))
        nf = normalize_word(w)
        idem.record(normalize_word(nf) == nf)
        normal.record(is_normal_form(nf))
        action.record(all(apply_word(w, s) == apply_word(nf, s) for s in K.simplices(n0)))
        key = (n0, apply_word(w, tuple(range(n0 + 1))))
        if key in seen:
            unique.record(seen[key] == nf)
        else:
            seen[key] = nf
            unique.record(True)

    # Natural operators are determined by their value on the universal simplex,
    # so checking (iota_m, ..., iota_m) covers every input of degree m.
    p3 = rep.check("(1 (x) Sh) Aw z Sh = 0, universal m <= 4")
    for m in range(5):
        u = tuple(range(m + 1))
        p3.record(not one_sh_aw_z_sh({(u,) * 4: 1}))
    p4 = rep.check("Aw z Em = (Em (x) Em) z' (Aw (x) Aw), universal p, q <= 3")
    for p in range(4):
        for q in range(4):
            u, v = (tuple(range(p + 1)),) * 2, (tuple(range(10, 11 + q)),) * 2
            p4.record(awz_em_lhs(u, v) == awz_em_rhs(u, v))
    p5 = rep.check("Sh t Sh = Sh t Sh~, universal m <= 5")
    for m in range(6):
        u = tuple(range(m + 1))
        p5.record(sh_t_sh({(u, u): 1}) == sh_t_sh({(u, u): 1}, True))

    # and literally, on sampled inputs from Delta^3-generated products
    s3 = rep.check("null summands on sampled Delta^3 inputs")
    verts = (0, 1, 2, 3)
    for _ in range(max(1, samples // 50)):
        m = rng.randint(0, 3)
        ps = tuple(tuple(sorted(rng.choice(verts) for _ in range(m + 1))) for _ in range(4))
        if product_is_degenerate(ps):
            continue
        s3.record(not one_sh_aw_z_sh({ps: 1}))
        s3.record(sh_t_sh({ps[:2]: 1}) == sh_t_sh({ps[:2]: 1}, True)
                  if not product_is_degenerate(ps[:2]) else True)
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        u = tuple(tuple(sorted(rng.sample(verts, p + 1))) for _ in range(2))
        v = tuple(tuple(sorted(rng.sample(verts, q + 1))) for _ in range(2))
        s3.record(awz_em_lhs(u, v) == awz_em_rhs(u, v))
    return rep


_RUNNERS = {
    "ez": suite_ez,
    "eq1": suite_eq1,
    "adem": suite_adem,
    "e3": suite_e3,
    "appendix": suite_appendix,
    "words": suite_words,
}


def run_suite(name: str, seed: int = 0, samples: int | None = None) -> SuiteReport:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if samples is None:
        samples = DEFAULT_SAMPLES[name]
    if samples < 0:
        raise ValueError("samples must be non-negative")
    return _RUNNERS[name](seed, samples)
