"""Regenerate the bundled fixture complexes in src/ademops/data.

Run from the repository root:  python scripts/make_fixtures.py
"""
from pathlib import Path

from ademops.cli import ComplexFile, serialize_complex
from ademops.complex import SimplicialSet, product_complex, simplex_boundary, standard_simplex
from ademops.reduce import homology

DATA = Path(__file__).resolve().parents[1] / "src" / "ademops" / "data"

RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
       (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]

# 9-vertex CP^2 with a Z/3 x Z/3 symmetry, found by a symmetric search and
# checked below (homology, vertex links) and in the tests (Sq^2 != 0).
CP2 = [(0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 6, 7, 8), (0, 2, 6, 7, 8),
       (1, 2, 6, 7, 8), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8), (3, 4, 5, 7, 8), (0, 1, 3, 4, 6),
       (0, 1, 3, 6, 7), (0, 2, 3, 5, 8), (0, 2, 5, 6, 8), (0, 3, 4, 6, 7), (1, 2, 4, 5, 7),
       (1, 2, 4, 7, 8), (1, 4, 5, 7, 8), (2, 3, 5, 6, 8), (0, 1, 3, 5, 7), (0, 1, 5, 7, 8),
       (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 3, 5, 7, 8), (1, 2, 3, 4, 8), (1, 2, 3, 6, 8),
       (1, 3, 4, 6, 8), (2, 4, 5, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8), (0, 2, 3, 4, 8),
       (0, 2, 4, 7, 8), (0, 3, 4, 7, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 4, 5, 6, 8),
       (2, 3, 5, 6, 7)]


def torus7():
    """Moebius' 7-vertex torus."""
    tris = set()
    for i in range(7):
        tris.add(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        tris.add(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return sorted(tris)


def link(K: SimplicialSet, v: int) -> SimplicialSet:
    return SimplicialSet([tuple(w for w in m if w != v) for m in K.maximal if v in m])


def is_sphere_homology(K: SimplicialSet, d: int) -> bool:
    want = [1] + [0] * (d - 1) + [1]
    groups = homology(K)
    return [h.betti for h in groups] == want and not any(h.torsion for h in groups)


def fixtures():
    s1, s2 = simplex_boundary(2), simplex_boundary(3)
    return {
        "delta2": SimplicialSet([range(3)], "Delta^2"),
        "delta3": standard_simplex(3),
        "delta4": standard_simplex(4),
        "sphere2": SimplicialSet(s2.maximal, "S^2 (boundary of Delta^3)"),
        "sphere3": SimplicialSet(simplex_boundary(4).maximal, "S^3 (boundary of Delta^4)"),
        "rp2": SimplicialSet(RP2, "RP^2 (6 vertices)"),
        "cp2": SimplicialSet(CP2, "CP^2 (9 vertices)"),
        "torus": SimplicialSet(torus7(), "torus (7 vertices)"),
        "s2xs1": product_complex(s2, s1, "S^2 x S^1"),
        "s2xs2": product_complex(s2, s2, "S^2 x S^2"),
    }


def main():
    DATA.mkdir(exist_ok=True)
    for key, K in fixtures().items():
        if K.dimension >= 2 and key in ("cp2", "torus", "rp2", "s2xs2", "s2xs1"):
            # closed manifolds: every vertex link is a homology sphere (over Z/2 for RP^2)
            for v in {v for m in K.maximal for v in m}:
                assert is_sphere_homology(link(K, v), K.dimension - 1), (key, v)
        cf = ComplexFile(K.name, tuple(K.maximal))
        (DATA / f"{key}.json").write_text(serialize_complex(cf))
        print(f"{key}: {K.counts()}")


if __name__ == "__main__":
    main()
