"""Command line interface: ``ademops homology | sq | psi | check``.

Reports are JSON documents on stdout with a fixed key order; diagnostics go
to stderr.  Exit status is 0 on success, 1 when a computation or suite
fails, 2 for bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebra import Z, Z2
from .complex import ComplexError, SimplicialSet
from .reduce import ConsistencyError, ContractionError, TorsionError, contraction, homology, psi, sq_matrix
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


# -- complex files ------------------------------------------------------------

@dataclass(frozen=True)
class ComplexFile:
    name: str
    maximal_simplices: tuple

    def to_complex(self) -> SimplicialSet:
        return SimplicialSet(self.maximal_simplices, self.name)


def _check_int(v) -> int:
    # bool is an int subclass, and 1.0 is not a vertex
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"vertex {v!r} is not an integer")
    if v < 0:
        raise InputError(f"vertex {v} is negative")
    return v


def parse_complex(text: str) -> ComplexFile:
    """Parse a ComplexFile document: {"name": ..., "maximal_simplices": [[...], ...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or set(doc) != {"name", "maximal_simplices"}:
        raise InputError('expected exactly the fields "name" and "maximal_simplices"')
    name, simplices = doc["name"], doc["maximal_simplices"]
    if not isinstance(name, str):
        raise InputError("name must be a string")
    if not isinstance(simplices, list) or not simplices:
        raise InputError("maximal_simplices must be a non-empty list")
    out = []
    for s in simplices:
        if not isinstance(s, list) or not s:
            raise InputError(f"simplex {s!r} must be a non-empty list of vertices")
        s = tuple(_check_int(v) for v in s)
        if any(a >= b for a, b in zip(s, s[1:])):
            raise InputError(f"simplex {list(s)} is not strictly increasing")
        out.append(s)
    return ComplexFile(name, tuple(out))


def serialize_complex(cf: ComplexFile) -> str:
    """Canonical text for a ComplexFile; parse_complex inverts it exactly."""
    body = ", ".join("[" + ", ".join(str(v) for v in s) + "]" for s in cf.maximal_simplices)
    return "{" + f'"name": {json.dumps(cf.name)}, "maximal_simplices": [{body}]' + "}\n"


def read_complex(path: str) -> ComplexFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse_complex(text)


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture, e.g. ``fixture_path("torus")``."""
    return Path(str(resources.files("ademops") / "data" / f"{name}.json"))


def fixture_names() -> list[str]:
    root = resources.files("ademops") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> SimplicialSet:
    return read_complex(str(fixture_path(name))).to_complex()


# -- reports --------------------------------------------------------------------

def complex_stats(K: SimplicialSet) -> dict:
    return {"name": K.name, "dimension": K.dimension, "simplex_counts": K.counts()}


def _report(command: dict, K: SimplicialSet | None, result: dict, t0: float, timing: bool) -> dict:
    doc = {"command": command}
    if K is not None:
        doc["complex"] = complex_stats(K)
    doc["result"] = result
    if timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    return doc


def _labels(degree: int, n: int) -> list[str]:
    return [f"H^{degree}[{k}]" for k in range(n)]


def homology_result(K: SimplicialSet, ring) -> dict:
    groups = homology(K, ring)
    return {
        "ring": ring.name,
        "betti": [h.betti for h in groups],
        "torsion": [list(h.torsion) for h in groups],
        "groups": [str(h) if not ring.modulus else (f"(Z/2)^{h.betti}" if h.betti else "0")
                   for h in groups],
    }


def sq_result(K: SimplicialSet, q: int, i: int) -> dict:
    r = contraction(K, Z2)
    M = sq_matrix(r, q, i)
    out = {
        "ring": "Z/2",
        "q": q,
        "i": i,
        "source_basis": _labels(q, r.rank(q)),
        "target_basis": _labels(q + i, r.rank(q + i)),
        "matrix": M,
    }
    if i == 2:
        # the integral route used by the Psi pipeline, when H(K; Z) allows it
        try:
            rz = contraction(K, Z)
        except TorsionError as e:
            out["integral"] = {"available": False, "reason": str(e)}
        else:
            out["integral"] = {
                "available": True,
                "source_basis": _labels(q, rz.rank(q)),
                "target_basis": _labels(q + 2, rz.rank(q + 2)),
                "matrix": sq_matrix(rz, q, 2),
            }
    return out


def psi_result(K: SimplicialSet, q: int) -> dict:
    res = psi(K, q)
    return {
        "q": res.q,
        "i": res.i,
        "source_basis": _labels(q, res.h_q),
        "target_basis": _labels(q + 3, res.h_target),
        "sq2": res.sq2,
        "kernel": res.kernel,
        "values": res.values,
        "indeterminacy": res.indeterminacy,
        "w_cocycle": res.w_cocycle,
        "w cocycle check": "pass" if res.w_ok else "fail",
    }


# -- commands -------------------------------------------------------------------

def cmd_homology(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    K = read_complex(args.file).to_complex()
    ring = Z if args.ring == "z" else Z2
    cmd = {"command": "homology", "file": args.file, "ring": args.ring}
    return _report(cmd, K, homology_result(K, ring), t0, args.timing), EXIT_OK


def cmd_sq(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    if not args.q >= args.i >= 0:
        raise InputError(f"need Q >= I >= 0, got Q={args.q}, I={args.i}")
    K = read_complex(args.file).to_complex()
    cmd = {"command": "sq", "file": args.file, "q": args.q, "i": args.i}
    return _report(cmd, K, sq_result(K, args.q, args.i), t0, args.timing), EXIT_OK


def cmd_psi(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    if args.q < 2:
        raise InputError(f"Psi_q needs q >= 2, got {args.q}")
    K = read_complex(args.file).to_complex()
    result = psi_result(K, args.q)
    print(f"w cocycle check: {result['w cocycle check']}", file=sys.stderr)
    cmd = {"command": "psi", "file": args.file, "q": args.q}
    code = EXIT_OK if result["w cocycle check"] == "pass" else EXIT_FAIL
    return _report(cmd, K, result, t0, args.timing), code


def cmd_check(args) -> tuple[dict, int]:
    t0 = time.perf_counter()
    if args.samples is not None and args.samples < 0:
        raise InputError("samples must be non-negative")
    rep = run_suite(args.suite, args.seed, args.samples)
    for c in rep.checks:
        status = "pass" if c.total and not c.failures else "FAIL"
        print(f"{status}  {c.name}: {c.total - c.failures}/{c.total}", file=sys.stderr)
    cmd = {"command": "check", "suite": args.suite, "seed": args.seed, "samples": rep.samples}
    return _report(cmd, None, rep.as_dict(), t0, args.timing), EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ademops", description=__doc__.splitlines()[0])
    p.add_argument("--no-timing", dest="timing", action="store_false",
                   help="omit the timing block so reports are byte-for-byte reproducible")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", help="Betti numbers and torsion")
    h.add_argument("file")
    h.add_argument("--ring", choices=("z", "z2"), default="z")
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("sq", help="matrix of Sq^I on H^Q(K; Z/2)")
    s.add_argument("file")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--i", type=int, default=2)
    s.set_defaults(func=cmd_sq)

    a = sub.add_parser("psi", help="Adem secondary operation Psi_Q")
    a.add_argument("file")
    a.add_argument("--q", type=int, required=True)
    a.set_defaults(func=cmd_psi)

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", choices=SUITES)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=None)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except (InputError, ComplexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (TorsionError, ContractionError, ConsistencyError) as e:
        print(f"computation failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
