"""Compiled kernels against the pure-Python fallback.

Two measurements:

* micro: the ExpPoly kernels (``add``, ``mul``, ``diff``) called directly on
  identical random inputs from both modules;
* macro: an identity-verification workload run in a subprocess once with the
  default backend and once with ``JACOBIKIT_PURE_PYTHON=1``.

Usage: ``python3 benchmarks/bench_kernels.py [--repeat N] [--instances N]``.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from jacobikit import Chart
from jacobikit.jacobi import generators as gen
from jacobikit.scalar import _pykernels

try:
    from jacobikit.scalar import _ckernels
except ImportError:
    _ckernels = None

WORKLOAD = """
import json, random, sys, time
from jacobikit import BACKEND, Chart, verify_identity
from jacobikit.jacobi import generators as gen
from jacobikit.tensor import compose_J_bivector
rng = random.Random(2024)
t0 = time.perf_counter()
for i in range({n}):
    ch = Chart.standard(3 + i % 2)
    L = gen.random_multivector(ch, 2, rng, degree=2, terms=2)
    J = gen.compatible_endomorphism(L, rng, degree=1, terms=1)
    pi = L * gen.random_scalar(ch, rng, degree=1, terms=2) + compose_J_bivector(J, L) * 2
    assert verify_identity("eq8", {{"L": L, "J": J, "pi": pi}}).passed
    assert verify_identity("eq5", {{"L": L, "J": J}}).passed
print(json.dumps({{"backend": BACKEND, "seconds": time.perf_counter() - t0}}))
"""


def operands(seed=0, count=40):
    rng = random.Random(seed)
    ch = Chart.standard(4)
    out = []
    for _ in range(count):
        a = gen.random_scalar(ch, rng, degree=3, terms=6).numerator.terms
        b = gen.random_scalar(ch, rng, degree=3, terms=6).numerator.terms
        out.append((a, b))
    return out


def micro(repeat):
    ops = operands()
    rows = []
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    for name in ("add", "mul", "diff"):
        row = {"kernel": name}
        for label, mod in mods:
            fn = getattr(mod, name)
            if name == "diff":
                call = lambda: [fn(a, i) for a, _ in ops for i in range(4)]  # noqa: E731
            else:
                call = lambda: [fn(a, b) for a, b in ops]  # noqa: E731
            row[label] = min(timeit.repeat(call, number=20, repeat=repeat))
        if "cython" in row:
            # identical results are a precondition for the comparison to mean anything
            f_py, f_c = getattr(_pykernels, name), getattr(_ckernels, name)
            args = [(a, 1) for a, _ in ops] if name == "diff" else ops
            assert all(f_py(*x) == f_c(*x) for x in args), name
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    return rows


def macro(instances):
    out = {}
    for label, env in (("default", {}), ("python", {"JACOBIKIT_PURE_PYTHON": "1"})):
        proc = subprocess.run([sys.executable, "-c", WORKLOAD.format(n=instances)], env={**os.environ, **env},
                              capture_output=True, text=True, check=True)
        out[label] = json.loads(proc.stdout)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--instances", type=int, default=20)
    ap.add_argument("--json", action="store_true", help="print raw numbers as JSON")
    args = ap.parse_args(argv)
    rows = micro(args.repeat)
    wl = macro(args.instances)
    if args.json:
        print(json.dumps({"micro": rows, "macro": wl}, indent=2))
        return 0
    print(f"{'kernel':<8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for r in rows:
        c = f"{r['cython']:.4f}" if "cython" in r else "n/a"
        s = f"{r['speedup']:.2f}x" if "speedup" in r else "n/a"
        print(f"{r['kernel']:<8}{r['python']:>12.4f}{c:>12}{s:>10}")
    d, p = wl["default"], wl["python"]
    print(f"\nworkload ({args.instances} eq8+eq5 instances): {d['backend']} {d['seconds']:.2f}s, "
          f"python {p['seconds']:.2f}s, ratio {p['seconds'] / d['seconds']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
