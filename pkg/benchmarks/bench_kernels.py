"""Compare the GMP kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--quick]

Micro benchmarks call both kernel modules directly.  The end-to-end run
times the golden orbit (10 steps, 256 bits) in a subprocess per backend,
selected with FIBERFIELD_PURE_PYTHON.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from fiberfield._kernels import _pykernels

try:
    from fiberfield._kernels import _ckernels
except ImportError:
    _ckernels = None

ORBIT_SCRIPT = """
import time
from fiberfield._kernels import BACKEND
from fiberfield.exact import ratfunc
from fiberfield.orbit import fiber_track
A = ratfunc([0, 0, -512000, 19200, -240, 1], [1048576, 655360, 153600, 16000, 625])
B = ratfunc([0, 0, 40, -20, 10, -3], [32, 0, 0, -20, 15])
V = ratfunc([0, 0, 0, -4, 3])
t = time.perf_counter()
tr = fiber_track(V, A, B, 1, {steps}, 256)
print(BACKEND, time.perf_counter() - t, tr.all_bijective)
"""


def rand_poly(rng, n, bits):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]


def best(fn, repeat=3):
    number, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def micro(quick):
    rng = random.Random(1)
    rows = []
    sizes = [(8, 64), (64, 256), (256, 1024)] if quick else [
        (8, 64), (64, 256), (256, 1024), (512, 4096)]
    for n, bits in sizes:
        a, b = rand_poly(rng, n, bits), rand_poly(rng, n, bits)
        py = best(lambda: _pykernels.poly_mul(a, b))
        c = best(lambda: _ckernels.poly_mul(a, b)) if _ckernels else float("nan")
        rows.append((f"poly_mul n={n} bits={bits}", py, c))
    forms = [rand_poly(rng, 6, 24), rand_poly(rng, 6, 24)]
    for bits in ([10_000, 1_000_000] if quick else [10_000, 1_000_000, 10_000_000]):
        p, q = rng.getrandbits(bits) | 1, rng.getrandbits(bits) | 1
        py = best(lambda: _pykernels.hom_eval(forms, p, q), repeat=2)
        c = best(lambda: _ckernels.hom_eval(forms, p, q), repeat=2) if _ckernels else float("nan")
        rows.append((f"hom_eval deg=5 bits={bits}", py, c))
    print(f"{'kernel':34s} {'python (s)':>12s} {'gmp (s)':>12s} {'speedup':>8s}")
    for name, py, c in rows:
        print(f"{name:34s} {py:12.3e} {c:12.3e} {py / c:8.1f}")


def end_to_end(steps):
    print(f"\ngolden orbit, {steps} steps, 256 bits")
    for pure in ("0", "1"):
        env = dict(os.environ, FIBERFIELD_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", ORBIT_SCRIPT.format(steps=steps)],
                             env=env, capture_output=True, text=True, check=True).stdout
        backend, secs, ok = out.split()
        print(f"  {backend:7s} {float(secs):8.2f}s  bijective={ok}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="smaller sizes, 8-step orbit")
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python column is meaningful")
    micro(args.quick)
    end_to_end(8 if args.quick else 10)


if __name__ == "__main__":
    main()
