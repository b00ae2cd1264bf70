"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_rref.py [--sizes 20 40 80] [--repeat 3]

Times rref over F_p and over Q on random dense matrices, and the end-to-end
relation extraction on a fixture, once per backend.
"""
import argparse
import random
import time
from fractions import Fraction
from pathlib import Path

from qhkit import _rref_py

try:
    from qhkit import _rref
except ImportError:
    _rref = None

P = 1_000_003
FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "exampleB_L1.json"


def random_rows(n, rng, exact):
    if exact:
        from qhkit.field import FieldSpec
        Q = FieldSpec.rationals()
        return [[Q(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(n)]
                for _ in range(n)]
    return [[rng.randrange(P) for _ in range(n)] for _ in range(n)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_kernels(sizes, repeat):
    rng = random.Random(0)
    print(f"{'kernel':<10}{'n':>5}{'python (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for exact in (False, True):
        for n in sizes:
            rows = random_rows(n, rng, exact)
            if exact:
                py = best_of(lambda: _rref_py.rref_exact([r[:] for r in rows], n), repeat)
                cy = best_of(lambda: _rref.rref_exact([r[:] for r in rows], n), repeat) if _rref else None
            else:
                py = best_of(lambda: _rref_py.rref_modp([r[:] for r in rows], n, P), repeat)
                cy = best_of(lambda: _rref.rref_modp([r[:] for r in rows], n, P), repeat) if _rref else None
            name = "Q" if exact else "F_p"
            if cy is None:
                print(f"{name:<10}{n:>5}{py:>14.4f}{'-':>14}{'-':>10}")
            else:
                print(f"{name:<10}{n:>5}{py:>14.4f}{cy:>14.4f}{py / cy:>9.1f}x")


def bench_pipeline(repeat):
    import os
    import subprocess
    import sys
    code = ("import time,qhkit;from qhkit.report import run_command;"
            f"t=open({str(FIXTURE)!r}).read();s=time.perf_counter();run_command('all',t);"
            "print(qhkit.BACKEND, time.perf_counter()-s)")
    for pure in ("", "1"):
        env = dict(os.environ, QHKIT_PURE=pure)
        times = []
        for _ in range(repeat):
            out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                                 text=True, check=True).stdout.split()
            times.append(float(out[1]))
        print(f"pipeline 'all' on {FIXTURE.name}, backend {out[0]}: {min(times):.3f} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _rref is None:
        print("compiled kernel not built; showing the pure-Python timings only")
    bench_kernels(args.sizes, args.repeat)
    bench_pipeline(args.repeat)


if __name__ == "__main__":
    main()
