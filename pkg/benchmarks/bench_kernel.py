"""Compare the compiled blade kernel with the pure-Python fallback.

    python benchmarks/bench_kernel.py [--repeat 5] [--pipeline [--sig 4,4]]

The first table times raw geometric products of dense multivectors.  With
``--pipeline`` the cold build of a spinor representation (idempotent, ideal,
K basis and all blade matrices) is timed in a subprocess per backend, since
the backend is fixed at import.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from cliffexp import _kernel_py

try:
    from cliffexp import _kernel
except ImportError:
    _kernel = None

PIPELINE = """
import time
from cliffexp import kernel
from cliffexp.isomorphism import repr_table
t = time.perf_counter()
repr_table((SIG))
print(kernel.BACKEND, time.perf_counter() - t)
"""


def dense(n, rng, exact):
    terms = {}
    for b in range(1 << n):
        v = rng.randint(-9, 9) or 1
        terms[b] = Fraction(v, rng.randint(1, 7)) if exact else v
    return terms


def bench_products(repeat):
    rng = random.Random(7)
    print(f"{'n':>3} {'coeffs':>8} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for n in (4, 6, 8):
        neg = ((1 << (n // 2)) - 1) << (n - n // 2)
        for exact in (False, True):
            xs, ys = dense(n, rng, exact), dense(n, rng, exact)
            number = max(1, 2000 >> n)
            py = min(timeit.repeat(
                lambda: _kernel_py.geometric_product(xs, ys, neg), number=number, repeat=repeat
            )) / number
            label = "Fraction" if exact else "int"
            if _kernel is None:
                print(f"{n:>3} {label:>8} {py * 1e3:>10.3f} {'n/a':>12} {'':>8}")
                continue
            assert _kernel.geometric_product(xs, ys, neg) == _kernel_py.geometric_product(xs, ys, neg)
            cy = min(timeit.repeat(
                lambda: _kernel.geometric_product(xs, ys, neg), number=number, repeat=repeat
            )) / number
            print(f"{n:>3} {label:>8} {py * 1e3:>10.3f} {cy * 1e3:>12.3f} {py / cy:>7.1f}x")


def bench_pipeline(sig):
    code = PIPELINE.replace("SIG", sig)
    for pure in ("1", "0"):
        env = dict(os.environ, CLIFFEXP_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
        if out.returncode:
            print(out.stderr, file=sys.stderr)
            continue
        backend, seconds = out.stdout.split()
        print(f"cold spinor representation of Cl({sig}) [{backend}]: {float(seconds):.2f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--pipeline", action="store_true")
    parser.add_argument("--sig", default="4,4", help="signature for --pipeline (P,Q)")
    args = parser.parse_args()
    bench_products(args.repeat)
    if args.pipeline:
        bench_pipeline(args.sig)


if __name__ == "__main__":
    main()
