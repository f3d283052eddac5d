#!/usr/bin/env python3
"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Workloads: a grid scan of C, the near-boundary exhaustive ampleness loop,
a subdivision-heavy certificate, and the raw transfer kernel.
"""

import argparse
import time
from fractions import Fraction

from kstability import kernels
from kstability.amplecone import BundleParams, boundary_margin, kstability_verdict
from kstability.certify import (
    TriangleRegion,
    _scaled_homogeneous,
    bernstein_coefficients,
    certify_positive,
    scan_grid,
    transfer_rows,
)
from kstability.criterion import assemble_C
from kstability.ratpoly import A, B


def scan():
    scan_grid(200)


def theorem_loop():
    eps = Fraction(1, 20)
    for s in range(2, 121):
        for b in range(1, s // 2 + 1):
            for a in range(1, b):
                p = BundleParams(a, b, s - b)
                if boundary_margin(p) < eps:
                    kstability_verdict(p)


def subdivision():
    f = (A - Fraction(1, 3)) ** 2 + (B - Fraction(1, 3)) ** 2 + Fraction(1, 10**7)
    certify_positive(f * assemble_C(), TriangleRegion((Fraction(1, 10), Fraction(1, 5)), (Fraction(1, 10), Fraction(1, 2)), (Fraction(2, 5), Fraction(1, 2))), 9)


def transfer():
    n = 10
    f = assemble_C() * (A + 1) * (B + 2)
    h, _ = _scaled_homogeneous(bernstein_coefficients(f, TriangleRegion((0, 0), (1, 0), (0, 1)), n), n)
    rows = [transfer_rows(n, k) for k in range(4)]
    for _ in range(2000):
        for r in rows:
            kernels.transfer(r, h)


WORKLOADS = {"scan n=200": scan, "theorem loop b+c<=120": theorem_loop,
             "subdivision": subdivision, "transfer x8000": transfer}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'workload':24s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in WORKLOADS.items():
        times = []
        for backend in backends:
            kernels.use_backend(backend)
            fn()  # warm caches
            best = min(_timed(fn) for _ in range(args.repeat))
            times.append(best)
        line = f"{name:24s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:11.2f}x"
        print(line)


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


if __name__ == "__main__":
    main()
