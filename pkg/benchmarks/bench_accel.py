"""Compare the two coloring-enumeration backends on realistic workloads.

The compiled backend is the default; the numpy backend is the fallback used
when numba is not importable (or when BORDISMKIT_NO_NUMBA=1 is set).  Both
must stream identical blocks, so this benchmark doubles as a parity check:
it counts the enumerated colorings and refuses to report a timing if the
backends disagree.

Usage: python benchmarks/bench_accel.py [--repeats N]
"""

import argparse
import time

import numpy as np

from bordismkit import accel
from bordismkit.bott import partitions
from bordismkit.polytopes import product_of_simplices, simplex


def vertex_array(p):
    return np.array(sorted(sorted(v) for v in p.vertices), dtype=np.int16)


def enumerate_shape(p, n, backend):
    total = 0
    for colors, _ in accel.coloring_blocks(vertex_array(p), p.num_facets, n,
                                           backend=backend):
        total += len(colors)
    return total


def bench(label, shapes, n, backend, repeats):
    best = float("inf")
    total = 0
    for _ in range(repeats):
        start = time.perf_counter()
        total = sum(enumerate_shape(p, n, backend) for p in shapes)
        best = min(best, time.perf_counter() - start)
    return total, best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3,
                    help="timing repetitions per case (best is reported)")
    args = ap.parse_args()

    backends = ["numpy"]
    if accel._NUMBA_OK:
        backends.insert(0, "numba")
        print("Warming up the compiled backend...")
        enumerate_shape(simplex(2), 2, "numba")
    else:
        print("numba is not importable; timing the numpy backend only")

    cases = [
        ("rank-3 full scan", [product_of_simplices(s) for s in partitions(3)], 3),
        ("rank-4 prism (2,1,1)", [product_of_simplices((2, 1, 1))], 4),
    ]

    print(f"\n{'case':24s} {'backend':8s} {'colorings':>10s} {'best':>9s}")
    for label, shapes, n in cases:
        counts = {}
        times = {}
        for backend in backends:
            counts[backend], times[backend] = bench(label, shapes, n, backend,
                                                    args.repeats)
            print(f"{label:24s} {backend:8s} {counts[backend]:10d} "
                  f"{times[backend]:8.3f}s")
        if len(backends) == 2:
            if counts["numba"] != counts["numpy"]:
                raise SystemExit(f"backend disagreement on {label}: {counts}")
            print(f"{'':24s} numba is {times['numpy'] / times['numba']:.1f}x "
                  f"faster\n")


if __name__ == "__main__":
    main()
