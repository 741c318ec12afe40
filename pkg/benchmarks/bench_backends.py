#!/usr/bin/env python3
"""Compare the two exact-scalar backends on a representative workload.

The package selects gmpy2's compiled rationals when available and falls back
to ``fractions.Fraction`` otherwise (``HLAB_SCALAR_BACKEND`` forces a choice).
This script times the same workload once per backend, each in a fresh
subprocess so the import-time selection is honoured, and checks that both
produce identical results.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import hashlib, json, random, sys, time

from hlab import _scalar
from hlab._scalar import rat
from hlab.norms import l1_norm, linf_norm
from hlab.convex_ops import hausdorff, set_distance
from hlab.continuity import delta_left, delta_right, verify_modulus
from hlab.geometry import ConvexPolygon, Point


def random_polygon(rng):
    while True:
        pts = [Point(rat(rng.randint(-64, 64), 16), rat(rng.randint(-64, 64), 16))
               for _ in range(12)]
        try:
            P = ConvexPolygon.hull(pts)
        except ValueError:
            continue
        if 4 <= P.n <= 10:
            return P


def run():
    rng = random.Random(2024)
    norms = [linf_norm(), l1_norm()]
    eps = rat(1, 4)
    digest = hashlib.sha256()
    started = time.perf_counter()
    for i in range(20):
        n = norms[i % 2]
        A, B = random_polygon(rng), random_polygon(rng)
        d = set_distance(A, B, n)
        r = d + rat(1, 2)
        w = delta_right(A, B, r, eps, n)
        lw = delta_left(A, B, r, eps, n)
        right, left = verify_modulus(A, B, r, eps, n, samples=4)
        assert right.all_passed and left.all_passed
        g = hausdorff(A, B, n)
        digest.update(f"{w.delta};{lw.delta};{g}".encode())
    elapsed = time.perf_counter() - started
    print(json.dumps({"backend": _scalar.BACKEND, "seconds": elapsed,
                      "digest": digest.hexdigest()}))


run()
"""


def time_backend(backend: str, repeat: int) -> dict:
    env = dict(os.environ, HLAB_SCALAR_BACKEND=backend)
    best = None
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                             capture_output=True, text=True, check=True)
        result = json.loads(out.stdout)
        if best is None or result["seconds"] < best["seconds"]:
            best = result
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per backend; the best time is reported")
    args = parser.parse_args()

    results = []
    for backend in ("gmpy2", "fraction"):
        try:
            results.append(time_backend(backend, args.repeat))
        except subprocess.CalledProcessError as exc:
            print(f"{backend:>9}: unavailable ({exc.stderr.strip().splitlines()[-1]})")
    for r in results:
        print(f"{r['backend']:>9}: {r['seconds']:.3f}s")
    if len(results) == 2:
        if results[0]["digest"] != results[1]["digest"]:
            print("MISMATCH: backends disagree on exact results")
            return 1
        ratio = results[1]["seconds"] / results[0]["seconds"]
        print(f"identical exact results; {results[0]['backend']} is "
              f"{ratio:.2f}x faster")
    return 0


if __name__ == "__main__":
    sys.exit(main())
