"""Compare the GMP extension with the pure-Python linear algebra.

    python3 benchmarks/bench_linalg.py [--repeat N]

Two workloads: random sparse rational kernels, and the full invariant
pipeline on random-coefficient j=3 bundles (the same supports, different
backends).  Results are checked to agree before timings are printed.
"""

import argparse
import random
import time
from fractions import Fraction

from blowup import linalg
from blowup.invariants import compute_invariants
from blowup.moduli import enumerate_monomials
from blowup.ring import BundleSpec, Poly


def random_images(rng, count=90, width=80, fill=4):
    out = []
    for _ in range(count):
        out.append({rng.randrange(width): Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(fill)})
    return out


def random_specs(rng, count):
    keys = [(m.l, m.i) for m in enumerate_monomials(3)]
    specs = []
    for _ in range(count):
        support = rng.sample(keys, rng.choice((1, 2)))
        specs.append(BundleSpec(3, Poly({k: Fraction(rng.randint(1, 50), rng.randint(1, 20)) for k in support})))
    return specs


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--specs", type=int, default=40)
    args = ap.parse_args()

    backends = linalg.available_backends()
    if "gmp" not in backends:
        print("extension not built; only the pure-Python backend is available")
    rng = random.Random(7)
    matrices = [random_images(rng) for _ in range(5)]
    specs = random_specs(rng, args.specs)

    workloads = {
        "kernel (5 x 90 sparse images)": lambda: [linalg.kernel(m) for m in matrices],
        f"pipeline ({len(specs)} random j=3 bundles)": lambda: [compute_invariants(s).triple for s in specs],
    }
    print(f"{'workload':40s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, fn in workloads.items():
        times, results = [], []
        for b in backends:
            with linalg.use_backend(b):
                t, res = timed(fn, args.repeat)
            times.append(t)
            results.append(res)
        assert all(r == results[0] for r in results), f"backends disagree on {name}"
        speed = f"{times[-1] / times[0]:8.2f}x" if len(times) > 1 else ""
        print(f"{name:40s} " + " ".join(f"{t:9.3f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
