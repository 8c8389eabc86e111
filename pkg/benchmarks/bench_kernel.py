#!/usr/bin/env python3
"""Benchmark the pure-Python scan kernel against the compiled one.

Runs the exhaustive min-cut search on the largest instances of the
standard sweep and reports per-call timing for both backends.  The pure
kernel amortizes repeated queries through its profile cache, so both
cold and warm timings are shown.

Usage: python benchmarks/bench_kernel.py [--repeats N]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from clustercap import _kernel  # noqa: E402
from clustercap._kernel_py import _weighted_profiles, distribution_profiles  # noqa: E402
from clustercap.model import validate_config  # noqa: E402
from clustercap.oracle import brute_force_capacity, enumeration_size  # noqa: E402

CASES = [
    dict(n=13, k=9, L=3, R=4, E=1, d_cross=9, beta_intra=2, beta_cross=1, alpha=25),
    dict(n=13, k=8, L=3, R=4, E=1, d_cross=8, beta_intra=3, beta_cross=2, alpha=30),
    dict(n=10, k=9, L=3, R=3, E=1, d_cross=7, beta_intra=2, beta_cross=1, alpha=20),
]


def time_backend(cfg, backend, repeats):
    start = time.perf_counter()
    for _ in range(repeats):
        result = brute_force_capacity(cfg, backend=backend)
    elapsed = (time.perf_counter() - start) / repeats
    return elapsed, result.value


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    if not _kernel.compiled_available():
        print("compiled kernel not built (pure fallback only); "
              "run: python setup.py build_ext --inplace")

    print(f"{'instance':<34} {'orders':>7} {'backend':>9} {'ms/call':>9} {'speedup':>8}")
    for case in CASES:
        cfg = validate_config(**case)
        size = enumeration_size(cfg.nodes)
        label = (f"k={case['k']} L={case['L']} R={case['R']} E={case['E']} "
                 f"dC={case['d_cross']}")

        distribution_profiles.cache_clear()
        _weighted_profiles.cache_clear()
        cold, value = time_backend(cfg, "pure", 1)
        warm, _ = time_backend(cfg, "pure", args.repeats)
        print(f"{label:<34} {size:>7} {'pure/cold':>9} {cold * 1e3:>9.2f}")
        print(f"{'':<34} {'':>7} {'pure/warm':>9} {warm * 1e3:>9.2f}")

        if _kernel.compiled_available():
            compiled, cvalue = time_backend(cfg, "compiled", args.repeats)
            assert cvalue == value, "backends disagree"
            print(f"{'':<34} {'':>7} {'compiled':>9} {compiled * 1e3:>9.2f} "
                  f"{warm / compiled:>7.1f}x")
    print("\nvalues identical across backends for every case")


if __name__ == "__main__":
    main()
