"""Compare the compiled and pure-Python kernel backends on the hot
enumeration paths.

Run as: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import itertools
import time

from ppbij.kernels import _pure

try:
    from ppbij.kernels import _speed
except ImportError:
    _speed = None


def bench_pp_box(mod):
    return len(mod.pp_box(4, 4, 4))


def bench_matrices(mod):
    weights = tuple(tuple(i + l - 1 for l in range(1, 5))
                    for i in range(1, 5))
    total = 0
    for entries in mod.matrices_weighted(4, 4, weights, 8):
        total += len(mod.phi_inverse_rows(entries, 4, 4))
    return total


def bench_shape(mod):
    return len(mod.pp_shape((4, 4, 3), 4, False))


def bench_lis(mod):
    total = 0
    for letters in itertools.product(range(1, 5), repeat=8):
        total += mod.lis_tail(letters, 4, 2)
    return total


WORKLOADS = [
    ("pp_box 4x4x4", bench_pp_box),
    ("weighted matrices + inverse", bench_matrices),
    ("shape fillings (4,4,3) m=4", bench_shape),
    ("lis_tail over 4^8 words", bench_lis),
]


def timed(fn, mod, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _speed is None:
        print("compiled backend not built; nothing to compare")
        return

    print(f"{'workload':<32} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for name, fn in WORKLOADS:
        t_pure, r_pure = timed(fn, _pure, args.repeat)
        t_fast, r_fast = timed(fn, _speed, args.repeat)
        assert r_pure == r_fast, f"backend disagreement on {name}"
        print(f"{name:<32} {t_pure:>8.3f}s {t_fast:>8.3f}s "
              f"{t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
