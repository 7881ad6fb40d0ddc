"""Time the compiled and pure-Python kernels on the same random words.

    python3 benchmarks/bench_kernels.py [--sizes 10000,100000] [--sigma 26] [--repeats 3]
"""

import argparse
import time

import numpy as np

from scatlib import _backend


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(w, sigma):
    n = len(w)
    cap = sigma + 1
    return {
        "arch_ends": lambda k: k.arch_ends(w, sigma, cap),
        "suffix_tables": lambda k: k.suffix_tables(w, sigma, cap),
        "x_coordinates": lambda k: k.x_coordinates(w, cap),
        "normal_form": lambda k: k.normal_form(w, cap, max(n // 2, 1)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--sigma", type=int, default=26)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = {"python": _backend.pykernels}
    if _backend.ckernels is not None:
        backends["cython"] = _backend.ckernels
    else:
        print("compiled kernels not built; timing the fallback only")

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<15}{'n':>10}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for n in (int(s) for s in args.sizes.split(",")):
        w = rng.integers(1, args.sigma + 1, n, dtype=np.int64)
        for name, run in cases(w, args.sigma).items():
            times = {b: best_of(lambda: run(k), args.repeats) for b, k in backends.items()}
            row = f"{name:<15}{n:>10}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
            if len(times) == 2:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
