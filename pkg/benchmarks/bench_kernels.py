"""Time the numba and numpy basis-action kernels against each other.

    python benchmarks/bench_kernels.py [--max-n 20] [--repeat 5]
"""

import argparse
import time

import numpy as np

from coha import _kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def sweep(n, use_numba):
    # every creation and both derivative kernels at this n
    for i in range(n):
        _kernels.creation(i, n, use_numba=use_numba)
        _kernels.derivative(i, n, True, use_numba=use_numba)
        _kernels.derivative(i, n, False, use_numba=use_numba)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=20)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if not _kernels.USE_NUMBA:
        raise SystemExit("numba is unavailable or disabled; nothing to compare")

    start = time.perf_counter()
    sweep(2, True)
    print(f"numba warm-up (compile or cache load): {1000 * (time.perf_counter() - start):.1f} ms")

    print(f"{'n':>3} {'basis':>9} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}  same")
    for n in range(4, args.max_n + 1, 2):
        t_np = best_of(lambda: sweep(n, False), args.repeat)
        t_nb = best_of(lambda: sweep(n, True), args.repeat)
        same = all(
            np.array_equal(a, b)
            for i in range(n)
            for a, b in zip(_kernels.derivative(i, n, True, use_numba=True),
                            _kernels.derivative(i, n, True, use_numba=False))
        )
        print(f"{n:>3} {1 << n:>9} {1000 * t_np:>10.2f} {1000 * t_nb:>10.2f} {t_np / t_nb:>8.1f}  {same}")


if __name__ == "__main__":
    main()
