"""Time the numba and numpy row-reduction kernels on random GF(p) matrices.

    python3 benchmarks/bench_kernels.py [--sizes 8 32 64 128] [--p 2 3] [--repeat 5]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from qct import _kernels


def best_of(fn, mat, p, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mat, p)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 64, 128])
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _kernels.rref_numba is None:
        print("numba unavailable or disabled; timing numpy only")
    else:
        _kernels.rref_numba(np.eye(2, dtype=np.int64), 2)  # compile outside the timing

    rng = np.random.default_rng(args.seed)
    print(f"{'p':>3} {'size':>6} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for p in args.p:
        for n in args.sizes:
            mat = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
            t_np = best_of(_kernels.rref_numpy, mat, p, args.repeat)
            if _kernels.rref_numba is None:
                print(f"{p:>3} {n:>6} {t_np * 1e3:>10.3f} {'-':>10} {'-':>8}")
                continue
            a, pa = _kernels.rref_numpy(mat, p)
            b, pb = _kernels.rref_numba(mat, p)
            assert np.array_equal(a, b) and np.array_equal(pa, pb)
            t_nb = best_of(_kernels.rref_numba, mat, p, args.repeat)
            print(f"{p:>3} {n:>6} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
