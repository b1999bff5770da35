"""Compare the numba and pure-numpy F_p row reduction kernels.

    python benchmarks/bench_rref.py --sizes 50 100 200 --p 32003 --repeat 3
"""

import argparse
import time

import numpy as np

from oimod.linalg import _kernels


def best_of(fn, A, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(A, p)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 160, 320])
    ap.add_argument("--p", type=int, default=32003)
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; only the numpy kernel is available")
    rng = np.random.default_rng(args.seed)
    # compile outside the timed region
    _kernels.rref_modp_numba(np.eye(2, dtype=np.int64), args.p)

    print(f"{'size':>6} {'rank':>6} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for n in args.sizes:
        A = rng.integers(0, args.p, size=(n, n + n // 2), dtype=np.int64)
        A[rng.random(A.shape) > args.density] = 0
        R1, piv1 = _kernels.rref_modp_numba(A, args.p)
        R2, piv2 = _kernels.rref_modp_numpy(A, args.p)
        assert np.array_equal(R1, R2) and np.array_equal(piv1, piv2), "kernels disagree"
        t_np = best_of(_kernels.rref_modp_numpy, A, args.p, args.repeat)
        t_nb = best_of(_kernels.rref_modp_numba, A, args.p, args.repeat)
        print(f"{n:>6} {len(piv1):>6} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
