"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 50 200 400]

The numpy path materialises an (n, m, s) intermediate for max-min
products, so its memory grows cubically; the loop kernel does not.
"""
import argparse
import time

import numpy as np

from fuzzyrel import _kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 200, 400])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _kernels.maxmin_numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(args.seed)

    # compile outside the timed region
    _kernels.maxmin_numba(np.zeros((1, 1)), np.zeros((1, 1)))
    _kernels.residual_bound_numba(np.zeros((1, 1)), np.zeros(1), 0.0)

    print(f"{'kernel':<16}{'size':>8}{'numpy [ms]':>14}{'numba [ms]':>14}{'speedup':>10}")
    for n in args.sizes:
        p, q = rng.random((n, n)), rng.random((n, n))
        assert np.array_equal(_kernels.maxmin_numpy(p, q), _kernels.maxmin_numba(p, q))
        t_np = best_of(lambda: _kernels.maxmin_numpy(p, q), args.repeat)
        t_nb = best_of(lambda: _kernels.maxmin_numba(p, q), args.repeat)
        print(f"{'maxmin':<16}{n:>8}{t_np * 1e3:>14.3f}{t_nb * 1e3:>14.3f}{t_np / t_nb:>10.1f}")

    for n in args.sizes:
        m, s = 10 * n, n
        q = rng.integers(0, 11, size=(m, s)) / 10
        r = rng.integers(0, 11, size=s) / 10
        assert np.array_equal(_kernels.residual_bound_numpy(q, r, 1e-9), _kernels.residual_bound_numba(q, r, 1e-9))
        t_np = best_of(lambda: _kernels.residual_bound_numpy(q, r, 1e-9), args.repeat)
        t_nb = best_of(lambda: _kernels.residual_bound_numba(q, r, 1e-9), args.repeat)
        print(f"{'residual_bound':<16}{f'{m}x{s}':>8}{t_np * 1e3:>14.3f}{t_nb * 1e3:>14.3f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
