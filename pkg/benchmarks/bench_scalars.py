"""Benchmark: Cython scalar kernel vs pure-Python fallback.

Run:  python benchmarks/bench_scalars.py [reps]

Times the operations everything else funnels through: Gaussian-rational
multiply/add chains, truncated-series convolution, exp and invert.
"""

import sys
import time
from fractions import Fraction

from ncweil.scalars import _pure

try:
    from ncweil.scalars import _speedups
except ImportError:
    _speedups = None


def bench(backend, reps):
    G, T = backend.GaussRational, backend.TruncSeries
    xs = [G(k * 3 - 7, k % 5, k + 1) for k in range(1, 40)]
    ys = list(reversed(xs))
    t0 = time.perf_counter()
    for _ in range(reps):
        for x, y in zip(xs, ys):
            _ = x * y + x - y
    t_gauss = time.perf_counter() - t0

    coeffs = [G(k + 1, 2 * k - 3, 3) for k in range(5)]
    a = T(coeffs, 4)
    b = T(list(reversed(coeffs)), 4)
    t0 = time.perf_counter()
    for _ in range(reps * 20):
        c = a * b
        c = c + a
    t_series = time.perf_counter() - t0

    th = T.theta(4).scalar_mul(G(3, 1, 7))
    t0 = time.perf_counter()
    for _ in range(reps * 5):
        e = th.exp()
        e.invert()
    t_exp = time.perf_counter() - t0
    return t_gauss, t_series, t_exp


def main():
    reps = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    rows = [("pure", bench(_pure, reps))]
    if _speedups is not None:
        rows.append(("cython", bench(_speedups, reps)))
    print(f"{'backend':<8} {'gauss-mul':>10} {'series-mul':>11} {'exp/invert':>11}")
    for name, (tg, ts, te) in rows:
        print(f"{name:<8} {tg:>9.3f}s {ts:>10.3f}s {te:>10.3f}s")
    if _speedups is not None:
        (tg0, ts0, te0), (tg1, ts1, te1) = rows[0][1], rows[1][1]
        print(
            f"speedup  {tg0 / tg1:>9.2f}x {ts0 / ts1:>10.2f}x {te0 / te1:>10.2f}x"
        )
    else:
        print("cython backend not built; only the fallback was timed")


if __name__ == "__main__":
    main()
