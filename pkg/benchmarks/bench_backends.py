"""Time the numba and numpy enumeration kernels on the same workloads.

    python3 benchmarks/bench_backends.py [--repeat 3] [--workers 4]

Both backends must return identical colorings; the script exits non-zero
if they disagree.
"""

import argparse
import sys
import time

from quandlecolor import kernels
from quandlecolor.presentation import chart_T, chart_T0, chart_T_star, count_colorings
from quandlecolor.quandle import make_q_n

WORKLOADS = [
    ("T_0", chart_T0, 6),
    ("T_5", lambda: chart_T(5), 7),
    ("T*_9", lambda: chart_T_star(9), 8),
    ("T_4", lambda: chart_T(4), 10),
    ("T_12", lambda: chart_T(12), 12),
    ("T_19", lambda: chart_T(19), 24),
    ("T_40", lambda: chart_T(40), 40),
]


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args(argv)

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    # compile outside the timed region
    for b in backends:
        count_colorings(chart_T(1), make_q_n(3), backend=b)

    print(f"{'chart':<6} {'N':>3} {'assignments':>12} {'count':>6} "
          + " ".join(f"{b + ' (s)':>11}" for b in backends) + "   speedup")
    ok = True
    for name, build, n in WORKLOADS:
        p, q = build(), make_q_n(n)
        timings, reports = {}, {}
        for b in backends:
            timings[b], reports[b] = best_time(
                lambda: count_colorings(p, q, backend=b, workers=args.workers), args.repeat)
        if len({r.colorings for r in reports.values()}) != 1:
            ok = False
        speed = (f"{timings['numpy'] / timings['numba']:8.1f}x" if "numba" in timings else "")
        print(f"{name:<6} {n:>3} {n ** p.rank:>12} {reports['numpy'].count:>6} "
              + " ".join(f"{timings[b]:>11.4f}" for b in backends) + "  " + speed)
    if not ok:
        print("backends disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
