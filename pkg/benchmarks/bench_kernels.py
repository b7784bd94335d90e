"""Time the pure-Python kernels against the compiled ones.

Run as `python3 benchmarks/bench_kernels.py [--n N] [--count C]`.
The two backends are imported directly, so this works regardless of
which one the package itself selected.
"""

import argparse
import time

from ffext._kernels import _fallback
from ffext.field import FieldCtx

try:
    from ffext._kernels import _corekern
except ImportError:
    _corekern = None


def _kf(backend, ctx):
    return backend.make_field(
        ctx.p, ctx.e, ctx.exp_table, ctx.log_table, ctx.trace_table
    )


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench(n, count):
    ctx = FieldCtx(5)
    elems = [[0, 1], [1, 1], [0, 1, 1]]
    nums = [[1], [2, 1]]
    dens = [[0, 1], [1, 0, 1]]
    stop = min(5**n, count)

    backends = [("python", _fallback)]
    if _corekern is not None:
        backends.append(("compiled", _corekern))

    jobs = [
        ("scan_irreducibles", lambda b, kf: b.scan_irreducibles(kf, n, 0, stop)),
        ("kummer_class_scan", lambda b, kf: b.kummer_class_scan(kf, n, 0, stop, elems, 2)),
        ("hasse_class_scan", lambda b, kf: b.hasse_class_scan(kf, n, 0, stop, nums, dens)),
    ]

    print(f"field F_5, degree {n}, {stop} candidates per job\n")
    print(f"{'job':<20} " + " ".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for job, run in jobs:
        times = []
        results = []
        for _, backend in backends:
            kf = _kf(backend, ctx)
            out, dt = _time(run, backend, kf)
            times.append(dt)
            results.append(out)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"{job}: backends disagree")
        cells = " ".join(f"{dt:>11.3f}s" for dt in times)
        speedup = f"{times[0] / times[-1]:>8.1f}x" if len(times) == 2 else "      n/a"
        print(f"{job:<20} {cells}  {speedup}")
    if _corekern is None:
        print("\ncompiled backend not built; showing the fallback only")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=7, help="candidate degree")
    ap.add_argument("--count", type=int, default=30000, help="candidates per job")
    args = ap.parse_args()
    bench(args.n, args.count)


if __name__ == "__main__":
    main()
