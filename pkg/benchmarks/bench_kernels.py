"""Compare the compiled and pure-Python kernel backends.

Times the weight-distribution kernel on the extended construction and the
three certification scans on a catalog member, at a range of field sizes.
Run as:  python3 benchmarks/bench_kernels.py [--m-min 5] [--m-max 8] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from ovalcodes import constructions as cx
from ovalcodes import kernels, opoly
from ovalcodes.gf2m import field_new


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m-min", type=int, default=5)
    parser.add_argument("--m-max", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    names = kernels.available_backends()
    if "c" not in names:
        print("compiled backend not available; building timings for 'py' only")
    backends = [(name, kernels.get_backend(name)) for name in names]

    print(f"{'task':<28}{'m':>3}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for m in range(args.m_min, args.m_max + 1):
        ctx = field_new(m)
        spec = opoly.catalog(m, ctx)[0]
        g = cx.build_construction("extended", spec, ctx)
        table = opoly.eval_table(spec, ctx)

        tasks = [
            ("wdist_k3 (extended)", lambda impl: kernels.wdist_k3(g.rows, g.n, ctx, impl=impl)),
            ("segre_scan", lambda impl: kernels.segre_scan(table, ctx, impl=impl)),
            ("two_to_one_scan", lambda impl: kernels.two_to_one_scan(table, ctx, impl=impl)),
            ("slope_scan", lambda impl: kernels.slope_scan(table, ctx, impl=impl)),
        ]
        for label, call in tasks:
            times = []
            results = []
            for _, impl in backends:
                dt, out = best_of(lambda: call(impl), args.repeat)
                times.append(dt)
                results.append(out)
            if len(results) == 2 and results[0] != results[1]:
                raise SystemExit(f"backend disagreement on {label} at m={m}")
            cells = "".join(f"{dt * 1000:>10.2f}ms" for dt in times)
            speed = f"x{times[-1] / times[0]:.1f}" if len(times) == 2 else "-"
            print(f"{label:<28}{m:>3}{cells}{speed:>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
