"""Time the compiled and pure-Python grid kernels, and the full survey built on them.

    python benchmarks/bench_survey.py [-p 9] [-q 7] [--rmax 2000] [--smax 30] [--repeat 5]
"""
import argparse
import time

from torusfill import _accel
from torusfill.phenomena import survey
from torusfill.torus_knot import TorusKnot


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-p", type=int, default=9)
    ap.add_argument("-q", type=int, default=7)
    ap.add_argument("--rmax", type=int, default=2000)
    ap.add_argument("--smax", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=5)
    a = ap.parse_args()
    K = TorusKnot(a.p, a.q)
    backends = ["python"] + (["compiled"] if _accel.HAVE_EXTENSION else [])
    if not _accel.HAVE_EXTENSION:
        print("compiled kernel not built; timing the Python fallback only")
    base = {}
    for be in backends:
        n = len(_accel.classify_grid(K.p, K.q, a.rmax, a.smax, backend=be)[0])
        k = best_of(lambda: _accel.classify_grid(K.p, K.q, a.rmax, a.smax, backend=be), a.repeat)
        s = best_of(lambda: survey(K, a.rmax, a.smax, backend=be), a.repeat)
        base[be] = k
        print(f"{be:9s} kernel {k * 1e3:8.2f} ms   survey {s * 1e3:8.2f} ms   ({n} slopes)")
    if len(base) == 2:
        print(f"kernel speed-up {base['python'] / base['compiled']:.1f}x")


if __name__ == "__main__":
    main()
