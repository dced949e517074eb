"""Compare the compiled and numpy propagator kernels.

    python benchmarks/bench_propagate.py [--repeat 5]

Times one midpoint product per step count with each backend, reports the
best of ``--repeat`` runs and the max entry difference between the two
results, then times a converged xi evaluation end to end.
"""
import argparse
import time

import numpy as np

from squeezed_otto import _propagate_py, nmr_params
from squeezed_otto.drive import DriveSchedule, adiabaticity_xi, propagate

try:
    from squeezed_otto import _propagate
except ImportError:
    _propagate = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--tau-ms", type=float, default=1.0)
    args = ap.parse_args()

    sched = DriveSchedule.from_params(nmr_params(), args.tau_ms * 1e-3)
    kernels = [("python", _propagate_py.midpoint_product)]
    if _propagate is not None:
        kernels.insert(0, ("cython", _propagate.midpoint_product))
    else:
        print("compiled kernel not built; timing the numpy fallback only")

    print(f"{'steps':>9} " + " ".join(f"{name:>12}" for name, _ in kernels) + "   speedup   max|dU|")
    for exp in (10, 14, 18, 20, 22):
        n = 1 << exp
        results = [best_of(lambda k=k: propagate(sched, n, kernel=k).u, args.repeat) for _, k in kernels]
        line = f"{n:>9} " + " ".join(f"{t * 1e3:>10.2f}ms" for t, _ in results)
        if len(results) == 2:
            diff = np.max(np.abs(results[0][1] - results[1][1]))
            line += f"   {results[1][0] / results[0][0]:>6.1f}x   {diff:.1e}"
        print(line)

    for name, k in kernels:
        t, res = best_of(lambda k=k: adiabaticity_xi(sched, kernel=k), max(1, args.repeat // 2))
        print(f"converged xi ({name}): {res.xi:.12f} with {res.steps_used} steps in {t * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
