"""Time the compiled kernels against the NumPy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import timeit

import numpy as np

from slideocam import DesignParams
from slideocam._backend import get_kernels
from slideocam.kinetostatics import driving_interval
from slideocam.optimizer import THREE_CAM_ETAS, TWO_CAM_ETAS, minimize_z, sweep

P, ETA, A4 = 50.0, 0.37, 9.0


def cases(k):
    psi = np.linspace(-1.0, 2 * math.pi + 1.0, 100_000)
    lo, hi = driving_interval(DesignParams(eta=ETA, a4=A4))
    return {
        "cam_curve 1e5": lambda: k.cam_curve(psi, P, ETA, A4),
        "kappa_pitch 1e5": lambda: k.kappa_pitch(psi, P, ETA),
        "extended_angle": lambda: k.extended_angle(P, ETA, A4, 1e-12 * P, 1e-12),
        "fraction_within 1e5": lambda: k.fraction_within(lo, hi, ETA, math.radians(30), 100_000),
    }


def best_of(fn, repeat):
    number = max(1, int(0.05 / max(timeit.timeit(fn, number=1), 1e-7)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    try:
        names = ["python", "cython"]
        get_kernels("cython")
    except ImportError:
        names = ["python"]
        print("compiled extension not built; timing the NumPy kernels only")

    timings = {n: {k: best_of(f, args.repeat) for k, f in cases(get_kernels(n)).items()} for n in names}
    print(f"{'kernel':<22}" + "".join(f"{n:>14}" for n in names) + ("   speed-up" if len(names) == 2 else ""))
    for case in timings["python"]:
        row = f"{case:<22}" + "".join(f"{timings[n][case] * 1e6:>11.1f} us" for n in names)
        if len(names) == 2:
            row += f"   {timings['python'][case] / timings['cython'][case]:8.1f}x"
        print(row)

    base = DesignParams(eta=0.5, a4=10.0)
    for label, fn in (
        ("sweep, 2 cams", lambda: sweep(TWO_CAM_ETAS, base, 2)),
        ("sweep, 3 cams", lambda: sweep(THREE_CAM_ETAS, base, 3)),
        ("minimize_z", lambda: minimize_z(base, (1 / math.pi, 0.8))),
    ):
        print(f"{label:<22}{best_of(fn, args.repeat) * 1e3:>11.2f} ms (active backend)")


if __name__ == "__main__":
    main()
