"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_backends.py [--quick]

Each row times one kernel-heavy operation under both backends and checks
that the results are identical before reporting.
"""

import argparse
import math
import time

import numpy as np

from gadj import _kernels, dj
from gadj.dj import BooleanFunction
from gadj.multivector import Multivector, geometric_product
from gadj.quantum import dj_reference


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def agree(a, b):
    # butterfly summation order may differ by an ulp; algebraic results must match exactly
    if isinstance(a, float):
        return math.isclose(a, b, rel_tol=0, abs_tol=1e-12)
    return a == b


def random_multivector(rng, m, k):
    masks = rng.choice(1 << m, size=k, replace=False)
    return Multivector(m, zip(masks.tolist(), rng.integers(-3, 4, size=k).tolist()))


def cases(quick):
    rng = np.random.default_rng(0)
    big_n = 16 if quick else 20
    full_n = 9 if quick else 11
    f_big = BooleanFunction.random(big_n, rng)
    f_full = BooleanFunction.random(full_n, rng)
    x, y = random_multivector(rng, 14, 600), random_multivector(rng, 14, 600)
    pairs = rng.integers(0, 1 << 12, size=(2000, 2)).tolist()

    def cold_run():
        dj.clear_caches()
        return dj.run(f_big).scalar

    return [
        ("blade_sign x2000", lambda: [_kernels.active().blade_sign(a, b) for a, b in pairs]),
        ("sparse product 600x600, m=14", lambda: geometric_product(x, y)),
        (f"pipeline scalar-only n={big_n} (cold)", cold_run),
        (f"pipeline full n={full_n}", lambda: dj.run(f_full, full=True).scalar),
        (f"state-vector reference n={big_n}", lambda: dj_reference(f_big)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.available()
    print(f"{'case':<38}" + "".join(f"{b + ' ms':>14}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases(args.quick):
        times, results = [], []
        for b in backends:
            with _kernels.use_backend(b):
                t, out = best_of(fn, args.repeat)
            times.append(t)
            results.append(out)
        assert all(agree(r, results[0]) for r in results[1:]), f"backends disagree on {name}"
        speedup = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
        print(f"{name:<38}" + "".join(f"{t * 1e3:>14.2f}" for t in times) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
