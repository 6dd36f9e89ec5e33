"""Compare the compiled check-character kernels against the pure-Python ones.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--blade N] [--reps N]

Times weighted_sum over a random string batch and the exhaustive
corruption sweep at increasing blade depths. The sweep is the reason
the compiled backend exists: corruption counts grow by a factor of
roughly 29 per blade position.
"""

import argparse
import random
import time

from arkvoc import _kernels_py

try:
    from arkvoc import _ckernels
except ImportError:
    _ckernels = None

ALPHABET = _kernels_py.ALPHABET


def time_call(fn, *args, reps=1):
    best = float("inf")
    result = None
    for _ in range(reps):
        started = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - started)
    return best, result


def bench_weighted_sum(backends, reps):
    rng = random.Random(7)
    batch = ["99152/" + "".join(rng.choice(ALPHABET) for _ in range(12))
             for _ in range(50_000)]

    def run(module):
        ws = module.weighted_sum
        return sum(ws(s) for s in batch)

    rows = []
    for name, module in backends:
        seconds, checksum = time_call(run, module, reps=reps)
        rows.append((f"weighted_sum x{len(batch)}", name, seconds, checksum))
    return rows


def bench_sweep(backends, max_blade, reps):
    rows = []
    for blade in range(1, max_blade + 1):
        for name, module in backends:
            if name == "python" and blade > 3:
                continue  # minutes, not seconds; the counts agree at <= 3
            seconds, counts = time_call(module.corruption_sweep, "99152/",
                                        blade, reps=reps)
            bases, corrupted, undetected = counts
            rows.append((f"sweep blade<={blade} ({corrupted:,} corruptions)",
                         name, seconds, undetected))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--blade", type=int, default=4,
                        help="max blade depth for the sweep benchmark")
    parser.add_argument("--reps", type=int, default=3,
                        help="repetitions; the best time is reported")
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    else:
        print("compiled backend not built; timing pure Python only\n")

    rows = bench_weighted_sum(backends, args.reps)
    rows += bench_sweep(backends, args.blade, args.reps)

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'backend':<7}  {'seconds':>10}  speedup")
    baseline = {}
    for label, name, seconds, _ in rows:
        if name == "python":
            baseline[label] = seconds
    for label, name, seconds, _ in rows:
        base = baseline.get(label)
        speedup = f"{base / seconds:6.1f}x" if base and name != "python" else "      -"
        print(f"{label:<{width}}  {name:<7}  {seconds:>10.4f}  {speedup}")


if __name__ == "__main__":
    main()
