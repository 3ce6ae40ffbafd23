"""Compare the pure-Python and compiled kernel backends.

Run as a script: python benchmarks/bench_backends.py
"""

import os
import time

from dynunary import _kernels_py

try:
    from dynunary import _kernels_cy
except ImportError:
    _kernels_cy = None


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(kernels):
    results = {}

    mib = os.urandom(1 << 20)
    v = int.from_bytes(mib, "big")
    n = 8 * len(mib)
    results["encode 1 MiB"] = _time(lambda: kernels.encode_value(v, n, 0))
    e = kernels.encode_value(v, n, 0)
    results["decode 1 MiB"] = _time(lambda: kernels.decode_value(e, n, 0))

    results["iterate 16-bit x1e5"] = _time(
        lambda: kernels.iterate_value(2014, 16, 0, True, 100_000)
    )

    results["partition n=16"] = _time(lambda: kernels.partition_values(16, 0, True))
    results["partition n=20"] = _time(lambda: kernels.partition_values(20, 0, True))
    return results


def main():
    backends = [("pure", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("compiled", _kernels_cy))
    else:
        print("compiled backend not built; benchmarking pure only")

    all_results = {name: bench(mod) for name, mod in backends}
    names = list(all_results)
    width = max(len(label) for label in all_results[names[0]])
    header = f"{'benchmark':<{width}}  " + "  ".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    for label in all_results[names[0]]:
        row = f"{label:<{width}}  "
        row += "  ".join(f"{all_results[n][label]:>11.4f}s" for n in names)
        if len(names) == 2:
            pure, comp = all_results["pure"][label], all_results["compiled"][label]
            row += f"  {pure / comp:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
