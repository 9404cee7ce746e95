"""Compare the numba and numpy kernel backends on the counting workloads.

    python benchmarks/bench_kernels.py [--repeat 3]

The first numba call per signature pays compilation (or cache load), so each
case is warmed up once before timing.
"""

import argparse
import time

import numpy as np

from contraction_semigroups.kernels import FAMILY_CODES, get_backend

CASES = [
    ("filtered_counts", 7, None),
    ("filtered_counts", 8, None),
    ("direct_counts", 12, "orci"),
    ("direct_counts", 14, "oci"),
    ("contraction_agreement", 8, None),
]


def run_case(kern, name, n, family):
    fn = getattr(kern, name)
    if family is None:
        return [fn(n, lo) for lo in range(n + 1)]
    return [fn(n, lo, FAMILY_CODES[family]) for lo in range(n + 1)]


def summarise(parts):
    return np.sum([np.asarray(p, dtype=np.int64) for p in parts], axis=0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-numpy-direct-14", action="store_true",
                    help="skip the slowest numpy case")
    args = ap.parse_args()

    backends = {name: get_backend(name) for name in ("numba", "numpy")}
    print(f"{'case':34s} {'numba s':>10s} {'numpy s':>10s} {'ratio':>8s}")
    for name, n, family in CASES:
        label = f"{name}(n={n}{', ' + family if family else ''})"
        best = {}
        results = {}
        for bname, kern in backends.items():
            if bname == "numpy" and args.skip_numpy_direct_14 and name == "direct_counts" and n == 14:
                continue
            results[bname] = summarise(run_case(kern, name, n, family))
            times = []
            for _ in range(args.repeat if bname == "numba" else 1):
                t0 = time.perf_counter()
                run_case(kern, name, n, family)
                times.append(time.perf_counter() - t0)
            best[bname] = min(times)
        if len(results) == 2 and not np.array_equal(results["numba"], results["numpy"]):
            raise SystemExit(f"backends disagree on {label}")
        nb = best["numba"]
        npy = best.get("numpy")
        cells = f"{npy:10.3f} {npy / nb:8.1f}" if npy is not None else f"{'-':>10s} {'-':>8s}"
        print(f"{label:34s} {nb:10.3f} {cells}")


if __name__ == "__main__":
    main()
