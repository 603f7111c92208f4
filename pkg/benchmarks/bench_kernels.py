#!/usr/bin/env python3
"""Time the numba kernels against the numpy fallbacks on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Each kernel is run once untimed (JIT compile or cache load) and the best of
``--repeat`` runs is reported. Results from both backends are compared.
"""

import argparse
import time

import numpy as np

from classforge import kernels


def forms_pow_case(D):
    forms = kernels.backend_module("numpy").reduced_forms(np.int64(D))
    exps = np.arange(1, forms.shape[0] + 1, dtype=np.int64)
    return lambda k: k.forms_pow(forms, exps, np.int64(D))


def build_cases():
    return [
        ("reduced_forms", "-82044340", lambda k: k.reduced_forms(np.int64(-82044340))),
        ("reduced_forms", "-8388527", lambda k: k.reduced_forms(np.int64(-8388527))),
        ("forms_pow", "-82044340", forms_pow_case(-82044340)),
        ("r3_count", "8388527", lambda k: k.r3_count(np.int64(8388527))),
        ("r3_count", "20511085", lambda k: k.r3_count(np.int64(20511085))),
    ]


def best_of(fn, repeat):
    fn()
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(x, y):
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return int(x) == int(y)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"{'kernel':<15}{'input':>12}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}  agree")
    for name, label, fn in build_cases():
        times, outs = {}, {}
        for b in backends:
            times[b], outs[b] = best_of(lambda: fn(kernels.backend_module(b)), args.repeat)
        row = f"{name:<15}{label:>12}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if "numba" in times:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
            row += "  " + str(same(outs["numba"], outs["numpy"]))
        print(row)


if __name__ == "__main__":
    main()
