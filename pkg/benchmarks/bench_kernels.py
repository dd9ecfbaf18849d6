"""
Compare the numba and numpy backends of the homomorphism search.

    python3 benchmarks/bench_kernels.py [--repeat N]

The numba column excludes the one-off compilation, which is timed
separately.  Set ORELT_DISABLE_NUMBA=1 to check the fallback runs alone.
"""
import argparse
import time

import numpy as np

from orelt import _accel, kernels
from orelt.words import Word, commutator

CASES = [
    ("[a,b]^2 into S4", 4, 2, [commutator([1], [2]) ** 2], Word()),
    ("[a,b]^2 into S5", 5, 2, [commutator([1], [2]) ** 2], Word()),
    ("(t^-1 a^-1 t a^2)^2 into S5", 5, 2, [Word([-2, -1, 2, 1, 1]) ** 2], Word()),
    ("[a,b]^3 into S5, order>=3", 5, 2, [commutator([1], [2]) ** 3], commutator([1], [2])),
    ("a^2, b^3, (ab)^5 into S6", 6, 2, [Word([1, 1]), Word([2] * 3), Word([1, 2] * 5)], Word()),
    ("[a,b]^2 into S6", 6, 2, [commutator([1], [2]) ** 2], Word()),
    ("(abc)^2 [a,c] into S5 (3 gens)", 5, 3, [Word([1, 2, 3] * 2) * commutator([1], [3])], Word()),
]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend available: {_accel.backend()}")
    if _accel.HAVE_NUMBA:
        t0 = time.perf_counter()
        kernels.search(3, 2, [Word([1, 1])], use_numba=True)
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")
    print(f"{'case':34} {'homs':>7} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for title, k, m, rels, w in CASES:
        mode = kernels.ACCEPT_ORDER_AT_LEAST if w else kernels.ACCEPT_ALL
        param = 3 if w else 0
        t_np, rows_np = timed(lambda: kernels.search(k, m, rels, w, mode, param, use_numba=False), args.repeat)
        if _accel.HAVE_NUMBA:
            t_nb, rows_nb = timed(lambda: kernels.search(k, m, rels, w, mode, param, use_numba=True), args.repeat)
            assert np.array_equal(np.asarray(rows_np), np.asarray(rows_nb)), title
            nb, sp = f"{t_nb:9.4f}", f"{t_np / t_nb:7.1f}x"
        else:
            nb, sp = f"{'-':>9}", f"{'-':>8}"
        print(f"{title:34} {len(rows_np):7d} {t_np:9.4f} {nb} {sp}")


if __name__ == "__main__":
    main()
