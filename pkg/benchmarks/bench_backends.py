"""Benchmark the numba kernels against the pure-numpy fallback.

Runs each hot kernel under both implementations on realistic inputs
(collision scan over a full m=7 image table, interpolation and sparse
evaluation over GF(2^9)) and prints a timing table.  Results are
asserted identical across backends before timing.

Usage:
    python benchmarks/bench_backends.py [--full]

--full adds the GF(2^15) interpolation (the m=5 lift workload, slow on
the numpy path).
"""

import argparse
import time

import numpy as np

from rotaperm import _kernels
from rotaperm.family import named_family
from rotaperm.field import FieldCtx
from rotaperm.lift import ext_new
from rotaperm.permcheck import family_images


def timeit(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def row(label, numba_s, numpy_s):
    speedup = numpy_s / numba_s if numba_s > 0 else float("inf")
    print(f"{label:34s} numba {numba_s * 1e3:9.2f} ms   numpy {numpy_s * 1e3:9.2f} ms   x{speedup:5.1f}")


def bench_scan():
    ctx = FieldCtx(7)
    packed = family_images(ctx, named_family("T2"))
    space = 1 << 21
    _kernels.scan_bijection_numba(packed, space)  # compile outside the timing
    tb, rb = timeit(_kernels.scan_bijection_numba, packed, space)
    tn, rn = timeit(_kernels.scan_bijection_numpy, packed, space)
    assert tuple(rb) == tuple(rn)
    row("collision scan (2^21 points)", tb, tn)


def bench_interp(base_m, full_label):
    ext = ext_new(FieldCtx(base_m))
    ext._ensure_tables()
    rng = np.random.default_rng(7)
    logv = rng.integers(-1, ext.group, size=ext.group, dtype=np.int64)
    _kernels.interp_coeffs_numba(logv[:8].copy(), ext._exp, 7)  # warm compile on a tiny case
    tb, rb = timeit(_kernels.interp_coeffs_numba, logv, ext._exp, ext.group, repeat=1)
    tn, rn = timeit(_kernels.interp_coeffs_numpy, logv, ext._exp, ext.group, repeat=1)
    assert np.array_equal(rb, rn)
    row(f"interpolation ({full_label})", tb, tn)


def bench_eval(base_m):
    ext = ext_new(FieldCtx(base_m))
    ext._ensure_tables()
    rng = np.random.default_rng(11)
    n_terms = 64
    exps = rng.integers(1, ext.group, size=n_terms, dtype=np.int64)
    logcs = rng.integers(0, ext.group, size=n_terms, dtype=np.int64)
    _kernels.eval_terms_numba(exps[:2].copy(), logcs[:2].copy(), ext._exp, ext.group)
    tb, rb = timeit(_kernels.eval_terms_numba, exps, logcs, ext._exp, ext.group)
    tn, rn = timeit(_kernels.eval_terms_numpy, exps, logcs, ext._exp, ext.group)
    assert np.array_equal(rb, rn)
    row(f"sparse evaluation (64 terms, 2^{3 * base_m})", tb, tn)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the GF(2^15) interpolation")
    args = parser.parse_args()
    if _kernels.BACKEND != "numba":
        parser.error("run without ROTAPERM_BACKEND=numpy: both backends are timed explicitly")
    print("kernel timings (best of runs), identical outputs asserted\n")
    bench_scan()
    bench_interp(3, "GF(2^9), 511 coefficients")
    bench_eval(3)
    if args.full:
        bench_interp(5, "GF(2^15), 32767 coefficients")


if __name__ == "__main__":
    main()
