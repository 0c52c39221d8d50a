"""Compare the numba-compiled and pure-numpy convolution paths.

Usage:  python benchmarks/blur_benchmark.py [--height 1080] [--sigma 4.0] [--repeats 5]

The first numba call includes JIT compilation; a warmup run is timed
separately so the steady-state numbers are comparable.
"""
from __future__ import annotations

import argparse
from timeit import default_timer as timer

import numpy as np

from rotoblur._accel import NUMBA_ENABLED
from rotoblur._conv import separable_blur_array
from rotoblur.blur import make_kernel


def time_backend(backend: str, arr: np.ndarray, weights: np.ndarray, repeats: int) -> tuple[float, float]:
    start = timer()
    result = separable_blur_array(arr, weights, backend=backend)
    warmup = timer() - start
    best = float("inf")
    for _ in range(repeats):
        start = timer()
        result = separable_blur_array(arr, weights, backend=backend)
        best = min(best, timer() - start)
    assert result.shape == arr.shape
    return warmup, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--height", type=int, default=1080)
    parser.add_argument("--sigma", type=float, default=4.0)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    width = args.height * 16 // 9
    rng = np.random.default_rng(0)
    arr = rng.random((args.height, width, 3))
    weights = make_kernel(args.sigma).weights
    print(f"image {args.height}x{width}x3, sigma {args.sigma}, kernel {weights.shape[0]} taps")

    warmup, best = time_backend("numpy", arr, weights, args.repeats)
    print(f"numpy : best {best * 1000:8.2f} ms  (first call {warmup * 1000:.2f} ms)")

    if not NUMBA_ENABLED:
        print("numba : unavailable (not installed or ROTOBLUR_NO_NUMBA set)")
        return
    warmup, best_jit = time_backend("numba", arr, weights, args.repeats)
    print(f"numba : best {best_jit * 1000:8.2f} ms  (first call incl. compile {warmup * 1000:.2f} ms)")
    print(f"speedup: {best / best_jit:.2f}x")

    out_np = separable_blur_array(arr, weights, backend="numpy")
    out_nb = separable_blur_array(arr, weights, backend="numba")
    print(f"outputs bit-identical: {np.array_equal(out_np, out_nb)}")


if __name__ == "__main__":
    main()
