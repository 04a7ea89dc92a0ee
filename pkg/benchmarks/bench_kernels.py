"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Shapes are the ones a default-config training step actually sees (batch 8,
64x64 input, stride-4 first stage).
"""

import argparse
import timeit

import numpy as np

from cwfa_lab import _kernels_py as py

try:
    from cwfa_lab import _kernels as cy
except ImportError:
    cy = None


def cases():
    rng = np.random.default_rng(0)
    f32 = np.float32
    ln_x = rng.standard_normal((8 * 256, 16)).astype(f32)
    g = rng.standard_normal(16).astype(f32)
    b = rng.standard_normal(16).astype(f32)
    _, xhat, rstd = py.layer_norm_fwd(ln_x, g, b, 1e-5)
    att = rng.standard_normal((8 * 256, 256)).astype(f32)
    sm = py.softmax_fwd(att.copy())
    flat = rng.standard_normal(8 * 256 * 64).astype(f32)
    img = rng.standard_normal((8, 3, 64, 64)).astype(f32)
    cols = py.im2col(img, 7, 4, 3)
    pred = rng.integers(0, 5, (200, 64, 64))
    gt = rng.integers(0, 5, (200, 64, 64))
    offs = rng.uniform(-1, 1, 65 * 65 - 4)
    return {
        "layer_norm_fwd": lambda m: m.layer_norm_fwd(ln_x, g, b, 1e-5),
        "layer_norm_bwd": lambda m: m.layer_norm_bwd(ln_x, xhat, rstd, g),
        "softmax_fwd": lambda m: m.softmax_fwd(att),
        "softmax_bwd": lambda m: m.softmax_bwd(att, sm),
        "gelu_fwd": lambda m: m.gelu_fwd(flat),
        "gelu_bwd": lambda m: m.gelu_bwd(flat, flat),
        "im2col": lambda m: m.im2col(img, 7, 4, 3),
        "col2im": lambda m: m.col2im(cols, img.shape, 7, 4, 3),
        "confusion_matrix": lambda m: m.confusion_matrix(pred, gt, 5, 255),
        "diamond_square": lambda m: m.diamond_square(np.zeros((65, 65)), offs),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; only the numpy timings are shown")
    print(f"{'kernel':<18}{'numpy ms':>10}{'cython ms':>11}{'speedup':>9}")
    for name, fn in cases().items():
        t_py = min(timeit.repeat(lambda: fn(py), number=3, repeat=args.repeat)) / 3 * 1e3
        if cy is None:
            print(f"{name:<18}{t_py:>10.3f}")
            continue
        t_cy = min(timeit.repeat(lambda: fn(cy), number=3, repeat=args.repeat)) / 3 * 1e3
        print(f"{name:<18}{t_py:>10.3f}{t_cy:>11.3f}{t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
