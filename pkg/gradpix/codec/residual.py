"""
Residual Mapping
================
Prediction errors wrap modulo 2**bit_depth, so every (actual, predicted)
pair maps to exactly one residual and back. Zigzag folding then orders
the wrapped residuals by magnitude: 0, -1, 1, -2, 2 ... -> 0, 1, 2, 3, 4 ...
"""

from typing import NewType

import numpy as np

ResidualSymbol = NewType("ResidualSymbol", int)


def residual(actual: int, predicted: int, bit_depth: int) -> ResidualSymbol:
    return ResidualSymbol((actual - predicted) & ((1 << bit_depth) - 1))


def reconstruct(r: ResidualSymbol, predicted: int, bit_depth: int) -> int:
    return (predicted + r) & ((1 << bit_depth) - 1)


def fold_residual(r: ResidualSymbol, bit_depth: int) -> int:
    half = 1 << (bit_depth - 1)
    v = r - (half << 1) if r >= half else r
    return -2 * v - 1 if v < 0 else 2 * v


def unfold_residual(code: int, bit_depth: int) -> ResidualSymbol:
    v = -((code + 1) >> 1) if code & 1 else code >> 1
    return ResidualSymbol(v & ((1 << bit_depth) - 1))


def fold_plane(residuals: np.ndarray, bit_depth: int) -> np.ndarray:
    """Vectorized fold_residual over wrapped residuals."""
    half = 1 << (bit_depth - 1)
    r = residuals.astype(np.int64)
    v = np.where(r >= half, r - (half << 1), r)
    return np.where(v < 0, -2 * v - 1, 2 * v)
