"""Pure-Python/numpy implementations of the kernel surface.

Used when the compiled extension is missing or ``GADJ_PURE_PYTHON`` is set.
Every function matches the signature and results of ``_ckernels``.
"""

from __future__ import annotations

import numpy as np

NAME = "python"

_ONE = np.uint64(1)


def _low_bits(p: int) -> np.uint64:
    return np.uint64((1 << p) - 1)


def blade_sign(a: int, b: int) -> int:
    a = int(a)
    b = int(b)
    d = 0
    while b:
        low = b & -b
        d += (a & (low - 1)).bit_count()
        b ^= low
    return -1 if d & 1 else 1


def signs_pairwise(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    left = np.asarray(left, dtype=np.uint64)
    right = np.asarray(right, dtype=np.uint64)
    d = np.zeros(left.shape, dtype=np.int64)
    top = int(np.bitwise_or.reduce(right, initial=np.uint64(0))).bit_length()
    for p in range(top):
        bit = (right >> np.uint64(p)) & _ONE
        d += bit.astype(np.int64) * np.bitwise_count(left & _low_bits(p))
    return (1 - 2 * (d & 1)).astype(np.int8)


def _signs_left(a: int, masks: np.ndarray) -> np.ndarray:
    # sign of a * masks[i]
    return signs_pairwise(np.full(masks.shape, a, dtype=np.uint64), masks)


def _signs_right(masks: np.ndarray, b: int) -> np.ndarray:
    # sign of masks[i] * b
    d = np.zeros(masks.shape, dtype=np.int64)
    b = int(b)
    while b:
        low = b & -b
        d += np.bitwise_count(masks & np.uint64(low - 1))
        b ^= low
    return (1 - 2 * (d & 1)).astype(np.int8)


def product_dense(mx, cx, my, cy, m: int) -> np.ndarray:
    out = np.zeros(1 << m, dtype=np.float64)
    # XOR with a fixed mask is a bijection, so fancy-index accumulation is safe.
    if len(mx) <= len(my):
        for a, ca in zip(mx.tolist(), cx.tolist()):
            idx = my ^ np.uint64(a)
            out[idx] += ca * cy * _signs_left(a, my)
    else:
        for b, cb in zip(my.tolist(), cy.tolist()):
            idx = mx ^ np.uint64(b)
            out[idx] += cb * cx * _signs_right(mx, b)
    return out


def product_pairs(mx, cx, my, cy):
    masks = (mx[:, None] ^ my[None, :]).ravel()
    left = np.repeat(mx, len(my))
    right = np.tile(my, len(mx))
    coefs = np.outer(cx, cy).ravel() * signs_pairwise(left, right)
    return masks, coefs


def scalar_of_product(mx, cx, my, cy) -> float:
    common, ix, iy = np.intersect1d(mx, my, assume_unique=True, return_indices=True)
    if len(common) == 0:
        return 0.0
    signs = signs_pairwise(common, common)
    return float(np.sum(signs * cx[ix] * cy[iy]))


def hadamard_inplace(amps: np.ndarray, q: int) -> None:
    if amps.shape[0] != 1 << q:
        raise ValueError("amplitude array length must be 2**q")
    r = 0.7071067811865476
    for p in range(q):
        view = amps.reshape(-1, 2, 1 << p)
        u = view[:, 0, :].copy()
        v = view[:, 1, :]
        view[:, 0, :] = (u + v) * r
        view[:, 1, :] = (u - v) * r
