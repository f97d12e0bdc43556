# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for blade arithmetic and the Hadamard butterfly.

Mask convention: generator j of an m-generator algebra lives at integer bit
position m - j, so generator 1 is the most significant bit in play.  For a
product ``a * b`` each set bit of ``b`` at position p must move past every
set bit of ``a`` at a lower position (larger generator index).
"""

import numpy as np

from libc.stdint cimport uint64_t, int64_t, int8_t

cdef extern from *:
    """
    static inline int gadj_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int gadj_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int gadj_popcount(unsigned long long x) nogil
    int gadj_ctz(unsigned long long x) nogil


NAME = "compiled"


cdef inline int _sign(uint64_t a, uint64_t b) noexcept nogil:
    cdef int d = 0
    cdef int p
    while b:
        p = gadj_ctz(b)
        d += gadj_popcount(a & ((<uint64_t>1 << p) - 1))
        b &= b - 1
    return 1 - 2 * (d & 1)


def blade_sign(uint64_t a, uint64_t b):
    return _sign(a, b)


def signs_pairwise(const uint64_t[::1] left, const uint64_t[::1] right):
    """Elementwise sign of ``left[i] * right[i]``."""
    cdef Py_ssize_t i, n = left.shape[0]
    out = np.empty(n, dtype=np.int8)
    cdef int8_t[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = <int8_t>_sign(left[i], right[i])
    return out


def product_dense(const uint64_t[::1] mx, const double[::1] cx,
                  const uint64_t[::1] my, const double[::1] cy, int m):
    cdef Py_ssize_t i, j, nx = mx.shape[0], ny = my.shape[0]
    out = np.zeros(<Py_ssize_t>1 << m, dtype=np.float64)
    cdef double[::1] o = out
    cdef uint64_t a
    cdef double ca
    with nogil:
        for i in range(nx):
            a = mx[i]
            ca = cx[i]
            for j in range(ny):
                o[a ^ my[j]] += _sign(a, my[j]) * ca * cy[j]
    return out


def product_pairs(const uint64_t[::1] mx, const double[::1] cx,
                  const uint64_t[::1] my, const double[::1] cy):
    """Unreduced term list of the product; callers merge equal masks."""
    cdef Py_ssize_t i, j, k = 0, nx = mx.shape[0], ny = my.shape[0]
    masks = np.empty(nx * ny, dtype=np.uint64)
    coefs = np.empty(nx * ny, dtype=np.float64)
    cdef uint64_t[::1] om = masks
    cdef double[::1] oc = coefs
    with nogil:
        for i in range(nx):
            for j in range(ny):
                om[k] = mx[i] ^ my[j]
                oc[k] = _sign(mx[i], my[j]) * cx[i] * cy[j]
                k += 1
    return masks, coefs


def scalar_of_product(const uint64_t[::1] mx, const double[::1] cx,
                      const uint64_t[::1] my, const double[::1] cy):
    """Merge-join over ascending mask arrays; only equal masks reach the scalar blade."""
    cdef Py_ssize_t i = 0, j = 0, nx = mx.shape[0], ny = my.shape[0]
    cdef double acc = 0.0
    with nogil:
        while i < nx and j < ny:
            if mx[i] < my[j]:
                i += 1
            elif mx[i] > my[j]:
                j += 1
            else:
                acc += _sign(mx[i], my[j]) * cx[i] * cy[j]
                i += 1
                j += 1
    return acc


def hadamard_inplace(double complex[::1] amps, int q):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t half, start, i
    cdef double complex u, v
    cdef double r = 0.7071067811865476
    if n != (<Py_ssize_t>1 << q):
        raise ValueError("amplitude array length must be 2**q")
    with nogil:
        half = 1
        while half < n:
            start = 0
            while start < n:
                for i in range(start, start + half):
                    u = amps[i]
                    v = amps[i + half]
                    amps[i] = (u + v) * r
                    amps[i + half] = (u - v) * r
                start += 2 * half
            half *= 2
