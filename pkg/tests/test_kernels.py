import os
import subprocess
import sys

import numpy as np
import pytest

from gadj import _kernels
from gadj._kernels import _pykernels
from gadj.blade import Blade, sign_oracle

from conftest import random_masks


def test_backend_registry():
    assert "python" in _kernels.available()
    with pytest.raises(ValueError):
        _kernels.set_backend("fortran")


def test_use_backend_restores():
    before = _kernels.active()
    with _kernels.use_backend("python") as k:
        assert k is _pykernels
    assert _kernels.active() is before


@pytest.mark.parametrize("m", [1, 3, 7, 12])
def test_blade_sign_matches_oracle(backend, m):
    rng = np.random.default_rng(m)
    for _ in range(300):
        a, b = (int(v) for v in rng.integers(0, 1 << m, size=2))
        assert backend.blade_sign(a, b) == sign_oracle(Blade(a, m), Blade(b, m))


def test_blade_sign_wide_masks(backend):
    a = (1 << 62) | (1 << 40) | 5
    b = (1 << 61) | (1 << 41) | 3
    assert backend.blade_sign(a, b) == sign_oracle(Blade(a, 63), Blade(b, 63))


def test_signs_pairwise(backend):
    rng = np.random.default_rng(1)
    left = rng.integers(0, 1 << 10, size=200).astype(np.uint64)
    right = rng.integers(0, 1 << 10, size=200).astype(np.uint64)
    got = backend.signs_pairwise(left, right)
    want = [sign_oracle(Blade(int(a), 10), Blade(int(b), 10)) for a, b in zip(left, right)]
    assert got.tolist() == want


def test_product_dense_vs_pairs(backend):
    rng = np.random.default_rng(2)
    m = 8
    mx, my = random_masks(rng, m, 40), random_masks(rng, m, 25)
    cx = rng.integers(-3, 4, size=len(mx)).astype(float)
    cy = rng.integers(-3, 4, size=len(my)).astype(float)
    dense = backend.product_dense(mx, cx, my, cy, m)
    masks, coefs = backend.product_pairs(mx, cx, my, cy)
    ref = np.zeros(1 << m)
    np.add.at(ref, masks.astype(np.int64), coefs)
    assert np.array_equal(dense, ref)


def test_backends_agree_on_products():
    if "compiled" not in _kernels.available():
        pytest.skip("compiled kernels not built")
    c = _kernels.BACKENDS["compiled"]
    rng = np.random.default_rng(3)
    m = 11
    mx, my = random_masks(rng, m, 300), random_masks(rng, m, 500)
    cx, cy = rng.normal(size=len(mx)), rng.normal(size=len(my))
    np.testing.assert_allclose(c.product_dense(mx, cx, my, cy, m), _pykernels.product_dense(mx, cx, my, cy, m), atol=1e-12)
    assert c.scalar_of_product(mx, cx, my, cy) == pytest.approx(_pykernels.scalar_of_product(mx, cx, my, cy), abs=1e-12)


def test_scalar_of_product_disjoint(backend):
    mx = np.array([1, 4], dtype=np.uint64)
    my = np.array([2, 8], dtype=np.uint64)
    assert backend.scalar_of_product(mx, np.ones(2), my, np.ones(2)) == 0.0


@pytest.mark.parametrize("q", [1, 2, 5, 9])
def test_hadamard_matches_dense_matrix(backend, q):
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    full = np.array([[1.0]])
    for _ in range(q):
        full = np.kron(full, h)
    rng = np.random.default_rng(q)
    amps = rng.normal(size=1 << q) + 1j * rng.normal(size=1 << q)
    want = full @ amps
    got = amps.copy()
    backend.hadamard_inplace(got, q)
    np.testing.assert_allclose(got, want, atol=1e-12)


def test_hadamard_rejects_bad_length(backend):
    with pytest.raises(ValueError):
        backend.hadamard_inplace(np.zeros(6, dtype=complex), 3)


def test_env_var_forces_fallback():
    code = "import gadj; print(gadj.kernel_backend().NAME)"
    proc = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True,
        env={**os.environ, "GADJ_PURE_PYTHON": "1"},
    )
    assert proc.stdout.strip() == "python"
