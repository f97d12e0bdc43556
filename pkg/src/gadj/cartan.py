"""Complex matrix images of blades and multivectors.

Three representations are available:

* ``PAULI_PLANE`` (m = 2): e_1 = sigma_1, e_2 = sigma_2.
* ``PAULI_SPACE`` (m = 3): e_1, e_2, e_3 = sigma_1, sigma_2, sigma_3.
* ``CARTAN`` (any m <= 12), with p = ceil(m/2) tensor slots::

      e_{2k}   = sigma_1^{(p-k)} (x) sigma_2 (x) 1^{(k-1)}
      e_{2k-1} = sigma_1^{(p-k)} (x) sigma_3 (x) 1^{(k-1)}

A blade's matrix is the product of its generator matrices in ascending index
order, matching ``e_{1248} = e_1 e_2 e_4 e_8``.
"""

from __future__ import annotations

import enum
from functools import lru_cache, reduce

import numpy as np

from gadj.blade import Blade
from gadj.multivector import Multivector

CARTAN_MAX_M = 12

SIGMA_0 = np.eye(2, dtype=np.complex128)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
for _s in (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3):
    _s.flags.writeable = False


class RepKind(enum.Enum):
    CARTAN = "cartan"
    PAULI_PLANE = "pauli-plane"
    PAULI_SPACE = "pauli-space"

    @classmethod
    def pauli_for(cls, m: int) -> RepKind:
        if m == 2:
            return cls.PAULI_PLANE
        if m == 3:
            return cls.PAULI_SPACE
        raise InvalidRepresentationError(f"no 2x2 Pauli representation listed for m={m}")

    @classmethod
    def default_for(cls, m: int) -> RepKind:
        """Pauli tables where they exist, Cartan otherwise."""
        return cls.pauli_for(m) if m in (2, 3) else cls.CARTAN


class InvalidRepresentationError(ValueError):
    pass


def check_kind(m: int, kind: RepKind, *, build: bool = True) -> None:
    if kind is RepKind.PAULI_PLANE and m != 2:
        raise InvalidRepresentationError(f"PAULI_PLANE needs m=2, got m={m}")
    if kind is RepKind.PAULI_SPACE and m != 3:
        raise InvalidRepresentationError(f"PAULI_SPACE needs m=3, got m={m}")
    if kind is RepKind.CARTAN and m < 1:
        raise InvalidRepresentationError(f"CARTAN needs m >= 1, got m={m}")
    if build and kind is RepKind.CARTAN and m > CARTAN_MAX_M:
        raise InvalidRepresentationError(f"CARTAN matrices are built only for m <= {CARTAN_MAX_M}, got m={m}")


def dimension(m: int, kind: RepKind) -> int:
    """N = Tr 1 for the representation.  Defined for every m, even past the build cap."""
    check_kind(m, kind, build=False)
    if kind is RepKind.CARTAN:
        return 1 << ((m + 1) // 2)
    return 2


@lru_cache(maxsize=None)
def _generator(j: int, m: int, kind: RepKind) -> np.ndarray:
    if kind is not RepKind.CARTAN:
        mat = (SIGMA_1, SIGMA_2, SIGMA_3)[j - 1].copy()
    else:
        p = (m + 1) // 2
        k = (j + 1) // 2
        middle = SIGMA_2 if j % 2 == 0 else SIGMA_3
        factors = [SIGMA_1] * (p - k) + [middle] + [SIGMA_0] * (k - 1)
        mat = reduce(np.kron, factors)
    mat.flags.writeable = False
    return mat


def generator_matrix(j: int, m: int, kind: RepKind = RepKind.CARTAN) -> np.ndarray:
    check_kind(m, kind)
    if not 1 <= j <= m:
        raise ValueError(f"generator index {j} outside 1..{m}")
    return _generator(j, m, kind)


@lru_cache(maxsize=1 << 14)
def _blade_matrix(mask: int, m: int, kind: RepKind) -> np.ndarray:
    mat = np.eye(dimension(m, kind), dtype=np.complex128)
    for j in Blade(mask, m).indices():
        mat = mat @ _generator(j, m, kind)
    mat.flags.writeable = False
    return mat


def blade_matrix(blade: Blade, kind: RepKind = RepKind.CARTAN) -> np.ndarray:
    check_kind(blade.m, kind)
    return _blade_matrix(blade.mask, blade.m, kind)


def represent(x: Multivector | Blade, kind: RepKind = RepKind.CARTAN) -> np.ndarray:
    if isinstance(x, Blade):
        return blade_matrix(x, kind).copy()
    check_kind(x.m, kind)
    out = np.zeros((dimension(x.m, kind),) * 2, dtype=np.complex128)
    for mask, coef in zip(x.masks.tolist(), x.coefs.tolist()):
        out += coef * _blade_matrix(mask, x.m, kind)
    return out


def trace_projection(mat: np.ndarray) -> float:
    """Re Tr; equals N times the scalar part of the pre-image."""
    return float(np.trace(mat).real)


def format_matrix(mat: np.ndarray) -> str:
    def entry(z: complex) -> str:
        re = float(f"{z.real:.6g}") + 0.0
        im = float(f"{z.imag:.6g}") + 0.0
        return f"{re:.6g}{'-' if im < 0 else '+'}{abs(im):.6g}i"

    cells = [[entry(z) for z in row] for row in mat]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)
