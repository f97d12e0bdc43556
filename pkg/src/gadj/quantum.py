"""Tensor-product Deutsch-Jozsa on a dense state vector.

Basis labels are big-endian over ``A_1 .. A_q`` like the blade masks, so the
GA and quantum sides index the same bit strings without translation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gadj import _kernels
from gadj.dj import BooleanFunction

MAX_QUBITS = 24


@dataclass(frozen=True, eq=False)
class StateVector:
    q: int
    amps: np.ndarray

    def __post_init__(self):
        if not 1 <= self.q <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.q}")
        if self.amps.shape != (1 << self.q,):
            raise ValueError(f"need {1 << self.q} amplitudes, got shape {self.amps.shape}")
        self.amps.flags.writeable = False

    @classmethod
    def basis(cls, label: int, q: int) -> StateVector:
        amps = np.zeros(1 << q, dtype=np.complex128)
        amps[label] = 1.0
        return cls(q, amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


def hadamard_all(s: StateVector) -> StateVector:
    """``H`` on every qubit via in-place butterflies."""
    amps = s.amps.copy()
    _kernels.active().hadamard_inplace(amps, s.q)
    return StateVector(s.q, amps)


def apply_uf(f: BooleanFunction, s: StateVector) -> StateVector:
    """``|x>|y> -> |x>|y xor f(x)>``."""
    if s.q != f.n + 1:
        raise ValueError(f"U_f for n={f.n} acts on {f.n + 1} qubits, state has {s.q}")
    labels = np.arange(1 << s.q, dtype=np.int64)
    target = labels ^ f.table[labels >> 1].astype(np.int64)
    amps = np.empty_like(s.amps)
    amps[target] = s.amps
    return StateVector(s.q, amps)


def dj_reference(f: BooleanFunction) -> float:
    """Real amplitude at ``|0..0>|1>`` after H, U_f, H on ``|0..01>``."""
    q = f.n + 1
    state = hadamard_all(apply_uf(f, hadamard_all(StateVector.basis(1, q))))
    return float(state.amps[1].real)
