"""Bitmask geometric algebra and a geometric-product Deutsch-Jozsa pipeline."""

from gadj._kernels import active as kernel_backend
from gadj.blade import (
    Blade,
    DimensionMismatchError,
    SignedBlade,
    blade_product,
    reverse_sign,
    sign_oracle,
)
from gadj.cartan import RepKind, generator_matrix, represent, trace_projection
from gadj.dj import (
    BooleanFunction,
    Classification,
    DjResult,
    apply_oracle,
    build_reversal_operator,
    build_superposition,
    run,
    seed_blade,
)
from gadj.multivector import (
    Multivector,
    add,
    geometric_product,
    reverse,
    scalar_of_product,
    scalar_part,
)
from gadj.quantum import StateVector, apply_uf, dj_reference, hadamard_all

__version__ = "0.1.0"

__all__ = [
    "Blade",
    "BooleanFunction",
    "Classification",
    "DimensionMismatchError",
    "DjResult",
    "Multivector",
    "RepKind",
    "SignedBlade",
    "StateVector",
    "add",
    "apply_oracle",
    "apply_uf",
    "blade_product",
    "build_reversal_operator",
    "build_superposition",
    "dj_reference",
    "generator_matrix",
    "geometric_product",
    "hadamard_all",
    "kernel_backend",
    "represent",
    "reverse",
    "reverse_sign",
    "run",
    "scalar_of_product",
    "scalar_part",
    "seed_blade",
    "sign_oracle",
    "trace_projection",
]
