"""Deutsch-Jozsa with geometric products instead of tensor products.

With ``n`` input bits the algebra has ``m = n + 1`` generators.  The pipeline:

1. ``E = sum of every blade`` (the analogue of the Hadamard layer),
2. multiply on the right by the seed blade ``e_{0..010}``,
3. apply the oracle, which flips the last bit of each blade according to
   ``f`` of its first ``n`` bits,
4. multiply on the left by ``F = sum of reversed last-bit-zero blades``,
5. read the scalar part.

The scalar is ``sum_x (-1)**f(x)``: ``+-2**n`` for a constant ``f`` and ``0``
for a balanced one.  A matrix representation multiplies it by its dimension
``N`` under ``Re Tr``.

The oracle is a blade-wise linear map, not a multiplication by a fixed
multivector.  Treating it as a right factor after ``F`` has been applied
gives a different (wrong) answer; see :func:`order_caveat_witness`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from gadj import cartan
from gadj.blade import MAX_GENERATORS, Blade, DimensionMismatchError
from gadj.multivector import Multivector, geometric_product, reverse_signs, scalar_of_product


class PipelineInvariantError(AssertionError):
    """The GA scalar disagreed with the closed-form sum."""


class BooleanFunction:
    """Truth table of ``f: {0,1}^n -> {0,1}``.

    ``table[x]`` is ``f`` at the input whose bits ``A_1..A_n`` read as the
    big-endian integer ``x``.
    """

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 1:
            raise ValueError(f"input bit count must be >= 1, got {n}")
        arr = np.asarray(table, dtype=np.uint8).ravel()
        if arr.shape[0] != 1 << n:
            raise ValueError(f"truth table needs {1 << n} entries for n={n}, got {arr.shape[0]}")
        if np.any(arr > 1):
            raise ValueError("truth table entries must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.table = arr

    @classmethod
    def constant(cls, n: int, value: int) -> BooleanFunction:
        return cls(n, np.full(1 << n, value, dtype=np.uint8))

    @classmethod
    def parity(cls, n: int) -> BooleanFunction:
        x = np.arange(1 << n, dtype=np.uint64)
        return cls(n, np.bitwise_count(x) & 1)

    @classmethod
    def majority(cls, n: int) -> BooleanFunction:
        x = np.arange(1 << n, dtype=np.uint64)
        return cls(n, (2 * np.bitwise_count(x) > n).astype(np.uint8))

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], int]) -> BooleanFunction:
        return cls(n, [fn(x) for x in range(1 << n)])

    @classmethod
    def from_string(cls, bits: str) -> BooleanFunction:
        """``"0101"`` -> n=2 with f(00)=0, f(01)=1, f(10)=0, f(11)=1."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"truth table must be a non-empty string of 0/1, got {bits!r}")
        n = len(bits).bit_length() - 1
        if n < 1 or len(bits) != 1 << n:
            raise ValueError(f"truth table length {len(bits)} is not 2**n for n >= 1")
        return cls(n, [int(c) for c in bits])

    @classmethod
    def from_index(cls, n: int, index: int) -> BooleanFunction:
        """Function number ``index`` among all ``2**(2**n)``: bit x of index is f(x)."""
        size = 1 << n
        if not 0 <= index < 1 << size:
            raise ValueError(f"function index out of range for n={n}")
        return cls(n, [(index >> x) & 1 for x in range(size)])

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> BooleanFunction:
        return cls(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))

    @classmethod
    def random_balanced(cls, n: int, rng: np.random.Generator) -> BooleanFunction:
        table = np.zeros(1 << n, dtype=np.uint8)
        table[rng.permutation(1 << n)[: 1 << (n - 1)]] = 1
        return cls(n, table)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"BooleanFunction(n={self.n}, table={self.to_string()!r})"

    def to_string(self) -> str:
        return "".join(map(str, self.table.tolist()))

    @property
    def ones(self) -> int:
        return int(self.table.sum(dtype=np.int64))

    def is_constant(self) -> bool:
        return self.ones in (0, 1 << self.n)

    def is_balanced(self) -> bool:
        return self.ones == 1 << (self.n - 1)

    def signed_sum(self) -> int:
        """``sum_x (-1)**f(x)``, the closed form the pipeline must reproduce."""
        return (1 << self.n) - 2 * self.ones


def all_functions(n: int) -> Iterator[BooleanFunction]:
    for index in range(1 << (1 << n)):
        yield BooleanFunction.from_index(n, index)


class Classification(enum.Enum):
    CONSTANT = "constant"
    BALANCED = "balanced"
    NEITHER = "neither"


@dataclass(frozen=True)
class DjResult:
    n: int
    scalar: float
    N: int
    rep_kind: cartan.RepKind
    classification: Classification
    sign: int | None = None

    @property
    def m(self) -> int:
        return self.n + 1

    @property
    def trace_value(self) -> float:
        return self.N * self.scalar


def classify(scalar: float, n: int) -> tuple[Classification, int | None]:
    if scalar == 0:
        return Classification.BALANCED, None
    if scalar == 1 << n:
        return Classification.CONSTANT, 1
    if scalar == -(1 << n):
        return Classification.CONSTANT, -1
    return Classification.NEITHER, None


def _check_n(n: int) -> None:
    if not 1 <= n or n + 1 > MAX_GENERATORS:
        raise ValueError(f"input bit count must satisfy 1 <= n and n+1 <= {MAX_GENERATORS}, got {n}")


def build_superposition(n: int) -> Multivector:
    """Every blade of the (n+1)-generator algebra with coefficient 1."""
    _check_n(n)
    return _superposition(n)


# E, E*seed and F depend only on n; multivectors are immutable so caching is safe.
@lru_cache(maxsize=4)
def _superposition(n: int) -> Multivector:
    m = n + 1
    if m > 30:
        raise ValueError(f"a dense superposition over {m} generators does not fit in memory")
    return Multivector._from_dense(m, np.ones(1 << m, dtype=np.float64))


def seed_blade(n: int) -> Blade:
    """``e_{0..010}``: only generator ``n`` set, the last bit clear."""
    _check_n(n)
    return Blade.generator(n, n + 1)


def apply_oracle(f: BooleanFunction, x: Multivector) -> Multivector:
    """Blade-wise map ``e_{A, a} -> e_{A, a xor f(A)}`` extended linearly."""
    if x.m != f.n + 1:
        raise DimensionMismatchError(f"oracle over n={f.n} needs m={f.n + 1}, got m={x.m}")
    masks = x.masks
    flipped = masks ^ f.table[masks >> np.uint64(1)].astype(np.uint64)
    if x.is_dense:
        # the map is an involution on masks, so no two terms collide
        dense = np.zeros(1 << x.m, dtype=np.float64)
        dense[flipped] = x.coefs
        return Multivector._from_dense(x.m, dense)
    return Multivector.from_arrays(x.m, flipped, x.coefs)


def build_reversal_operator(n: int) -> Multivector:
    """Sum of reverses of all blades with last bit 0."""
    _check_n(n)
    return _reversal_operator(n)


@lru_cache(maxsize=4)
def _reversal_operator(n: int) -> Multivector:
    masks = np.arange(1 << n, dtype=np.uint64) << np.uint64(1)
    return Multivector._from_arrays(n + 1, masks, reverse_signs(masks).astype(np.float64), trusted=True)


@lru_cache(maxsize=4)
def _seeded_superposition(n: int) -> Multivector:
    return geometric_product(build_superposition(n), Multivector.from_blade(seed_blade(n)))


def clear_caches() -> None:
    """Drop the cached f-independent operators (for cold-start timing)."""
    for fn in (_superposition, _reversal_operator, _seeded_superposition):
        fn.cache_clear()


def oracle_stage(f: BooleanFunction) -> Multivector:
    """``E_f E e_seed``, the multivector the reversal operator acts on."""
    return apply_oracle(f, _seeded_superposition(f.n))


def pipeline_product(f: BooleanFunction) -> Multivector:
    """Full ``F E_f E e_seed`` multivector (quadratic cost; for checking)."""
    return geometric_product(build_reversal_operator(f.n), oracle_stage(f))


def run(f: BooleanFunction, kind: cartan.RepKind | None = None, *, full: bool = False) -> DjResult:
    """Classify ``f`` with one oracle application.

    ``full=True`` forms the whole final product and reads its scalar part;
    the default only evaluates the scalar blade of ``F * Z``.
    """
    n = f.n
    m = n + 1
    z = oracle_stage(f)
    if full:
        scalar = pipeline_product(f).scalar_part()
    else:
        scalar = scalar_of_product(build_reversal_operator(n), z)
    if scalar != f.signed_sum():
        raise PipelineInvariantError(f"GA scalar {scalar} != closed form {f.signed_sum()} for {f!r}")
    if kind is None:
        kind = cartan.RepKind.default_for(m)
    label, sign = classify(scalar, n)
    return DjResult(n=n, scalar=scalar, N=cartan.dimension(m, kind), rep_kind=kind, classification=label, sign=sign)


def matrix_readout(f: BooleanFunction, kind: cartan.RepKind | None = None) -> float:
    """``Re Tr`` of represent(F) @ represent(Z), the paper-style matrix route."""
    m = f.n + 1
    kind = kind or cartan.RepKind.default_for(m)
    mat = cartan.represent(build_reversal_operator(f.n), kind) @ cartan.represent(oracle_stage(f), kind)
    return cartan.trace_projection(mat)


@dataclass(frozen=True)
class OrderCaveat:
    f: BooleanFunction
    blade: Blade
    oracle_then_reversal: Multivector
    reversal_then_oracle: Multivector

    @property
    def differs(self) -> bool:
        return self.oracle_then_reversal != self.reversal_then_oracle


def order_caveat_witness(f: BooleanFunction, blade: Blade) -> OrderCaveat:
    """Compare ``F (E_f e)`` with ``E_f (F e)``.

    For a single blade ``E_f e_A = e_A e_{0..0,f(A)}``, which tempts one to
    treat ``E_f`` as a right factor that can be moved past ``F``.  It cannot:
    after ``F`` the terms carry different first-``n`` bits and the oracle
    acts on each of them separately.
    """
    rev = build_reversal_operator(f.n)
    e = Multivector.from_blade(blade)
    return OrderCaveat(
        f=f,
        blade=blade,
        oracle_then_reversal=geometric_product(rev, apply_oracle(f, e)),
        reversal_then_oracle=apply_oracle(f, geometric_product(rev, e)),
    )
