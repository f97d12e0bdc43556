"""Basis blades of a Euclidean geometric algebra held as bitmasks.

A blade over ``m`` generators is an m-bit string ``A_1 ... A_m``; ``A_j = 1``
means generator ``e_j`` is a factor.  ``A_1`` is the most significant bit of
the window, so ``Blade.from_bits("110")`` is ``e_1 e_2`` and its integer mask
is ``0b110``.

The product of two blades XORs their masks; the sign is ``(-1)**D`` where
``D`` counts how many 1s of the right operand have to jump over a 1 of the
left operand to reach their sorted place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from gadj import _kernels

MAX_GENERATORS = 63


class DimensionMismatchError(ValueError):
    """Operands live in algebras with different generator counts."""


@dataclass(frozen=True, slots=True)
class Blade:
    mask: int
    m: int

    def __post_init__(self):
        if not 0 <= self.m <= MAX_GENERATORS:
            raise ValueError(f"generator count must be in [0, {MAX_GENERATORS}], got {self.m}")
        if self.mask < 0 or self.mask >> self.m:
            raise ValueError(f"mask {self.mask:#b} has bits outside an {self.m}-bit window")

    @classmethod
    def scalar(cls, m: int) -> Blade:
        return cls(0, m)

    @classmethod
    def generator(cls, j: int, m: int) -> Blade:
        """The single-generator blade ``e_j`` (1-indexed)."""
        if not 1 <= j <= m:
            raise ValueError(f"generator index {j} outside 1..{m}")
        return cls(1 << (m - j), m)

    @classmethod
    def from_indices(cls, indices: Iterable[int], m: int) -> Blade:
        """Blade ``e_{i1 i2 ...}``; indices must be distinct."""
        mask = 0
        for j in indices:
            bit = cls.generator(j, m).mask
            if mask & bit:
                raise ValueError(f"repeated generator index {j}")
            mask |= bit
        return cls(mask, m)

    @classmethod
    def from_bits(cls, bits: str) -> Blade:
        """Parse an ``A_1...A_m`` string, optionally prefixed by ``e_``."""
        if bits.startswith("e_"):
            bits = bits[2:]
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return cls(int(bits, 2), len(bits))

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def bits(self) -> str:
        return format(self.mask, f"0{self.m}b") if self.m else ""

    def indices(self) -> list[int]:
        """Generator indices in ascending order."""
        return [j for j in range(1, self.m + 1) if self.mask >> (self.m - j) & 1]

    def __str__(self) -> str:
        return "1" if self.mask == 0 else f"e_{self.bits}"

    def __mul__(self, other: Blade) -> SignedBlade:
        if not isinstance(other, Blade):
            return NotImplemented
        return blade_product(self, other)


@dataclass(frozen=True, slots=True)
class SignedBlade:
    sign: int
    blade: Blade

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __neg__(self) -> SignedBlade:
        return SignedBlade(-self.sign, self.blade)

    def __mul__(self, other: SignedBlade | Blade) -> SignedBlade:
        if isinstance(other, Blade):
            other = SignedBlade(1, other)
        if not isinstance(other, SignedBlade):
            return NotImplemented
        p = blade_product(self.blade, other.blade)
        return SignedBlade(self.sign * other.sign * p.sign, p.blade)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + str(self.blade)


def _check_same_m(a: Blade, b: Blade) -> None:
    if a.m != b.m:
        raise DimensionMismatchError(f"generator counts differ: {a.m} vs {b.m}")


def blade_product(a: Blade, b: Blade) -> SignedBlade:
    """Geometric product of two basis blades."""
    _check_same_m(a, b)
    return SignedBlade(_kernels.active().blade_sign(a.mask, b.mask), Blade(a.mask ^ b.mask, a.m))


def reverse_sign(a: Blade) -> int:
    k = a.grade
    return -1 if (k * (k - 1) // 2) & 1 else 1


def sign_oracle(a: Blade, b: Blade) -> int:
    """Sign of ``a * b`` by literally bubble-sorting the generator list.

    Adjacent out-of-order factors are swapped (one sign flip each) and
    adjacent equal factors cancel because ``e_j e_j = 1``.  Independent of
    the bit tricks in :func:`blade_product`; kept as a test oracle.
    """
    _check_same_m(a, b)
    factors = a.indices() + b.indices()
    swaps = 0
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(factors) - 1:
            if factors[i] > factors[i + 1]:
                factors[i], factors[i + 1] = factors[i + 1], factors[i]
                swaps += 1
                changed = True
            elif factors[i] == factors[i + 1]:
                del factors[i : i + 2]
                changed = True
                continue
            i += 1
    return -1 if swaps & 1 else 1
