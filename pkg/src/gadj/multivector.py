"""Real linear combinations of blades.

A :class:`Multivector` is immutable.  Terms are kept either as ascending
``(masks, coefs)`` arrays or, once more than half of the ``2**m`` blades are
populated, as a dense coefficient array indexed by mask.  The choice is made
automatically and never changes results.

Zero pruning is exact (``c == 0``).  The Deutsch-Jozsa pipeline only ever
produces integer coefficients, so any stray rounding would be a bug worth
seeing rather than hiding behind an epsilon.
"""

from __future__ import annotations

from numbers import Real
from typing import Iterable, Mapping

import numpy as np

from gadj import _kernels
from gadj.blade import MAX_GENERATORS, Blade, DimensionMismatchError

# Largest algebra for which products accumulate into a dense 2**m buffer.
_DENSE_ACCUMULATOR_MAX_M = 24


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def reverse_signs(masks: np.ndarray) -> np.ndarray:
    """``(-1)**(k(k-1)/2)`` per mask, ``k`` the grade."""
    k = np.bitwise_count(np.asarray(masks, dtype=np.uint64)).astype(np.int64)
    return (1 - 2 * ((k * (k - 1) // 2) & 1)).astype(np.int8)


class Multivector:
    __slots__ = ("m", "_masks", "_coefs", "_dense")

    def __init__(self, m: int, terms: Mapping[int, float] | Iterable[tuple[int, float]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, float] = {}
        for mask, coef in terms:
            if isinstance(mask, Blade):
                if mask.m != m:
                    raise DimensionMismatchError(f"blade over {mask.m} generators in a {m}-generator multivector")
                mask = mask.mask
            acc[int(mask)] = acc.get(int(mask), 0.0) + float(coef)
        masks = np.fromiter(acc.keys(), dtype=np.uint64, count=len(acc))
        coefs = np.fromiter(acc.values(), dtype=np.float64, count=len(acc))
        self._init(m, masks, coefs, reduce=False)

    def _init(self, m: int, masks: np.ndarray, coefs: np.ndarray, *, reduce: bool, trusted: bool = False) -> None:
        # trusted: masks already ascending, unique and inside the window
        if not 0 <= m <= MAX_GENERATORS:
            raise ValueError(f"generator count must be in [0, {MAX_GENERATORS}], got {m}")
        self.m = m
        self._dense = None
        if not trusted:
            if len(masks) and int(masks.max()) >> m:
                raise ValueError(f"mask outside the {m}-bit window")
            if reduce:
                masks, inverse = np.unique(masks, return_inverse=True)
                coefs = np.bincount(inverse, weights=coefs, minlength=len(masks))
            elif len(masks) > 1 and not np.all(masks[1:] > masks[:-1]):
                order = np.argsort(masks, kind="stable")
                masks, coefs = masks[order], coefs[order]
        keep = coefs != 0
        masks, coefs = masks[keep], coefs[keep]
        if m < 63 and len(masks) > (1 << m) >> 1:
            dense = np.zeros(1 << m, dtype=np.float64)
            dense[masks] = coefs
            self._dense = _readonly(dense)
        self._masks = _readonly(np.ascontiguousarray(masks, dtype=np.uint64))
        self._coefs = _readonly(np.ascontiguousarray(coefs, dtype=np.float64))

    @classmethod
    def _from_arrays(
        cls, m: int, masks: np.ndarray, coefs: np.ndarray, *, reduce: bool = False, trusted: bool = False
    ) -> Multivector:
        self = cls.__new__(cls)
        self._init(
            m, np.asarray(masks, dtype=np.uint64), np.asarray(coefs, dtype=np.float64), reduce=reduce, trusted=trusted
        )
        return self

    @classmethod
    def _from_dense(cls, m: int, dense: np.ndarray) -> Multivector:
        masks = np.flatnonzero(dense).astype(np.uint64)
        return cls._from_arrays(m, masks, dense[masks], trusted=True)

    @classmethod
    def from_arrays(cls, m: int, masks, coefs) -> Multivector:
        """Build from parallel mask/coefficient sequences; repeated masks are summed."""
        return cls._from_arrays(m, masks, coefs, reduce=True)

    @classmethod
    def zero(cls, m: int) -> Multivector:
        return cls(m)

    @classmethod
    def scalar(cls, value: float, m: int) -> Multivector:
        return cls(m, {0: value})

    @classmethod
    def from_blade(cls, blade: Blade, coef: float = 1.0) -> Multivector:
        return cls(blade.m, {blade.mask: coef})

    @classmethod
    def parse(cls, text: str) -> Multivector:
        """Inverse of ``str`` for multivectors with at least one non-scalar term."""
        terms = []
        m = None
        for tok in text.replace("−", "-").split():
            coef, _, blade = tok.partition("·")
            if blade == "1":
                terms.append((0, float(coef)))
                continue
            b = Blade.from_bits(blade)
            if m is not None and b.m != m:
                raise DimensionMismatchError(f"mixed blade widths in {text!r}")
            m = b.m
            terms.append((b.mask, float(coef)))
        if m is None:
            raise ValueError("cannot infer the generator count from scalar-only text")
        return cls(m, terms)

    # -- views ---------------------------------------------------------

    @property
    def masks(self) -> np.ndarray:
        return self._masks

    @property
    def coefs(self) -> np.ndarray:
        return self._coefs

    @property
    def is_dense(self) -> bool:
        return self._dense is not None

    @property
    def terms(self) -> dict[int, float]:
        return dict(zip(self._masks.tolist(), self._coefs.tolist()))

    def dense(self) -> np.ndarray:
        if self._dense is not None:
            return self._dense
        out = np.zeros(1 << self.m, dtype=np.float64)
        out[self._masks] = self._coefs
        return out

    def __len__(self) -> int:
        return len(self._masks)

    def __getitem__(self, key: int | Blade) -> float:
        if isinstance(key, Blade):
            if key.m != self.m:
                raise DimensionMismatchError(f"blade over {key.m} generators")
            key = key.mask
        if self._dense is not None:
            return float(self._dense[key]) if 0 <= key < len(self._dense) else 0.0
        i = np.searchsorted(self._masks, np.uint64(key))
        if i < len(self._masks) and int(self._masks[i]) == key:
            return float(self._coefs[i])
        return 0.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.m == other.m
            and np.array_equal(self._masks, other._masks)
            and np.array_equal(self._coefs, other._coefs)
        )

    def __hash__(self):
        return hash((self.m, self._masks.tobytes(), self._coefs.tobytes()))

    def __repr__(self) -> str:
        return f"Multivector(m={self.m}, {self})"

    def __str__(self) -> str:
        if not len(self):
            return "0"
        parts = []
        for mask, coef in zip(self._masks.tolist(), self._coefs.tolist()):
            sign = "+" if coef > 0 else "−"
            mag = abs(coef)
            num = str(int(mag)) if mag.is_integer() else f"{mag:g}"
            parts.append(f"{sign}{num}·{Blade(mask, self.m)}")
        return " ".join(parts)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return add(self, -other)
        return NotImplemented

    def __neg__(self) -> Multivector:
        return self.scale(-1.0)

    def scale(self, factor: float) -> Multivector:
        return Multivector._from_arrays(self.m, self._masks, self._coefs * float(factor))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, Blade):
            return geometric_product(self, Multivector.from_blade(other))
        if isinstance(other, Real):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Blade):
            return geometric_product(Multivector.from_blade(other), self)
        if isinstance(other, Real):
            return self.scale(other)
        return NotImplemented

    def reverse(self) -> Multivector:
        return reverse(self)

    def scalar_part(self) -> float:
        return scalar_part(self)


def _check(x: Multivector, y: Multivector) -> None:
    if x.m != y.m:
        raise DimensionMismatchError(f"generator counts differ: {x.m} vs {y.m}")


def add(x: Multivector, y: Multivector) -> Multivector:
    _check(x, y)
    if x.is_dense and y.is_dense:
        return Multivector._from_dense(x.m, x.dense() + y.dense())
    return Multivector._from_arrays(
        x.m, np.concatenate([x.masks, y.masks]), np.concatenate([x.coefs, y.coefs]), reduce=True
    )


def _times_blade(x: Multivector, b: int, cb: float, *, blade_on_right: bool) -> Multivector:
    k = _kernels.active()
    masks = x.masks
    fixed = np.full(masks.shape, b, dtype=np.uint64)
    signs = k.signs_pairwise(masks, fixed) if blade_on_right else k.signs_pairwise(fixed, masks)
    out_masks = masks ^ np.uint64(b)
    coefs = x.coefs * cb * signs
    if x.is_dense:
        dense = np.zeros(1 << x.m, dtype=np.float64)
        dense[out_masks] = coefs
        return Multivector._from_dense(x.m, dense)
    return Multivector._from_arrays(x.m, out_masks, coefs)


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    """Bilinear extension of the blade product."""
    _check(x, y)
    m = x.m
    if not len(x) or not len(y):
        return Multivector.zero(m)
    if len(y) == 1:
        return _times_blade(x, int(y.masks[0]), float(y.coefs[0]), blade_on_right=True)
    if len(x) == 1:
        return _times_blade(y, int(x.masks[0]), float(x.coefs[0]), blade_on_right=False)
    k = _kernels.active()
    if m <= _DENSE_ACCUMULATOR_MAX_M and (1 << m) <= max(1 << 16, 4 * len(x) * len(y)):
        return Multivector._from_dense(m, k.product_dense(x.masks, x.coefs, y.masks, y.coefs, m))
    masks, coefs = k.product_pairs(x.masks, x.coefs, y.masks, y.coefs)
    return Multivector._from_arrays(m, masks, coefs, reduce=True)


def reverse(x: Multivector) -> Multivector:
    return Multivector._from_arrays(x.m, x.masks, x.coefs * reverse_signs(x.masks))


def scalar_part(x: Multivector) -> float:
    return x[0]


def scalar_of_product(x: Multivector, y: Multivector) -> float:
    """Scalar part of ``x * y`` without forming the product.

    Only term pairs with equal masks land on the scalar blade, so the cost is
    linear in the smaller operand.
    """
    _check(x, y)
    k = _kernels.active()
    if y.is_dense and len(x) <= len(y):
        masks = x.masks
        return float(np.sum(x.coefs * y.dense()[masks] * k.signs_pairwise(masks, masks)))
    if x.is_dense:
        masks = y.masks
        return float(np.sum(y.coefs * x.dense()[masks] * k.signs_pairwise(masks, masks)))
    return float(k.scalar_of_product(x.masks, x.coefs, y.masks, y.coefs))
