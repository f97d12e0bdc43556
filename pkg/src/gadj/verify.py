"""Seeded randomized checks of the algebra laws.

Used by ``gadj verify`` and by the test suite.  The blade product under test
is injectable so a deliberately broken product can prove the checks bite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from gadj import cartan
from gadj.blade import Blade, SignedBlade, blade_product, sign_oracle
from gadj.multivector import Multivector, geometric_product, reverse

BladeProduct = Callable[[Blade, Blade], SignedBlade]

CHECKS = ("sign_oracle", "associativity", "anticommutation", "reverse_antiautomorphism", "cartan_homomorphism")


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    first_failure: str | None = field(default=None, repr=False)

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.first_failure is None:
            self.first_failure = detail()


def flipped_product(a: Blade, b: Blade) -> SignedBlade:
    """A wrong blade product (every sign negated) for mutation testing."""
    return -blade_product(a, b)


def _blade(rng: np.random.Generator, m: int) -> Blade:
    return Blade(int(rng.integers(0, 1 << m)), m)


def _multivector(rng: np.random.Generator, m: int, max_terms: int = 6) -> Multivector:
    k = int(rng.integers(1, max_terms + 1))
    masks = rng.integers(0, 1 << m, size=k)
    coefs = rng.integers(-3, 4, size=k)
    return Multivector(m, zip(masks.tolist(), coefs.tolist()))


def _homomorphic(p: SignedBlade, a: Blade, b: Blade, kind: cartan.RepKind) -> bool:
    lhs = p.sign * cartan.blade_matrix(p.blade, kind)
    rhs = cartan.blade_matrix(a, kind) @ cartan.blade_matrix(b, kind)
    return bool(np.allclose(lhs, rhs, rtol=0, atol=1e-9))


def run_checks(
    m: int,
    trials: int,
    seed: int = 0,
    *,
    product: BladeProduct = blade_product,
    matrix_m: int | None = None,
    multivector_m: int | None = None,
) -> dict[str, Tally]:
    """Run ``trials`` random instances of every law.

    Generator counts are drawn uniformly from ``1..m`` (``1..matrix_m`` for
    the Cartan homomorphism, default ``min(m, 8)``; ``1..multivector_m`` for
    the multivector reverse law, default ``min(m, 10)``).
    """
    if not 1 <= m <= cartan.CARTAN_MAX_M:
        raise ValueError(f"m must be in 1..{cartan.CARTAN_MAX_M}, got {m}")
    matrix_m = min(m, 8) if matrix_m is None else matrix_m
    multivector_m = min(m, 10) if multivector_m is None else multivector_m
    rng = np.random.default_rng(seed)
    out = {name: Tally() for name in CHECKS}

    for _ in range(trials):
        mm = int(rng.integers(1, m + 1))
        a, b, c = _blade(rng, mm), _blade(rng, mm), _blade(rng, mm)

        p = product(a, b)
        out["sign_oracle"].record(
            p.sign == sign_oracle(a, b) and p.blade.mask == a.mask ^ b.mask,
            lambda: f"{a} * {b} gave {p}, oracle sign {sign_oracle(a, b)}",
        )

        ab_c = product(p.blade, c)
        left = SignedBlade(p.sign * ab_c.sign, ab_c.blade)
        bc = product(b, c)
        a_bc = product(a, bc.blade)
        right = SignedBlade(bc.sign * a_bc.sign, a_bc.blade)
        out["associativity"].record(left == right, lambda: f"({a}{b}){c}={left} but {a}({b}{c})={right}")

        i = int(rng.integers(1, mm + 1))
        ei = Blade.generator(i, mm)
        ok = product(ei, ei) == SignedBlade(1, Blade.scalar(mm))
        if mm > 1:
            j = int(rng.choice([x for x in range(1, mm + 1) if x != i]))
            ej = Blade.generator(j, mm)
            ok = ok and product(ei, ej) == -product(ej, ei)
        out["anticommutation"].record(ok, lambda: f"anticommutation broken at m={mm}, i={i}")

        mv = int(rng.integers(1, multivector_m + 1))
        x, y = _multivector(rng, mv), _multivector(rng, mv)
        lhs = reverse(geometric_product(x, y))
        rhs = geometric_product(reverse(y), reverse(x))
        out["reverse_antiautomorphism"].record(lhs == rhs, lambda: f"rev({x} * {y}) = {lhs} != {rhs}")

        mk = int(rng.integers(1, matrix_m + 1))
        ha, hb = _blade(rng, mk), _blade(rng, mk)
        hp = product(ha, hb)
        out["cartan_homomorphism"].record(
            _homomorphic(hp, ha, hb, cartan.RepKind.CARTAN),
            lambda: f"rep({ha} * {hb}) != rep({ha}) rep({hb}) at m={mk}",
        )

    return out
