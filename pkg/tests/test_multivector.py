import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gadj.blade import Blade, DimensionMismatchError
from gadj.dj import BooleanFunction, build_reversal_operator, build_superposition, oracle_stage, seed_blade
from gadj.multivector import Multivector, add, geometric_product, reverse, scalar_of_product, scalar_part

from conftest import multivectors, naive_product


def mv(text):
    return Multivector.parse(text)


class TestAdd:
    def test_cancellation(self):
        x = mv("+1·e_10 +1·e_01")
        assert add(x, mv("−1·e_01")) == mv("+1·e_10")

    def test_identity(self):
        x = mv("+3·e_10 −2·e_11")
        assert add(x, Multivector.zero(2)) == x

    def test_doubling(self):
        s = Multivector.scalar(1, 2)
        assert add(s, s) == Multivector.scalar(2, 2)
        assert add(s, s)[0] == 2

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            add(Multivector.zero(2), Multivector.zero(3))

    def test_zero_pruned(self):
        x = add(mv("+1·e_10"), mv("−1·e_10"))
        assert len(x) == 0
        assert str(x) == "0"


class TestProduct:
    def test_distribution_example(self):
        x = Multivector(2, {0b00: 1, 0b10: 1})
        assert geometric_product(x, Multivector.from_blade(Blade.from_bits("10"))) == Multivector(
            2, {0b10: 1, 0b00: 1}
        )

    def test_E2_times_seed(self):
        got = geometric_product(build_superposition(1), Multivector.from_blade(Blade.from_bits("10")))
        assert got == mv("+1·e_10 +1·e_00 −1·e_11 −1·e_01")

    def test_balanced_two_bit_pipeline_is_zero(self):
        f = BooleanFunction.from_string("01")
        z = oracle_stage(f)
        assert z == mv("+1·e_11 +1·e_00 −1·e_10 −1·e_01")
        assert len(geometric_product(build_reversal_operator(1), z)) == 0

    def test_against_naive(self):
        rng = np.random.default_rng(0)
        for m in (1, 3, 6, 9):
            for _ in range(20):
                k = rng.integers(1, 10, size=2)
                x = Multivector(m, zip(rng.integers(0, 1 << m, k[0]).tolist(), rng.integers(-3, 4, k[0]).tolist()))
                y = Multivector(m, zip(rng.integers(0, 1 << m, k[1]).tolist(), rng.integers(-3, 4, k[1]).tolist()))
                assert geometric_product(x, y) == naive_product(x, y)

    def test_sparse_pair_path_large_m(self, backend):
        m = 40
        x = Multivector(m, {(1 << 39) | 1: 2.0, 1 << 20: -1.0, 7: 3.0})
        y = Multivector(m, {1 << 39: 1.0, (1 << 20) | 2: 5.0})
        assert geometric_product(x, y) == naive_product(x, y)

    def test_operators(self):
        x = mv("+1·e_10 +2·e_01")
        assert x * 2 == 2 * x == x.scale(2)
        assert x - x == Multivector.zero(2)
        assert x * Blade.from_bits("10") == geometric_product(x, Multivector.from_blade(Blade.from_bits("10")))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            geometric_product(Multivector.scalar(1, 2), Multivector.scalar(1, 3))


class TestReverse:
    def test_reversal_operator_plane(self):
        x = Multivector(2, {0b00: 1, 0b10: 1})
        assert reverse(x) == x

    def test_grade_two_flip(self):
        assert reverse(mv("+1·e_110")) == mv("−1·e_110")

    @given(multivectors(5))
    def test_involution(self, x):
        assert reverse(reverse(x)) == x


class TestScalar:
    def test_scalar_part(self):
        assert scalar_part(Multivector(2, {0: 3, 0b10: 2})) == 3
        assert scalar_part(mv("+1·e_10")) == 0

    def test_pipeline_scalar_const0_n2(self):
        f = BooleanFunction.constant(2, 0)
        brute = sum((-1) ** f(x) for x in range(4))
        full = geometric_product(build_reversal_operator(2), oracle_stage(f))
        assert scalar_part(full) == brute == 4

    def test_scalar_of_product_examples(self):
        e1 = Multivector.from_blade(Blade.generator(1, 2))
        e2 = Multivector.from_blade(Blade.generator(2, 2))
        assert scalar_of_product(e1, e1) == 1
        assert scalar_of_product(e1, e2) == 0

    def test_scalar_of_product_dense_operands(self, backend):
        x = build_superposition(4)
        y = Multivector(5, {0b10110: 2.0, 0b00001: -1.0, 0: 4.0})
        assert x.is_dense
        for a, b in ((x, y), (y, x), (x, x)):
            assert scalar_of_product(a, b) == scalar_part(geometric_product(a, b))

    def test_fast_path_random(self, backend):
        rng = np.random.default_rng(7)
        for _ in range(200):
            m = int(rng.integers(1, 11))
            k = rng.integers(1, 30, size=2)
            x = Multivector(m, zip(rng.integers(0, 1 << m, k[0]).tolist(), rng.integers(-3, 4, k[0]).tolist()))
            y = Multivector(m, zip(rng.integers(0, 1 << m, k[1]).tolist(), rng.integers(-3, 4, k[1]).tolist()))
            assert scalar_of_product(x, y) == scalar_part(geometric_product(x, y))


class TestRepresentation:
    def test_dense_switch(self):
        assert build_superposition(3).is_dense
        assert not build_reversal_operator(3).is_dense
        assert not Multivector(3, {1: 1, 2: 1, 3: 1, 4: 1}).is_dense
        assert Multivector(3, {i: 1 for i in range(5)}).is_dense

    def test_dense_and_sparse_equal(self):
        terms = {i: float(i + 1) for i in range(6)}
        dense = Multivector(3, terms)
        sparse = Multivector._from_arrays(3, np.array(list(terms), dtype=np.uint64), np.array(list(terms.values())))
        assert dense == sparse
        assert dense.terms == terms
        assert dense[5] == 6 and dense[7] == 0

    def test_text(self):
        x = Multivector(2, {0b11: -1, 0b00: 1})
        assert str(x) == "+1·1 −1·e_11"
        assert str(Multivector(2, {0b00: 1, 0b11: -1}).scale(0.5)) == "+0.5·1 −0.5·e_11"

    def test_ascending_order(self):
        x = Multivector(3, {7: 1, 1: 2, 4: 3})
        assert x.masks.tolist() == [1, 4, 7]

    def test_immutable(self):
        x = Multivector(3, {1: 1})
        with pytest.raises(ValueError):
            x.coefs[0] = 5

    def test_mask_outside_window(self):
        with pytest.raises(ValueError):
            Multivector(2, {4: 1})


@settings(max_examples=200)
@given(st.integers(1, 8).flatmap(lambda m: st.tuples(multivectors(m), multivectors(m), multivectors(m))))
def test_distributivity(xyz):
    x, y, z = xyz
    assert geometric_product(x, add(y, z)) == add(geometric_product(x, y), geometric_product(x, z))


@settings(max_examples=200)
@given(st.integers(1, 10).flatmap(lambda m: st.tuples(multivectors(m), multivectors(m))))
def test_reverse_antiautomorphism(xy):
    x, y = xy
    assert reverse(geometric_product(x, y)) == geometric_product(reverse(y), reverse(x))


@settings(max_examples=200)
@given(st.integers(1, 8).flatmap(lambda m: st.tuples(multivectors(m), multivectors(m), multivectors(m))))
def test_associativity(xyz):
    x, y, z = xyz
    assert geometric_product(geometric_product(x, y), z) == geometric_product(x, geometric_product(y, z))


@settings(max_examples=200)
@given(st.integers(1, 10).flatmap(lambda m: st.tuples(multivectors(m, 20), multivectors(m, 20))))
def test_fast_path_equivalence(xy):
    x, y = xy
    assert scalar_of_product(x, y) == scalar_part(geometric_product(x, y))
