import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gadj.blade import (
    Blade,
    DimensionMismatchError,
    SignedBlade,
    blade_product,
    reverse_sign,
    sign_oracle,
)

from conftest import blade_tuples, blades


def e(*indices, m):
    return Blade.from_indices(indices, m)


class TestConstruction:
    def test_bit_convention(self):
        assert Blade.from_bits("110").mask == 0b110
        assert Blade.from_bits("e_010") == Blade.generator(2, 3)
        assert e(1, 2, 5, 7, m=8).bits == "11001010"

    def test_text_format(self):
        assert str(Blade.from_bits("010")) == "e_010"
        assert str(Blade.scalar(3)) == "1"

    def test_indices_roundtrip(self):
        b = Blade.from_bits("10110")
        assert b.indices() == [1, 3, 4]
        assert b.grade == 3

    @pytest.mark.parametrize("mask,m", [(8, 3), (-1, 3), (0, 64)])
    def test_invalid(self, mask, m):
        with pytest.raises(ValueError):
            Blade(mask, m)

    def test_repeated_index(self):
        with pytest.raises(ValueError):
            e(1, 1, m=3)

    def test_bad_bits(self):
        with pytest.raises(ValueError):
            Blade.from_bits("012")

    def test_signed_blade_sign(self):
        with pytest.raises(ValueError):
            SignedBlade(0, Blade.scalar(2))


class TestProductExamples:
    def test_e1_e1(self):
        assert blade_product(e(1, m=3), e(1, m=3)) == SignedBlade(1, Blade.scalar(3))

    def test_e12_e1(self):
        assert blade_product(e(1, 2, m=3), e(1, m=3)) == SignedBlade(-1, e(2, m=3))

    def test_e1_e12(self):
        assert blade_product(e(1, m=3), e(1, 2, m=3)) == SignedBlade(1, e(2, m=3))

    def test_e1257_e26(self):
        p = blade_product(e(1, 2, 5, 7, m=8), e(2, 6, m=8))
        assert p == SignedBlade(-1, e(1, 5, 6, 7, m=8))
        assert p.blade.bits == "10001110"

    def test_scalar_identity(self):
        for mask in range(16):
            b = Blade(mask, 4)
            assert blade_product(Blade.scalar(4), b) == SignedBlade(1, b)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            blade_product(Blade(1, 2), Blade(1, 3))
        with pytest.raises(DimensionMismatchError):
            sign_oracle(Blade(1, 2), Blade(1, 3))

    def test_operator(self):
        assert Blade.from_bits("10") * Blade.from_bits("01") == SignedBlade(1, Blade.from_bits("11"))
        assert -(SignedBlade(1, Blade(1, 2))) == SignedBlade(-1, Blade(1, 2))


class TestReverseSign:
    @pytest.mark.parametrize(
        "bits,sign", [("0000", 1), ("1100", -1), ("1110", -1), ("1111", 1), ("1000", 1)]
    )
    def test_values(self, bits, sign):
        assert reverse_sign(Blade.from_bits(bits)) == sign


class TestSignOracle:
    def test_e1257_e26(self):
        assert sign_oracle(e(1, 2, 5, 7, m=8), e(2, 6, m=8)) == -1

    def test_ordered(self):
        assert sign_oracle(e(1, m=2), e(2, m=2)) == 1

    def test_swapped(self):
        assert sign_oracle(e(2, m=2), e(1, m=2)) == -1

    def test_exhaustive_small(self):
        for m in range(1, 5):
            for a in range(1 << m):
                for b in range(1 << m):
                    A, B = Blade(a, m), Blade(b, m)
                    assert blade_product(A, B).sign == sign_oracle(A, B)


@given(blade_tuples(2))
def test_xor_law(ab):
    a, b = ab
    assert blade_product(a, b).blade.mask == a.mask ^ b.mask


@settings(max_examples=2000)
@given(blade_tuples(2))
def test_oracle_equivalence(ab):
    a, b = ab
    assert blade_product(a, b).sign == sign_oracle(a, b)


@settings(max_examples=500)
@given(blade_tuples(3))
def test_associativity(abc):
    a, b, c = abc
    left = SignedBlade(1, a) * b * c
    right = SignedBlade(1, a) * (SignedBlade(1, b) * c)
    assert left == right


@given(st.integers(2, 12).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m), st.integers(1, m))))
def test_anticommutation(mij):
    m, i, j = mij
    ei, ej = Blade.generator(i, m), Blade.generator(j, m)
    if i == j:
        assert blade_product(ei, ei) == SignedBlade(1, Blade.scalar(m))
    else:
        assert blade_product(ei, ej) == -blade_product(ej, ei)


@given(blades())
def test_reverse_via_products(a):
    factors = [Blade.generator(j, a.m) for j in a.indices()]
    forward = SignedBlade(1, Blade.scalar(a.m))
    for g in factors:
        forward = forward * g
    assert forward == SignedBlade(1, a)
    backward = SignedBlade(1, Blade.scalar(a.m))
    for g in reversed(factors):
        backward = backward * g
    assert backward == SignedBlade(reverse_sign(a), a)
