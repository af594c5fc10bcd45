"""
Test exact root-of-unity and cyclotomic arithmetic
"""

import sys
from fractions import Fraction

import hypothesis as hyp
import pytest
from hypothesis import strategies as st
from sympy import Poly, cyclotomic_poly, symbols

from exactmath import (Cyclotomic, RootOfUnity, as_cyclotomic, cyclo_reduce,
                       cyclotomic_polynomial, cyclotomic_rank, is_zero_scalar,
                       nth_root_solutions, scalar_add, scalars_equal)

roots = st.builds(RootOfUnity.of, st.integers(-50, 50), st.integers(1, 24))


def small_cyclotomic(order):
    coeffs = st.lists(st.integers(-3, 3), min_size=order, max_size=order)
    return coeffs.map(lambda cs: cyclo_reduce(cs, order))


def test_root_normalization():
    assert RootOfUnity.of(2, 4) == RootOfUnity.of(1, 2)
    assert RootOfUnity.of(5, 4) == RootOfUnity.of(1, 4)
    assert RootOfUnity.of(-1, 4) == RootOfUnity.of(3, 4)
    assert RootOfUnity.of(4, 4).is_one()
    assert RootOfUnity.of(3, 12).order == 4


def test_root_arithmetic():
    i = RootOfUnity.of(1, 4)
    assert i * RootOfUnity.of(3, 4) == RootOfUnity.one()
    assert i ** 2 == -RootOfUnity.one()
    assert i.inverse() == RootOfUnity.of(3, 4)
    assert RootOfUnity.of(1, 3) / RootOfUnity.of(1, 6) == RootOfUnity.of(1, 6)
    assert str(i) == "zeta(4)^1"


def test_root_json():
    z = RootOfUnity.of(5, 12)
    assert z.to_json() == "5/12"
    assert RootOfUnity.from_json(z.to_json()) == z


@hyp.given(roots, roots, roots)
def test_root_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a.inverse() == RootOfUnity.one()


@hyp.given(roots, roots)
def test_root_complex_consistency(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9


def test_nth_root_solutions():
    target = RootOfUnity.of(1, 2)
    solutions = nth_root_solutions(3, target)
    assert len(solutions) == 3
    assert len(set(solutions)) == 3
    assert all(g ** 3 == target for g in solutions)
    with pytest.raises(ValueError):
        nth_root_solutions(0, target)


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = symbols('x')
    expected = tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs()))
    assert cyclotomic_polynomial(n) == expected


def test_i_squared_is_minus_one():
    i = Cyclotomic.from_root(RootOfUnity.of(1, 4))
    assert i * i == -1
    assert (i * i).coeffs == (Fraction(-1), Fraction(0))


def test_sum_of_cube_roots_vanishes():
    total = (Cyclotomic.from_rational(1, 3)
             + Cyclotomic.from_root(RootOfUnity.of(1, 3))
             + Cyclotomic.from_root(RootOfUnity.of(2, 3)))
    assert total.is_zero()
    assert is_zero_scalar(total)


def test_norm_of_one_minus_zeta_p():
    for p in (2, 3, 5, 7):
        x = Cyclotomic.from_rational(1, p) - RootOfUnity.of(1, p)
        assert x.norm() == p


def test_galois_action_on_root():
    z = Cyclotomic.from_root(RootOfUnity.of(1, 8))
    assert z.galois(3) == Cyclotomic.from_root(RootOfUnity.of(3, 8))


def test_lift_across_fields():
    half = Cyclotomic.from_root(RootOfUnity.of(1, 2))
    assert half == -1
    assert half.lift(6) == Cyclotomic.from_rational(-1, 6)
    with pytest.raises(ValueError):
        Cyclotomic.from_root(RootOfUnity.of(1, 4), order=6)


@hyp.given(small_cyclotomic(12), small_cyclotomic(12), small_cyclotomic(12))
def test_cyclotomic_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@hyp.settings(max_examples=30)
@hyp.given(small_cyclotomic(8))
def test_cyclotomic_inverse(a):
    hyp.assume(not a.is_zero())
    assert a * a.inverse() == 1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(5).inverse()


def test_scalar_helpers():
    assert scalars_equal(RootOfUnity.of(1, 2), -1)
    assert scalars_equal(Cyclotomic.from_rational(1, 4), RootOfUnity.one())
    assert is_zero_scalar(scalar_add(RootOfUnity.of(1, 2), RootOfUnity.one()))
    assert not is_zero_scalar(RootOfUnity.of(1, 3))
    assert as_cyclotomic(Fraction(1, 2)).coeffs == (Fraction(1, 2),)


def test_cyclotomic_json():
    x = Cyclotomic.from_rational(Fraction(1, 3), 5) + RootOfUnity.of(2, 5)
    assert Cyclotomic.from_json(x.to_json()) == x


def test_cyclotomic_rank():
    z = RootOfUnity.of(1, 6)
    assert cyclotomic_rank([]) == 0
    assert cyclotomic_rank([{0: 1}, {1: 1}]) == 2
    assert cyclotomic_rank([{0: RootOfUnity.one(), 1: z}, {0: z.inverse(), 1: RootOfUnity.one()}]) == 1
    assert cyclotomic_rank([{0: 1, 1: 1}, {0: 1, 1: -1}, {0: 2}]) == 2


if __name__ == "__main__":
    print("\n" + "="*60)
    print("EXACT ARITHMETIC TESTS")
    print("="*60 + "\n")
    sys.exit(pytest.main([__file__, "-v"]))
