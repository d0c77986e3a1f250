import random
from fractions import Fraction

import pytest

from propergenus.core import LaurentPoly
from propergenus.errors import NonIntegral, NonUnitConstantTerm


def rand_poly(rng, var="lam"):
    return LaurentPoly(
        {rng.randint(-5, 5): rng.randint(-4, 4) for _ in range(rng.randint(0, 4))}, var
    )


def test_zero_normalization():
    p = LaurentPoly({2: 0, -1: Fraction(0)})
    assert p.is_zero()
    assert p.coeffs == {}
    assert p == 0


def test_integral_fractions_collapse_to_int():
    p = LaurentPoly({1: Fraction(6, 3)})
    assert p.coeffs[1] == 2
    assert isinstance(p.coeffs[1], int)
    assert p.is_integral()
    assert not LaurentPoly({0: Fraction(1, 2)}).is_integral()


def test_arithmetic():
    p = LaurentPoly({1: 1, -1: 1})
    q = LaurentPoly({1: 1, -1: -1})
    assert p + q == LaurentPoly({1: 2})
    assert p - p == LaurentPoly.zero()
    assert p * q == LaurentPoly({2: 1, -2: -1})
    assert (p * 0).is_zero()
    assert p * 3 == LaurentPoly({1: 3, -1: 3})
    assert (p ** 2) == LaurentPoly({2: 1, 0: 2, -2: 1})


def test_adams_substitution_examples():
    assert LaurentPoly({1: 1, -1: 1}).substitute_power(2) == LaurentPoly({2: 1, -2: 1})
    assert LaurentPoly({0: 3}).substitute_power(7) == LaurentPoly({0: 3})
    adjoint = LaurentPoly({2: 1, -2: 1})
    assert adjoint.substitute_power(3) == LaurentPoly({6: 1, -6: 1})


def test_adams_is_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        p, q = rand_poly(rng), rand_poly(rng)
        k = rng.randint(1, 4)
        assert (p * q).substitute_power(k) == p.substitute_power(k) * q.substitute_power(k)
        assert (p + q).substitute_power(k) == p.substitute_power(k) + q.substitute_power(k)


def test_unit_inverse():
    m = LaurentPoly({3: Fraction(2)})
    inv = m.inverse_if_unit()
    assert m * inv == LaurentPoly({0: 1})
    with pytest.raises(NonUnitConstantTerm):
        LaurentPoly({0: 1, 1: 1}).inverse_if_unit()


def test_rank_and_evaluation():
    p = LaurentPoly({2: 1, -2: 1, 0: -2})
    assert p.eval_one() == 0
    assert p.evaluate(Fraction(2)) == Fraction(4) + Fraction(1, 4) - 2
    z = p.evaluate(1j)
    assert abs(z - (-4)) < 1e-12


def test_exponent_doubling_halving():
    p = LaurentPoly({1: 2, -3: 1})
    d = p.double_exponents()
    assert d.var == "mu"
    assert d.coeffs == {2: 2, -6: 1}
    assert d.halve_exponents() == p
    with pytest.raises(NonIntegral):
        LaurentPoly({1: 1}, "mu").halve_exponents()


def test_json_round_trip_bit_exact():
    rng = random.Random(11)
    for _ in range(30):
        p = rand_poly(rng)
        p = p + LaurentPoly({0: Fraction(rng.randint(-9, 9), rng.randint(1, 9))})
        assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly({-2: Fraction(3, 2)}).to_json() == {"-2": "3/2"}
