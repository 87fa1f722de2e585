import random
from fractions import Fraction
from math import comb, gcd

import pytest

from chordgenus.series import (
    BiSeries,
    Poly,
    Series,
    exp_series,
    geometric_series,
    poly_divmod,
    poly_gcd,
    sqrt_binomial,
    sqrt_newton,
)


def rand_fraction(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_poly(rng, max_deg=6):
    return Poly([rand_fraction(rng) for _ in range(rng.randint(0, max_deg + 1))])


def rand_series(rng, order=12):
    return Series([rand_fraction(rng) for _ in range(order + 1)])


# -- polynomials


def test_poly_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Poly([0, 0]).is_zero()
    assert Poly([]).degree == -1


def test_poly_ring_axioms():
    rng = random.Random(101)
    for _ in range(40):
        a, b, c = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + Poly.zero() == a
        assert a * Poly.one() == a
        assert a - a == Poly.zero()


def test_poly_evaluate_and_compose():
    p = Poly([1, -3, 2])  # 1 - 3z + 2z^2
    assert p(2) == 1 - 6 + 8
    q = Poly([0, 1, 1])
    rng = random.Random(7)
    for _ in range(20):
        z = rand_fraction(rng)
        assert p.compose(q)(z) == p(q(z))


def test_poly_power_matches_repeated_mul():
    p = Poly([1, 1])
    assert p ** 5 == Poly([comb(5, k) for k in range(6)])


def test_poly_derivative_and_divide_by_power():
    p = Poly([0, 0, 3, 5])
    assert p.derivative() == Poly([0, 6, 15])
    assert p.divide_by_power(2) == Poly([3, 5])
    with pytest.raises(ArithmeticError):
        p.divide_by_power(3)


def test_affine_basis_spec_case():
    # z^2 rewritten in powers of (1 - 4z)
    q = Poly([0, 0, 1]).in_affine_basis(-4, 1)
    assert q.coeffs == (Fraction(1, 16), Fraction(-1, 8), Fraction(1, 16))


def test_affine_basis_round_trip():
    rng = random.Random(33)
    for _ in range(25):
        p = rand_poly(rng)
        scale = Fraction(rng.choice([-4, -1, 2, 3]), rng.choice([1, 2]))
        shift = rand_fraction(rng)
        q = p.in_affine_basis(scale, shift)
        assert Poly.from_affine_basis(q.coeffs, scale, shift) == p


def test_poly_divmod_and_gcd():
    rng = random.Random(55)
    for _ in range(25):
        a, b = rand_poly(rng), rand_poly(rng, 4)
        if b.is_zero():
            continue
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree
    # gcd of polynomials with a known common factor
    common = Poly([1, 2, 1])
    g = poly_gcd(common * Poly([3, 1]), common * Poly([-1, 0, 2]))
    assert g == common.scale(Fraction(1, common.coeffs[-1]))


# -- univariate series


def test_series_orders_follow_min_rule():
    a = Series([1, 2, 3, 4])
    b = Series([5, 6, 7])
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a - b).order == 2


def test_series_coeff_beyond_order_raises():
    s = Series([1, 2])
    with pytest.raises(IndexError):
        s.coeff(2)


def test_series_ring_axioms():
    rng = random.Random(202)
    for _ in range(30):
        a, b, c = rand_series(rng), rand_series(rng), rand_series(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_series_coefficients_stay_reduced():
    rng = random.Random(13)
    for _ in range(10):
        s = rand_series(rng) * rand_series(rng)
        for c in s.coeffs:
            assert gcd(abs(c.numerator), c.denominator) == 1
            assert c.denominator > 0


def test_reciprocal_and_divide():
    rng = random.Random(303)
    for _ in range(20):
        a = rand_series(rng)
        if a.coeffs[0] == 0:
            continue
        assert a * a.reciprocal() == Series.one(a.order)
        b = rand_series(rng)
        assert b.divide(a) * a == b.truncate(min(a.order, b.order))


def test_geometric_series():
    g = geometric_series(6)
    one_minus_z = Poly([1, -1]).as_series(6)
    assert one_minus_z * g == Series.one(6)


def test_sqrt_two_routes_agree_and_square_back():
    rng = random.Random(404)
    for _ in range(20):
        coeffs = [Fraction(1)] + [rand_fraction(rng) for _ in range(14)]
        s = Series(coeffs)
        r1 = sqrt_newton(s)
        r2 = sqrt_binomial(s)
        assert r1 == r2
        assert r1 * r1 == s
        assert s.sqrt() == r1


def test_sqrt_of_one_minus_four_z():
    s = Poly([1, -4]).as_series(8).sqrt()
    # 1 - 2 sum binom(2n-2, n-1) z^n / n
    expected = [Fraction(1)] + [Fraction(-2 * comb(2 * n - 2, n - 1), n) for n in range(1, 9)]
    assert s == Series(expected)
    assert s.coeffs[:5] == (1, -2, -2, -4, -10)


def test_sqrt_requires_unit_constant_term():
    with pytest.raises(ValueError):
        Series([4, 1, 1]).sqrt()


def test_derivative_integrate_round_trip():
    rng = random.Random(505)
    for _ in range(15):
        s = rand_series(rng)
        back = s.integrate().derivative()
        assert back == s
        zero_const = Series([Fraction(0)] + list(rand_series(rng, 9).coeffs))
        assert zero_const.derivative().integrate() == zero_const


def test_compose_identity_and_known_case():
    rng = random.Random(606)
    z = Series([0, 1] + [0] * 11)
    for _ in range(10):
        f = rand_series(rng)
        assert f.compose(z) == f
    # 1/(1-z) composed with z/(1+z) gives 1+z
    inner = Poly([0, 1]).as_series(10).divide(Poly([1, 1]).as_series(10))
    assert geometric_series(10).compose(inner) == Poly([1, 1]).as_series(10)


def test_compose_associativity():
    rng = random.Random(707)
    for _ in range(10):
        f = rand_series(rng, 10)
        g = Series([0] + [rand_fraction(rng) for _ in range(10)])
        h = Series([0, rng.randint(1, 3)] + [rand_fraction(rng) for _ in range(9)])
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_compose_rejects_nonzero_constant_term():
    with pytest.raises(ValueError):
        Series([1, 1, 1]).compose(Series([1, 1, 1]))


def test_compose_rejects_short_outer():
    inner = Series([0, 1, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        Series([1, 1]).compose(inner)


def test_compose_with_high_valuation_inner_accepts_short_outer():
    inner = Series([0, 0, 0, 1, 0, 0, 2])  # valuation 3, order 6
    outer = Series([5, 7, 11])
    got = outer.compose(inner)
    assert got.order == 6
    assert got.coeffs == (5, 0, 0, 7, 0, 0, 25)


def test_shift_up_down():
    s = Series([1, 2, 3])
    up = s.shift_up(2)
    assert up.order == 4
    assert up.coeffs == (0, 0, 1, 2, 3)
    assert up.shift_down(2) == s
    with pytest.raises(ArithmeticError):
        Series([1, 2]).shift_down(1)


def test_mul_poly_gains_valuation_order():
    s = Series([1, 1, 1])
    p = Poly([0, 0, 7])
    out = s.mul_poly(p)
    assert out.order == 4
    assert out.coeffs == (0, 0, 7, 7, 7)


def test_exp_series_functional_equation():
    e = exp_series(10)
    double = Series([0, 2] + [0] * 9)
    assert e.compose(double) == e * e


# -- bivariate series


def test_biseries_mul_matches_poly_model():
    rng = random.Random(808)
    for _ in range(10):
        terms_a = {(i, j): rng.randint(-3, 3) for i in range(3) for j in range(3)}
        terms_b = {(i, j): rng.randint(-3, 3) for i in range(3) for j in range(3)}
        a = BiSeries.from_terms(terms_a, 4, 4)
        b = BiSeries.from_terms(terms_b, 4, 4)
        prod = a * b
        for i in range(5):
            for j in range(5):
                want = sum(
                    terms_a.get((k, l), 0) * terms_b.get((i - k, j - l), 0)
                    for k in range(i + 1)
                    for l in range(j + 1)
                )
                assert prod.coeff(i, j) == want


def test_biseries_reciprocal():
    d = BiSeries.from_terms({(0, 0): 1, (1, 0): 1, (1, 1): -1}, 6, 6)
    assert d * d.reciprocal() == BiSeries.from_terms({(0, 0): 1}, 6, 6)


def test_biseries_compose_outer_geometric():
    # 1/(1-(x+y)) has coefficients binom(i+j, i)
    inner = BiSeries.from_terms({(1, 0): 1, (0, 1): 1}, 5, 5)
    got = inner.compose_outer(geometric_series(10))
    for i in range(6):
        for j in range(6):
            assert got.coeff(i, j) == comb(i + j, i)


def test_biseries_compose_outer_guard():
    inner = BiSeries.from_terms({(1, 0): 1, (0, 1): 1}, 5, 5)
    with pytest.raises(ValueError):
        inner.compose_outer(geometric_series(4))


def test_biseries_partial_derivatives():
    s = BiSeries.from_terms({(2, 3): 5, (1, 1): 2}, 4, 4)
    assert s.dx().coeff(1, 3) == 10
    assert s.dy().coeff(2, 2) == 15
    assert s.dx().coeff(0, 1) == 2
    assert s.dy().coeff(1, 0) == 2


def test_biseries_shifts_and_rows():
    s = BiSeries.from_terms({(0, 0): 1, (1, 2): 3}, 3, 3)
    up = s.shift_x(2)
    assert up.order_x == 5
    assert up.coeff(3, 2) == 3
    assert s.shift_y(1).coeff(1, 3) == 3
    assert s.row_series(2).coeffs == (0, 3, 0, 0)
    assert s.column_poly(1).coeffs == (0, 0, 3)
