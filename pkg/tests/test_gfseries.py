"""Polynomial arithmetic and generating-function coefficient extraction,
cross-checked against naive truncated long division."""
from fractions import Fraction

import pytest

from polylat.counting import count_dcc, s_closed
from polylat.gfseries import (
    RationalGF,
    gf_C,
    gf_R,
    gf_S,
    gf_S_k,
    gf_S_xt_coeff,
    gf_coeff,
    gf_coeffs,
    gf_dcc_width,
    monomial,
    one_minus_t_pow,
    poly_add,
    poly_mul,
    poly_pow,
    poly_sub,
    poly_trim,
)


def test_poly_trim_canonical():
    assert poly_trim([1, 2, 0, 0]) == (1, 2)
    assert poly_trim([0, 0]) == ()
    assert poly_trim([]) == ()


def test_poly_add():
    one_plus_t = (1, 1)
    assert poly_add(one_plus_t, ()) == (1, 1)
    assert poly_add(one_plus_t, (-1, -1)) == ()
    assert poly_add((1, 2), (0, 3, 1)) == (1, 5, 1)


def test_poly_mul():
    anything = (3, 0, -2, 7)
    assert poly_mul(anything, (1,)) == anything
    assert poly_mul((1, -1), (1, 1)) == (1, 0, -1)
    sq = poly_mul(one_minus_t_pow(2), one_minus_t_pow(2))
    assert sq == (1, -4, 6, -4, 1)
    assert sq == one_minus_t_pow(4)
    assert poly_mul((), (1, 2)) == ()


def test_poly_pow():
    assert poly_pow((1, -1), 0) == (1,)
    assert poly_pow((1, -1), 3) == (1, -3, 3, -1)
    with pytest.raises(ValueError):
        poly_pow((1, 1), -1)


def test_rational_gf_normalization():
    gf = RationalGF((0, -1), (-1, 1))
    assert gf.den[0] == 1
    assert gf.num == (0, 1)
    with pytest.raises(ValueError):
        RationalGF((1,), ())
    with pytest.raises(ValueError):
        RationalGF((1,), (0, 1))


def _long_division(num, den, upto):
    # naive truncated power-series division over Fractions
    coeffs = []
    rem = list(num) + [0] * (upto + len(den) + 1)
    for n in range(upto + 1):
        c = Fraction(rem[n], den[0])
        coeffs.append(c)
        for i, d in enumerate(den):
            rem[n + i] -= c * d
    return coeffs


def test_gf_coeffs_geometric():
    geo = RationalGF((1,), (1, -1))
    assert gf_coeffs(geo, 4) == [1, 1, 1, 1, 1]


def test_gf_coeffs_requires_unit_constant_term():
    with pytest.raises(ValueError):
        gf_coeffs(RationalGF((1,), (2, 1)), 3)


def test_gf_coeffs_matches_long_division():
    cases = [gf_S(), gf_S_k(1), gf_S_k(3), gf_C(0), gf_C(2), gf_R(1), gf_R(3), gf_dcc_width(2)]
    for gf in cases:
        exact = gf_coeffs(gf, 25)
        divided = _long_division(gf.num, gf.den, 25)
        assert [Fraction(c) for c in exact] == divided
        assert all(isinstance(c, int) for c in exact)


def test_gf_dcc_width():
    assert gf_coeffs(gf_dcc_width(1), 5) == [0, 1, 1, 1, 1, 1]
    assert gf_coeffs(gf_dcc_width(2), 3)[3] == 3
    assert gf_coeffs(gf_dcc_width(3), 4)[4] == 5
    with pytest.raises(ValueError):
        gf_dcc_width(0)


def test_gf_dcc_width_matches_closed_form():
    for k in range(1, 9):
        coeffs = gf_coeffs(gf_dcc_width(k), 40)
        for n in range(41):
            assert coeffs[n] == count_dcc(k, n)


def test_gf_S_k():
    assert gf_coeffs(gf_S_k(0), 6) == [0] * 7
    assert gf_coeffs(gf_S_k(1), 5) == [0, 0, 1, 2, 3, 4]
    assert gf_coeffs(gf_S_k(1), 5)[5] == 4
    assert gf_coeffs(gf_S_k(2), 5)[5] == 6
    with pytest.raises(ValueError):
        gf_S_k(-1)


def test_gf_S_k_matches_closed_form():
    for k in range(1, 9):
        coeffs = gf_coeffs(gf_S_k(k), 40)
        for n in range(41):
            assert coeffs[n] == s_closed(k, n)


def test_gf_S_denominator():
    gf = gf_S()
    assert gf.den == (1, -4, 5, -4, 1)
    assert gf.num == poly_mul(monomial(2), one_minus_t_pow(2))


def test_gf_S_coefficients():
    coeffs = gf_coeffs(gf_S(), 5)
    assert coeffs == [0, 0, 1, 2, 4, 10]


def test_gf_S_matches_width_sums():
    coeffs = gf_coeffs(gf_S(), 40)
    for n in range(41):
        assert coeffs[n] == sum(s_closed(k, n) for k in range(1, n // 2 + 1))


def test_gf_S_xt_coeff():
    assert gf_S_xt_coeff(1, 2) == 1
    assert gf_S_xt_coeff(2, 6) == 21  # = s_closed(2, 6) = C(7, 2)
    assert gf_S_xt_coeff(3, 7) == 10  # = s_closed(3, 7) = C(10, 1)
    with pytest.raises(ValueError):
        gf_S_xt_coeff(0, 4)


def test_gf_S_xt_matches_closed_form():
    for k in range(1, 7):
        for n in range(31):
            assert gf_S_xt_coeff(k, n) == s_closed(k, n)


def test_gf_C():
    assert gf_coeffs(gf_C(0), 5) == [0, 1, 1, 1, 1, 1]
    assert gf_coeff(gf_C(1), 3) == 4
    assert gf_coeff(gf_C(2), 5) == 31
    with pytest.raises(ValueError):
        gf_C(-1)


def test_gf_R():
    for m in range(2, 9):
        assert gf_coeff(gf_R(1), m) == m - 1
    assert gf_coeff(gf_R(2), 6) == 34
    assert gf_coeff(gf_R(3), 8) == 126
    with pytest.raises(ValueError):
        gf_R(0)


def test_gf_R_is_cauchy_square_of_gf_C():
    for k in range(1, 8):
        upto = 2 * k + 16
        c = gf_coeffs(gf_C(k - 1), upto)
        r = gf_coeffs(gf_R(k), upto)
        for m in range(upto + 1):
            assert r[m] == sum(c[i] * c[m - i] for i in range(m + 1))


def test_poly_sub():
    assert poly_sub((1, 2), (1, 2)) == ()
    assert poly_sub(one_minus_t_pow(4), monomial(2)) == (1, -4, 5, -4, 1)
