"""Formula-based counters: frozen values from the published tables, route
agreement, supports, and the special-value polynomials."""
from fractions import Fraction

import pytest

from polylat.counting import (
    alpha_lemma,
    build_table,
    corollary_poly,
    count_cc,
    count_dcc,
    h_special,
    r_conv,
    r_gf,
    r_special,
    s_closed,
    s_conv,
)
from polylat.reference_tables import CC_TABLE, PLATEAU_ROWS, plateau_row_size

# the one known digit garble in the published plateau table's first 15 rows
PLATEAU_PRINT_TYPO = {(4, 13): (57922, 57928)}  # (k, m): (printed, correct)


def test_count_dcc():
    for k in range(1, 7):
        assert count_dcc(k, k) == 1
    assert count_dcc(2, 3) == 3
    assert count_dcc(3, 5) == 15
    assert count_dcc(3, 2) == 0
    with pytest.raises(ValueError):
        count_dcc(0, 4)


def test_s_conv():
    assert s_conv(1, 2) == 1
    assert s_conv(2, 5) == 6
    assert s_conv(2, 6) == 21
    assert s_conv(2, 3) == 0  # empty sum below the support


def test_s_closed():
    for k in range(1, 8):
        assert s_closed(k, 2 * k) == 1
    for n in range(2, 12):
        assert s_closed(1, n) == n - 1
    assert s_closed(3, 8) == 55
    assert s_closed(2, 3) == 0
    with pytest.raises(ValueError):
        s_closed(0, 4)


def test_s_conv_equals_s_closed():
    for k in range(1, 9):
        for n in range(2 * k, 2 * k + 31):
            assert s_conv(k, n) == s_closed(k, n)


def test_alpha_lemma_printed_formula():
    # evaluated verbatim; the values below document that the printed formula
    # contradicts the published table (4 and 9 at these cells)
    assert alpha_lemma(1, 1) == 1
    assert alpha_lemma(2, 3) == 2
    assert alpha_lemma(2, 4) == 1
    assert count_cc(2, 3) == 4
    assert count_cc(2, 4) == 9


def test_count_cc():
    assert count_cc(2, 3) == 4
    assert count_cc(4, 6) == 68
    for k in range(1, 11):
        assert count_cc(k, k) == 1
    assert count_cc(3, 2) == 0
    with pytest.raises(ValueError):
        count_cc(0, 1)


def test_count_cc_matches_published_table():
    for n in range(1, 11):
        for k in range(1, 11):
            assert count_cc(k, n) == CC_TABLE[n - 1][k - 1]


def test_r_conv():
    assert r_conv(2, 5) == 8
    assert r_conv(3, 9) == 666
    assert r_conv(4, 11) == 2152
    assert r_conv(3, 5) == 0


def test_r_gf():
    assert r_gf(1, 7) == 6
    assert r_gf(2, 7) == 104
    assert r_gf(5, 12) == 498
    with pytest.raises(ValueError):
        r_gf(0, 3)


def test_r_conv_equals_r_gf():
    for k in range(1, 8):
        for m in range(2 * k, 2 * k + 17):
            assert r_conv(k, m) == r_gf(k, m)


def test_dcc_is_subfamily_of_cc():
    for k in range(1, 7):
        for n in range(1, 15):
            assert count_dcc(k, n) <= count_cc(k, n)


def test_supports():
    for k in range(1, 7):
        for n in range(0, 16):
            assert (count_cc(k, n) == 0) == (n < k)
    for k in range(1, 6):
        for m in range(0, 16):
            assert (r_gf(k, m) == 0) == (m < 2 * k)


def test_h_special():
    assert h_special(6, 0) == 1
    assert h_special(2, 1) == 4
    assert h_special(5, 2) == 121
    with pytest.raises(ValueError):
        h_special(1, 1)
    with pytest.raises(ValueError):
        h_special(2, 2)
    with pytest.raises(ValueError):
        h_special(3, 3)


def test_r_special():
    assert r_special(4, 0) == 1
    assert r_special(2, 1) == 8
    assert r_special(3, 2) == 126
    with pytest.raises(ValueError):
        r_special(2, 2)


def test_specials_match_tables_up_to_k30():
    for k in range(1, 31):
        assert h_special(k, 0) == count_cc(k, k)
        assert r_special(k, 0) == r_gf(k, 2 * k)
    for k in range(2, 31):
        assert h_special(k, 1) == count_cc(k, k + 1)
        assert r_special(k, 1) == r_gf(k, 2 * k + 1)
    for k in range(3, 31):
        assert h_special(k, 2) == count_cc(k, k + 2)
        assert r_special(k, 2) == r_gf(k, 2 * k + 2)


def test_corollary_poly_values():
    assert corollary_poly("cc", 3, 4) == 260
    assert corollary_poly("plateau", 3, 4) == 2152  # confirms the 2k+3 reading
    assert corollary_poly("cc", 4, 5) == 2299  # = table value at width 5, area 9
    assert corollary_poly("cc", 3, Fraction(1, 2)) == Fraction(32, 3) / 8 - 11 + Fraction(134, 3) - 76


def test_corollary_poly_rejects_bad_arguments():
    with pytest.raises(ValueError):
        corollary_poly("cc", 2, 5)
    with pytest.raises(ValueError):
        corollary_poly("plateau", 7, 5)
    with pytest.raises(ValueError):
        corollary_poly("dcc", 3, 5)


def test_corollary_poly_matches_tables():
    for offset in range(3, 7):
        for k in range(offset + 1, 21):
            assert corollary_poly("cc", offset, k) == count_cc(k, k + offset)
            assert corollary_poly("plateau", offset, k) == r_gf(k, 2 * k + offset)


def test_build_table_cc_is_published_table():
    table = build_table("cc", 10, 10)
    for n in range(1, 11):
        assert table.row(n) == list(CC_TABLE[n - 1])


def test_build_table_plateau_vs_published_rows():
    table = build_table("plateau", 7, 15)
    for _, values in PLATEAU_ROWS:
        m = plateau_row_size(values)
        if m > 15:
            continue
        for k in range(1, 8):
            if (k, m) in PLATEAU_PRINT_TYPO:
                printed, correct = PLATEAU_PRINT_TYPO[(k, m)]
                assert values[k - 1] == printed
                assert table.value(k, m) == correct
            else:
                assert table.value(k, m) == values[k - 1]


def test_build_table_dplateau():
    table = build_table("dplateau", 1, 5)
    assert [table.value(1, m) for m in range(2, 6)] == [1, 2, 3, 4]
    assert table.size_min == 2


def test_build_table_minimal_entries():
    for family, size_of in (("dcc", lambda k: k), ("cc", lambda k: k),
                            ("dplateau", lambda k: 2 * k), ("plateau", lambda k: 2 * k)):
        table = build_table(family, 5, 10)
        for k in range(1, 6):
            assert table.value(k, size_of(k)) == 1
            assert table.value(k, size_of(k) - 1) == 0


def test_build_table_rejects_bad_arguments():
    with pytest.raises(ValueError):
        build_table("nope", 3, 3)
    with pytest.raises(ValueError):
        build_table("cc", 0, 3)
