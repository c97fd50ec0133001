from fractions import Fraction
from math import comb

import pytest

import narayana


def test_catalan_matches_binomial_formula():
    for n in range(30):
        assert narayana.catalan(n) == comb(2 * n, n) // (n + 1)


def test_large_values_are_python_ints():
    assert narayana.catalan(100) == comb(200, 100) // 101


def test_narayana_poly_row():
    assert narayana.narayana_poly(3) == [0, 1, 3, 1]
    assert all(isinstance(c, Fraction) for c in narayana.narayana_poly(3))


def test_legendre_has_fraction_coefficients():
    assert narayana.legendre_poly(2) == [Fraction(-1, 2), 0, Fraction(3, 2)]


def test_every_identity_holds_for_small_n():
    for name in narayana.identity_names():
        for n in range(narayana.identity_min_n(name), 8):
            record = narayana.check_identity(name, n)
            assert record["equal"], (name, n)
            assert record["lhs"] == record["rhs"]


def test_unknown_identity_raises():
    with pytest.raises(ValueError):
        narayana.check_identity("no_such_identity", 1)


def test_below_minimum_raises():
    with pytest.raises(narayana.PreconditionError):
        narayana.check_identity("alt_sum_310", 0)


def test_phi_flips_rightmost_component():
    assert narayana.phi("U[1]DU[q]D") == "U[1]DU[-q]D"
    assert narayana.phi("U[1]U[-q]DD") == "U[1]U[q]DD"


def test_dyck_enumeration_order():
    assert narayana.enumerate_dyck(3) == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]


def test_family_weights():
    assert narayana.family_weight("D", 1, 0) == [1, -1]
    assert narayana.family_weight("P", 1, 1) == [0, 1, 1]
    assert narayana.family_weight("Q", 0, 0) == [0, 0, 1]


def test_involution_certificate():
    report = narayana.involution_verify("Q", 2)
    assert report["certified"]
    assert report["total_weight"] == [0, 0, 0, 0, 5]


def test_parity_scan():
    odd, holds = narayana.catalan_parity_scan(64)
    assert odd == [0, 1, 3, 7, 15, 31, 63]
    assert holds
