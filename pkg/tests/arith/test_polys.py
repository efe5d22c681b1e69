import pytest

from src.arith.padic import INF
from src.arith.polys import (
    MINUS,
    PLUS,
    ambiguity_profile,
    cyclotomic_shifted,
    half_log_factors,
    half_log_truncation,
    omega,
    poly_divmod,
    poly_mod_omega,
    poly_mul,
)


def test_omega_coefficients():
    assert omega(0, 3) == [0, 1]
    assert omega(1, 3) == [0, 3, 3, 1]


def test_omega_rejects_negative_level():
    with pytest.raises(ValueError):
        omega(-1, 3)


def test_cyclotomic_shifted_level_one():
    assert cyclotomic_shifted(1, 5) == [5, 10, 10, 5, 1]


def test_cyclotomic_shifted_is_distinguished():
    coefficients = cyclotomic_shifted(2, 3)
    assert len(coefficients) == 7
    assert coefficients[0] == 3
    assert coefficients[-1] == 1
    assert all(c % 3 == 0 for c in coefficients[:-1])


def test_omega_factors_into_cyclotomic_polynomials():
    product = poly_mul(poly_mul([0, 1], cyclotomic_shifted(1, 3)), cyclotomic_shifted(2, 3))
    assert product == omega(2, 3)


def test_half_log_factors_by_parity():
    assert half_log_factors(PLUS, 4) == [2, 4]
    assert half_log_factors(MINUS, 4) == [1, 3]
    assert half_log_factors(PLUS, 1) == []
    with pytest.raises(ValueError):
        half_log_factors("x", 2)


def test_half_log_truncation_counts_divisions():
    assert half_log_truncation(MINUS, 1, 3) == ([3, 3, 1], 1)
    assert half_log_truncation(PLUS, 1, 3) == ([1], 0)


def test_poly_divmod_exact():
    quotient, remainder = poly_divmod([-1, 0, 1], [-1, 1])
    assert quotient == [1, 1]
    assert remainder == [0]


def test_poly_mod_omega_reduces_top_degree():
    assert poly_mod_omega([0, 0, 0, 1], 1, 3) == [0, -3, -3]
    assert poly_mod_omega([2], 1, 3) == [2, 0, 0]


def test_ambiguity_profile_of_omega():
    assert ambiguity_profile([0, 3, 3, 1], 3, 5) == [INF, 1, 1, 0, 0]
    guard = ambiguity_profile(omega(3, 7), 7, 3)
    assert guard == [INF, 3, 3]
