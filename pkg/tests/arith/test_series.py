import pytest

from src.arith.padic import PAdicNumber
from src.arith.series import PAdicSeries, series_solve
from src.errors import NotDivisible, PrecisionExhausted


def lifts(series):
    return [c.lift() for c in series]


def test_addition_pads_shorter_series():
    total = PAdicSeries.from_integers([1, 2], 5) + PAdicSeries.from_integers([3], 5)
    assert lifts(total) == [4, 2]


def test_omega_level_bounds_length():
    with pytest.raises(ValueError):
        PAdicSeries.from_integers([1, 2, 3, 4], 3, omega_level=1)


def test_multiply_truncated():
    x = PAdicSeries.from_integers([1, 1], 5)
    assert lifts(x.multiply_truncated(x, 3)) == [1, 2, 1]


def test_multiply_polynomial_mod_omega():
    one = PAdicSeries.from_integers([1], 3)
    product = one.multiply_polynomial_mod_omega([0, 0, 0, 1], 1)
    assert product.omega_level == 1
    assert lifts(product) == [0, -3, -3]


def test_clamp_reduces_leading_coefficients():
    clamped = PAdicSeries.from_integers([100, 100], 7).clamp([2])
    assert clamped[0].residue() == 100 % 49
    assert clamped[1].is_exact()


def test_series_solve_exact_quotient():
    quotient = series_solve(PAdicSeries.from_integers([2, 3, 1], 5), [1, 1])
    assert lifts(quotient) == [2, 1]


def test_series_solve_applies_pending_divisions():
    quotient = series_solve(PAdicSeries.from_integers([2, 3, 1], 5), [1, 1], p_divisions=1)
    assert lifts(quotient) == [10, 5]


def test_series_solve_with_unit_leading_coefficient():
    quotient = series_solve(PAdicSeries.from_integers([4, 8], 5, prec=6), [2, 4])
    assert quotient[0].residue() == 2


def test_series_solve_detects_remainder():
    with pytest.raises(NotDivisible):
        series_solve(PAdicSeries.from_integers([1, 0, 1], 5), [1, 1])


def test_series_solve_accepts_remainder_below_precision():
    target = PAdicSeries(5, [PAdicNumber.from_int(25, 5, 2), PAdicNumber.from_int(1, 5, 4)])
    quotient = series_solve(target, [0, 1])
    assert quotient[0].residue() == 1


def test_series_solve_exhausted_precision():
    with pytest.raises(PrecisionExhausted):
        series_solve(PAdicSeries.zero(5, 2, prec=0), [1, 1])


def test_series_solve_rejects_non_unit_leading_coefficient():
    with pytest.raises(ValueError):
        series_solve(PAdicSeries.from_integers([1, 5], 5), [1, 5])
