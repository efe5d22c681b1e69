from fractions import Fraction

import pytest

from src.arith.padic import PAdicNumber, unit_root
from src.curves.weierstrass import WeierstrassCurve
from src.errors import NormCompatibilityFailed, SupersingularInput
from src.iwasawa.invariants import mu_lambda
from src.lseries.mazur_tate import mazur_tate_tower
from src.lseries.ordinary import (
    binomial_transform,
    ordinary_lfunction,
    series_guard,
    stabilize_ordinary,
    to_series,
    working_precision,
)
from src.modsym.space import ManinSymbolSpace
from src.modsym.symbol import eigen_symbol, eval_symbol

E11 = WeierstrassCurve([0, -1, 1, -10, -20], "11a1")


@pytest.fixture(scope="module")
def plus():
    return eigen_symbol(ManinSymbolSpace(11), E11, 1)


def test_binomial_transform():
    # 1 + 2(1 + T) + 3(1 + T)^2 = 6 + 8T + 3T^2
    assert binomial_transform([1, 2, 3], 3) == [6, 8, 3]
    assert binomial_transform([1, 2, 3], 1) == [6]


def test_series_guard_subtracts_denominator_loss():
    assert series_guard(1, 3, 0, 3)[1:] == [1, 1]
    assert series_guard(1, 3, 1, 3)[1:] == [0, 0]


def test_working_precision():
    assert working_precision(4, 33, 3, 5, 7) == 33 + 3 + 5
    assert working_precision(4, 33, 3, 14, 7) == 33 + 3 + 5 + 1


def test_stabilization_is_norm_compatible(plus):
    lower, middle, top = mazur_tate_tower(plus, 7, 2)
    alpha = unit_root(-2, 7, 20)
    element = stabilize_ordinary(top, middle, alpha, lower)
    assert element.norm_compatible
    assert len(element.coefficients) == 49
    assert len(element.project()) == 7


def test_stabilization_interpolates_the_central_value(plus):
    p = 7
    alpha = unit_root(-2, p, 20)
    lower, middle, top = mazur_tate_tower(plus, p, 2)
    element = stabilize_ordinary(top, middle, alpha, lower)
    zero = PAdicNumber.from_rational(eval_symbol(plus, 0, 1), p, 20)
    expected = (1 - alpha.inverse()) ** 2 * zero
    assert element.augmentation().agrees_with(expected)


def test_wrong_root_breaks_norm_compatibility(plus):
    lower, middle, top = mazur_tate_tower(plus, 7, 2)
    perturbed = unit_root(-2, 7, 20) + PAdicNumber.from_int(7, 7)
    with pytest.raises(NormCompatibilityFailed):
        stabilize_ordinary(top, middle, perturbed, lower)


def test_non_unit_root_rejected(plus):
    lower, middle, top = mazur_tate_tower(plus, 7, 2)
    with pytest.raises(ValueError):
        stabilize_ordinary(top, middle, PAdicNumber.from_int(7, 7, 20), lower)


def test_series_length_and_precision_caps(plus):
    lfunction = ordinary_lfunction(plus, E11, 7, 2, M=4, constant_prec=10)
    series = lfunction.series
    assert series.length == 49 - 7
    assert series.omega_level == 2
    assert series[0].precision_absolute <= 10
    guard = series_guard(2, 7, lfunction.stabilized.denominator_valuation, series.length)
    for k in range(1, series.length):
        assert series[k].precision_absolute <= min(4, guard[k])


def test_series_constant_term_is_the_augmentation(plus):
    lfunction = ordinary_lfunction(plus, E11, 7, 2, M=4, constant_prec=10)
    assert lfunction.series[0].agrees_with(lfunction.stabilized.augmentation())


def test_symbol_scaling_scales_the_series(plus):
    base = ordinary_lfunction(plus, E11, 7, 2)
    scaled = ordinary_lfunction(plus.rescaled(Fraction(3)), E11, 7, 2)
    for x, y in zip(base.series, scaled.series, strict=True):
        assert (x * 3).agrees_with(y)


def test_to_series_at_level_one(plus):
    lower, middle, top = mazur_tate_tower(plus, 5, 1)
    element = stabilize_ordinary(top, middle, unit_root(1, 5, 20), lower)
    series = to_series(element, 4)
    assert series.length == 4


def test_supersingular_prime_rejected(plus):
    with pytest.raises(SupersingularInput):
        ordinary_lfunction(plus, E11, 19, 2)


def test_invariants_ignore_unit_scaling_and_generator(plus):
    base = mu_lambda(ordinary_lfunction(plus, E11, 7, 2).series)
    scaled = mu_lambda(ordinary_lfunction(plus.rescaled(Fraction(3)), E11, 7, 2).series)
    other_gamma = mu_lambda(ordinary_lfunction(plus, E11, 7, 2, gamma=15).series)
    for report in (scaled, other_gamma):
        assert (report.mu, report.lambda_, report.ord_T_lower) == (base.mu, base.lambda_, base.ord_T_lower)


def test_series_is_stable_from_one_level_to_the_next(plus):
    shallow = ordinary_lfunction(plus, E11, 7, 1).series
    deep = ordinary_lfunction(plus, E11, 7, 2).series
    assert shallow.agrees_with(deep)
    assert mu_lambda(shallow).reliable
    assert mu_lambda(deep).lambda_ == mu_lambda(shallow).lambda_
