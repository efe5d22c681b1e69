from fractions import Fraction

import pytest
from mpmath import mp

from src.curves.weierstrass import WeierstrassCurve
from src.errors import NormalizationAmbiguous
from src.modsym.normalize import auxiliary_discriminants, normalize, rationalize
from src.modsym.periods import central_value, periods
from src.modsym.space import ManinSymbolSpace
from src.modsym.symbol import algebraic_L_ratio, eigen_symbol, eval_symbol

E11 = WeierstrassCurve([0, -1, 1, -10, -20], "11a1")
E14 = WeierstrassCurve([1, 0, 1, 4, -6], "14a1")
E37 = WeierstrassCurve([0, 0, 1, -1, 0], "37a1")


def test_real_period_of_11a1():
    omega = periods(E11, 30).omega_plus
    assert abs(omega - mp.mpf("1.26920930427955342168879461675")) < mp.mpf("1e-25")


def test_central_value_of_11a1_is_a_fifth_of_the_period():
    curve_periods = periods(E11, 40)
    ratio = central_value(E11, 1, 1, 40) / curve_periods.omega_plus
    assert abs(ratio - mp.mpf(1) / 5) < mp.mpf("1e-30")


def test_central_value_vanishes_for_odd_functional_equation():
    assert central_value(E37, 1, -1, 30) == 0


def test_auxiliary_discriminants_order():
    assert list(auxiliary_discriminants(1, 11, 13)) == [1, 5, 8, 12, 13]
    assert list(auxiliary_discriminants(-1, 11, 12)) == [-3, -4, -7, -8]


def test_rationalize():
    with mp.workdps(60):
        assert rationalize(mp.mpf(2) / 7) == Fraction(2, 7)
        with pytest.raises(NormalizationAmbiguous):
            rationalize(mp.pi)


def test_normalized_11a1_value_at_zero():
    symbol = normalize(eigen_symbol(ManinSymbolSpace(11), E11, 1), E11)
    assert eval_symbol(symbol, 0, 1) == Fraction(1, 5)
    assert symbol.provenance["anchor_discriminant"] == 1
    assert symbol.provenance["root_number"] == 1


def test_normalized_37a1_anchors_on_a_twist():
    symbol = normalize(eigen_symbol(ManinSymbolSpace(37), E37, 1), E37)
    assert symbol.provenance["anchor_discriminant"] > 1
    assert symbol.provenance["root_number"] == -1
    assert eval_symbol(symbol, 0, 1) == 0


def test_normalized_14a1_minus_twist_by_minus_19_is_nonzero():
    symbol = normalize(eigen_symbol(ManinSymbolSpace(14), E14, -1), E14)
    assert algebraic_L_ratio(symbol, -19) != 0
