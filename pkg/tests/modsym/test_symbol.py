from fractions import Fraction

import pytest

from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.data.curves import bundled_curves
from src.errors import RamifiedTwist, SignMismatch
from src.modsym.space import ManinSymbolSpace
from src.modsym.symbol import algebraic_L_ratio, eigen_symbol, eval_symbol, fricke_sign, twist_sign

E11 = WeierstrassCurve([0, -1, 1, -10, -20], "11a1")
E37 = WeierstrassCurve([0, 0, 1, -1, 0], "37a1")


@pytest.fixture(scope="module")
def space11():
    return ManinSymbolSpace(11)


@pytest.fixture(scope="module")
def space37():
    return ManinSymbolSpace(37)


def test_eigen_symbol_is_primitive_and_integral(space11):
    symbol = eigen_symbol(space11, E11, 1)
    assert all(v.denominator == 1 for v in symbol.vector)
    assert symbol.sign == 1
    assert eval_symbol(symbol, 0, 1) != 0


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 13])
def test_hecke_relation_at_zero(space11, ell):
    symbol = eigen_symbol(space11, E11, 1)
    total = sum(eval_symbol(symbol, a, ell) for a in range(ell)) + eval_symbol(symbol, 0, 1)
    assert total == ap(E11, ell) * eval_symbol(symbol, 0, 1)


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_hecke_relation_at_a_third(space37, ell):
    symbol = eigen_symbol(space37, E37, -1)
    total = sum(eval_symbol(symbol, 1 + 3 * a, 3 * ell) for a in range(ell)) + eval_symbol(symbol, ell, 3)
    assert total == ap(E37, ell) * eval_symbol(symbol, 1, 3)


@pytest.mark.parametrize("sign", [1, -1])
def test_star_symmetry(space37, sign):
    symbol = eigen_symbol(space37, E37, sign)
    for a, m in [(1, 3), (2, 5), (3, 7), (5, 12)]:
        assert eval_symbol(symbol, -a, m) == sign * eval_symbol(symbol, a, m)


def test_translation_invariance(space11):
    symbol = eigen_symbol(space11, E11, -1)
    for a, m in [(1, 3), (2, 7), (4, 9)]:
        assert eval_symbol(symbol, a + m, m) == eval_symbol(symbol, a, m)


def test_rank_one_symbol_vanishes_at_zero(space37):
    assert eval_symbol(eigen_symbol(space37, E37, 1), 0, 1) == 0


def test_root_numbers(space11, space37):
    assert fricke_sign(space11, eigen_symbol(space11, E11, 1)) == 1
    assert fricke_sign(space11, eigen_symbol(space11, E11, -1)) == 1
    assert fricke_sign(space37, eigen_symbol(space37, E37, 1)) == -1
    assert fricke_sign(space37, eigen_symbol(space37, E37, -1)) == -1


def test_rescaled_keeps_provenance(space11):
    symbol = eigen_symbol(space11, E11, 1)
    rescaled = symbol.rescaled(Fraction(1, 3), anchor_discriminant=1)
    assert rescaled.is_normalized
    assert rescaled.scale == Fraction(1, 3)
    assert eval_symbol(rescaled, 2, 5) == eval_symbol(symbol, 2, 5) / 3


def test_twist_sign():
    assert twist_sign(1) == 1
    assert twist_sign(5) == 1
    assert twist_sign(-52) == -1


def test_algebraic_L_ratio_errors(space11):
    plus = eigen_symbol(space11, E11, 1)
    minus = eigen_symbol(space11, E11, -1)
    with pytest.raises(SignMismatch):
        algebraic_L_ratio(plus, -3)
    with pytest.raises(RamifiedTwist):
        algebraic_L_ratio(minus, -11)
    assert algebraic_L_ratio(plus, 1) == eval_symbol(plus, 0, 1)


def test_eigen_symbol_checks_level(space11):
    with pytest.raises(ValueError):
        eigen_symbol(space11, E37, 1)
    with pytest.raises(ValueError):
        eigen_symbol(space11, E11, 0)


@pytest.fixture(scope="module")
def bundled_symbols():
    symbols = {}
    for label, record in bundled_curves().items():
        curve = record.curve()
        space = ManinSymbolSpace(curve.conductor)
        for sign in (1, -1):
            symbols[label, sign] = (curve, eigen_symbol(space, curve, sign))
    return symbols


@pytest.mark.parametrize("label", sorted(bundled_curves()))
@pytest.mark.parametrize("sign", [1, -1])
def test_manin_relations_annihilate_every_generator(bundled_symbols, label, sign):
    _, symbol = bundled_symbols[label, sign]
    for c, d in symbol.space.p1:
        assert symbol.value(c, d) + symbol.value(d, -c) == 0
        assert symbol.value(c, d) + symbol.value(d, -c - d) + symbol.value(-c - d, c) == 0


@pytest.mark.parametrize("label", sorted(bundled_curves()))
@pytest.mark.parametrize("sign", [1, -1])
def test_hecke_relation_up_to_fifty(bundled_symbols, label, sign):
    curve, symbol = bundled_symbols[label, sign]
    for a, m in [(0, 1), (1, 3), (2, 5)]:
        for ell in primerange(2, 51):
            if not curve.has_good_reduction(ell) or m % ell == 0:
                continue
            total = sum(eval_symbol(symbol, a + k * m, ell * m) for k in range(ell)) + eval_symbol(symbol, ell * a, m)
            assert total == ap(curve, ell) * eval_symbol(symbol, a, m), f"ell = {ell} at {a}/{m}"
