import math

import pytest
from sympy import primerange

from src.curves.frobenius import an_list, ap, count_points, hecke_eigenvalue, torsion_p_trivial, torsion_witness
from src.curves.weierstrass import WeierstrassCurve, quadratic_twist
from src.data.curves import bundled_curves
from src.errors import BadReduction, NotPrime
from src.fields.kronecker import kronecker

E11 = WeierstrassCurve([0, -1, 1, -10, -20], "11a1")
E14 = WeierstrassCurve([1, 0, 1, 4, -6], "14a1")
E37 = WeierstrassCurve([0, 0, 1, -1, 0], "37a1")


@pytest.mark.parametrize(
    ("ell", "expected"), [(2, -2), (3, -1), (5, 1), (7, -2), (13, 4), (17, -2), (19, 0), (23, -1), (29, 0), (31, 7)]
)
def test_ap_of_11a1(ell, expected):
    assert ap(E11, ell) == expected


def test_ap_of_37a1():
    assert [ap(E37, ell) for ell in (2, 3, 5, 7)] == [-2, -3, -2, -1]


def test_14a1_is_supersingular_at_5():
    assert ap(E14, 5) == 0
    assert ap(E14, 3) == -2


def test_point_count_at_two():
    assert count_points(E11.model, 2) == 5


def test_ap_errors():
    with pytest.raises(NotPrime):
        ap(E11, 4)
    with pytest.raises(BadReduction):
        ap(E11, 11)


def test_hecke_eigenvalue_at_bad_primes():
    assert hecke_eigenvalue(E11, 11) == 1
    assert hecke_eigenvalue(E37, 37) == -1
    assert hecke_eigenvalue(WeierstrassCurve([-1, 0]), 2) == 0


def test_an_list_of_11a1():
    assert an_list(E11, 10) == (0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2)


def test_an_list_is_multiplicative():
    an = an_list(E37, 60)
    for m, n in [(2, 3), (3, 5), (4, 7), (5, 11), (7, 8)]:
        assert an[m * n] == an[m] * an[n]


def test_torsion_certificates():
    # 11a1 has a rational 5-torsion point, so no prime certifies E(Q)[5] = 0
    assert torsion_witness(E11, 5, 200) is None
    assert not torsion_p_trivial(E11, 5, 200)
    assert torsion_p_trivial(E11, 7)
    assert torsion_witness(E37, 3) is not None


@pytest.mark.parametrize("label", sorted(bundled_curves()))
def test_hasse_bound(label):
    curve = bundled_curves()[label].curve()
    for ell in primerange(2, 10_001):
        if curve.has_good_reduction(ell):
            assert ap(curve, ell) ** 2 <= 4 * ell, f"a_{ell} = {ap(curve, ell)}"


@pytest.mark.parametrize("label", sorted(bundled_curves()))
def test_hecke_eigenvalue_matches_point_count_at_good_primes(label):
    curve = bundled_curves()[label].curve()
    for ell in primerange(2, 51):
        if curve.has_good_reduction(ell):
            assert hecke_eigenvalue(curve, ell) == ell + 1 - count_points(curve.model, ell)
        else:
            assert hecke_eigenvalue(curve, ell) in (-1, 0, 1)


@pytest.mark.parametrize("curve", [E11, E14, E37], ids=lambda curve: curve.name)
@pytest.mark.parametrize("D", [-3, -4, 5, -7, 8, -11, 13])
def test_twist_traces_follow_the_character(curve, D):
    twist = quadratic_twist(curve, D)
    checked = 0
    for ell in primerange(2, 200):
        if math.gcd(ell, curve.conductor * twist.conductor * D) == 1:
            assert ap(twist, ell) == kronecker(D, ell) * ap(curve, ell)
            checked += 1
    assert checked > 30
