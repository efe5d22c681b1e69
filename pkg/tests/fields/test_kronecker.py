import pytest

from src.fields.kronecker import fundamental_discriminant, is_fundamental_discriminant, kronecker


@pytest.mark.parametrize(
    ("D", "m", "expected"),
    [(-52, 7, 1), (-4, 3, -1), (-4, 5, 1), (5, 2, -1), (1, 2, 1), (-7, 2, 1), (8, 2, 0), (-3, -1, -1), (1, 0, 1)],
)
def test_kronecker_values(D, m, expected):
    assert kronecker(D, m) == expected


def test_kronecker_is_multiplicative_in_the_bottom_entry():
    for D in (-3, -4, -7, -8, 5, 12, -52):
        for m in range(1, 20):
            for n in range(1, 20):
                assert kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n)


def test_kronecker_is_periodic_for_discriminants():
    for D in (-3, -4, -7, -8, -11, 5, -52):
        for m in range(1, 40):
            assert kronecker(D, m) == kronecker(D, m + abs(D))


def test_fundamental_discriminants():
    assert fundamental_discriminant(-13) == -52
    assert fundamental_discriminant(-7) == -7
    assert fundamental_discriminant(-1) == -4
    assert fundamental_discriminant(-2) == -8
    with pytest.raises(ValueError):
        fundamental_discriminant(12)


@pytest.mark.parametrize(
    ("D", "expected"), [(-3, True), (-4, True), (-8, True), (-12, False), (-16, False), (1, False)]
)
def test_is_fundamental_discriminant(D, expected):
    assert is_fundamental_discriminant(D) is expected
