"""End-to-end reproductions on the bundled curves at the default run configuration."""

import pytest

from src.checker.results import Conclusion
from src.runner import GrowthChecker

pytestmark = pytest.mark.slow

# T^1..T^5 of L_7(11a1) and of its twist by Q(sqrt(-13)), balanced mod 7^4
SERIES_11A1 = [1188, -120, 882, 991, 136]
SERIES_11A1_TWIST = [213, -649, -1190, -974, 101]
CONSTANT_11A1 = -1827287233098838071872685754


@pytest.fixture(scope="module")
def checker():
    return GrowthChecker(config_path=None)


def assert_coefficients(series, expected):
    for k, value in enumerate(expected, start=1):
        c = series[k]
        digits = min(c.precision_absolute, 4)
        assert digits >= 1, f"T^{k} keeps no digit"
        assert c.residue(digits) == value % 7**digits, f"T^{k}"


def test_ordinary_series(checker):
    series = checker.lfun("11a1", 7).series
    assert series[0].residue(5) == CONSTANT_11A1 % 7**5
    assert series[1].residue(3) == 1188 % 7**3
    assert_coefficients(series, SERIES_11A1)


def test_twisted_series(checker):
    series = checker.lfun("11a1", 7, 13).series
    assert series[0].is_zero()
    assert series[0].precision_absolute >= 5
    assert_coefficients(series, SERIES_11A1_TWIST)


@pytest.mark.parametrize(
    ("curve", "p", "d", "sign", "expected"),
    [
        ("11a1", 7, None, None, (0, 0)),
        ("11a1", 7, 13, None, (0, 1)),
        ("37a1", 5, None, None, (0, 1)),
        ("37a1", 5, 11, None, (0, 0)),
        ("91a1", 3, None, "plus", (0, 1)),
        ("91a1", 3, 11, "plus", (0, 0)),
    ],
)
def test_invariants(checker, curve, p, d, sign, expected):
    report = checker.lfun(curve, p, d, sign).invariants
    assert (report.mu, report.lambda_) == expected
    assert report.reliable


@pytest.mark.parametrize(
    ("curve", "d", "p", "mode", "expected"),
    [
        ("11a1", 13, 7, "ordinary", Conclusion.VERIFIED),
        ("37a1", 11, 5, "ordinary", Conclusion.VERIFIED),
        ("91a1", 11, 3, "sc", Conclusion.SC_VERIFIED),
        ("14a1", 19, 5, "supersingular", Conclusion.VERIFIED),
        ("30a1", 11, 59, "supersingular", Conclusion.VERIFIED),
    ],
)
def test_verdicts(checker, curve, d, p, mode, expected):
    assert checker.check(curve, d, p, mode).conclusion is expected


def test_scan_14a1(checker):
    table = checker.scan("14a1", 100, 100, "supersingular").table()
    assert table == {5: [19, 59, 71], 11: [19, 73, 79], 23: [19, 79, 83], 71: [23, 59]}


def test_scan_30a1(checker):
    table = checker.scan("30a1", 100, 100, "supersingular").table()
    assert table == {
        11: [43, 79],
        23: [11, 43, 67, 79],
        47: [11, 23, 31, 43, 67],
        59: [11, 23, 31, 43, 47, 67],
        71: [11, 23, 31, 47, 59, 67],
    }
