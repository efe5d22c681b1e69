from unittest.mock import patch

import pytest

from src.arith.series import PAdicSeries
from src.checker.results import Conclusion, Mode, Verdict
from src.errors import NormCompatibilityFailed, UnknownCurve
from src.iwasawa.invariants import mu_lambda
from src.main import (
    EXIT_COMPUTATION_ERROR,
    EXIT_INCONCLUSIVE,
    EXIT_INPUT_ERROR,
    EXIT_NOT_VERIFIED,
    EXIT_VERIFIED,
    exit_code,
    main,
)
from src.runner import SeriesReport


def verdict(conclusion):
    return Verdict("11a1", 13, 7, Mode.ORDINARY, [], conclusion)


@pytest.fixture
def config_path(tmp_path):
    return str(tmp_path / "missing.yaml")


def test_exit_codes():
    assert exit_code(verdict(Conclusion.VERIFIED)) == EXIT_VERIFIED
    assert exit_code(verdict(Conclusion.SC_VERIFIED)) == EXIT_VERIFIED
    assert exit_code(verdict(Conclusion.INCONCLUSIVE)) == EXIT_INCONCLUSIVE
    assert exit_code(verdict(Conclusion.NOT_VERIFIED)) == EXIT_NOT_VERIFIED


@patch("src.main.GrowthChecker")
def test_check_prints_verdict(mock_checker, capsys, config_path):
    mock_checker.return_value.check.return_value = verdict(Conclusion.NOT_VERIFIED)

    code = main(["check", "--curve", "11a1", "--d", "13", "--prime", "7", "--config", config_path, "--depth", "2"])

    assert code == EXIT_NOT_VERIFIED
    mock_checker.assert_called_once_with(config_path, None, depth=2, coeff_prec=None)
    mock_checker.return_value.check.assert_called_once_with("11a1", 13, 7, "auto")
    assert "not_verified" in capsys.readouterr().out


@patch("src.main.GrowthChecker")
def test_input_error_exit_code(mock_checker, capsys, config_path):
    mock_checker.return_value.check.side_effect = UnknownCurve("unknown curve '389a1'")

    code = main(["check", "--curve", "389a1", "--d", "13", "--prime", "7", "--config", config_path])

    assert code == EXIT_INPUT_ERROR
    assert "389a1" in capsys.readouterr().err


@patch("src.main.GrowthChecker")
def test_computation_error_exit_code(mock_checker, capsys, config_path):
    mock_checker.return_value.check.side_effect = NormCompatibilityFailed("levels disagree")

    code = main(["check", "--curve", "11a1", "--d", "13", "--prime", "7", "--config", config_path])

    assert code == EXIT_COMPUTATION_ERROR
    assert "levels disagree" in capsys.readouterr().err


@patch("src.main.GrowthChecker")
def test_lfun_printout(mock_checker, capsys, config_path):
    series = PAdicSeries.from_integers([0, 213, -649], 7, 4)
    mock_checker.return_value.lfun.return_value = SeriesReport("11a1", 7, 13, "alpha", series, mu_lambda(series))

    args = ["lfun", "--curve", "11a1", "--prime", "7", "--twist-d", "13", "--length", "2"]
    code = main([*args, "--config", config_path])

    assert code == EXIT_VERIFIED
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "11a1, p = 7, twisted by Q(sqrt(-13)), sign = alpha"
    assert out[1:3] == ["T^0: 0 mod 7^4", "T^1: 213 mod 7^4"]
    assert out[3].startswith("mu = 0, lambda = 1")


def test_composite_prime_is_an_input_error(capsys, config_path):
    code = main(["check", "--curve", "11a1", "--d", "13", "--prime", "4", "--config", config_path])
    assert code == EXIT_INPUT_ERROR


def test_lfun_at_bad_prime(config_path):
    assert main(["lfun", "--curve", "11a1", "--prime", "11", "--config", config_path]) == EXIT_INPUT_ERROR


def test_sign_at_ordinary_prime(config_path):
    code = main(["lfun", "--curve", "11a1", "--prime", "7", "--sign", "minus", "--config", config_path])
    assert code == EXIT_INPUT_ERROR


def test_missing_arguments():
    with pytest.raises(SystemExit):
        main(["check", "--curve", "11a1"])
