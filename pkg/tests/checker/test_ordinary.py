from fractions import Fraction
from types import SimpleNamespace
from unittest.mock import MagicMock

import pytest

from src.arith.series import PAdicSeries
from src.checker.ordinary import check_ordinary, check_prime
from src.checker.results import Conclusion, Status
from src.config import RunConfig
from src.curves.weierstrass import WeierstrassCurve
from src.errors import BadReduction, NotPrime, PrecisionExhausted, SupersingularInput
from src.fields.quadratic import ImagQuadField

E11 = WeierstrassCurve([0, -1, 1, -10, -20], "11a1")
E37 = WeierstrassCurve([0, 0, 1, -1, 0], "37a1")
K13 = ImagQuadField(13)


def lfunction(values, prec=4):
    return SimpleNamespace(
        series=PAdicSeries.from_integers(values, 7, prec),
        stabilized=SimpleNamespace(norm_compatible=True),
    )


def fake_context(own, twist, config=None, ratio=Fraction(1, 5)):
    config = config or RunConfig()
    context = MagicMock()
    context.curve = E11
    context.config = config
    context.root_number = 1
    context.ordinary.side_effect = lambda p, D=1: own if D == 1 else twist
    context.l_ratio.return_value = ratio
    return context


def test_check_prime():
    check_prime(7)
    for p in (2, 9, 1, -7):
        with pytest.raises(NotPrime):
            check_prime(p)


def test_input_errors():
    with pytest.raises(BadReduction):
        check_ordinary(E11, K13, 11)
    with pytest.raises(NotPrime):
        check_ordinary(E11, K13, 9)
    with pytest.raises(SupersingularInput):
        check_ordinary(E37, ImagQuadField(7), 3)


def test_rank_one_branch_verified():
    context = fake_context(lfunction([4030, 1188, -120]), lfunction([0, 213, -649]))
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.conclusion is Conclusion.VERIFIED
    assert verdict.condition("ord.3").status is Status.PASS
    assert verdict.condition("ord.3").evidence["lambda_sum"] == 1
    assert verdict.condition("ord.4").evidence["ord_T_sum_lower"] == 1
    assert verdict.condition("ord.3r0").status is Status.NOT_APPLICABLE
    assert any("main conjecture" in step for step in verdict.narrative)


def test_rank_zero_branch():
    context = fake_context(lfunction([4030, 1188]), lfunction([3, 1]))
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.condition("ord.3r0").status is Status.PASS
    for condition_id in ("ord.1", "ord.3", "ord.4"):
        assert verdict.condition(condition_id).status is Status.NOT_APPLICABLE
    assert verdict.conclusion is Conclusion.VERIFIED


def test_lambda_sum_two_fails():
    context = fake_context(lfunction([0, 1]), lfunction([0, 1]))
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.condition("ord.3").status is Status.FAIL
    assert verdict.conclusion is Conclusion.NOT_VERIFIED


def test_unreliable_invariants_are_inconclusive():
    context = fake_context(lfunction([7, 14]), lfunction([0, 1]))
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.condition("ord.3").status is Status.INCONCLUSIVE
    assert verdict.condition("ord.3").reason == "precision"
    assert verdict.conclusion is Conclusion.INCONCLUSIVE


def test_analytic_failure_is_inconclusive():
    context = fake_context(None, None)
    context.ordinary.side_effect = PrecisionExhausted("no digits left")
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.condition("ord.3").status is Status.INCONCLUSIVE
    assert "no digits left" in verdict.condition("ord.3").evidence["error"]
    assert verdict.conclusion is Conclusion.INCONCLUSIVE


def test_short_circuit_skips_analytic_work():
    # a_5(11a1) = 1, so p = 5 is anomalous
    config = RunConfig(short_circuit=True)
    context = fake_context(None, None, config)
    verdict = check_ordinary(E11, K13, 5, config, context)

    context.ordinary.assert_not_called()
    assert verdict.condition("ord.0").status is Status.FAIL
    assert verdict.condition("ord.3").reason == "skipped"
    assert verdict.conclusion is Conclusion.NOT_VERIFIED


def test_supplementary_evidence():
    context = fake_context(lfunction([4030, 1188]), lfunction([0, 213]))
    verdict = check_ordinary(E11, K13, 7, RunConfig(), context)

    assert verdict.supplementary["root_number_E"] == 1
    assert verdict.supplementary["root_number_product"] == verdict.supplementary["root_number_twist"]
    assert verdict.config == RunConfig().to_dict()
