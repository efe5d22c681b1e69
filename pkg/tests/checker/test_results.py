import json

import pytest

from src.checker.results import (
    REASON_PRECISION,
    SHA_CAVEAT,
    Conclusion,
    ConditionResult,
    Mode,
    Status,
    Verdict,
    conclude,
)


def make_verdict(conclusion=Conclusion.VERIFIED):
    conditions = [
        ConditionResult("ord.0", Status.PASS, {"a_p": -2}),
        ConditionResult("ord.3", Status.INCONCLUSIVE, {}, {"depth": 3}, REASON_PRECISION),
    ]
    return Verdict("11a1", 13, 7, Mode.ORDINARY, conditions, conclusion, ["step"], config={"depth": 3})


def test_inconclusive_needs_reason():
    with pytest.raises(ValueError):
        ConditionResult("ord.3", Status.INCONCLUSIVE)


def test_status_is_coerced():
    assert ConditionResult("ord.0", "pass").status is Status.PASS


def test_conclude():
    passing = [ConditionResult("a", Status.PASS), ConditionResult("b", Status.PASS)]
    assert conclude(passing, ["a", "b"], Conclusion.VERIFIED) is Conclusion.VERIFIED
    failing = [*passing, ConditionResult("c", Status.FAIL)]
    assert conclude(failing, ["a", "c"], Conclusion.VERIFIED) is Conclusion.NOT_VERIFIED
    open_ = [*passing, ConditionResult("c", Status.INCONCLUSIVE, reason=REASON_PRECISION)]
    assert conclude(open_, ["a", "c"], Conclusion.SC_VERIFIED) is Conclusion.INCONCLUSIVE


def test_conclude_ignores_conditions_outside_the_branch():
    conditions = [ConditionResult("a", Status.PASS), ConditionResult("b", Status.FAIL)]
    assert conclude(conditions, ["a"], Conclusion.VERIFIED) is Conclusion.VERIFIED


def test_verdict_always_carries_sha_caveat():
    verdict = Verdict("11a1", 13, 7, Mode.ORDINARY, [], Conclusion.VERIFIED, caveats=["other"])
    assert verdict.caveats[0] == SHA_CAVEAT


def test_verified_conclusions():
    assert make_verdict().verified
    assert make_verdict(Conclusion.SC_VERIFIED).verified
    assert not make_verdict(Conclusion.INCONCLUSIVE).verified


def test_condition_lookup():
    verdict = make_verdict()
    assert verdict.condition("ord.0").evidence == {"a_p": -2}
    with pytest.raises(KeyError):
        verdict.condition("ord.9")


def test_json_schema():
    data = make_verdict().to_dict()
    assert data["triple"] == {"curve": "11a1", "d": 13, "p": 7}
    assert data["conclusion"] == "verified_conditional_on_sha"
    assert data["conditions"][1]["reason"] == "precision"
    keys = {"triple", "mode", "config", "conditions", "conclusion", "caveats", "narrative", "supplementary"}
    assert set(data) == keys


def test_json_round_trip():
    verdict = make_verdict()
    parsed = Verdict.from_dict(json.loads(json.dumps(verdict.to_dict())))
    assert parsed == verdict
