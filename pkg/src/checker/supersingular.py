"""Checklists at primes with a_p = 0: finiteness of Sel(E/K) and hypothesis (S-C)."""

import logging

from src.arith.polys import MINUS, PLUS
from src.checker.context import CurveContext
from src.checker.ordinary import (
    ANALYTIC_FAILURES,
    check_prime,
    heegner_condition,
    invariant_evidence,
    series_evidence,
    skipped_condition,
)
from src.checker.results import (
    REASON_CERTIFICATE,
    REASON_PRECISION,
    Conclusion,
    ConditionResult,
    Mode,
    Status,
    Verdict,
    conclude,
)
from src.config import RunConfig
from src.curves.frobenius import ap
from src.curves.over_k import tamagawa_over_K
from src.curves.weierstrass import WeierstrassCurve
from src.errors import RamifiedBadPrime
from src.fields.quadratic import ImagQuadField, anticyclotomic_totally_ramified
from src.iwasawa.invariants import mu_lambda

logger = logging.getLogger(__name__)

SUPERSINGULAR_CONDITIONS = ["ss.1", "ss.2", "ss.3", "ss.4", "ss.5"]
SC_CONDITIONS = ["sc.0p", "sc.1", "sc.2", "sc.3p", "sc.5p"]


def _ramification(field: ImagQuadField, p: int, condition_id: str) -> ConditionResult:
    certified = anticyclotomic_totally_ramified(field, p)
    evidence = {"class_number": field.class_number, "p_divides_h": not certified}
    if certified:
        return ConditionResult(condition_id, Status.PASS, evidence)
    return ConditionResult(condition_id, Status.INCONCLUSIVE, evidence, {}, REASON_CERTIFICATE)


def _not_applicable(condition_id: str, why: str) -> ConditionResult:
    return ConditionResult(condition_id, Status.NOT_APPLICABLE, {"reason": why})


def check_supersingular(
    curve: WeierstrassCurve,
    field: ImagQuadField,
    p: int,
    config: RunConfig | None = None,
    context: CurveContext | None = None,
) -> Verdict:
    """Check that Sel(E/K_infinity) is controlled at a supersingular p with a_p = 0.

    Conditions: (1) good reduction at p, (2) a_p = 0, (3) p splits in K,
    (4) both primes above p totally ramify in the anticyclotomic
    Z_p-extension, (5) L(E, 1) and L(E^K, 1) are both nonzero.

    Raises:
        NotPrime: If p is not an odd prime
    """
    config = config or RunConfig()
    check_prime(p)
    context = context or CurveContext(curve, config)
    D = field.discriminant
    conditions = []

    good = curve.conductor % p != 0
    conditions.append(ConditionResult("ss.1", Status.PASS if good else Status.FAIL, {"conductor": curve.conductor}))
    if good:
        a_p = ap(curve, p)
        conditions.append(ConditionResult("ss.2", Status.PASS if a_p == 0 else Status.FAIL, {"a_p": a_p}))
    else:
        conditions.append(_not_applicable("ss.2", "bad reduction at p"))

    split = field.splitting(p) == 1
    conditions.append(ConditionResult("ss.3", Status.PASS if split else Status.FAIL, {"kronecker": field.splitting(p)}))
    conditions.append(_ramification(field, p, "ss.4") if split else _not_applicable("ss.4", "p does not split"))

    if config.short_circuit and any(c.status is Status.FAIL for c in conditions):
        conditions.append(skipped_condition("ss.5"))
    else:
        try:
            ratios = {"L_ratio_E": context.l_ratio(1), "L_ratio_twist": context.l_ratio(D)}
        except ANALYTIC_FAILURES as e:
            conditions.append(ConditionResult("ss.5", Status.INCONCLUSIVE, {"error": str(e)}, {}, REASON_PRECISION))
        else:
            status = Status.PASS if all(ratios.values()) else Status.FAIL
            conditions.append(ConditionResult("ss.5", status, {k: str(v) for k, v in ratios.items()}))

    conclusion = conclude(conditions, SUPERSINGULAR_CONDITIONS, Conclusion.VERIFIED)
    narrative = []
    if conclusion is Conclusion.VERIFIED:
        narrative.append("L(E/K, 1) = L(E, 1) L(E^K, 1) is nonzero, so Sel(E/K) is finite")
        narrative.append(f"the conjecture holds for ({curve.name}, {field}, {p}) assuming finiteness of Sha")
    logger.info(f"Supersingular check of ({curve.name}, d = {field.d}, p = {p}): {conclusion}")
    return Verdict(
        curve.name, field.d, p, Mode.SUPERSINGULAR, conditions, conclusion, narrative, config=config.to_dict()
    )


def _signed_invariants(context: CurveContext, p: int, D: int) -> ConditionResult:
    config = context.config
    precision = {"depth": config.depth, "coeff_prec": config.coeff_prec, "constant_prec": config.constant_prec}
    try:
        own, _ = context.signed(p)
        twist, _ = context.signed(p, D)
    except ANALYTIC_FAILURES as e:
        logger.warning(f"Signed L-functions of {context.curve.name} at p = {p}, D = {D} unavailable: {e}")
        return ConditionResult("sc.3p", Status.INCONCLUSIVE, {"error": str(e)}, precision, REASON_PRECISION)

    evidence = {}
    witnesses = []
    all_reliable = True
    for sign in (PLUS, MINUS):
        reports = [mu_lambda(own.for_sign(sign)), mu_lambda(twist.for_sign(sign))]
        evidence[sign] = {
            "series_E": series_evidence(own.for_sign(sign)),
            "series_twist": series_evidence(twist.for_sign(sign)),
            "invariants_E": invariant_evidence(reports[0]),
            "invariants_twist": invariant_evidence(reports[1]),
        }
        if all(r.reliable for r in reports):
            lambda_sum = reports[0].lambda_ + reports[1].lambda_
            evidence[sign]["lambda_sum"] = lambda_sum
            if lambda_sum == 1:
                witnesses.append(sign)
        else:
            all_reliable = False

    evidence["witness_signs"] = witnesses
    if witnesses:
        return ConditionResult("sc.3p", Status.PASS, evidence, precision)
    if all_reliable:
        return ConditionResult("sc.3p", Status.FAIL, evidence, precision)
    return ConditionResult("sc.3p", Status.INCONCLUSIVE, evidence, precision, REASON_PRECISION)


def _tamagawa(curve: WeierstrassCurve, D: int, p: int) -> ConditionResult:
    try:
        local = tamagawa_over_K(curve, D)
    except RamifiedBadPrime as e:
        return ConditionResult("sc.5p", Status.FAIL, {"error": str(e)})
    indivisible = all(c % p for values in local.values() for c in values)
    evidence = {"tamagawa_over_K": {str(ell): values for ell, values in local.items()}}
    return ConditionResult("sc.5p", Status.PASS if indivisible else Status.FAIL, evidence)


def check_sc_supersingular(
    curve: WeierstrassCurve,
    field: ImagQuadField,
    p: int,
    config: RunConfig | None = None,
    context: CurveContext | None = None,
) -> Verdict:
    """Check hypothesis (S-C) for the signed Selmer groups at a prime with a_p = 0.

    Conditions: (0') a_p = 0 with p split in K and the anticyclotomic
    ramification certified, (1) good reduction at p, (2) the generalized
    Heegner hypothesis, (3') some sign with lambda-sum 1 and both mu = 0,
    (5') p divides no Tamagawa number of E/K.

    Raises:
        NotPrime: If p is not an odd prime
    """
    config = config or RunConfig()
    check_prime(p)
    context = context or CurveContext(curve, config)
    D = field.discriminant
    good = curve.conductor % p != 0

    a_p = ap(curve, p) if good else None
    split = field.splitting(p) == 1
    evidence = {"a_p": a_p, "kronecker": field.splitting(p)}
    if not good or a_p != 0 or not split:
        first = ConditionResult("sc.0p", Status.FAIL, evidence)
    else:
        ramification = _ramification(field, p, "sc.0p")
        first = ConditionResult(
            "sc.0p", ramification.status, evidence | ramification.evidence, {}, ramification.reason
        )
    conditions = [
        first,
        ConditionResult("sc.1", Status.PASS if good else Status.FAIL, {"conductor": curve.conductor}),
        heegner_condition(curve, field, "sc.2"),
    ]

    if not good or a_p != 0:
        conditions.append(_not_applicable("sc.3p", "signed L-functions need a_p = 0 at a good prime"))
    elif config.short_circuit and any(c.status is Status.FAIL for c in conditions):
        conditions.append(skipped_condition("sc.3p"))
    else:
        conditions.append(_signed_invariants(context, p, D))
    conditions.append(_tamagawa(curve, D, p))

    conclusion = conclude(conditions, SC_CONDITIONS, Conclusion.SC_VERIFIED)
    narrative = []
    if conclusion is Conclusion.SC_VERIFIED:
        signs = conditions[3].evidence["witness_signs"]
        narrative.append(f"lambda-sum 1 with mu = 0 for sign(s) {', '.join(signs)}")
        narrative.append("the signed main conjectures transfer these to the algebraic Iwasawa invariants")
        narrative.append("hypothesis (S-C) holds for all four signed Selmer groups")
    logger.info(f"(S-C) check of ({curve.name}, d = {field.d}, p = {p}): {conclusion}")
    return Verdict(curve.name, field.d, p, Mode.SC, conditions, conclusion, narrative, config=config.to_dict())
