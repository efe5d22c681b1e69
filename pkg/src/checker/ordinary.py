"""The checklist at a good ordinary prime."""

import logging

from sympy import isprime

from src.checker.context import CurveContext
from src.checker.results import (
    REASON_PRECISION,
    REASON_SKIPPED,
    Conclusion,
    ConditionResult,
    Mode,
    Status,
    Verdict,
    conclude,
)
from src.config import RunConfig
from src.curves.frobenius import ap, torsion_p_trivial
from src.curves.over_k import is_non_anomalous
from src.curves.weierstrass import WeierstrassCurve, quadratic_twist
from src.errors import (
    BadReduction,
    NoNonvanishingTwist,
    NormalizationAmbiguous,
    NotDivisible,
    NotPrime,
    PrecisionExhausted,
    RamifiedBadPrime,
    SupersingularInput,
)
from src.fields.heegner import heegner_factorization, root_number_over_K
from src.fields.quadratic import ImagQuadField
from src.iwasawa.invariants import InvariantReport, mu_lambda, ord_T_lower_bound

logger = logging.getLogger(__name__)

ANALYTIC_FAILURES = (PrecisionExhausted, NotDivisible, NormalizationAmbiguous, NoNonvanishingTwist)

RANK_ONE_CONDITIONS = ["ord.0", "ord.1", "ord.2", "ord.3", "ord.4"]
RANK_ZERO_CONDITIONS = ["ord.0", "ord.2", "ord.3r0"]


def check_prime(p: int) -> None:
    if not isprime(p) or p == 2:
        raise NotPrime(f"p = {p} is not an odd prime")


def series_evidence(series) -> list[str]:
    return [str(c) for c in series]


def invariant_evidence(report: InvariantReport) -> dict:
    return report.to_dict()


def _non_anomalous(curve: WeierstrassCurve, field: ImagQuadField, p: int) -> ConditionResult:
    holds = is_non_anomalous(curve, p, field.discriminant)
    evidence = {"a_p": ap(curve, p), "splitting": field.splitting(p)}
    return ConditionResult("ord.0", Status.PASS if holds else Status.FAIL, evidence)


def _root_number(curve: WeierstrassCurve, field: ImagQuadField) -> ConditionResult:
    try:
        sign = root_number_over_K(curve.conductor, field)
    except RamifiedBadPrime as e:
        return ConditionResult("ord.1", Status.FAIL, {"error": str(e)})
    return ConditionResult("ord.1", Status.PASS if sign == -1 else Status.FAIL, {"root_number_over_K": sign})


def heegner_condition(curve: WeierstrassCurve, field: ImagQuadField, condition_id: str) -> ConditionResult:
    factorization = heegner_factorization(curve.conductor, field)
    evidence = {
        "N_plus": factorization.N_plus,
        "N_minus": factorization.N_minus,
        "classification": str(factorization.classification),
        "splitting": {str(ell): s for ell, s in factorization.splitting.items()},
        "reason": factorization.reason,
    }
    return ConditionResult(condition_id, Status.PASS if factorization.holds else Status.FAIL, evidence)


def skipped_condition(condition_id: str) -> ConditionResult:
    return ConditionResult(condition_id, Status.INCONCLUSIVE, {}, {}, REASON_SKIPPED)


def _analytic_conditions(context: CurveContext, field: ImagQuadField, p: int) -> list[ConditionResult]:
    """Conditions (3) and (4) and the rank-0 alternative, from L_p(E) and L_p(E^K)."""
    config = context.config
    precision = {"depth": config.depth, "coeff_prec": config.coeff_prec, "constant_prec": config.constant_prec}
    D = field.discriminant
    try:
        own = context.ordinary(p)
        twist = context.ordinary(p, D)
        ratios = {"L_ratio_E": context.l_ratio(1), "L_ratio_twist": context.l_ratio(D)}
    except ANALYTIC_FAILURES as e:
        logger.warning(f"L-functions of {context.curve.name} at p = {p}, D = {D} unavailable: {e}")
        return [
            ConditionResult(i, Status.INCONCLUSIVE, {"error": str(e)}, precision, REASON_PRECISION)
            for i in ("ord.3", "ord.4", "ord.3r0")
        ]

    reports = [mu_lambda(own.series), mu_lambda(twist.series)]
    evidence = {
        "series_E": series_evidence(own.series),
        "series_twist": series_evidence(twist.series),
        "invariants_E": invariant_evidence(reports[0]),
        "invariants_twist": invariant_evidence(reports[1]),
        "norm_compatible": own.stabilized.norm_compatible and twist.stabilized.norm_compatible,
    }

    reliable = all(r.reliable for r in reports)
    lambda_sum = sum(r.lambda_ for r in reports) if reliable else None
    if not reliable:
        lambda_condition = ConditionResult("ord.3", Status.INCONCLUSIVE, evidence, precision, REASON_PRECISION)
    elif lambda_sum == 1:
        lambda_condition = ConditionResult("ord.3", Status.PASS, {**evidence, "lambda_sum": 1}, precision)
    else:
        lambda_condition = ConditionResult("ord.3", Status.FAIL, {**evidence, "lambda_sum": lambda_sum}, precision)

    orders = [ord_T_lower_bound(own.series), ord_T_lower_bound(twist.series)]
    order_evidence = {"ord_T_lower_E": orders[0], "ord_T_lower_twist": orders[1], "ord_T_sum_lower": sum(orders)}
    if sum(orders) >= 1:
        order_condition = ConditionResult("ord.4", Status.PASS, order_evidence, precision)
    elif own.series[0].precision_absolute > 0 and twist.series[0].precision_absolute > 0:
        # both constant terms are provably nonzero
        order_condition = ConditionResult("ord.4", Status.FAIL, order_evidence, precision)
    else:
        order_condition = ConditionResult("ord.4", Status.INCONCLUSIVE, order_evidence, precision, REASON_PRECISION)

    rank_zero_evidence = {k: str(v) for k, v in ratios.items()} | {"lambda_sum": lambda_sum, **order_evidence}
    if not reliable:
        rank_zero = ConditionResult("ord.3r0", Status.INCONCLUSIVE, rank_zero_evidence, precision, REASON_PRECISION)
    elif lambda_sum == 0 and sum(orders) == 0 and all(ratios.values()):
        rank_zero = ConditionResult("ord.3r0", Status.PASS, rank_zero_evidence, precision)
    else:
        rank_zero = ConditionResult("ord.3r0", Status.FAIL, rank_zero_evidence, precision)
    return [lambda_condition, order_condition, rank_zero]


def _supplementary(context: CurveContext, field: ImagQuadField, p: int) -> dict:
    curve = context.curve
    twist = quadratic_twist(curve, field.discriminant)
    w_E = context.root_number
    w_twist = w_E * field.splitting(-curve.conductor)
    return {
        "root_number_E": w_E,
        "root_number_twist": w_twist,
        "root_number_product": w_E * w_twist,
        "torsion_p_trivial_E": torsion_p_trivial(curve, p, context.config.torsion_bound),
        "torsion_p_trivial_twist": torsion_p_trivial(twist, p, context.config.torsion_bound),
    }


def check_ordinary(
    curve: WeierstrassCurve,
    field: ImagQuadField,
    p: int,
    config: RunConfig | None = None,
    context: CurveContext | None = None,
) -> Verdict:
    """Run the ordinary checklist on (E, K, p).

    The rank-one branch needs conditions (0)-(4): non-anomalous p, root
    number -1 over K, the generalized Heegner hypothesis, lambda-sum 1 with
    both mu = 0, and total order of vanishing at least 1. The rank-zero
    branch replaces (1), (3) and (4) by lambda-sum 0, order 0 and nonzero
    L(E, 1) and L(E^K, 1).

    Raises:
        NotPrime: If p is not an odd prime
        BadReduction: If p divides N
        SupersingularInput: If p divides a_p
        RamifiedPrime: If p ramifies in K
    """
    config = config or RunConfig()
    check_prime(p)
    if curve.conductor % p == 0:
        raise BadReduction(f"p = {p} divides the conductor {curve.conductor} of {curve.name}")
    if ap(curve, p) % p == 0:
        raise SupersingularInput(f"a_{p}({curve.name}) = {ap(curve, p)} is divisible by {p}")
    context = context or CurveContext(curve, config)

    conditions = [_non_anomalous(curve, field, p), _root_number(curve, field), heegner_condition(curve, field, "ord.2")]
    arithmetic_failed = any(c.status is Status.FAIL for c in conditions if c.id in ("ord.0", "ord.2"))
    if config.short_circuit and arithmetic_failed:
        conditions += [skipped_condition(i) for i in ("ord.3", "ord.4", "ord.3r0")]
    else:
        conditions += _analytic_conditions(context, field, p)

    by_id = {c.id: c for c in conditions}
    narrative = []
    rank_zero = by_id["ord.3r0"].status is Status.PASS
    if rank_zero:
        for i in ("ord.1", "ord.3", "ord.4"):
            by_id[i].status = Status.NOT_APPLICABLE
        conclusion = conclude(conditions, RANK_ZERO_CONDITIONS, Conclusion.VERIFIED)
        narrative.append("lambda-sum and ord_T-sum are 0 with both central values nonzero: rank-zero branch")
    else:
        by_id["ord.3r0"].status = Status.NOT_APPLICABLE
        by_id["ord.3r0"].reason = ""
        conclusion = conclude(conditions, RANK_ONE_CONDITIONS, Conclusion.VERIFIED)
        if by_id["ord.3"].status is Status.PASS and by_id["ord.4"].status is Status.PASS:
            narrative.append("lambda-sum = 1 and ord_T-sum >= 1 force ord_T-sum = 1")
            narrative.append("by the main conjecture the characteristic ideals have the same orders of vanishing")
    if conclusion is Conclusion.VERIFIED:
        narrative.append(f"the conjecture holds for ({curve.name}, {field}, {p}) assuming finiteness of Sha")

    verdict = Verdict(
        curve.name,
        field.d,
        p,
        Mode.ORDINARY,
        conditions,
        conclusion,
        narrative,
        config=config.to_dict(),
        supplementary=_supplementary(context, field, p),
    )
    logger.info(f"Ordinary check of ({curve.name}, d = {field.d}, p = {p}): {conclusion}")
    return verdict
