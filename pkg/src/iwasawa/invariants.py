"""mu- and lambda-invariants and orders of vanishing of finite-precision series."""

import logging
from dataclasses import asdict, dataclass

from src.arith.padic import INF
from src.arith.series import PAdicSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantReport:
    """Iwasawa invariants read off a series, with the reason they can or cannot be trusted.

    Attributes:
        mu: Exact mu, or None when only a lower bound is known
        mu_lower_bound: A proven lower bound for mu
        lambda_: Exact lambda, or None when unresolved
        ord_T_lower: Number of leading coefficients that vanish to their precision
        reliable: True only when mu = 0 and lambda are both certified
        reason: Why the report is (un)reliable
    """

    mu: int | None
    mu_lower_bound: int
    lambda_: int | None
    ord_T_lower: int
    reliable: bool
    reason: str

    @property
    def mu_display(self) -> str:
        return str(self.mu) if self.mu is not None else f">= {self.mu_lower_bound}"

    @property
    def lambda_display(self) -> str:
        return str(self.lambda_) if self.lambda_ is not None else "unresolved"

    def to_dict(self) -> dict:
        data = asdict(self)
        data["lambda"] = data.pop("lambda_")
        return data


def ord_T_lower_bound(series: PAdicSeries) -> int:
    """Leading coefficients equal to zero to their full precision.

    Zero to finite precision does not prove vanishing, so this only bounds
    the order of vanishing at T = 0 from below.
    """
    count = 0
    for c in series:
        if not c.is_zero():
            break
        count += 1
    return count


def mu_lambda(series: PAdicSeries) -> InvariantReport:
    """Weierstrass-preparation invariants of a truncated series.

    mu is the least valuation witnessed by a coefficient known to more digits
    than its valuation; lambda is the first index attaining it. The pair is
    certified when every earlier coefficient is known to be divisible by
    p^(mu + 1) and the witness lies inside the series.

    Returns:
        An InvariantReport; unreliable readings are reported as such, never rounded
    """
    ord_T = ord_T_lower_bound(series)
    exact = [(k, c.valuation) for k, c in enumerate(series) if not c.is_zero()]
    if not exact:
        bound = min((c.precision_absolute for c in series), default=0)
        bound = max(int(bound), 0) if bound != INF else 0
        return InvariantReport(None, bound, None, ord_T, False, "no coefficient is nonzero to its precision")

    mu = min(v for _, v in exact)
    lam = next(k for k, v in exact if v == mu)
    undetermined = [k for k in range(lam) if series[k].precision_absolute <= mu]
    if undetermined:
        return InvariantReport(
            None,
            max(0, int(min(series[k].precision_absolute for k in undetermined))),
            None,
            ord_T,
            False,
            f"coefficients {undetermined} are not known beyond p^{mu}",
        )
    if mu != 0:
        # a coefficient beyond the truncation may still be a unit
        zero_precisions = [int(c.precision_absolute) for c in series if c.is_zero() and c.precision_absolute != INF]
        bound = min([mu, *zero_precisions])
        return InvariantReport(
            None, max(bound, 0), None, ord_T, False, f"least known valuation is {mu}; only mu >= {bound} is known"
        )

    logger.debug(f"mu = 0, lambda = {lam}, ord_T >= {ord_T} from {len(series)} coefficients")
    return InvariantReport(0, 0, lam, ord_T, True, f"unit coefficient at T^{lam}")
