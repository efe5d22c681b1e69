"""Stabilizations at a_p = 0 and their plus/minus decomposition."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from src.arith.padic import INF, PAdicNumber
from src.arith.polys import MINUS, PLUS, ambiguity_profile, half_log_truncation, omega, poly_divmod
from src.arith.quadext import QuadExtElement
from src.arith.series import PAdicSeries, series_solve
from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.errors import NonRationalResult, NonzeroTraceSupersingular, OrdinaryInput
from src.lseries.mazur_tate import mazur_tate_tower
from src.lseries.ordinary import (
    StabilizedElement,
    binomial_transform,
    stabilize,
    to_series,
    working_precision,
)
from src.modsym.symbol import ModularSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SupersingularPair:
    """Stabilizations at alpha and at its conjugate -alpha, with their series.

    Attributes:
        at_alpha: theta_hat_n(alpha)
        at_conjugate: theta_hat_n(-alpha)
        series_alpha: Series of at_alpha mod (p^M, omega_n)
        series_conjugate: Series of at_conjugate mod (p^M, omega_n)
        working_prec: Absolute precision used for 1/t
    """

    at_alpha: StabilizedElement
    at_conjugate: StabilizedElement
    series_alpha: PAdicSeries
    series_conjugate: PAdicSeries
    working_prec: int

    @property
    def p(self) -> int:
        return self.at_alpha.p

    @property
    def n(self) -> int:
        return self.at_alpha.n


def _require_zero_trace(curve: WeierstrassCurve, p: int) -> None:
    a_p = ap(curve, p)
    if a_p % p:
        raise OrdinaryInput(f"a_{p}({curve.name}) = {a_p} is a unit mod {p}")
    if a_p:
        raise NonzeroTraceSupersingular(f"a_{p}({curve.name}) = {a_p} is divisible by {p} but nonzero")


def lp_alpha_supersingular(
    symbol: ModularSymbol,
    curve: WeierstrassCurve,
    p: int,
    n: int,
    D: int = 1,
    M: int = 4,
    constant_prec: int = 33,
    gamma: int | None = None,
) -> SupersingularPair:
    """The two stabilizations theta_hat_n(alpha), theta_hat_n(-alpha) with alpha^2 = -p.

    alpha^-1 = -alpha/p is exact in the quadratic extension, so the only
    rounding comes from inverting the symbol's denominator.

    Raises:
        OrdinaryInput: If a_p is a unit mod p
        NonzeroTraceSupersingular: If p divides a_p but a_p != 0
        NormCompatibilityFailed: If a stabilization is not norm-compatible
    """
    _require_zero_trace(curve, p)
    # alpha^-(n+1) has valuation -(n+1)/2, on top of the ordinary working precision
    prec = working_precision(M, constant_prec, n, symbol.denominator, p) + n
    lower, middle, top = mazur_tate_tower(symbol, p, n, D, gamma)
    alpha = QuadExtElement.alpha(p, 0)
    at_alpha = stabilize(top, middle, lower, alpha, prec)
    at_conjugate = stabilize(top, middle, lower, -alpha, prec)
    return SupersingularPair(
        at_alpha,
        at_conjugate,
        to_series(at_alpha, M, constant_prec),
        to_series(at_conjugate, M, constant_prec),
        prec,
    )


@dataclass(frozen=True)
class SignedLFunctions:
    """The plus and minus p-adic L-functions at level n.

    Attributes:
        plus: L^+ with coefficients in Q_p
        minus: L^- with coefficients in Q_p
        plus_truncation: Integer polynomial P^+ with log^+ = P^+ / p^(plus_divisions) mod omega_n
        minus_truncation: Integer polynomial P^-
        plus_divisions: Powers of p pending in log^+
        minus_divisions: Powers of p pending in log^-
    """

    plus: PAdicSeries
    minus: PAdicSeries
    plus_truncation: list[int]
    minus_truncation: list[int]
    plus_divisions: int
    minus_divisions: int

    def for_sign(self, sign: str) -> PAdicSeries:
        return self.plus if sign == PLUS else self.minus


def _base_components(values: list, what: str) -> list[PAdicNumber]:
    components = []
    for k, value in enumerate(values):
        if not value.in_base():
            raise NonRationalResult(f"{what} coefficient {k} has alpha-component {value.b}")
        components.append(value.a)
    return components


def _signed_part(values: list[PAdicNumber], sign: str, p: int, n: int, M: int, constant_prec: int, t_valuation: int):
    truncation, factors = half_log_truncation(sign, n, p)
    divisions = factors + 1
    quotient = series_solve(PAdicSeries(p, values, n), truncation, n, p_divisions=divisions)
    ambiguity, _ = poly_divmod(omega(n, p), truncation)
    length = min(len(quotient), p**n - p ** (n - 1))
    guard = ambiguity_profile(ambiguity, p, length)
    clamped = [
        c.reduce_precision(constant_prec if k == 0 else min(M, guard[k] - t_valuation))
        for k, c in enumerate(quotient.coefficients[:length])
    ]
    return PAdicSeries(p, clamped, n), truncation, divisions


def pollack_decompose(pair: SupersingularPair, M: int = 4, constant_prec: int = 33) -> SignedLFunctions:
    """Split the alpha-stabilization into the signed L-functions.

    With S = (L_alpha + L_-alpha)/2 and A = (L_alpha - L_-alpha)/(2 alpha),
    L^+ = S / log^+ and L^- = A / log^-, the divisions being exact modulo
    omega_n. Coefficient k of L^+- is trusted to the valuation guard of
    omega_n / P^+- (capped at M), the constant term to constant_prec.

    Raises:
        NonRationalResult: If S or A has a nonzero alpha-component
        NotDivisible: If S or A is not divisible by its truncated half-logarithm
        PrecisionExhausted: If the divisions leave no digit
    """
    p, n = pair.p, pair.n
    size = p**n
    at_alpha = binomial_transform(pair.at_alpha.coefficients, size)
    at_conjugate = binomial_transform(pair.at_conjugate.coefficients, size)
    half = PAdicNumber.from_rational(Fraction(1, 2), p, pair.working_prec)
    alpha_inverse = pair.at_alpha.alpha**-1

    symmetric = _base_components([(x + y) * half for x, y in zip(at_alpha, at_conjugate, strict=True)], "L^+")
    antisymmetric = _base_components(
        [(x - y) * alpha_inverse * half for x, y in zip(at_alpha, at_conjugate, strict=True)], "L^-"
    )
    t_valuation = pair.at_alpha.denominator_valuation
    plus, plus_truncation, plus_divisions = _signed_part(symmetric, PLUS, p, n, M, constant_prec, t_valuation)
    minus, minus_truncation, minus_divisions = _signed_part(antisymmetric, MINUS, p, n, M, constant_prec, t_valuation)
    logger.info(f"Signed L-functions at p = {p}, n = {n}: L+ = {plus}; L- = {minus}")
    return SignedLFunctions(plus, minus, plus_truncation, minus_truncation, plus_divisions, minus_divisions)


def reconstruct_alpha(signed: SignedLFunctions, pair: SupersingularPair) -> bool:
    """Check L^+ log^+ + alpha L^- log^- against L_alpha modulo omega_n on the digits all sides claim."""
    p, n = pair.p, pair.n
    alpha = pair.at_alpha.alpha
    plus = signed.plus.multiply_polynomial_mod_omega(signed.plus_truncation, n)
    minus = signed.minus.multiply_polynomial_mod_omega(signed.minus_truncation, n)
    plus = plus.scale(PAdicNumber(p, 1, -signed.plus_divisions, INF))
    minus = minus.scale(PAdicNumber(p, 1, -signed.minus_divisions, INF))
    target = binomial_transform(pair.at_alpha.coefficients, p**n)
    length = min(signed.plus.length, signed.minus.length)
    for k in range(length):
        combined = alpha * minus[k] + plus[k]
        if not combined.agrees_with(target[k]):
            logger.warning(f"Reconstruction fails at T^{k}: {combined} against {target[k]}")
            return False
    return True


def signed_lfunctions(
    symbol: ModularSymbol,
    curve: WeierstrassCurve,
    p: int,
    n: int,
    D: int = 1,
    M: int = 4,
    constant_prec: int = 33,
    gamma: int | None = None,
) -> tuple[SignedLFunctions, SupersingularPair]:
    """L^+ and L^- of E (or its twist by D) at a prime with a_p = 0."""
    pair = lp_alpha_supersingular(symbol, curve, p, n, D, M, constant_prec, gamma)
    return pollack_decompose(pair, M, constant_prec), pair
