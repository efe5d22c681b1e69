"""Scaling eigen-symbols so that their values are algebraic parts of L-values."""

import logging
import math
from collections.abc import Iterator
from fractions import Fraction

from mpmath import nstr

from src.curves.weierstrass import WeierstrassCurve
from src.errors import NoNonvanishingTwist, NormalizationAmbiguous
from src.fields.kronecker import is_fundamental_discriminant
from src.modsym.periods import Periods, algebraic_target, periods
from src.modsym.symbol import ModularSymbol, algebraic_L_ratio, fricke_sign

logger = logging.getLogger(__name__)

DENOMINATOR_BOUND = 1000
AGREEMENT_DIGITS = 30


def auxiliary_discriminants(sign: int, N: int, bound: int) -> Iterator[int]:
    """Fundamental discriminants coprime to N of the given sign, by increasing |D| (1 first for +)."""
    if sign > 0:
        yield 1
    for m in range(3, bound + 1):
        D = m if sign > 0 else -m
        if math.gcd(D, N) == 1 and is_fundamental_discriminant(D):
            yield D


def rationalize(value, bound: int = DENOMINATOR_BOUND, agreement: int = AGREEMENT_DIGITS) -> Fraction:
    """The rational with denominator <= bound agreeing with value to agreement digits.

    Raises:
        NormalizationAmbiguous: If no such rational exists
    """
    text = nstr(value, agreement + 15, strip_zeros=False)
    exact = Fraction(text)
    candidate = exact.limit_denominator(bound)
    if abs(exact - candidate) > Fraction(1, 10**agreement):
        raise NormalizationAmbiguous(f"{nstr(value, 20)} is not a rational with denominator <= {bound}")
    return candidate


def normalize(
    symbol: ModularSymbol,
    curve: WeierstrassCurve,
    digits: int = 60,
    twist_search_bound: int = 500,
    curve_periods: Periods | None = None,
) -> ModularSymbol:
    """Scale an eigen-symbol so its twisted sums equal algebraic L-values.

    The first auxiliary discriminant D' whose exact character sum is nonzero
    pins the scale: sum kronecker(D', u) [u/|D'|] must equal
    L(E, chi_D', 1) sqrt|D'| / Omega^sign, which is computed numerically and
    rationalized.

    Raises:
        NormalizationAmbiguous: If the numerical value is not recognizably rational
        NoNonvanishingTwist: If every |D'| <= twist_search_bound has vanishing sum
    """
    root_number = fricke_sign(symbol.space, symbol)
    if curve_periods is None:
        curve_periods = periods(curve, digits)

    for D in auxiliary_discriminants(symbol.sign, curve.conductor, twist_search_bound):
        unnormalized = algebraic_L_ratio(symbol, D)
        if unnormalized == 0:
            continue
        target = rationalize(algebraic_target(curve, D, root_number, curve_periods))
        if target == 0:
            raise NormalizationAmbiguous(
                f"character sum for D' = {D} is {unnormalized} but the numerical L-value vanishes"
            )
        factor = target / unnormalized
        logger.info(f"Normalized {curve.name} sign {symbol.sign:+d} at D' = {D}: value {target}, scale {factor}")
        return symbol.rescaled(factor, anchor_discriminant=D, anchor_value=str(target), root_number=root_number)

    raise NoNonvanishingTwist(f"no |D'| <= {twist_search_bound} with nonvanishing twist for sign {symbol.sign:+d}")
