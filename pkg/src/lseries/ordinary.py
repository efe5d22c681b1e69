"""Unit-root stabilization of Mazur-Tate elements and their power series in T."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from src.arith.padic import PAdicNumber, unit_root, valuation
from src.arith.polys import ambiguity_profile, omega
from src.arith.series import PAdicSeries
from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.errors import NormCompatibilityFailed, PrecisionExhausted
from src.fields.kronecker import kronecker
from src.lseries.mazur_tate import MazurTateElement, group_order, mazur_tate_tower
from src.modsym.symbol import ModularSymbol

logger = logging.getLogger(__name__)

PRECISION_SLACK = 5


@dataclass(frozen=True)
class StabilizedElement:
    """An alpha-stabilized element sum_j c_j gamma^j of Q_p[Gamma_n].

    Attributes:
        p: Prime
        n: Level
        coefficients: PAdicNumber (ordinary) or QuadExtElement (supersingular) values
        alpha: The root used
        denominator_valuation: v_p of the symbol's denominator, a loss applied to every digit
        norm_compatible: True once pi(this) was checked against the level n - 1 stabilization
        D: Twisting discriminant (1 for none)
    """

    p: int
    n: int
    coefficients: tuple
    alpha: object
    denominator_valuation: int
    norm_compatible: bool
    D: int = 1

    def project(self) -> tuple:
        """Coefficients of the image at level n - 1."""
        return project_values(self.coefficients, self.n, self.p)

    def augmentation(self):
        """Image under the trivial character (the value at T = 0)."""
        total = self.coefficients[0]
        for c in self.coefficients[1:]:
            total = total + c
        return total


def project_values(values, n: int, p: int) -> tuple:
    size = group_order(n - 1, p)
    projected = list(values[:size])
    for j in range(size, len(values)):
        projected[j % size] = projected[j % size] + values[j]
    return tuple(projected)


def stabilized_values(theta_n: MazurTateElement, theta_nm1: MazurTateElement, alpha, scale) -> list:
    """alpha^-(n+1) (theta_n - alpha^-1 nu(theta_{n-1})) times scale, coefficientwise.

    Works for alpha in Q_p (PAdicNumber) and in the quadratic extension.
    Coefficients enter through their exact integer numerators; scale carries 1/t.
    """
    if theta_nm1.n != theta_n.n - 1 or (theta_n.p, theta_n.D) != (theta_nm1.p, theta_nm1.D):
        raise ValueError("stabilization needs consecutive levels of the same tower")
    p = theta_n.p
    alpha_inverse = alpha**-1
    factor = alpha ** -(theta_n.n + 1) * scale
    lower = theta_nm1.nu().numerators
    values = []
    for c, d in zip(theta_n.numerators, lower, strict=True):
        difference = alpha_inverse * PAdicNumber.from_int(-d, p) + PAdicNumber.from_int(c, p)
        values.append(factor * difference)
    return values


def stabilize(
    theta_n: MazurTateElement,
    theta_nm1: MazurTateElement,
    theta_nm2: MazurTateElement,
    alpha,
    working_prec: int,
) -> StabilizedElement:
    """Stabilize theta_n at alpha and certify pi(result) against the level n - 1 stabilization.

    Raises:
        NormCompatibilityFailed: If the projections disagree within precision
    """
    p = theta_n.p
    t = theta_n.denominator
    scale = PAdicNumber.from_rational(Fraction(1, t), p, working_prec)
    top = stabilized_values(theta_n, theta_nm1, alpha, scale)
    below = stabilized_values(theta_nm1, theta_nm2, alpha, scale)
    projected = project_values(top, theta_n.n, p)
    for j, (x, y) in enumerate(zip(projected, below, strict=True)):
        if not x.agrees_with(y):
            raise NormCompatibilityFailed(
                f"level {theta_n.n} stabilization projects to {x} at gamma^{j}, level {theta_nm1.n} has {y}"
            )
    logger.debug(f"Stabilized theta_{theta_n.n} at p = {p}, D = {theta_n.D}: norm-compatible")
    return StabilizedElement(p, theta_n.n, tuple(top), alpha, valuation(t, p), True, theta_n.D)


def stabilize_ordinary(
    theta_n: MazurTateElement,
    theta_nm1: MazurTateElement,
    alpha: PAdicNumber,
    theta_nm2: MazurTateElement,
    working_prec: int | None = None,
) -> StabilizedElement:
    """The unit-root stabilization theta_hat_n = alpha^-(n+1) (theta_n - alpha^-1 nu theta_{n-1}).

    Args:
        theta_n: Mazur-Tate element at level n
        theta_nm1: Element at level n - 1
        alpha: The p-adic unit root of x^2 - a x + p
        theta_nm2: Element at level n - 2, used only for the compatibility check
        working_prec: Absolute precision for 1/t (defaults to that of alpha)

    Raises:
        ValueError: If alpha is not a p-adic unit
        NormCompatibilityFailed: If pi(theta_hat_n) differs from theta_hat_{n-1}
    """
    if not alpha.is_unit():
        raise ValueError(f"alpha = {alpha} is not a {alpha.p}-adic unit")
    if working_prec is None:
        working_prec = alpha.precision_absolute
    return stabilize(theta_n, theta_nm1, theta_nm2, alpha, working_prec)


def binomial_transform(values, length: int) -> list:
    """Coefficients of T^k, k < length, in sum_j values[j] (1 + T)^j."""
    transformed = []
    for k in range(length):
        total = values[k]
        for j in range(k + 1, len(values)):
            total = total + values[j] * comb(j, k)
        transformed.append(total)
    return transformed


def working_precision(M: int, constant_prec: int, n: int, t: int, p: int) -> int:
    return max(M, constant_prec) + n + PRECISION_SLACK + valuation(t, p)


def series_guard(n: int, p: int, denominator_valuation: int, length: int) -> list[int | float]:
    """Digits of coefficient j fixed by knowing the series modulo omega_n (and 1/t)."""
    return [g - denominator_valuation for g in ambiguity_profile(omega(n, p), p, length)]


def to_series(elem: StabilizedElement, M: int, constant_prec: int = 33) -> PAdicSeries:
    """Image of a stabilized element in Z_p[T]/(omega_n) under gamma -> 1 + T.

    Coefficient k is sum over j >= k of binomial(j, k) c_j. Only the first
    p^n - p^(n-1) coefficients are returned; coefficient k >= 1 is clamped to
    min(M, guard_k) digits and the constant term to constant_prec digits.

    Raises:
        PrecisionExhausted: If the clamping leaves no digit in any coefficient
    """
    p, n = elem.p, elem.n
    length = p**n - p ** (n - 1) if n >= 1 else 1
    guard = series_guard(n, p, elem.denominator_valuation, length)
    coefficients = [
        c.reduce_precision(constant_prec if k == 0 else min(M, guard[k]))
        for k, c in enumerate(binomial_transform(elem.coefficients, length))
    ]
    if all(c.precision_absolute <= 0 for c in coefficients):
        raise PrecisionExhausted(f"no coefficient of the level-{n} series keeps a digit")
    return PAdicSeries(p, coefficients, n)


@dataclass(frozen=True)
class OrdinaryLFunction:
    """Series of a (twisted) p-adic L-function with the data that produced it."""

    series: PAdicSeries
    stabilized: StabilizedElement
    alpha: PAdicNumber
    a_p: int
    D: int
    n: int


def ordinary_lfunction(
    symbol: ModularSymbol,
    curve: WeierstrassCurve,
    p: int,
    n: int,
    D: int = 1,
    M: int = 4,
    constant_prec: int = 33,
    gamma: int | None = None,
) -> OrdinaryLFunction:
    """The level-n approximation of L_p(E, chi_D) at an ordinary prime p.

    The twisted Hecke eigenvalue is kronecker(D, p) a_p, so the unit root of
    x^2 - kronecker(D, p) a_p x + p stabilizes the twisted elements.

    Raises:
        SupersingularInput: If p divides a_p
        NormCompatibilityFailed: If the stabilizations are not norm-compatible
    """
    a_p = kronecker(D, p) * ap(curve, p)
    prec = working_precision(M, constant_prec, n, symbol.denominator, p)
    alpha = unit_root(a_p, p, prec)
    lower, middle, top = mazur_tate_tower(symbol, p, n, D, gamma)
    stabilized = stabilize_ordinary(top, middle, alpha, lower, prec)
    series = to_series(stabilized, M, constant_prec)
    logger.info(f"L_{p}({curve.name}, D = {D}) at n = {n}: {series}")
    return OrdinaryLFunction(series, stabilized, alpha, a_p, D, n)
