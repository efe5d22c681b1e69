"""Truncated power series in T with per-coefficient p-adic precision."""

import logging
from collections.abc import Sequence

from src.arith.padic import INF, PAdicNumber
from src.arith.polys import omega
from src.errors import NotDivisible, PrecisionExhausted

logger = logging.getLogger(__name__)


class PAdicSeries:
    """A power series sum c_j T^j known to finitely many coefficients.

    Coefficients are PAdicNumber or QuadExtElement values; each carries its
    own precision. When omega_level is n the series is an element of
    Z_p[T]/(omega_n) and has at most p^n coefficients.

    Args:
        p: Prime
        coefficients: Coefficients, lowest degree first
        omega_level: Optional level n of the omega_n quotient
    """

    __slots__ = ("p", "coefficients", "omega_level")

    def __init__(self, p: int, coefficients: Sequence, omega_level: int | None = None) -> None:
        if omega_level is not None and len(coefficients) > p**omega_level:
            raise ValueError(f"a series modulo omega_{omega_level} has at most {p**omega_level} coefficients")
        self.p = p
        self.coefficients = tuple(coefficients)
        self.omega_level = omega_level

    @classmethod
    def from_integers(
        cls, values: Sequence[int], p: int, prec: int | float = INF, omega_level: int | None = None
    ) -> "PAdicSeries":
        """Series with integer coefficients.

        Args:
            values: Integer coefficients, lowest degree first
            p: Prime
            prec: Absolute precision given to every coefficient
            omega_level: Optional level n of the omega_n quotient

        Returns:
            The series; coefficients divisible by p^prec become O(p^prec)
        """
        return cls(p, [PAdicNumber.from_int(v, p, prec) for v in values], omega_level)

    @classmethod
    def zero(cls, p: int, length: int, prec: int | float = INF, omega_level: int | None = None) -> "PAdicSeries":
        """Series of length coefficients, each the zero O(p^prec)."""
        return cls(p, [PAdicNumber.zero(p, prec)] * length, omega_level)

    @property
    def length(self) -> int:
        """Number of stored coefficients."""
        return len(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, j: int):
        return self.coefficients[j]

    def __iter__(self):
        return iter(self.coefficients)

    def _check_compatible(self, other: "PAdicSeries") -> None:
        if other.p != self.p:
            raise ValueError("series over different primes")

    def _zero_like(self):
        return PAdicNumber.zero(self.p)

    def __add__(self, other: "PAdicSeries") -> "PAdicSeries":
        self._check_compatible(other)
        length = max(self.length, other.length)
        zero = self._zero_like()
        coefficients = [
            (self.coefficients[j] if j < self.length else zero) + (other.coefficients[j] if j < other.length else zero)
            for j in range(length)
        ]
        return PAdicSeries(self.p, coefficients, _common_level(self, other))

    def __neg__(self) -> "PAdicSeries":
        return PAdicSeries(self.p, [-c for c in self.coefficients], self.omega_level)

    def __sub__(self, other: "PAdicSeries") -> "PAdicSeries":
        return self + (-other)

    def scale(self, factor) -> "PAdicSeries":
        """Multiply every coefficient by a scalar."""
        return PAdicSeries(self.p, [c * factor for c in self.coefficients], self.omega_level)

    def map(self, func) -> "PAdicSeries":
        """Apply func to every coefficient, keeping the omega level."""
        return PAdicSeries(self.p, [func(c) for c in self.coefficients], self.omega_level)

    def multiply_truncated(self, other: "PAdicSeries", length: int | None = None) -> "PAdicSeries":
        """Product of two power series truncated to length coefficients."""
        self._check_compatible(other)
        if length is None:
            length = min(self.length, other.length)
        coefficients = []
        for k in range(length):
            total = self._zero_like()
            for i in range(max(0, k - other.length + 1), min(k, self.length - 1) + 1):
                total = total + self.coefficients[i] * other.coefficients[k - i]
            coefficients.append(total)
        return PAdicSeries(self.p, coefficients, None)

    def multiply_polynomial_mod_omega(self, poly: Sequence[int], n: int) -> "PAdicSeries":
        """Product with an integer polynomial, reduced modulo omega_n."""
        degree_bound = self.p**n
        product = [self._zero_like() for _ in range(self.length + len(poly) - 1)]
        for i, c in enumerate(self.coefficients):
            for j, a in enumerate(poly):
                if a:
                    product[i + j] = product[i + j] + c * a
        return _reduce_mod_omega(product, self.p, n, degree_bound)

    def clamp(self, precisions: Sequence[int | float]) -> "PAdicSeries":
        """Reduce coefficient j to absolute precision precisions[j]."""
        coefficients = [c.reduce_precision(prec) for c, prec in zip(self.coefficients, precisions, strict=False)]
        coefficients.extend(self.coefficients[len(precisions) :])
        return PAdicSeries(self.p, coefficients, self.omega_level)

    def truncate(self, length: int) -> "PAdicSeries":
        """First length coefficients."""
        return PAdicSeries(self.p, self.coefficients[:length], self.omega_level)

    def precisions(self) -> list[int | float]:
        """Absolute precision of each coefficient, lowest degree first."""
        return [c.precision_absolute for c in self.coefficients]

    def is_zero(self) -> bool:
        """True when every coefficient is zero to its precision."""
        return all(c.is_zero() for c in self.coefficients)

    def agrees_with(self, other: "PAdicSeries") -> bool:
        """True when every shared coefficient agrees on all claimed digits."""
        length = min(self.length, other.length)
        return all(self.coefficients[j].agrees_with(other.coefficients[j]) for j in range(length))

    def __repr__(self) -> str:
        return f"PAdicSeries(p={self.p}, length={self.length}, omega_level={self.omega_level})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coefficients):
            if _is_exact_zero(c):
                continue
            terms.append(f"({c})" if j == 0 else f"({c})*T^{j}")
        return " + ".join(terms) if terms else "0"


def _is_exact_zero(c) -> bool:
    if isinstance(c, PAdicNumber):
        return c.is_exact_zero()
    return c.a.is_exact_zero() and c.b.is_exact_zero()


def _common_level(x: PAdicSeries, y: PAdicSeries) -> int | None:
    if x.omega_level is None:
        return y.omega_level
    if y.omega_level is None:
        return x.omega_level
    return min(x.omega_level, y.omega_level)


def _reduce_mod_omega(product: list, p: int, n: int, degree_bound: int) -> PAdicSeries:
    if len(product) <= degree_bound:
        zero = PAdicNumber.zero(p)
        product = product + [zero] * (degree_bound - len(product))
        return PAdicSeries(p, product, n)
    w = omega(n, p)
    # omega_n is monic of degree p^n: T^(p^n) = -(w_0 + ... + w_{p^n - 1} T^(p^n - 1))
    for top in range(len(product) - 1, degree_bound - 1, -1):
        c = product[top]
        if _is_exact_zero(c):
            continue
        shift = top - degree_bound
        for i in range(degree_bound):
            if w[i]:
                product[shift + i] = product[shift + i] - c * w[i]
    return PAdicSeries(p, product[:degree_bound], n)


def series_solve(
    target: PAdicSeries, divisor: Sequence[int], n: int | None = None, p_divisions: int = 0
) -> PAdicSeries:
    """Divide a series by an integer polynomial with unit leading coefficient.

    Performs exact top-down division, checks that the remainder vanishes to
    its claimed precision, then multiplies the quotient by p^p_divisions
    (the pending divisions of a half-logarithm truncation).

    Args:
        target: Series to divide (a representative of degree < p^n)
        divisor: Integer coefficients, lowest first, leading coefficient a unit
        n: Level the result is read modulo (omega_level of the result)
        p_divisions: Power of p the quotient is multiplied by

    Returns:
        q with q * divisor == target to the claimed precision

    Raises:
        NotDivisible: If the remainder is nonzero to its precision
        PrecisionExhausted: If no quotient coefficient keeps a digit
    """
    p = target.p
    divisor = list(divisor)
    while divisor and divisor[-1] == 0:
        divisor.pop()
    if not divisor:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = divisor[-1]
    if lead % p == 0:
        raise ValueError(f"leading coefficient {lead} of the divisor is not a {p}-adic unit")
    d = len(divisor) - 1

    remainder = list(target.coefficients)
    if len(remainder) <= d:
        quotient_length = 0
    else:
        quotient_length = len(remainder) - d
    quotient = [PAdicNumber.zero(p)] * quotient_length

    lead_padic = None if abs(lead) == 1 else PAdicNumber.from_int(lead, p)
    for top in range(len(remainder) - 1, d - 1, -1):
        c = remainder[top]
        if lead_padic is not None:
            c = c / lead_padic
        elif lead == -1:
            c = -c
        quotient[top - d] = c
        for i, a in enumerate(divisor):
            if a:
                remainder[top - d + i] = remainder[top - d + i] - c * a

    for j in range(min(d, len(remainder))):
        if not remainder[j].is_zero():
            raise NotDivisible(f"remainder coefficient {j} is {remainder[j]}, not zero to its precision")

    if p_divisions:
        factor = PAdicNumber(p, 1, p_divisions, INF)
        quotient = [c * factor for c in quotient]

    if quotient and max(c.precision_absolute for c in quotient) <= 0:
        raise PrecisionExhausted("no quotient coefficient retains a digit")

    level = n if n is not None else target.omega_level
    return PAdicSeries(p, quotient, level)
